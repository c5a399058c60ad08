"""Tabulate Ass(J_t(K_{1,n})^s) growth for stars.

For each star the oracle walks the powers up to the stability index plus
one and prints the count of associated primes per power, the power at
which the maximal ideal first shows up, and the certified stability
index next to the observed tail start.

Usage: python scripts/star_table.py [--max-n 5]
"""

import argparse

from covertool.associated import (
    ass_of_power,
    astab_tree,
    empirical_astab,
    max_ideal_in_ass_star,
)
from covertool.covers import star_generators
from covertool.graphs import star_graph
from covertool.monomials import MonomialPrime


def first_power_with_max_ideal(n, t, s_max):
    maximal = MonomialPrime(frozenset(range(n + 1)))
    for s in range(1, s_max + 1):
        if maximal in ass_of_power(star_graph(n), t, s).primes:
            return s
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()

    print(f"{'n':>3} {'t':>3} {'astab':>6} {'tail':>5} {'m at s':>7}  |Ass| per power")
    for n in range(2, args.max_n + 1):
        for t in range(2, n + 1):
            g = star_graph(n)
            certified = astab_tree(g, t)
            s_max = certified + 1
            counts = [
                len(ass_of_power(g, t, s).primes) for s in range(1, s_max + 1)
            ]
            tail = empirical_astab(star_generators(n, t), s_max).astab_value
            first = first_power_with_max_ideal(n, t, s_max)
            assert first is None or max_ideal_in_ass_star(n, t, first)
            row = " ".join(f"{c:>4}" for c in counts)
            print(
                f"{n:>3} {t:>3} {certified:>6} {tail!s:>5} {first!s:>7}  {row}"
            )


if __name__ == "__main__":
    main()
