"""Hypergraph cover ideals, chromatic numbers, and the stability gap family.

The family H_m (a centre z joined into every pair from m+2 other
vertices) has chromatic number 2 while the stability index of its cover
ideal grows linearly in m, so the classical bound chi - 1 <= astab can
be off by an arbitrary amount.  This module builds the family and
verifies both inequalities with the oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .associated import astab_tree, empirical_astab
from .covers import star_generators
from .graphs import Hypergraph, star_graph
from .monomials import Monomial, MonomialIdeal, minimalize

Coloring = dict[str, int]

GAP_FAMILY_CAP = 3


def hypergraph_cover_ideal(h: Hypergraph) -> MonomialIdeal:
    """The ideal of minimal vertex covers (transversals) of h."""
    n = h.n
    edge_sets = [set(e) for e in h.edges]
    kept: list[set[str]] = []
    for size in range(n + 1):
        for combo in itertools.combinations(h.vertices, size):
            w = set(combo)
            if any(k <= w for k in kept):
                continue
            if all(w & e for e in edge_sets):
                kept.append(w)
    gens = [Monomial.from_support([h.index(v) for v in w], n) for w in kept]
    return minimalize(h.vertices, gens)


def is_proper_coloring(h: Hypergraph, coloring: Coloring) -> bool:
    """No edge mono-colored; every vertex must be assigned."""
    missing = set(h.vertices) - coloring.keys()
    if missing:
        raise ValueError(f"coloring misses vertices: {sorted(missing)}")
    return all(len({coloring[v] for v in e}) > 1 for e in h.edges)


def find_coloring(h: Hypergraph, k: int) -> Coloring | None:
    """A proper coloring with colors 1..k, or None.

    Exhaustive over assignments with the first vertex pinned to color 1;
    color names are interchangeable, so this loses nothing.
    """
    if k < 1:
        raise ValueError(f"need at least one color, got k={k}")
    if h.n == 0:
        return {}
    first, rest = h.vertices[0], h.vertices[1:]
    for tail in itertools.product(range(1, k + 1), repeat=len(rest)):
        coloring = {first: 1, **dict(zip(rest, tail))}
        if is_proper_coloring(h, coloring):
            return coloring
    return None


def chromatic_number(h: Hypergraph) -> int:
    for k in range(1, max(h.n, 1) + 1):
        if find_coloring(h, k) is not None:
            return k
    raise AssertionError("n colors always suffice; unreachable")


def build_gap_family(m: int) -> Hypergraph:
    """H_m: vertices {z, x1..x_{m+2}}, edges all {z, xi, xj} with i < j."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    vertices = ("z",) + tuple(f"x{i}" for i in range(1, m + 3))
    edges = [
        ("z", f"x{i}", f"x{j}")
        for i, j in itertools.combinations(range(1, m + 3), 2)
    ]
    return Hypergraph.build(vertices, edges)


@dataclass(frozen=True)
class GapReport:
    """Everything the chromatic-gap verification measured for one m.

    astab is the certified value from the tree formula (the cover ideal
    of H_m coincides with J_2 of a star); oracle_astab is the empirical
    tail start up to s_max and should agree.  gap_bound is chi - 1 + m.
    """

    m: int
    chi: int
    astab: int
    oracle_astab: int | None
    s_max: int
    gap_bound: int
    gap_holds: bool
    gap_is_equality: bool
    baseline_holds: bool
    ideal_matches_star: bool

    @property
    def all_checks_pass(self) -> bool:
        return (
            self.gap_holds
            and self.baseline_holds
            and self.ideal_matches_star
            and self.oracle_astab == self.astab
        )


def verify_gap(m: int, s_max: int | None = None, force: bool = False) -> GapReport:
    """Check chi(H_m) - 1 + m <= astab(J(H_m)) and the baseline bound.

    The certified astab comes from the star identity J(H_m) =
    J_2(K_{1,m+2}); the oracle recomputes the tail empirically up to
    s_max (default astab + 1).  m is capped for desk-scale runs unless
    force is set.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if m > GAP_FAMILY_CAP and not force:
        raise ValueError(
            f"m={m} exceeds the default cap of {GAP_FAMILY_CAP}; "
            "pass force=True to override"
        )
    h = build_gap_family(m)
    chi = chromatic_number(h)
    ideal = hypergraph_cover_ideal(h)
    star_form = star_generators(m + 2, 2)
    matches = ideal == star_form
    astab = astab_tree(star_graph(m + 2), 2)
    if s_max is None:
        s_max = astab + 1
    stability = empirical_astab(ideal, s_max)
    bound = chi - 1 + m
    return GapReport(
        m=m,
        chi=chi,
        astab=astab,
        oracle_astab=stability.astab_value,
        s_max=s_max,
        gap_bound=bound,
        gap_holds=bound <= astab,
        gap_is_equality=bound == astab,
        baseline_holds=chi - 1 <= astab,
        ideal_matches_star=matches,
    )
