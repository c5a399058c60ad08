"""Associated primes of powers of partial cover ideals.

The irreducible-decomposition oracle is ground truth here.  Closed-form
predictions (stars, trees), the maximal-ideal criterion, stability
indices, the explicit witness construction and the localization tests
are all phrased so they can be checked against that oracle, never the
other way around.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .covers import partial_cover_ideal, star_generators
from .graphs import Graph, enumerate_induced_stars
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    associated_primes,
    colon,
    contains,
    ideal_power,
    monomial_str,
)


@dataclass(frozen=True)
class AssReport:
    """Associated primes of one power of one ideal.

    method records how the set was obtained: "oracle" (decomposition of
    the actual power), "localized" (per-prime membership on induced
    subgraphs) or "closed_form" (a formula, no ideal arithmetic).
    """

    ambient: tuple[str, ...]
    t: int
    s: int
    method: str
    primes: frozenset[MonomialPrime]


@dataclass(frozen=True)
class StabilityReport:
    """Per-power associated primes with the stabilization and persistence
    verdicts read off them.

    astab_value is the start of the constant tail when one of length at
    least two is visible below s_max, otherwise None (a tail of length
    one says nothing).  certified stays False unless a proven formula
    backs the value; this module only ever reports empirical tails.
    first_violation is the least s with Ass^s not contained in
    Ass^{s+1}, or None.
    """

    description: str
    s_max: int
    per_power: tuple[frozenset[MonomialPrime], ...]
    astab_value: int | None
    certified: bool
    persistence_ok: bool
    first_violation: int | None


@dataclass(frozen=True)
class WitnessCertificate:
    """An explicit monomial T with J^s : T = P, checked by the oracle.

    e is the exponent of the leading z factor, s0 the least power at
    which the maximal ideal becomes associated.  empty_word marks the
    degenerate case where the cyclic word contributes no variables at
    all (n = t) and T is a pure power of z, possibly 1.
    """

    T: Monomial
    s: int
    P: MonomialPrime
    not_in_power: bool
    colon_equals_prime: bool
    n: int
    t: int
    s0: int
    e: int
    empty_word: bool

    @property
    def valid(self) -> bool:
        return self.not_in_power and self.colon_equals_prime


def _check_positive(name: str, value: int):
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def cover_ideal_checked(g: Graph, t: int) -> MonomialIdeal:
    """J_t(g), rejecting the unit-ideal case every Ass question excludes."""
    ideal = partial_cover_ideal(g, t)
    if ideal.is_unit:
        raise ValueError(
            f"J_{t} of this graph is the unit ideal: "
            "no constraints (t exceeds all degrees)"
        )
    return ideal


def ass_of_power(
    g: Graph, t: int, s: int, mode: str = "direct", tree_fast_path: bool = False
) -> AssReport:
    """Ass(J_t(g)^s) by decomposition or by localization.

    Direct mode decomposes the s-th power itself.  Localized mode tests,
    for every connected vertex subset P, whether the maximal ideal of
    the induced subgraph g_P is associated to J_t(g_P)^s on the smaller
    ring; supports inducing disconnected subgraphs never carry an
    associated prime, which is what licenses the pruning.  With
    tree_fast_path (trees only) the candidates shrink further to
    subsets inducing stars.
    """
    _check_positive("t", t)
    _check_positive("s", s)
    if mode not in ("direct", "localized"):
        raise ValueError(f"unknown mode {mode!r}")
    ideal = cover_ideal_checked(g, t)
    if mode == "direct":
        primes = associated_primes(ideal_power(ideal, s))
        return AssReport(g.vertices, t, s, "oracle", primes)
    if tree_fast_path and not g.is_tree():
        raise ValueError("tree_fast_path is only valid on trees")
    found = []
    for subset in _localization_candidates(g, tree_fast_path):
        if _full_prime_associated(g.induced(subset), t, s):
            found.append(MonomialPrime(frozenset(g.index(v) for v in subset)))
    return AssReport(g.vertices, t, s, "localized", frozenset(found))


def _localization_candidates(g: Graph, tree_fast_path: bool):
    if tree_fast_path:
        return enumerate_induced_stars(g, 1, max(g.n - 1, 1))
    subsets = []
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(g.vertices, size):
            if g.induced(combo).is_connected():
                subsets.append(frozenset(combo))
    return subsets


def _full_prime_associated(sub: Graph, t: int, s: int) -> bool:
    """Whether the prime of all vertices of `sub` is in Ass(J_t(sub)^s)."""
    ideal = partial_cover_ideal(sub, t)
    if ideal.is_unit:
        return False
    full = MonomialPrime(frozenset(range(sub.n)))
    return full in associated_primes(ideal_power(ideal, s))


def max_ideal_in_ass_star(n: int, t: int, s: int) -> bool:
    """Whether <z, x1..xn> is associated to J_t(K_{1,n})^s.

    The criterion s(t-1) >= n-1 covers t=1 as well, where it reduces to
    n = 1.
    """
    _check_positive("n", n)
    _check_positive("t", t)
    _check_positive("s", s)
    if t > n:
        raise ValueError(f"t={t} exceeds the number of leaves n={n}")
    return s * (t - 1) >= n - 1


def predict_ass_star(n: int, t: int, s: int) -> AssReport:
    """The closed-form Ass(J_t(K_{1,n})^s): primes <z, r leaves> for
    every r between t and min(n, s(t-1)+1)."""
    _check_positive("n", n)
    _check_positive("t", t)
    _check_positive("s", s)
    if t > n:
        raise ValueError(f"t={t} exceeds the number of leaves n={n}")
    ambient = ("z",) + tuple(f"x{i}" for i in range(1, n + 1))
    rmax = min(n, s * (t - 1) + 1)
    primes = set()
    for r in range(t, rmax + 1):
        for leaves in itertools.combinations(range(1, n + 1), r):
            primes.add(MonomialPrime(frozenset((0,) + leaves)))
    return AssReport(ambient, t, s, "closed_form", frozenset(primes))


def predict_ass_tree(g: Graph, t: int, s: int) -> AssReport:
    """The tree closed form: a prime is associated exactly when its
    support induces a star K_{1,r} with t <= r <= min(n, s(t-1)+1)."""
    _check_positive("t", t)
    _check_positive("s", s)
    if not g.is_tree():
        raise ValueError("closed form proven only for trees")
    if t > g.max_degree():
        raise ValueError(
            f"J_{t} of this tree is the unit ideal: "
            "no constraints (t exceeds all degrees)"
        )
    rmax = min(g.n, s * (t - 1) + 1)
    primes = [
        MonomialPrime(frozenset(g.index(v) for v in subset))
        for subset in enumerate_induced_stars(g, t, rmax)
    ]
    return AssReport(g.vertices, t, s, "closed_form", frozenset(primes))


def astab_tree(g: Graph, t: int) -> int:
    """The proven stability index for trees: 1 for t=1, otherwise the
    least s with s(t-1) >= max_degree - 1."""
    _check_positive("t", t)
    if not g.is_tree():
        raise ValueError("the stability formula is proven only for trees")
    delta = g.max_degree()
    if t > delta:
        raise ValueError(f"t={t} exceeds the maximum degree {delta}")
    if t == 1:
        return 1
    return math.ceil((delta - 1) / (t - 1))


def _stability_report(
    I: MonomialIdeal, s_max: int, description: str
) -> StabilityReport:
    per_power = tuple(
        associated_primes(ideal_power(I, s)) for s in range(1, s_max + 1)
    )
    astab = None
    tail = s_max
    while tail > 1 and per_power[tail - 2] == per_power[s_max - 1]:
        tail -= 1
    if tail < s_max:
        astab = tail
    first_violation = None
    for s in range(1, s_max):
        if not per_power[s - 1] <= per_power[s]:
            first_violation = s
            break
    return StabilityReport(
        description=description,
        s_max=s_max,
        per_power=per_power,
        astab_value=astab,
        certified=False,
        persistence_ok=first_violation is None,
        first_violation=first_violation,
    )


def empirical_astab(I: MonomialIdeal, s_max: int) -> StabilityReport:
    """Look for the start of a constant tail of Ass(I^s) up to s_max.

    The answer is empirical: a constant tail can in principle resume
    changing past s_max, so the value is never certified here.
    """
    _check_positive("s_max", s_max)
    if I.is_zero or I.is_unit:
        raise ValueError("stability analysis needs a proper nonzero ideal")
    return _stability_report(I, s_max, "empirical (uncertified beyond s_max)")


def check_persistence(I: MonomialIdeal, s_max: int) -> StabilityReport:
    """Verify Ass(I^s) is contained in Ass(I^{s+1}) for s < s_max."""
    if s_max < 2:
        raise ValueError("persistence needs s_max >= 2 to compare anything")
    if I.is_zero or I.is_unit:
        raise ValueError("stability analysis needs a proper nonzero ideal")
    return _stability_report(I, s_max, "persistence check")


def build_star_witness(n: int, t: int, s: int) -> WitnessCertificate:
    """The explicit maximal-ideal witness for J_t(K_{1,n})^s.

    With s0 the least power at which the maximal ideal appears and
    e = s - s0, the witness is z^e times the product of the first
    s0(n-t+1)-1 terms of the repeating sequence x1, x2, ..., xn, x1, ...
    Both defining checks are recomputed with the oracle and recorded.
    """
    _check_positive("n", n)
    _check_positive("s", s)
    if t < 2:
        raise ValueError("the witness construction needs t >= 2")
    if t > n:
        raise ValueError(f"t={t} exceeds the number of leaves n={n}")
    if s * (t - 1) < n - 1:
        raise ValueError(
            f"maximal ideal not associated at this power: "
            f"s(t-1) = {s * (t - 1)} < n-1 = {n - 1}"
        )
    s0 = math.ceil((n - 1) / (t - 1))
    e = s - s0
    length = s0 * (n - t + 1) - 1
    nv = n + 1
    exps = [0] * nv
    exps[0] = e
    for k in range(length):
        exps[1 + k % n] += 1
    T = Monomial(tuple(exps))
    J = star_generators(n, t)
    Js = ideal_power(J, s)
    P = MonomialPrime(frozenset(range(nv)))
    not_in = not contains(Js, T)
    colon_ok = colon(Js, T) == P.as_ideal(J.ambient)
    return WitnessCertificate(
        T=T,
        s=s,
        P=P,
        not_in_power=not_in,
        colon_equals_prime=colon_ok,
        n=n,
        t=t,
        s0=s0,
        e=e,
        empty_word=length == 0,
    )


def verify_annihilator_divisibility(n: int, t: int, s: int, T: Monomial) -> bool:
    """For a checked maximal-ideal witness T of J_t(K_{1,n})^s, whether
    T divides z^e (x1...xn)^(s-e-1) with e the z-exponent of T.

    Raises unless T really is a witness (not in the power, colon equal
    to the maximal ideal); anything else would test the divisibility
    bound outside its hypotheses.
    """
    _check_positive("n", n)
    _check_positive("t", t)
    _check_positive("s", s)
    if t > n:
        raise ValueError(f"t={t} exceeds the number of leaves n={n}")
    J = star_generators(n, t)
    if len(T.exps) != n + 1:
        raise ValueError("witness lives in the wrong number of variables")
    Js = ideal_power(J, s)
    P = MonomialPrime(frozenset(range(n + 1)))
    if contains(Js, T):
        raise ValueError(
            f"{monomial_str(T, J.ambient)} lies in the power; not a witness"
        )
    if colon(Js, T) != P.as_ideal(J.ambient):
        raise ValueError(
            f"colon of the power by {monomial_str(T, J.ambient)} is not the "
            "maximal ideal; not a witness"
        )
    e = T.exps[0]
    # T not in J^s rules out z^s | T, so s - e - 1 >= 0.
    bound = Monomial(tuple([e] + [s - e - 1] * n))
    return T.divides(bound)


def localization_check(g: Graph, t: int, s: int, subset) -> bool:
    """Compare global and localized membership for one vertex subset.

    Returns whether [prime(subset) associated to J_t(g)^s] agrees with
    [maximal ideal of the induced subgraph associated on its own ring].
    The equivalence is a theorem, so this should always be true; it
    returns the comparison rather than asserting, for use in tests.
    """
    _check_positive("t", t)
    _check_positive("s", s)
    members = tuple(subset)
    unknown = set(members) - set(g.vertices)
    if unknown:
        raise ValueError(f"subset contains unknown vertices: {sorted(unknown)}")
    ideal = cover_ideal_checked(g, t)
    if not members:
        return True  # no prime on one side, unit ideal on the other
    prime = MonomialPrime(frozenset(g.index(v) for v in members))
    global_side = prime in associated_primes(ideal_power(ideal, s))
    local_side = _full_prime_associated(g.induced(members), t, s)
    return global_side == local_side


def connectivity_check(report: AssReport, g: Graph) -> bool:
    """Whether every reported prime's support induces a connected
    subgraph; true for genuine associated primes."""
    if tuple(g.vertices) != tuple(report.ambient):
        raise ValueError("report ambient does not match the graph's vertices")
    for prime in report.primes:
        vertices = [g.vertices[i] for i in prime.indices]
        if not g.induced(vertices).is_connected():
            return False
    return True
