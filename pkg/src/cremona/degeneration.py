"""Degeneration offsets of homaloidal types and the closure-chain reasoning.

An offset ``k`` for a type ``T`` of degree ``d`` means the general member of
the component of maps of type ``T`` is a limit of maps of degree ``d + k``.
Three constructions produce offsets:

* pair rule: two points with ``m_i + m_j = d - k`` (one of them may be a
  free point of multiplicity 0);
* quintic rule: five points in general position with ``sum = 2d - k``,
  giving offset ``2k``;
* collinear rule: five points, three of them on a line, with
  ``m_1 + m_2 + m_3 + 2 m_4 + 2 m_5 = 3d - k``.  A general member does not
  have collinear base-points, so these offsets are only reported, never used
  for component-level conclusions.

Class-level inclusions ``Bir_a ⊂ closure(Bir_b)`` are derived from the
general offsets by transitivity only (see :func:`class_inclusion`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .enumeration import enumerate_proper, family_3m
from .errors import HorizonError, ImproperTypeError, PreconditionError
from .lattice import HomaloidalType, hudson_test

#: largest degree the class-level reasoning will enumerate
MAX_DEGREE = 24

#: degrees for which the +1 inclusion holds (Noether-type statement to verify)
PLUS_ONE_DEGREES = frozenset({1, 2, 3, 4, 5, 6, 7, 9, 11})


def _require_proper(t: HomaloidalType) -> None:
    if not hudson_test(t).proper:
        raise ImproperTypeError(f"{t} is improper")


def _points_with_free(t: HomaloidalType) -> tuple[int, ...]:
    # one free point of multiplicity 0; a type without base-points gets two
    pts = t.mults + (0,)
    return pts if len(pts) >= 2 else pts + (0,)


def pair_offsets(t: HomaloidalType) -> frozenset[int]:
    """Offsets ``d - m_i - m_j`` (i != j) and ``d - m_i``, positive only."""
    _require_proper(t)
    d = t.degree
    return frozenset(k for a, b in combinations(_points_with_free(t), 2)
                     if (k := d - a - b) >= 1)


def quintic_offsets(t: HomaloidalType) -> frozenset[int]:
    """Even offsets ``2k`` with some 5 multiplicities summing to ``2d - k``."""
    _require_proper(t)
    d = t.degree
    return frozenset(2 * k for five in combinations(t.mults, 5)
                     if (k := 2 * d - sum(five)) >= 1)


@dataclass(frozen=True)
class CollinearWitness:
    offset: int
    collinear: tuple[int, int, int]
    doubled: tuple[int, int]


def collinear_witnesses(t: HomaloidalType) -> list[CollinearWitness]:
    """One witness per (offset, multiplicity pattern).

    Three points on a line carry at most ``d`` in total (Bezout), so
    patterns with ``m_1 + m_2 + m_3 > d`` cannot occur and are skipped.
    """
    _require_proper(t)
    d, ms = t.degree, t.mults
    seen: dict[tuple, CollinearWitness] = {}
    for five in combinations(range(len(ms)), 5):
        for i, j in combinations(five, 2):
            rest = tuple(sorted((ms[a] for a in five if a not in (i, j)), reverse=True))
            if sum(rest) > d:
                continue
            dbl = tuple(sorted((ms[i], ms[j]), reverse=True))
            k = 3 * d - sum(rest) - 2 * sum(dbl)
            if k >= 1:
                seen.setdefault((k, rest, dbl), CollinearWitness(k, rest, dbl))
    return sorted(seen.values(), key=lambda w: (w.offset, w.collinear, w.doubled))


def collinear_offsets(t: HomaloidalType) -> frozenset[int]:
    """Offsets available to special maps with three collinear base-points."""
    return frozenset(w.offset for w in collinear_witnesses(t))


def general_offsets(t: HomaloidalType) -> frozenset[int]:
    return pair_offsets(t) | quintic_offsets(t)


def in_closure_plus_one(t: HomaloidalType) -> bool:
    """Exact test: the component of ``t`` lies in the closure of degree d+1."""
    if t.degree < 2:
        raise PreconditionError("the +1 criterion needs d >= 2")
    return 1 in pair_offsets(t)


def collinear_sets_informational(t: HomaloidalType) -> list[tuple[int, ...]]:
    """Multisets of 3 or 4 multiplicities summing to d-1.

    A map with only proper base-points in the closure of degree d+1 must have
    one, two, three or four collinear base-points with this sum; the 3/4
    cases are a necessary condition only and are reported for information.
    """
    d, ms = t.degree, t.mults
    out = set()
    for n in (3, 4):
        for sub in combinations(ms, n):
            if sum(sub) == d - 1:
                out.add(tuple(sorted(sub, reverse=True)))
    return sorted(out, reverse=True)


def _check_horizon(d: int) -> None:
    if d > MAX_DEGREE:
        raise HorizonError(f"degree {d} exceeds the enumeration horizon {MAX_DEGREE}")


@lru_cache(maxsize=None)
def _proper(d: int) -> tuple[HomaloidalType, ...]:
    _check_horizon(d)
    return tuple(enumerate_proper(d))


@lru_cache(maxsize=None)
def _offsets_cached(t: HomaloidalType) -> frozenset[int]:
    return general_offsets(t)


def degree_plus_one_holds(d: int) -> tuple[bool, list[HomaloidalType]]:
    """Whether every proper type of degree ``d`` passes the +1 criterion."""
    if d < 2:
        raise PreconditionError("degree_plus_one_holds needs d >= 2")
    failing = [t for t in _proper(d) if not in_closure_plus_one(t)]
    return (not failing, failing)


@lru_cache(maxsize=None)
def class_inclusion(a: int, b: int) -> bool:
    """Provable ``Bir_a ⊂ closure(Bir_b)`` from general offsets and transitivity.

    Every proper type of degree ``a`` needs an offset ``k`` with ``a + k == b``
    or with ``a + k < b`` and ``class_inclusion(a + k, b)``.  This is a
    sufficient condition; for ``b == a + 1`` it is also necessary.
    """
    if b <= a:
        raise PreconditionError("class_inclusion needs b > a")
    _check_horizon(b)
    if a == 1:
        # linear maps are limits of quadratic ones; two free points give k = 1
        return b == 2 or class_inclusion(2, b)
    for t in _proper(a):
        if not any(a + k == b or (a + k < b and class_inclusion(a + k, b))
                   for k in _offsets_cached(t)):
            return False
    return True


def reachable_degrees(t: HomaloidalType, horizon: int) -> frozenset[int]:
    """Degrees in ``(d, d + horizon]`` whose closure provably contains ``t``'s component."""
    _require_proper(t)
    d = t.degree
    top = d + horizon
    seeds = {d + k for k in general_offsets(t) if d + k <= top}
    reach = set(seeds)
    for b in range(d + 1, top + 1):
        if b in reach:
            continue
        if any(s < b and class_inclusion(s, b) for s in seeds):
            reach.add(b)
    return frozenset(reach)


def best_pair_bound_check(t: HomaloidalType) -> bool:
    """Some pair (or single point) has ``m_i + m_j`` in the degree-dependent range."""
    _require_proper(t)
    d = t.degree
    sums = {a + b for a, b in combinations(_points_with_free(t), 2)}
    if d in PLUS_ONE_DEGREES:
        return (d - 1) in sums
    if d == 8:
        return any(d - 2 <= s <= d - 1 for s in sums)
    if d == 10:
        return any(d - 3 <= s <= d - 1 for s in sums)
    if d >= 12:
        return any(Fraction(2 * d, 3) < s < d for s in sums)
    return False


def kk_bound(d: int) -> int:
    """max(1, floor(d/3))."""
    return max(1, d // 3)


@dataclass
class DegenerationReport:
    type: HomaloidalType
    pair_offsets: frozenset[int]
    quintic_offsets: frozenset[int]
    collinear_offsets: frozenset[int]
    plus_one: bool
    min_general_offset: int
    reachable_degrees: frozenset[int] = field(default_factory=frozenset)
    collinear_sets: list[tuple[int, ...]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": self.type.to_json(),
            "pair_offsets": sorted(self.pair_offsets),
            "quintic_offsets": sorted(self.quintic_offsets),
            "collinear_offsets": sorted(self.collinear_offsets),
            "plus_one": self.plus_one,
            "min_general_offset": self.min_general_offset,
            "reachable": sorted(self.reachable_degrees),
        }


def analyze(t: HomaloidalType, horizon: int = 4) -> DegenerationReport:
    pairs = pair_offsets(t)
    quint = quintic_offsets(t)
    return DegenerationReport(
        type=t,
        pair_offsets=pairs,
        quintic_offsets=quint,
        collinear_offsets=collinear_offsets(t),
        plus_one=t.degree >= 2 and 1 in pairs,
        min_general_offset=min(pairs | quint),
        reachable_degrees=reachable_degrees(t, horizon),
        collinear_sets=collinear_sets_informational(t),
    )


# --------------------------------------------------------------------------
# Closure batteries
# --------------------------------------------------------------------------

@dataclass
class ClosureVerdict:
    """``closure(Bir_d) == Bir_{<=d}``: True, False, or None when undecided."""

    degree: int
    holds: bool | None
    blocking: int | None = None
    failing_types: list[HomaloidalType] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"degree": self.degree, "holds": self.holds, "blocking_degree": self.blocking,
                "failing_types": [t.to_json() for t in self.failing_types]}


def closure_equals_lower(d: int) -> ClosureVerdict:
    """Decide whether every map of degree < d is a limit of degree-d maps.

    A failure of the exact +1 criterion at ``d - 1`` refutes it; otherwise all
    lower degrees must be provably included via :func:`class_inclusion`.
    """
    if d <= 1:
        return ClosureVerdict(d, True)
    if d - 1 >= 2:
        ok, failing = degree_plus_one_holds(d - 1)
        if not ok:
            return ClosureVerdict(d, False, d - 1, failing)
    for a in range(1, d):
        if not class_inclusion(a, d):
            return ClosureVerdict(d, None, a)
    return ClosureVerdict(d, True)


def theorem1_battery(max_degree: int = 12) -> list[ClosureVerdict]:
    return [closure_equals_lower(d) for d in range(1, max_degree + 1)]


def plus_one_family_witness(d: int) -> HomaloidalType | None:
    """A 3m-family type of degree ``d`` failing the +1 criterion, if any."""
    if d < 9:
        return None
    t = family_3m(d // 3)[d % 3]
    return None if in_closure_plus_one(t) else t
