"""Bertini/Halphen matrices, the self-dual types Lambda_a and the obstruction search.

Matrices here are written in the plain ``e_0, ..., e_9`` basis: column ``j``
holds the coordinates of the image of ``e_j``.  Use
:meth:`IntegerMatrix.conjugate_by_form` to move to the (d; m) coordinates of
:mod:`cremona.lattice`.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import PreconditionError
from .lattice import (HomaloidalType, IntegerMatrix, LatticeVector, WeylWord,
                      hudson_test)

DIM = 10

#: guard on the obstruction search; the cost grows like k^2 * C(k+7, 7)
MAX_SEARCH_K = 10


def bertini_matrix() -> IntegerMatrix:
    rows = [[17, 0] + [6] * 8, [0, 1] + [0] * 8]
    for i in range(2, DIM):
        rows.append([-6, 0] + [-3 if j == i else -2 for j in range(2, DIM)])
    return IntegerMatrix.from_rows(rows)


def nu_matrix() -> IntegerMatrix:
    """Transposition of e_1 and e_2."""
    rows = [[int(i == j) for j in range(DIM)] for i in range(DIM)]
    rows[1], rows[2] = rows[2], rows[1]
    return IntegerMatrix.from_rows(rows)


def nu_b() -> IntegerMatrix:
    return nu_matrix() @ bertini_matrix()


def nu_b_power(a: int) -> IntegerMatrix:
    """(nu B)^(2a) by repeated squaring; negative ``a`` goes through the inverse."""
    return nu_b() ** (2 * a)


def nu_b_closed_form(a: int) -> IntegerMatrix:
    s = a * a
    top = [36 * s, 12 * s - 6 * a, 12 * s + 6 * a] + [12 * s] * 7
    r1 = [-12 * s - 6 * a, -4 * s, -4 * s - 4 * a] + [-4 * s - 2 * a] * 7
    r2 = [-12 * s + 6 * a, -4 * s + 4 * a, -4 * s] + [-4 * s + 2 * a] * 7
    rest = [-12 * s, -4 * s + 2 * a, -4 * s - 2 * a] + [-4 * s] * 7
    rows = [top, r1, r2] + [list(rest) for _ in range(7)]
    for i in range(DIM):
        rows[i][i] += 1
    return IntegerMatrix.from_rows(rows)


def halphen_multiplicities(a: int) -> tuple[int, ...]:
    s = 12 * a * a
    return (s + 6 * a,) + (s,) * 7 + (s - 6 * a,)


def lambda_a(a: int) -> HomaloidalType:
    """(36a^2+1; 12a^2+6a, (12a^2)^7, 12a^2-6a)."""
    if a < 1:
        raise PreconditionError("Lambda_a needs a >= 1")
    return HomaloidalType(36 * a * a + 1, halphen_multiplicities(a))


def type_of_image(m: IntegerMatrix) -> HomaloidalType:
    """Homaloidal type of ``m(e_0)`` for an e-basis matrix."""
    c = m.column(0)
    return HomaloidalType(c[0], tuple(-x for x in c[1:]))


@dataclass(frozen=True)
class MembershipCertificate:
    """``residual = word . B`` (in (d; m) coordinates) is a permutation matrix."""

    word: WeylWord
    residual: IntegerMatrix

    @property
    def ok(self) -> bool:
        return self.residual.is_permutation() and self.residual[0, 0] == 1


def bertini_membership() -> MembershipCertificate:
    """Show B lies in W by running Hudson's test on its first column."""
    b = bertini_matrix().conjugate_by_form()
    res = hudson_test(LatticeVector(b.column(0)))
    if not res.proper:
        raise AssertionError("first column of B failed Hudson's test")
    return MembershipCertificate(res.word, res.word.matrix.embed(DIM) @ b)


# --------------------------------------------------------------------------
# obstruction search
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionSolution:
    eps: tuple[int, ...]
    extras: tuple[int, ...]
    type: HomaloidalType
    proper: bool

    def to_json(self) -> dict:
        return {"eps": list(self.eps), "extras": list(self.extras),
                "type": self.type.to_json(), "proper": self.proper}


@dataclass
class ObstructionReport:
    """Solutions of the degree-(d+k) Noether system lifted from Lambda_a.

    ``eps`` lists the increments of the nine multiplicities of Lambda_a with
    the seven equal middle entries sorted descending (each such solution
    stands for all its rearrangements, which give the same type).
    """

    a: int
    k: int
    solutions: list[ObstructionSolution] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return 36 * self.a * self.a + 1

    @property
    def all_r9(self) -> bool:
        return all(not s.extras for s in self.solutions)

    @property
    def proper_candidates(self) -> list[HomaloidalType]:
        seen = {}
        for s in self.solutions:
            if s.proper:
                seen.setdefault(s.type, None)
        return list(seen)

    @property
    def verdict(self) -> str:
        if not self.solutions:
            return "no-candidates"
        if self.all_r9:
            return "r9-only-geometric-exclusion"
        return "unobstructed-candidates"

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "k": self.k,
            "degree": self.degree,
            "target_degree": self.degree + self.k,
            "verdict": self.verdict,
            "all_r9": self.all_r9,
            "solution_count": len(self.solutions),
            "solutions": [s.to_json() for s in self.solutions],
            "proper_candidates": [t.to_json() for t in self.proper_candidates],
            "excluded_by": ("irreducibility of the limit linear system through nine "
                            "general points (geometric step, not verified here)"
                            if self.proper_candidates and self.all_r9 else None),
        }


def _extras_by_sums(k: int) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    """Descending multisets in [1, k] with total <= 3k, keyed by (sum, square sum)."""
    out: dict[tuple[int, int], list[tuple[int, ...]]] = defaultdict(list)

    def rec(prefix: tuple[int, ...], cap: int, left: int):
        out[(sum(prefix), sum(x * x for x in prefix))].append(prefix)
        for v in range(min(cap, left), 0, -1):
            rec(prefix + (v,), v, left - v)

    rec((), k, 3 * k)
    return out


def obstruction_candidates(a: int, k: int) -> ObstructionReport:
    """Exhaustive search for increments ``eps`` in [0, k] and extra points in [1, k].

    Constraints: ``sum(eps) + sum(extras) = 3k`` and
    ``sum(2 n_i eps_i + eps_i^2) + sum(extras^2) = 2dk + k^2``; these are the
    Noether equalities of ``(d+k; n_i + eps_i, extras)``.
    """
    if a < 1 or k < 1:
        raise PreconditionError("obstruction search needs a >= 1 and k >= 1")
    if k > MAX_SEARCH_K:
        raise PreconditionError(f"k = {k} exceeds the search guard {MAX_SEARCH_K}")
    n = halphen_multiplicities(a)
    d = 36 * a * a + 1
    target = 2 * d * k + k * k
    extras = _extras_by_sums(k)
    report = ObstructionReport(a, k)
    for mid in combinations_with_replacement(range(k, -1, -1), 7):
        s_mid = sum(mid)
        v_mid = sum(2 * n[1] * e + e * e for e in mid)
        for e1 in range(k + 1):
            for e9 in range(k + 1):
                s = s_mid + e1 + e9
                if s > 3 * k:
                    continue
                v = v_mid + 2 * n[0] * e1 + e1 * e1 + 2 * n[8] * e9 + e9 * e9
                for ext in extras.get((3 * k - s, target - v), ()):
                    eps = (e1, *mid, e9)
                    t = HomaloidalType(d + k, tuple(ni + ei for ni, ei in zip(n, eps)) + ext)
                    report.solutions.append(
                        ObstructionSolution(eps, ext, t, hudson_test(t).proper))
    report.solutions.sort(key=lambda s: (len(s.extras), s.eps, s.extras))
    return report
