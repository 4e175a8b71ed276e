"""Homaloidal types and the lattice action behind Hudson's test.

Sign convention: a vector is stored as ``(d, m_1, ..., m_r)``, the degree
followed by the multiplicities themselves.  It stands for the lattice
element ``d*e_0 - sum(m_i*e_i)``.  Every matrix built in this module acts on
these ``(d; m)`` coordinates, so column 0 of a characteristic matrix reads
off ``(d, m_1, ..., m_r)`` directly.  Matrices written in the plain ``e_i``
basis (as in :mod:`cremona.halphen`) are related by conjugation with
``diag(1, -1, ..., -1)``.

Python integers never overflow, so no explicit overflow checks are needed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import ImproperTypeError, NotHomaloidalError, ParseError


# --------------------------------------------------------------------------
# integer matrices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("IntegerMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(int(a) for a in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def form(cls, n: int) -> "IntegerMatrix":
        """The intersection form diag(1, -1, ..., -1)."""
        return cls(tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
                         for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntegerMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                   for r in self.rows))

    def __pow__(self, k: int) -> "IntegerMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = IntegerMatrix.identity(self.dim), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.rows)))

    def conjugate_by_form(self) -> "IntegerMatrix":
        """J M J; switches between the (d; m) and the e_i coordinates."""
        s = [1] + [-1] * (self.dim - 1)
        return IntegerMatrix(tuple(tuple(s[i] * a * s[j] for j, a in enumerate(r))
                                   for i, r in enumerate(self.rows)))

    def preserves_form(self) -> bool:
        j = IntegerMatrix.form(self.dim)
        return self.transpose() @ j @ self == j

    def preserves_canonical_class(self) -> bool:
        """Pairing with k = (-3; -1, ..., -1) is invariant: k^T J M = k^T J."""
        n = self.dim
        # k^T J in (d; m) coordinates is the row vector (-3, 1, ..., 1)
        kj = [-3] + [1] * (n - 1)
        return all(sum(kj[i] * self.rows[i][c] for i in range(n)) == kj[c] for c in range(n))

    def inverse(self) -> "IntegerMatrix":
        """Inverse of a form-preserving matrix, J M^T J; verified."""
        j = IntegerMatrix.form(self.dim)
        inv = j @ self.transpose() @ j
        if inv @ self != IntegerMatrix.identity(self.dim):
            raise ValueError("matrix does not preserve the intersection form")
        return inv

    def is_permutation(self) -> bool:
        return (all(sorted(r) == [0] * (self.dim - 1) + [1] for r in self.rows)
                and all(sorted(c) == [0] * (self.dim - 1) + [1] for c in zip(*self.rows)))

    def embed(self, n: int) -> "IntegerMatrix":
        """Extend by the identity on extra basis vectors."""
        if n < self.dim:
            raise ValueError("cannot shrink a matrix")
        rows = [list(r) + [0] * (n - self.dim) for r in self.rows]
        rows += [[int(i == j) for j in range(n)] for i in range(self.dim, n)]
        return IntegerMatrix.from_rows(rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


# --------------------------------------------------------------------------
# vectors and types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeVector:
    """Finite-support vector ``(d; m_1, ..., m_r)``; trailing zeros trimmed."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(a) for a in self.coefficients)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def of(cls, degree: int, mults: Iterable[int] = ()) -> "LatticeVector":
        return cls((degree, *mults))

    @property
    def degree(self) -> int:
        return self.coefficients[0]

    @property
    def mults(self) -> tuple[int, ...]:
        return self.coefficients[1:]

    def padded(self, n: int) -> tuple[int, ...]:
        """Coefficients with zeros appended up to length ``n``."""
        c = self.coefficients
        return c + (0,) * max(0, n - len(c))

    def has_negative(self) -> bool:
        return self.degree < 1 or any(m < 0 for m in self.mults)

    def __str__(self) -> str:
        return f"({self.degree};{','.join(map(str, self.mults))})"


def noether_check(d: int, mults: Iterable[int]) -> bool:
    """Both Noether equalities: sum m = 3(d-1) and sum m^2 = d^2 - 1."""
    mults = list(mults)
    return sum(mults) == 3 * (d - 1) and sum(m * m for m in mults) == d * d - 1


@dataclass(frozen=True, order=True)
class HomaloidalType:
    """A degree with a sorted multiset of multiplicities.

    Construction validates the Noether equalities and rejects negative
    entries; properness is a separate question answered by :func:`hudson_test`.
    """

    degree: int
    mults: tuple[int, ...] = field(default=())

    def __post_init__(self):
        mults = tuple(sorted((int(m) for m in self.mults if m != 0), reverse=True))
        object.__setattr__(self, "mults", mults)
        d = int(self.degree)
        object.__setattr__(self, "degree", d)
        if d < 1:
            raise NotHomaloidalError(f"degree must be positive, got {d}")
        if any(m < 0 for m in mults):
            raise NotHomaloidalError(f"negative multiplicity in ({d};{','.join(map(str, mults))})")
        if not noether_check(d, mults):
            raise NotHomaloidalError(
                f"Noether equalities fail for ({d};{','.join(map(str, mults))})")

    @classmethod
    def parse(cls, text: str) -> "HomaloidalType":
        d, mults = parse_type_literal(text)
        return cls(d, tuple(mults))

    @property
    def r(self) -> int:
        return len(self.mults)

    def vector(self) -> LatticeVector:
        return LatticeVector.of(self.degree, self.mults)

    def to_json(self) -> dict:
        return {"degree": self.degree, "mults": list(self.mults)}

    @classmethod
    def from_json(cls, obj: dict) -> "HomaloidalType":
        return cls(obj["degree"], tuple(obj["mults"]))

    def literal(self) -> str:
        return format_type(self.degree, self.mults)

    def __str__(self) -> str:
        return f"({self.literal()})"

    def sort_key(self) -> tuple:
        """Lexicographically descending order within a degree."""
        return (self.degree, tuple(-m for m in self.mults), -len(self.mults))


_TOKEN = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_type_literal(text: str) -> tuple[int, list[int]]:
    """Parse ``d;m1[^e1],m2[^e2],...``.

    Whitespace and enclosing parentheses are ignored; negative entries are
    accepted here and rejected later by :class:`HomaloidalType`.
    """
    s = re.sub(r"\s+", "", text)
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    head, sep, tail = s.partition(";")
    if not re.fullmatch(r"-?\d+", head):
        raise ParseError(f"bad degree in type literal {text!r}")
    mults: list[int] = []
    if tail:
        for tok in tail.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(f"bad entry {tok!r} in type literal {text!r}")
            mults.extend([int(m.group(1))] * int(m.group(2) or 1))
    return int(head), mults


def format_type(d: int, mults: Sequence[int]) -> str:
    """Human-readable literal with runs compressed, e.g. ``8;4^3,2^3,1^3``."""
    parts = []
    i = 0
    while i < len(mults):
        j = i
        while j < len(mults) and mults[j] == mults[i]:
            j += 1
        n = j - i
        parts.append(f"{mults[i]}^{n}" if n > 1 else f"{mults[i]}")
        i = j
    return f"{d};{','.join(parts)}"


# --------------------------------------------------------------------------
# generators of W and words
# --------------------------------------------------------------------------

SIGMA0_ROWS = ((2, -1, -1, -1), (1, 0, -1, -1), (1, -1, 0, -1), (1, -1, -1, 0))


def sigma0_matrix(n: int = 4) -> IntegerMatrix:
    """Matrix of sigma_0 in (d; m) coordinates, padded by the identity."""
    return IntegerMatrix(SIGMA0_ROWS).embed(n)


def apply_sigma0(v: LatticeVector) -> LatticeVector:
    d, m1, m2, m3, *rest = v.padded(4)
    eps = m1 + m2 + m3 - d
    return LatticeVector((d - eps, m1 - eps, m2 - eps, m3 - eps, *rest))


@dataclass(frozen=True)
class Sigma0:
    def apply(self, c: tuple[int, ...]) -> tuple[int, ...]:
        return apply_sigma0(LatticeVector(c)).padded(len(c))

    def matrix(self, n: int) -> IntegerMatrix:
        return sigma0_matrix(n)

    def __str__(self) -> str:
        return "s0"


@dataclass(frozen=True)
class Perm:
    """Reorders multiplicity slots: new slot ``j`` takes old slot ``source[j]``.

    Slots are 1-based lattice indices; ``source`` lists them for slots 1, 2, ...
    """

    source: tuple[int, ...]

    def apply(self, c: tuple[int, ...]) -> tuple[int, ...]:
        out = list(c)
        for j, s in enumerate(self.source, start=1):
            out[j] = c[s]
        return tuple(out)

    def matrix(self, n: int) -> IntegerMatrix:
        rows = [[int(i == j) for j in range(n)] for i in range(n)]
        for j, s in enumerate(self.source, start=1):
            rows[j] = [int(c == s) for c in range(n)]
        return IntegerMatrix.from_rows(rows)

    def __str__(self) -> str:
        return "p(" + ",".join(map(str, self.source)) + ")"


Step = Union[Sigma0, Perm]


@dataclass(frozen=True)
class WeylWord:
    """Generators applied left to right; ``matrix`` is their product."""

    steps: tuple[Step, ...] = ()
    dim: int = 4

    def apply(self, v: LatticeVector) -> LatticeVector:
        c = v.padded(self.dim)
        for s in self.steps:
            c = s.apply(c)
        return LatticeVector(c)

    @cached_property
    def matrix(self) -> IntegerMatrix:
        m = IntegerMatrix.identity(self.dim)
        for s in self.steps:
            m = s.matrix(self.dim) @ m
        return m

    @property
    def sigma_count(self) -> int:
        return sum(isinstance(s, Sigma0) for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " ".join(map(str, self.steps)) or "id"


# --------------------------------------------------------------------------
# Hudson's test
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HudsonResult:
    """Outcome of Hudson's test.

    On success ``word`` maps the input vector to ``e_0``; otherwise
    ``witness`` is the first intermediate vector with a negative entry (or a
    non-positive degree).  ``trace`` lists the sorted vectors visited.
    """

    proper: bool
    vector: LatticeVector
    word: WeylWord | None = None
    witness: LatticeVector | None = None
    trace: tuple[LatticeVector, ...] = ()

    def __bool__(self) -> bool:
        return self.proper


def _sorting_perm(c: tuple[int, ...]) -> Perm | None:
    idx = sorted(range(1, len(c)), key=lambda i: -c[i])  # stable
    if idx == list(range(1, len(c))):
        return None
    return Perm(tuple(idx))


def hudson_test(t: HomaloidalType | LatticeVector) -> HudsonResult:
    """Decide properness by repeatedly applying sigma_0 after sorting."""
    vec = t.vector() if isinstance(t, HomaloidalType) else t
    if not noether_check(vec.degree, vec.mults):
        raise NotHomaloidalError(f"{vec} does not satisfy the Noether equalities")
    dim = max(len(vec.coefficients), 4)
    c = vec.padded(dim)
    steps: list[Step] = []
    trace: list[LatticeVector] = []
    while True:
        if c[0] < 1 or any(m < 0 for m in c[1:]):
            return HudsonResult(False, vec, witness=LatticeVector(c), trace=tuple(trace))
        p = _sorting_perm(c)
        if p is not None:
            steps.append(p)
            c = p.apply(c)
        trace.append(LatticeVector(c))
        d = c[0]
        if d == 1:
            # Noether forces every multiplicity to vanish here
            assert all(m == 0 for m in c[1:]), c
            word = WeylWord(tuple(steps), dim)
            return HudsonResult(True, vec, word=word, trace=tuple(trace))
        eps = c[1] + c[2] + c[3] - d
        # Noether inequality m1+m2+m3 >= d+1 for sorted nonnegative types
        assert eps >= 1, f"Noether inequality violated at {LatticeVector(c)}"
        steps.append(Sigma0())
        c = Sigma0().apply(c)


def is_proper(t: HomaloidalType) -> bool:
    return hudson_test(t).proper


def _proper_word(t: HomaloidalType) -> WeylWord:
    res = hudson_test(t)
    if not res.proper:
        raise ImproperTypeError(f"{t} is improper (witness {res.witness})")
    return res.word


def dual_type(t: HomaloidalType) -> HomaloidalType:
    """Type of the inverse map.

    If ``h`` is the Hudson word with ``h(v_T) = e_0`` then ``g = h^-1`` is the
    characteristic matrix and the inverse has type ``g^-1(e_0) = h(e_0)``.
    Another word ``h'`` with the same property differs from ``h`` by some
    ``s`` in W fixing ``e_0``.  Such ``s`` preserves the form and the canonical
    class, so it sends each ``e_i`` (i >= 1) to a vector ``v`` with
    ``v.e_0 = 0``, ``v^2 = -1`` and ``k.v = -1``; the only such vectors are the
    ``e_j`` themselves, i.e. ``s`` permutes them.  Hence ``h(e_0)`` is well
    defined as a multiset.
    """
    word = _proper_word(t)
    col = word.matrix.column(0)
    assert col[0] == t.degree
    return HomaloidalType(col[0], tuple(col[1:]))


def characteristic_matrix(t: HomaloidalType) -> IntegerMatrix:
    """Matrix of ``g = h^-1`` on ``e_0, ..., e_r`` in (d; m) coordinates."""
    word = _proper_word(t)
    if not word.steps:
        return IntegerMatrix.identity(t.r + 1)
    return word.matrix.inverse()
