"""Exact discrete valuations and ultrametric valuation matrices.

Everything here is arbitrary-precision: roots are :class:`fractions.Fraction`,
valuations are plain ``int`` plus the absorbing :data:`INFINITY` sentinel.
The valuation matrix ``m[i][j] = v(b_i - b_j)`` is the only data the rest of
the pipeline ever looks at, which is also why hand-written ultrametric
matrices are accepted as a first-class input mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DuplicateRootsError, InstanceError, TooFewRootsError


class _Infinity:
    """Top element of the valuation codomain; absorbing for + and min."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INFINITY

    def __gt__(self, other):
        return other is not INFINITY

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is INFINITY

    def __hash__(self):
        return hash("condisc.INFINITY")

    def __add__(self, other):
        return INFINITY

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

ExtNat = Union[int, _Infinity]


def _int_val(n: int, p: int) -> int:
    # caller guarantees n != 0
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def val(q, p: int) -> ExtNat:
    """p-adic valuation of an exact rational; INFINITY iff q == 0."""
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_val(q.numerator, p) - _int_val(q.denominator, p)


def is_odd_prime(p: int) -> bool:
    from sympy import isprime  # deferred: keeps matrix-mode startup light

    return p != 2 and isprime(p)


@dataclass(frozen=True)
class Instance:
    """A split Weierstrass input: a prime and the roots of f.

    Roots must be p-integral (valuation >= 0) and pairwise distinct; the
    root count is 2g + 2 for a curve of genus g.
    """

    p: int
    roots: tuple[Fraction, ...]
    label: str | None = None

    @classmethod
    def from_values(cls, p: int, roots: Iterable, label: str | None = None) -> "Instance":
        return cls(p=p, roots=tuple(Fraction(r) for r in roots), label=label)

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    @property
    def genus(self) -> int:
        return (self.num_roots - 2) // 2

    def validate(self, allow_small: bool = False) -> None:
        if self.p == 2:
            raise InstanceError("p = 2 is not supported: the residue characteristic must be odd")
        if not is_odd_prime(self.p):
            raise InstanceError(f"p = {self.p} is not prime")
        for idx, r in enumerate(self.roots):
            if r.denominator % self.p == 0:
                raise InstanceError(
                    f"non-integral root {r} at index {idx}: "
                    f"{self.p}-adic valuation is negative; supply p-integral roots"
                )
        dupes = [
            (i, j)
            for i in range(self.num_roots)
            for j in range(i + 1, self.num_roots)
            if self.roots[i] == self.roots[j]
        ]
        if dupes:
            raise DuplicateRootsError(dupes)
        _check_count(self.num_roots, allow_small)


def _check_count(n: int, allow_small: bool) -> None:
    if n % 2 != 0:
        raise InstanceError(f"root count must be even (2g + 2), got {n}")
    if n < 2:
        raise InstanceError(f"need at least 2 roots, got {n}")
    if n < 6 and not allow_small:
        raise TooFewRootsError(n)


@dataclass(frozen=True)
class ValuationMatrix:
    """Symmetric matrix of pairwise valuations with INFINITY diagonal."""

    entries: tuple[tuple[ExtNat, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, i: int, j: int) -> ExtNat:
        return self.entries[i][j]

    def max_finite(self) -> int:
        top = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e = self.entries[i][j]
                if e is not INFINITY and e > top:
                    top = e
        return top

    def check_shape(self) -> None:
        n = self.n
        for i in range(n):
            if len(self.entries[i]) != n:
                raise InstanceError(f"matrix row {i} has length {len(self.entries[i])}, expected {n}")
            if self.entries[i][i] is not INFINITY:
                raise InstanceError(f"matrix diagonal entry ({i}, {i}) must be null/INFINITY")
            for j in range(n):
                if i == j:
                    continue
                e = self.entries[i][j]
                if e is INFINITY:
                    raise DuplicateRootsError([(min(i, j), max(i, j))])
                if not isinstance(e, int) or e < 0:
                    raise InstanceError(f"matrix entry ({i}, {j}) must be a nonnegative integer, got {e!r}")
                if self.entries[j][i] != e:
                    raise InstanceError(f"matrix not symmetric at ({i}, {j})")


def build_matrix(inst: Instance) -> ValuationMatrix:
    """Pairwise valuation matrix m[i][j] = val(b_i - b_j, p)."""
    n = inst.num_roots
    rows = [[INFINITY] * n for _ in range(n)]
    dupes = []
    for i in range(n):
        for j in range(i + 1, n):
            v = val(inst.roots[i] - inst.roots[j], inst.p)
            if v is INFINITY:
                dupes.append((i, j))
            rows[i][j] = rows[j][i] = v
    if dupes:
        raise DuplicateRootsError(dupes)
    return ValuationMatrix(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class UltrametricVerdict:
    violations: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_ultrametric(m: ValuationMatrix) -> UltrametricVerdict:
    """Check the strong triangle rule on every index triple.

    A triple passes exactly when the minimum of its three pairwise
    valuations is attained at least twice.  A violating triple (i, j, k) is
    reported with the offending short side as m[i][k], i.e.
    m[i][k] < min(m[i][j], m[j][k]).
    """
    n = m.n
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = m.at(i, j), m.at(j, k), m.at(i, k)
                lo = min(a, b, c)
                if (a == lo) + (b == lo) + (c == lo) >= 2:
                    continue
                # orient so the unique minimum sits on the outer pair
                if a == lo:  # short side (i, j)
                    bad.append((i, k, j))
                elif b == lo:  # short side (j, k)
                    bad.append((j, i, k))
                else:  # short side (i, k)
                    bad.append((i, j, k))
    return UltrametricVerdict(tuple(bad))


def matrix_from_rows(rows: Sequence[Sequence]) -> ValuationMatrix:
    """Build and shape-check a matrix from raw rows (None diagonal allowed).

    Only the shape is validated here; root-count and ultrametric gates sit
    at the analysis boundary so small matrices remain usable for validator
    testing.
    """
    conv = []
    for i, row in enumerate(rows):
        out = []
        for j, e in enumerate(row):
            if e is None or e is INFINITY:
                out.append(INFINITY)
            else:
                out.append(e)
        conv.append(tuple(out))
    m = ValuationMatrix(tuple(conv))
    m.check_shape()
    return m
