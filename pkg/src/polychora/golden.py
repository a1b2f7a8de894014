"""Exact arithmetic over the quadratic field Q(sqrt5), plus exact 4-vectors.

Every coordinate of the supported polytopes (in their canonical frames) lives
in Q(sqrt5), so all combinatorial decisions downstream (edge detection,
coplanarity, hyperplane sides) can be made with zero rounding error.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterator, Sequence, Union

# Rational approximation of sqrt(5), accurate to 40 decimal digits and below
# the true value.  Used only for float conversion, never for predicates.
_SQRT5_DIGITS = 40
_SQRT5_APPROX = Fraction(math.isqrt(5 * 10 ** (2 * _SQRT5_DIGITS)), 10 ** _SQRT5_DIGITS)

Rationalish = Union[int, Fraction]
GoldenLike = Union["GoldenNumber", int, Fraction]


class GoldenNumber:
    """An exact element p + q*sqrt(5) with rational p, q.

    Instances are immutable and hashable; arithmetic is exact field
    arithmetic.  ``Fraction`` keeps both coefficients in canonical lowest
    terms, so equality is plain structural equality.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: Rationalish = 0, q: Rationalish = 0) -> None:
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "q", Fraction(q))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenNumber is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> GoldenNumber:
        return cls(n, 0)

    @staticmethod
    def coerce(x: GoldenLike) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNumber(x, 0)
        raise TypeError(f"cannot interpret {x!r} as a GoldenNumber")

    # -- field arithmetic -----------------------------------------------------

    def __add__(self, other: GoldenLike) -> GoldenNumber:
        o = self.coerce(other)
        return GoldenNumber(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other: GoldenLike) -> GoldenNumber:
        o = self.coerce(other)
        return GoldenNumber(self.p - o.p, self.q - o.q)

    def __rsub__(self, other: GoldenLike) -> GoldenNumber:
        return self.coerce(other) - self

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.p, -self.q)

    def __mul__(self, other: GoldenLike) -> GoldenNumber:
        o = self.coerce(other)
        # (p + q*sqrt5)(r + s*sqrt5) = (pr + 5qs) + (ps + qr)*sqrt5
        return GoldenNumber(self.p * o.p + 5 * self.q * o.q,
                            self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def inverse(self) -> GoldenNumber:
        # 1/(p + q*sqrt5) = (p - q*sqrt5)/(p^2 - 5 q^2); the norm p^2 - 5q^2
        # vanishes only at zero because sqrt5 is irrational.
        norm = self.p * self.p - 5 * self.q * self.q
        if norm == 0:
            raise ZeroDivisionError("division by zero GoldenNumber")
        return GoldenNumber(self.p / norm, -self.q / norm)

    def __truediv__(self, other: GoldenLike) -> GoldenNumber:
        return self * self.coerce(other).inverse()

    def __rtruediv__(self, other: GoldenLike) -> GoldenNumber:
        return self.coerce(other) * self.inverse()

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate p - q*sqrt(5)."""
        return GoldenNumber(self.p, -self.q)

    # -- predicates and ordering ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.p and not self.q

    def sign(self) -> int:
        """Exact sign of p + q*sqrt5, decided by integer arithmetic only."""
        ps = (self.p > 0) - (self.p < 0)
        qs = (self.q > 0) - (self.q < 0)
        if qs == 0:
            return ps
        if ps == 0 or ps == qs:
            return qs
        # Mixed signs: |p| vs |q|*sqrt5 decided via p^2 vs 5 q^2.
        cmp = self.p * self.p - 5 * self.q * self.q
        if cmp == 0:  # impossible for nonzero rationals; guard anyway
            raise ArithmeticError("p^2 == 5 q^2 with p, q nonzero")
        return ps if cmp > 0 else qs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (GoldenNumber, int, Fraction)):
            o = self.coerce(other)
            return self.p == o.p and self.q == o.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __lt__(self, other: GoldenLike) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: GoldenLike) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: GoldenLike) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: GoldenLike) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- conversion and rendering ----------------------------------------------

    def __float__(self) -> float:
        # Exact rational evaluation against the 40-digit sqrt5 approximant,
        # then one correctly rounded Fraction -> float conversion: the result
        # is within 1 ulp of the true value.
        return float(self.p + self.q * _SQRT5_APPROX)

    def fixed(self, places: int = 10) -> str:
        """Fixed-point decimal string, round-half-even (reference-table format)."""
        with localcontext() as ctx:
            ctx.prec = 60
            d = (Decimal(self.p.numerator) / Decimal(self.p.denominator)
                 + Decimal(self.q.numerator) / Decimal(self.q.denominator)
                 * Decimal(5).sqrt())
            out = d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
            if out == 0:
                out = abs(out)  # avoid "-0.0000000000"
            return format(out, "f")

    def exact_str(self) -> str:
        """Render as ``p/q+r/s*sqrt5`` (used by the --exact export)."""
        if self.q >= 0:
            return f"{self.p}+{self.q}*sqrt5"
        return f"{self.p}-{-self.q}*sqrt5"

    def __repr__(self) -> str:
        return f"GoldenNumber({self.p}, {self.q})"

    def __str__(self) -> str:
        return self.exact_str()


ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)
TWO = GoldenNumber(2)
HALF = GoldenNumber(Fraction(1, 2))
SQRT5 = GoldenNumber(0, 1)
PHI = GoldenNumber(Fraction(1, 2), Fraction(1, 2))        # (1 + sqrt5)/2
PHI_INV = GoldenNumber(Fraction(-1, 2), Fraction(1, 2))   # phi - 1
PHI_SQ = GoldenNumber(Fraction(3, 2), Fraction(1, 2))     # phi + 1
PHI_INV_SQ = GoldenNumber(Fraction(3, 2), Fraction(-1, 2))  # 2 - phi


def _rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def golden_sqrt(x: GoldenNumber) -> GoldenNumber | None:
    """Exact nonnegative square root of x within Q(sqrt5), or None.

    Solves (a + b*sqrt5)^2 = p + q*sqrt5 by radicals over Q: a^2 is a root of
    4t^2 - 4pt + 5q^2 = 0, and b = q/(2a) (or a = 0 with 5b^2 = p).
    """
    if x.sign() < 0:
        return None
    if x.is_zero:
        return ZERO
    if x.q == 0:
        a = _rational_sqrt(x.p)
        if a is not None:
            return GoldenNumber(a, 0)
        b = _rational_sqrt(x.p / 5)
        if b is not None:
            return GoldenNumber(0, b)
        return None
    disc = _rational_sqrt(x.p * x.p - 5 * x.q * x.q)
    if disc is None:
        return None
    for branch in ((x.p + disc) / 2, (x.p - disc) / 2):
        a = _rational_sqrt(branch)
        if a is not None and a != 0:
            b = x.q / (2 * a)
            cand = GoldenNumber(a, b)
            if (cand * cand) == x and cand.sign() > 0:
                return cand
            cand = -cand
            if (cand * cand) == x and cand.sign() > 0:
                return cand
    return None


class Vec4:
    """Exact 4-component tuple over Q(sqrt5).

    Used both for positions (points) and displacements (vectors); the
    distinction is purely semantic, so they share one representation.
    """

    __slots__ = ("x1", "x2", "x3", "x4")

    def __init__(self, x1: GoldenLike, x2: GoldenLike,
                 x3: GoldenLike, x4: GoldenLike) -> None:
        object.__setattr__(self, "x1", GoldenNumber.coerce(x1))
        object.__setattr__(self, "x2", GoldenNumber.coerce(x2))
        object.__setattr__(self, "x3", GoldenNumber.coerce(x3))
        object.__setattr__(self, "x4", GoldenNumber.coerce(x4))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Vec4 is immutable")

    def components(self) -> tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
        return (self.x1, self.x2, self.x3, self.x4)

    def __iter__(self) -> Iterator[GoldenNumber]:
        return iter(self.components())

    def __add__(self, other: Vec4) -> Vec4:
        return Vec4(self.x1 + other.x1, self.x2 + other.x2,
                    self.x3 + other.x3, self.x4 + other.x4)

    def __sub__(self, other: Vec4) -> Vec4:
        return Vec4(self.x1 - other.x1, self.x2 - other.x2,
                    self.x3 - other.x3, self.x4 - other.x4)

    def __neg__(self) -> Vec4:
        return Vec4(-self.x1, -self.x2, -self.x3, -self.x4)

    def __mul__(self, factor: GoldenLike) -> Vec4:
        f = GoldenNumber.coerce(factor)
        return Vec4(self.x1 * f, self.x2 * f, self.x3 * f, self.x4 * f)

    __rmul__ = __mul__

    def dot(self, other: Vec4) -> GoldenNumber:
        return (self.x1 * other.x1 + self.x2 * other.x2
                + self.x3 * other.x3 + self.x4 * other.x4)

    def norm2(self) -> GoldenNumber:
        return self.dot(self)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components())

    def to_floats(self) -> tuple[float, float, float, float]:
        return (float(self.x1), float(self.x2), float(self.x3), float(self.x4))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Vec4):
            return self.components() == other.components()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components())

    def __repr__(self) -> str:
        return f"Vec4({self.x1}, {self.x2}, {self.x3}, {self.x4})"


# Positions and displacements share Vec4; the names match their roles.
Point4 = Vec4
Vector4 = Vec4


def rank_and_kernel(rows: Sequence[Vec4]) -> tuple[int, list[Vec4]]:
    """Exact rank and null-space basis of up to four 4-vectors over Q(sqrt5).

    Forward elimination is division-free (cross-multiplication, i.e.
    determinant style) to keep intermediate entries polynomial in the input;
    exact division appears only in the final back-substitution.
    """
    if not 1 <= len(rows) <= 4:
        raise ValueError("rank_and_kernel expects between 1 and 4 rows")
    mat = [list(r.components()) for r in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(4):
        pr = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, len(mat)):
            if not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [piv * mat[i][k] - f * mat[r][k] for k in range(4)]
        pivots.append((r, c))
        r += 1
    rank = r
    pivot_cols = {c for _, c in pivots}
    basis: list[Vec4] = []
    for free in (c for c in range(4) if c not in pivot_cols):
        x: list[GoldenNumber] = [ZERO, ZERO, ZERO, ZERO]
        x[free] = ONE
        for pr, pc in reversed(pivots):
            acc = ZERO
            for k in range(pc + 1, 4):
                if not x[k].is_zero:
                    acc = acc + mat[pr][k] * x[k]
            x[pc] = -acc / mat[pr][pc]
        basis.append(Vec4(*x))
    return rank, basis
