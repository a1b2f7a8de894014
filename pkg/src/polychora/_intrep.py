"""Integer-pair representation of Q(sqrt5) vertex arrays for bulk exact scans.

Scaling every coordinate by the common denominator turns each component into
an integer pair (a, b) meaning a + b*sqrt5.  Ring arithmetic on such pairs is
plain int64 numpy work, and sign/equality decisions stay exact, so the O(N^2)
pair scans and O(N) hyperplane side-tests run vectorized without ever leaving
exact arithmetic.  Coefficients in this artifact are tiny (|a|, |b| well under
10^6 at every stage), so int64 cannot overflow; a guard asserts the bound.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .golden import GoldenNumber, Vec4

_SAFE_BOUND = 2 ** 30  # squares of entries below this fit int64 with headroom


def int_pairs(vectors: Sequence[Vec4]) -> tuple[np.ndarray, int]:
    """Clear denominators: (N, 4, 2) int64 array plus the common scale.

    ``value[i][k] = (arr[i,k,0] + arr[i,k,1]*sqrt5) / scale``.
    """
    scale = 1
    for v in vectors:
        for c in v.components():
            scale = math.lcm(scale, c.p.denominator, c.q.denominator)
    arr = np.empty((len(vectors), 4, 2), dtype=np.int64)
    for i, v in enumerate(vectors):
        for k, c in enumerate(v.components()):
            arr[i, k, 0] = int(c.p * scale)
            arr[i, k, 1] = int(c.q * scale)
    _check_bound(arr)
    return arr, scale


def pair_to_golden(a: int, b: int, scale: int = 1) -> GoldenNumber:
    return GoldenNumber(Fraction(int(a), scale), Fraction(int(b), scale))


def _check_bound(arr: np.ndarray) -> None:
    if arr.size and int(np.abs(arr).max()) >= _SAFE_BOUND:
        raise OverflowError("integer-pair coordinates exceed the safe bound")


def sign_pairs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized exact sign of a + b*sqrt5 for int64 arrays."""
    _check_bound(a)
    _check_bound(b)
    sa = np.sign(a)
    sb = np.sign(b)
    # Same sign (or one zero): the nonzero sign wins.  Mixed signs: compare
    # a^2 against 5 b^2; the term with the larger square dominates.
    agree = np.where(sa == 0, sb, sa)
    cmp = np.sign(a * a - 5 * b * b)
    mixed = np.where(cmp > 0, sa, sb)
    return np.where(sa * sb >= 0, agree, mixed).astype(np.int64)


def dot_pairs(arr: np.ndarray, n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact dot of every row of ``arr`` (N,4,2) with one vector ``n`` (4,2)."""
    xa, xb = arr[:, :, 0], arr[:, :, 1]
    na, nb = n[:, 0], n[:, 1]
    da = xa @ na + 5 * (xb @ nb)
    db = xa @ nb + xb @ na
    return da, db


def pairwise_norm2(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact squared distances between all rows: two (N, N) int64 arrays."""
    a, b = arr[:, :, 0], arr[:, :, 1]
    dot_a = a @ a.T + 5 * (b @ b.T)
    dot_b = a @ b.T + b @ a.T
    na = np.diag(dot_a)
    nb = np.diag(dot_b)
    out_a = na[:, None] + na[None, :] - 2 * dot_a
    out_b = nb[:, None] + nb[None, :] - 2 * dot_b
    _check_bound(out_a)
    _check_bound(out_b)
    return out_a, out_b


def min_offdiag_value(norm_a: np.ndarray, norm_b: np.ndarray) -> tuple[int, int]:
    """Exact minimum a + b*sqrt5 over the strict upper triangle."""
    n = norm_a.shape[0]
    iu = np.triu_indices(n, k=1)
    va, vb = norm_a[iu], norm_b[iu]
    pairs = {(int(x), int(y)) for x, y in zip(va.tolist(), vb.tolist())}
    best = min(pairs, key=lambda p: pair_to_golden(*p))
    return best


# -- division-free ring arithmetic on single (a, b) pairs ---------------------

Pair = tuple[int, int]

ZERO_PAIR: Pair = (0, 0)


def pmul(x: Pair, y: Pair) -> Pair:
    return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def padd(x: Pair, y: Pair) -> Pair:
    return (x[0] + y[0], x[1] + y[1])


def psub(x: Pair, y: Pair) -> Pair:
    return (x[0] - y[0], x[1] - y[1])


def _det3(m: list[list[Pair]]) -> Pair:
    t1 = pmul(m[0][0], psub(pmul(m[1][1], m[2][2]), pmul(m[1][2], m[2][1])))
    t2 = pmul(m[0][1], psub(pmul(m[1][0], m[2][2]), pmul(m[1][2], m[2][0])))
    t3 = pmul(m[0][2], psub(pmul(m[1][0], m[2][1]), pmul(m[1][1], m[2][0])))
    return padd(psub(t1, t2), t3)


def plane_functionals(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Annihilator of span{a, b} as four linear functionals, (4, 4, 2) int64.

    Row k sends d to the 3x3 minor det(a, b, d | column k dropped); d lies in
    span{a, b} exactly when all four functionals vanish on it.  Returns None
    when a and b are linearly dependent (every 2x2 minor is zero).
    """
    ap = [(int(a[i, 0]), int(a[i, 1])) for i in range(4)]
    bp = [(int(b[i, 0]), int(b[i, 1])) for i in range(4)]
    minor = {}
    nonzero = False
    for i in range(4):
        for j in range(i + 1, 4):
            m = psub(pmul(ap[i], bp[j]), pmul(ap[j], bp[i]))
            minor[(i, j)] = m
            nonzero = nonzero or m != ZERO_PAIR
    if not nonzero:
        return None
    out = np.zeros((4, 4, 2), dtype=np.int64)
    for k in range(4):
        c0, c1, c2 = (c for c in range(4) if c != k)
        out[k, c0] = minor[(c1, c2)]
        out[k, c1] = psub(ZERO_PAIR, minor[(c0, c2)])
        out[k, c2] = minor[(c0, c1)]
    _check_bound(out)
    return out


def cross4(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Exact 4D cross product: the (4, 2) normal orthogonal to a, b, c.

    Component k is the cofactor (-1)^k det(a, b, c | column k dropped); zero
    exactly when a, b, c are linearly dependent.
    """
    rows = [[(int(v[i, 0]), int(v[i, 1])) for i in range(4)] for v in (a, b, c)]
    out = np.zeros((4, 2), dtype=np.int64)
    sign = 1
    for k in range(4):
        cols = [c2 for c2 in range(4) if c2 != k]
        m = [[rows[r][c2] for c2 in cols] for r in range(3)]
        d = _det3(m)
        out[k, 0] = sign * d[0]
        out[k, 1] = sign * d[1]
        sign = -sign
    _check_bound(out)
    return out
