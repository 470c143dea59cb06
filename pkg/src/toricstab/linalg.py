"""Exact integer and rational linear algebra.

Smith normal form (elementary divisors only), rational row reduction,
kernels, and a two-phase simplex method over Fractions with Bland's rule.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


def smith_divisors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    divisors = []
    for t in range(min(m, n)):
        pivot = _min_entry(a, t, t)
        if pivot is None:
            break
        _move_to(a, pivot, t)
        while True:
            clean = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        row_t, row_i = a[t], a[i]
                        for j in range(t, n):
                            row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if not clean:
                _move_to(a, _min_in_cross(a, t), t)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            # fold the offending row into the pivot row; the next pass shrinks the pivot
            i = bad[0]
            for j in range(t, n):
                a[t][j] += a[i][j]
        divisors.append(abs(a[t][t]))
    return divisors


def _min_entry(a, r0, c0):
    best = None
    for i in range(r0, len(a)):
        row = a[i]
        for j in range(c0, len(row)):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def _min_in_cross(a, t):
    best = (abs(a[t][t]), t, t)
    for i in range(t + 1, len(a)):
        if a[i][t] and abs(a[i][t]) < best[0]:
            best = (abs(a[i][t]), i, t)
    for j in range(t + 1, len(a[t])):
        if a[t][j] and abs(a[t][j]) < best[0]:
            best = (abs(a[t][j]), t, j)
    return best[1], best[2]


def _move_to(a, pos, t):
    i, j = pos
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def integer_rank(matrix) -> int:
    return len(smith_divisors(matrix))


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1]) if matrix else 0


def solve(matrix, rhs) -> Optional[list[Fraction]]:
    """A solution of A x = rhs over Q (free variables zero), or None."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return x


def nullspace(matrix, ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} over Q."""
    n = ncols if ncols is not None else len(matrix[0])
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    red, pivots = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def primitive_integer_vector(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to integers with gcd 1 (sign preserved)."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


class LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status: str, x=None, value=None):
        self.status = status
        self.x = x
        self.value = value

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"

    def __repr__(self):
        return f"LPResult({self.status!r}, x={self.x}, value={self.value})"


def simplex(a_eq, b_eq, cost=None) -> LPResult:
    """Minimize cost.x subject to a_eq x = b_eq, x >= 0, exactly.

    With ``cost=None`` only feasibility is decided. Bland's rule keeps the
    method finite on degenerate problems.
    """
    m = len(a_eq)
    n = len(a_eq[0]) if m else len(cost or [])
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in a_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(i == k)) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m

    # phase 1: minimize the sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[width] -= row[width]
    _run(rows, basis, obj, width, allowed=width)
    if obj[width] != 0:
        return LPResult("infeasible")

    # drive remaining artificials out of the basis
    keep = []
    for i, bvar in enumerate(basis):
        if bvar >= n:
            col = next((j for j in range(n) if rows[i][j]), None)
            if col is None:
                continue  # redundant equality
            _pivot(rows, basis, None, i, col)
        keep.append(i)
    rows = [rows[i] for i in keep]
    basis = [basis[i] for i in keep]

    if cost is None:
        x = _extract(rows, basis, n, width)
        return LPResult("feasible", x)

    obj = [Fraction(c) for c in cost] + [Fraction(0)] * (m + 1)
    for i, bvar in enumerate(basis):
        cb = obj[bvar]
        if cb:
            obj = [o - cb * r for o, r in zip(obj, rows[i])]
    status = _run(rows, basis, obj, width, allowed=n)
    if status == "unbounded":
        return LPResult("unbounded")
    x = _extract(rows, basis, n, width)
    value = sum((Fraction(c) * xi for c, xi in zip(cost, x)), Fraction(0))
    return LPResult("optimal", x, value)


def _run(rows, basis, obj, width, allowed) -> str:
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(rows, basis, obj, best[1], enter)


def _pivot(rows, basis, obj, r, c):
    inv = 1 / rows[r][c]
    rows[r] = [x * inv for x in rows[r]]
    pr = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, pr)]
    if obj is not None and obj[c]:
        f = obj[c]
        obj[:] = [x - f * y for x, y in zip(obj, pr)]
    basis[r] = c


def _extract(rows, basis, n, width):
    x = [Fraction(0)] * n
    for i, bvar in enumerate(basis):
        if bvar < n:
            x[bvar] = rows[i][width]
    return x
