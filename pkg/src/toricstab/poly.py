"""Dense univariate polynomials over Q(i).

A polynomial is a tuple of GaussianRational coefficients in ascending
degree order with no trailing zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .gaussian import ONE, ZERO, GaussianRational

Poly = tuple


def make(coeffs: Iterable) -> Poly:
    return trim(tuple(GaussianRational.coerce(c) for c in coeffs))


def trim(p: Sequence[GaussianRational]) -> Poly:
    end = len(p)
    while end and p[end - 1].is_zero():
        end -= 1
    return tuple(p[:end])


def degree(p: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return trim(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    c = GaussianRational.coerce(c)
    if c.is_zero():
        return ()
    return tuple(a * c for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def power(p: Poly, k: int) -> Poly:
    out: Poly = (ONE,)
    for _ in range(k):
        out = mul(out, p)
    return out


def linear(root) -> Poly:
    """The monic linear polynomial z - root."""
    return (-GaussianRational.coerce(root), ONE)


def from_roots(roots: Iterable) -> Poly:
    out: Poly = (ONE,)
    for a in roots:
        out = mul(out, linear(a))
    return out


def derivative(p: Poly, order: int = 1) -> Poly:
    if order == 0:
        return p
    if order >= len(p):
        return ()
    # k-th coefficient of the order-th derivative is (k+order)!/k! * p[k+order]
    out = []
    for k in range(len(p) - order):
        falling = 1
        for t in range(k + 1, k + order + 1):
            falling *= t
        out.append(p[k + order] * falling)
    return trim(out)


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def evaluate(p: Poly, x) -> GaussianRational:
    x = GaussianRational.coerce(x)
    if not x.im:
        # real point: the real and imaginary coefficient parts evaluate independently
        im = [c.im for c in p]
        return GaussianRational(_horner([c.re for c in p], x.re), _horner(im, x.re) if any(im) else 0)
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lead_inv = q[-1].inverse()
    if len(rem) <= dq:
        return (), trim(rem)
    quot = [ZERO] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c.is_zero():
            continue
        t = c * lead_inv
        quot[k - dq] = t
        for j in range(dq + 1):
            rem[k - dq + j] = rem[k - dq + j] - t * q[j]
    return trim(quot), trim(rem[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return ()
    lead = p[-1]
    if lead == ONE:
        return p
    inv = lead.inverse()
    return tuple(c * inv for c in p)


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q(i); gcd(0, 0) = 0."""
    a, b = monic(p), monic(q)
    while b:
        _, r = divmod_(a, b)
        a, b = b, monic(r)
    return a


def gcd_many(polys: Iterable[Poly]) -> Poly:
    g: Poly = ()
    for p in polys:
        g = gcd(g, p)
        if len(g) == 1:
            break
    return g


def conjugate(p: Poly) -> Poly:
    return tuple(c.conjugate() for c in p)


def is_real(p: Poly) -> bool:
    return all(c.is_real() for c in p)


def real_part(p: Poly) -> list[Fraction]:
    return _trim_frac([c.re for c in p])


def imag_part(p: Poly) -> list[Fraction]:
    return _trim_frac([c.im for c in p])


def _trim_frac(cs: list[Fraction]) -> list[Fraction]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def taylor_shift(p: Poly, a) -> Poly:
    """Coefficients of p(z + a)."""
    a = GaussianRational.coerce(a)
    out = [ZERO] * len(p)
    for k, c in enumerate(p):
        for j in range(k + 1):
            out[j] = out[j] + c * comb(k, j) * a ** (k - j)
    return trim(out)


def to_str(p: Poly, var: str = "z") -> str:
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        cs = str(c)
        if c.re and c.im:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == ONE else f"{cs}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")
