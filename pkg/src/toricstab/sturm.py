"""Sturm sequences for exact real-root counting and isolation over Q.

Real polynomials here are lists of Fractions, ascending degree, trimmed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

RPoly = list


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def rderiv(p: RPoly) -> RPoly:
    return _trim([p[k] * k for k in range(1, len(p))])


def rdivmod(p: RPoly, q: RPoly) -> tuple[RPoly, RPoly]:
    rem = list(p)
    dq = len(q) - 1
    if len(rem) <= dq:
        return [], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if not c:
            continue
        t = c / q[-1]
        quot[k - dq] = t
        for j in range(dq + 1):
            rem[k - dq + j] -= t * q[j]
    return _trim(quot), _trim(rem[:dq])


def rmonic(p: RPoly) -> RPoly:
    if not p:
        return []
    lead = p[-1]
    return [Fraction(c) / lead for c in p]


def rgcd(p: RPoly, q: RPoly) -> RPoly:
    a, b = rmonic(_trim(p)), rmonic(_trim(q))
    while b:
        _, r = rdivmod(a, b)
        a, b = b, rmonic(r)
    return a


def squarefree_part(p: RPoly) -> RPoly:
    p = _trim(p)
    if len(p) <= 1:
        return rmonic(p)
    g = rgcd(p, rderiv(p))
    q, _ = rdivmod(p, g)
    return rmonic(q)


def sturm_sequence(p: RPoly) -> list[RPoly]:
    p = _trim(p)
    seq = [p]
    d = rderiv(p)
    while d:
        seq.append(d)
        _, r = rdivmod(seq[-2], seq[-1])
        d = [-c for c in r]
    return seq


def _sign_at(p: RPoly, x) -> int:
    if x == "+inf":
        return (p[-1] > 0) - (p[-1] < 0)
    if x == "-inf":
        s = (p[-1] > 0) - (p[-1] < 0)
        return s if (len(p) - 1) % 2 == 0 else -s
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def sign_variations(seq: Sequence[RPoly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: RPoly, lo="-inf", hi="+inf") -> int:
    """Number of distinct real roots in (lo, hi]."""
    sf = squarefree_part(p)
    if len(sf) <= 1:
        return 0
    seq = sturm_sequence(sf)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def cauchy_bound(p: RPoly) -> Fraction:
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: RPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each containing exactly one distinct real root."""
    sf = squarefree_part(p)
    if len(sf) <= 1:
        return []
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = sign_variations(seq, a) - sign_variations(seq, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)
