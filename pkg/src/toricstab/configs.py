"""Divisor (configuration) model, stabilization maps and strip clipping."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import sympy

from . import poly as P
from .complexes import SimplicialComplex
from .errors import InvalidInput, NotSplittable, ShapeError
from .gaussian import GaussianRational
from .polysys import COMPLEX, REAL, MonicPolynomial, field_dim, parse_coeff


@dataclass(frozen=True)
class Divisor:
    """Finite formal sum of distinct points with positive multiplicities."""

    entries: tuple  # sorted ((point, mult), ...)

    def __init__(self, entries=()):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        acc: dict = {}
        for pt, mult in items:
            pt = GaussianRational.coerce(pt)
            mult = int(mult)
            if mult < 1:
                raise InvalidInput("multiplicities must be positive")
            acc[pt] = acc.get(pt, 0) + mult
        object.__setattr__(self, "entries", tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key())))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def multiplicity(self, pt) -> int:
        return self.as_dict().get(GaussianRational.coerce(pt), 0)

    def conjugate(self) -> "Divisor":
        return Divisor((pt.conjugate(), m) for pt, m in self.entries)

    def is_conjugation_closed(self) -> bool:
        return self == self.conjugate()

    def __str__(self):
        if not self.entries:
            return "{}"
        return "{" + ", ".join(f"{pt}:{m}" for pt, m in self.entries) + "}"


@dataclass(frozen=True)
class DivisorSystem:
    field: str
    n: int
    divisors: tuple

    def __post_init__(self):
        field_dim(self.field)
        if self.n < 1:
            raise InvalidInput("n must be >= 1")
        divs = tuple(d if isinstance(d, Divisor) else Divisor(d) for d in self.divisors)
        if self.field == REAL and not all(d.is_conjugation_closed() for d in divs):
            raise InvalidInput("a real divisor system must be closed under conjugation")
        object.__setattr__(self, "divisors", divs)

    @property
    def D(self) -> tuple:
        return tuple(d.degree for d in self.divisors)

    @property
    def r(self) -> int:
        return len(self.divisors)

    def conjugate(self) -> "DivisorSystem":
        return DivisorSystem(self.field, self.n, tuple(d.conjugate() for d in self.divisors))


def divisor_to_poly(xi: Divisor) -> MonicPolynomial:
    p = (GaussianRational(1),)
    for pt, mult in xi.entries:
        p = P.mul(p, P.power(P.linear(pt), mult))
    return MonicPolynomial.from_poly(p)


_z = sympy.Symbol("z")


def _to_sympy(c: GaussianRational):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)


def _from_sympy(expr) -> GaussianRational:
    re, im = sympy.re(expr), sympy.im(expr)
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def poly_to_divisor(f: MonicPolynomial) -> Divisor:
    """Root divisor of f; raises NotSplittable unless f splits over Q(i)."""
    if f.degree == 0:
        return Divisor()
    expr = sum(_to_sympy(c) * _z ** k for k, c in enumerate(f.full))
    _, factors = sympy.factor_list(sympy.expand(expr), _z, gaussian=True)
    entries = []
    for fac, mult in factors:
        fp = sympy.Poly(fac, _z)
        if fp.degree() != 1:
            raise NotSplittable(f"factor {fac} has no root in Q(i)")
        a, b = fp.all_coeffs()
        entries.append((_from_sympy(-b / a), mult))
    xi = Divisor(entries)
    if divisor_to_poly(xi) != f:
        raise NotSplittable("root extraction did not reproduce the polynomial")
    return xi


def _check_shape(sys: DivisorSystem, K: SimplicialComplex):
    if sys.r != K.num_vertices:
        raise ShapeError(f"system has {sys.r} divisors but the complex has {K.num_vertices} vertices")


def divisor_membership(sys: DivisorSystem, K: SimplicialComplex) -> bool:
    """No real point of multiplicity >= n is shared by all divisors of a minimal non-face."""
    _check_shape(sys, K)
    real = [{pt: m for pt, m in d.entries if pt.is_real()} for d in sys.divisors]
    for sigma in K.min_non_faces:
        common = set(real[sigma[0]])
        for i in sigma[1:]:
            common &= real[i].keys()
        for pt in common:
            if min(real[i][pt] for i in sigma) >= sys.n:
                return False
    return True


def squash(x: Fraction, N: int) -> Fraction:
    """Increasing rational bijection R -> (-inf, N).

    Identity up to the knee N - 2; beyond it t = x - knee maps to knee + 2t/(1+t),
    which fills (N - 2, N).
    """
    knee = N - 2
    if x <= knee:
        return x
    t = x - knee
    return knee + 2 * t / (1 + t)


def phi(w: GaussianRational, N: int) -> GaussianRational:
    return GaussianRational(squash(w.re, N), w.im)


def anchor_points(D: Sequence[int], r: int) -> list:
    """x_i = N(D) + i for i = 1..r."""
    N = sum(D)
    return [GaussianRational(N + i) for i in range(1, r + 1)]


def stabilize(sys: DivisorSystem, a: Sequence[int]) -> DivisorSystem:
    if len(a) != sys.r:
        raise ShapeError("stabilization vector has the wrong length")
    if any(x < 0 for x in a) or not any(a):
        raise InvalidInput("stabilization vector must be nonnegative and nonzero")
    N = sum(sys.D)
    anchors = anchor_points(sys.D, sys.r)
    out = []
    for xi, ai, x in zip(sys.divisors, a, anchors):
        entries = [(phi(pt, N), m) for pt, m in xi.entries]
        if ai:
            entries.append((x, ai))
        out.append(Divisor(entries))
    return DivisorSystem(sys.field, sys.n, tuple(out))


def scan_at(sys: DivisorSystem, x, eps) -> DivisorSystem:
    """Keep points w with |Re w - x| < eps and |Im w| < 1."""
    x, eps = Fraction(x), Fraction(eps)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    out = []
    for xi in sys.divisors:
        out.append(Divisor((pt, m) for pt, m in xi.entries if abs(pt.re - x) < eps and abs(pt.im) < 1))
    return DivisorSystem(sys.field, sys.n, tuple(out))


def divisor_system_from_dict(data: dict) -> DivisorSystem:
    try:
        divs = []
        for d in data["divisors"]:
            divs.append(Divisor((parse_coeff(e["pt"]), int(e["mult"])) for e in d))
        return DivisorSystem(data["field"], int(data["n"]), tuple(divs))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed divisor system: {exc}") from exc


def divisor_system_to_dict(sys: DivisorSystem) -> dict:
    return {"n": sys.n, "field": sys.field,
            "divisors": [[{"pt": {"re": str(pt.re), "im": str(pt.im)}, "mult": m} for pt, m in d.entries]
                         for d in sys.divisors]}


__all__ = [
    "COMPLEX", "REAL", "Divisor", "DivisorSystem", "divisor_to_poly", "poly_to_divisor",
    "divisor_membership", "squash", "phi", "anchor_points", "stabilize", "scan_at",
]
