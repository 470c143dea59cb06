"""Polynomial systems with bounded (real) root multiplicity.

Membership in the spaces Q (no common *real* root of multiplicity >= n
along any non-face) and Poly (no common root at all in the algebraic
closure), together with the closed-form stability and connectivity
dimensions attached to (D, n, r_min, field).
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from . import poly as P
from .complexes import SimplicialComplex
from .errors import InvalidInput, ShapeError
from .gaussian import ONE, GaussianRational
from .sturm import count_real_roots, isolate_real_roots, rgcd

REAL = "R"
COMPLEX = "C"


def field_dim(field: str) -> int:
    """Real dimension of the coefficient field: 2 for C, 1 for R."""
    if field == COMPLEX:
        return 2
    if field == REAL:
        return 1
    raise InvalidInput(f"field must be 'R' or 'C', got {field!r}")


@dataclass(frozen=True)
class MonicPolynomial:
    """z^d + c_{d-1} z^{d-1} + ... + c_0, stored as (c_0, ..., c_{d-1})."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(GaussianRational.coerce(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, p) -> "MonicPolynomial":
        if not p or p[-1] != ONE:
            raise InvalidInput("polynomial is not monic")
        return cls(tuple(p[:-1]))

    @classmethod
    def from_roots(cls, roots) -> "MonicPolynomial":
        return cls.from_poly(P.from_roots(roots))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def full(self) -> tuple:
        return tuple(self.coeffs) + (ONE,)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def conjugate(self) -> "MonicPolynomial":
        return MonicPolynomial(tuple(c.conjugate() for c in self.coeffs))

    def __call__(self, x) -> GaussianRational:
        return P.evaluate(self.full, x)

    def __str__(self):
        return P.to_str(self.full)


@dataclass(frozen=True)
class PolySystem:
    field: str
    n: int
    polys: tuple

    def __post_init__(self):
        field_dim(self.field)
        if self.n < 1:
            raise InvalidInput("multiplicity bound n must be >= 1")
        polys = tuple(p if isinstance(p, MonicPolynomial) else MonicPolynomial(tuple(p)) for p in self.polys)
        if self.field == REAL and not all(p.is_real() for p in polys):
            raise InvalidInput("a real system must have real coefficients")
        object.__setattr__(self, "polys", polys)

    @property
    def D(self) -> tuple:
        return tuple(p.degree for p in self.polys)

    @property
    def r(self) -> int:
        return len(self.polys)

    def conjugate(self) -> "PolySystem":
        return PolySystem(self.field, self.n, tuple(p.conjugate() for p in self.polys))

    def with_n(self, n: int) -> "PolySystem":
        return PolySystem(self.field, n, self.polys)


def f_n_tuple(f: MonicPolynomial, n: int) -> tuple:
    """(f, f + f', f + f'', ..., f + f^(n-1))."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    full = f.full
    out = [f]
    for j in range(1, n):
        out.append(MonicPolynomial.from_poly(P.add(full, P.derivative(full, j))))
    return tuple(out)


def mult_locus(f: MonicPolynomial, n: int) -> tuple:
    """Monic gcd(f, f', ..., f^(n-1)): its roots are the roots of f of multiplicity >= n."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    full = f.full
    return P.gcd_many(P.derivative(full, j) for j in range(n))


def _real_common_part(g) -> list:
    """gcd over Q of the real and imaginary coefficient parts of g."""
    re, im = P.real_part(g), P.imag_part(g)
    if not im:
        return re
    if not re:
        return im
    return rgcd(re, im)


def real_roots_exist(g) -> bool:
    if not g:
        raise InvalidInput("the zero polynomial has every real number as a root")
    h = _real_common_part(g)
    return len(h) > 1 and count_real_roots(h) > 0


def real_root_intervals(g) -> list:
    """Isolating intervals (a, b] for the distinct real roots of g."""
    if not g:
        raise InvalidInput("the zero polynomial has every real number as a root")
    h = _real_common_part(g)
    if len(h) <= 1:
        return []
    return isolate_real_roots(h)


def _check_shape(sys: PolySystem, K: SimplicialComplex):
    if sys.r != K.num_vertices:
        raise ShapeError(f"system has {sys.r} polynomials but the complex has {K.num_vertices} vertices")


def common_loci(sys: PolySystem, K: SimplicialComplex):
    """Yield (sigma, G_sigma) for each minimal non-face sigma."""
    _check_shape(sys, K)
    loci: dict = {}
    for sigma in K.min_non_faces:
        g = ()
        for i in sigma:
            if i not in loci:
                loci[i] = mult_locus(sys.polys[i], sys.n)
            g = P.gcd(g, loci[i])
            if len(g) == 1:
                break
        yield sigma, g


class Witness(NamedTuple):
    sigma: tuple
    common: tuple
    intervals: list


def q_witness(sys: PolySystem, K: SimplicialComplex) -> Optional[Witness]:
    for sigma, g in common_loci(sys, K):
        if len(g) > 1 and real_roots_exist(g):
            return Witness(sigma, g, real_root_intervals(g))
    return None


def poly_witness(sys: PolySystem, K: SimplicialComplex) -> Optional[Witness]:
    for sigma, g in common_loci(sys, K):
        if len(g) > 1:
            return Witness(sigma, g, real_root_intervals(g))
    return None


def is_member_Q(sys: PolySystem, K: SimplicialComplex) -> bool:
    return q_witness(sys, K) is None


def is_member_Poly(sys: PolySystem, K: SimplicialComplex) -> bool:
    return poly_witness(sys, K) is None


# --- closed-form dimensions -------------------------------------------------

@dataclass(frozen=True)
class StabilityParams:
    D: tuple
    n: int
    r_min: int
    field: str = COMPLEX

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(int(d) for d in self.D))
        if self.n < 1:
            raise InvalidInput("n must be >= 1")
        if self.r_min < 2:
            raise InvalidInput("r_min is at least 2 for a fan")
        if not self.D or min(self.D) < 1:
            raise InvalidInput("degrees must be positive")
        field_dim(self.field)

    @classmethod
    def from_quotient(cls, n: int, r_min: int, quotient: int, field: str = COMPLEX) -> "StabilityParams":
        """Parameters with floor(d_min / n) equal to ``quotient`` (d_min = n * quotient)."""
        return cls((max(n * quotient, 1),), n, r_min, field)

    @property
    def d_field(self) -> int:
        return field_dim(self.field)

    @property
    def d_min(self) -> int:
        return min(self.D)

    @property
    def quotient(self) -> int:
        return self.d_min // self.n


def stability_dimension(p: StabilityParams) -> int:
    return (p.d_field * p.n * p.r_min - 2) * p.quotient - 2


def dpoly_dimension(p: StabilityParams) -> int:
    return (2 * p.n * p.r_min - 3) * p.quotient - 2


def is_degenerate(value: int) -> bool:
    return value < 0


class Conditions(NamedTuple):
    star: bool
    dagger: bool


def conditions_flags(p: StabilityParams) -> Conditions:
    star = p.d_min >= p.n >= 1
    return Conditions(star, star and (p.n, p.r_min) != (1, 2))


class Connectivity(NamedTuple):
    """``value`` is the k in 'k-connected'; kind is bound, simply-connected or none."""

    value: Optional[int]
    kind: str

    def __str__(self):
        if self.kind == "none":
            return "no bound"
        if self.kind == "simply-connected":
            return "simply connected"
        return f"{self.value}-connected"


def connectivity_bound(p: StabilityParams) -> Connectivity:
    n, r, q = p.n, p.r_min, p.quotient
    bound = lambda v: Connectivity(v, "bound")
    simply = Connectivity(1, "simply-connected")
    none = Connectivity(None, "none")
    if p.d_min < n:
        return none
    if p.field == COMPLEX:
        if n >= 2:
            return bound(2 * n * r - 3) if q >= 2 else bound(2 * n * r - 4)
        if p.d_min >= 2:
            return bound(2 * r - 3)
        return bound(2 * r - 4) if r >= 3 else simply
    if n >= 2:
        if q >= 2:
            return bound(n * r - 3)
        return bound(n * r - 4) if n * r >= 5 else simply
    if p.d_min >= 2:
        if r >= 4:
            return bound(r - 3)
        return simply if r == 3 else none
    if r >= 5:
        return bound(r - 4)
    return simply if r in (3, 4) else none


# --- sampling ----------------------------------------------------------------

class SampleStats(NamedTuple):
    total: int
    q_members: int
    poly_members: int
    discriminant_hits: int


def _random_coeff(rng: random.Random, field: str, bound: int) -> GaussianRational:
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if field == COMPLEX else 0
    return GaussianRational(re, im)


def _sample_chunk(args) -> tuple:
    D, n, field, bound, count, seed, K = args
    rng = random.Random(seed)
    q = pl = 0
    for _ in range(count):
        polys = tuple(MonicPolynomial(tuple(_random_coeff(rng, field, bound) for _ in range(d))) for d in D)
        sys = PolySystem(field, n, polys)
        q += is_member_Q(sys, K)
        pl += is_member_Poly(sys, K)
    return count, q, pl


def worker_seed(seed: int, worker: int) -> int:
    return seed * 1_000_003 + worker


def sample_systems(D: Sequence[int], n: int, field: str, box_bound: int, count: int, seed: int,
                   K: SimplicialComplex, workers: int = 1) -> SampleStats:
    """Monte-Carlo membership counts; the split into chunks depends only on ``workers``."""
    if count < 1:
        raise InvalidInput("count must be >= 1")
    if workers < 1:
        raise InvalidInput("workers must be >= 1")
    if len(D) != K.num_vertices:
        raise ShapeError("degree vector and complex disagree on r")
    box_bound = max(int(box_bound), 1)
    sizes = [count // workers + (w < count % workers) for w in range(workers)]
    jobs = [(tuple(D), n, field, box_bound, sizes[w], worker_seed(seed, w), K)
            for w in range(workers) if sizes[w]]
    if workers == 1:
        results = [_sample_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sample_chunk, jobs))
    total = sum(r[0] for r in results)
    q = sum(r[1] for r in results)
    pl = sum(r[2] for r in results)
    return SampleStats(total, q, pl, total - q)


# --- file format ---------------------------------------------------------------

def parse_coeff(value) -> GaussianRational:
    try:
        if isinstance(value, dict):
            return GaussianRational(Fraction(str(value.get("re", "0"))), Fraction(str(value.get("im", "0"))))
        return GaussianRational(Fraction(str(value)))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad coefficient {value!r}: {exc}") from exc


def system_from_dict(data: dict) -> PolySystem:
    try:
        field = data["field"]
        n = int(data["n"])
        polys = tuple(MonicPolynomial(tuple(parse_coeff(c) for c in p)) for p in data["polys"])
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed system description: {exc}") from exc
    return PolySystem(field, n, polys)


def system_to_dict(sys: PolySystem) -> dict:
    return {"field": sys.field, "n": sys.n,
            "polys": [[c.to_json() for c in p.coeffs] for p in sys.polys]}
