"""Homogeneous coordinates: polyhedral-product complement, Cox group, evaluation."""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

from . import poly as P
from .complexes import SimplicialComplex
from .errors import InvalidInput, NotSpanning, ShapeError
from .gaussian import ONE, GaussianRational
from .linalg import rank, smith_divisors
from .polysys import PolySystem

BlockPoint = tuple  # r blocks, each a tuple of n GaussianRationals


def zero_pattern(p: BlockPoint) -> frozenset:
    return frozenset(i for i, block in enumerate(p) if all(GaussianRational.coerce(c).is_zero() for c in block))


def in_complement(p: BlockPoint, K: SimplicialComplex) -> bool:
    if len(p) != K.num_vertices:
        raise ShapeError(f"point has {len(p)} blocks, complex has {K.num_vertices} vertices")
    return K.is_face(zero_pattern(p))


@lru_cache(maxsize=4096)
def _derivatives(full: tuple, n: int) -> tuple:
    return tuple(P.derivative(full, j) for j in range(1, n))


def evaluate_system(sys: PolySystem, x) -> BlockPoint:
    """Block i is (f_i(x), f_i(x) + f_i'(x), ..., f_i(x) + f_i^(n-1)(x))."""
    blocks = []
    for f in sys.polys:
        full = f.full
        v0 = P.evaluate(full, x)
        blocks.append((v0,) + tuple(v0 + P.evaluate(d, x) for d in _derivatives(full, sys.n)))
    return tuple(blocks)


def in_group(mu: Sequence, rays) -> bool:
    """prod_k mu_k^<n_k, e_j> == 1 for every coordinate j."""
    mu = [GaussianRational.coerce(x) for x in mu]
    if len(mu) != len(rays):
        raise ShapeError("torus element and ray list differ in length")
    if any(x.is_zero() for x in mu):
        raise InvalidInput("torus elements have nonzero entries")
    m = len(rays[0])
    for j in range(m):
        acc = ONE
        for x, ray in zip(mu, rays):
            if ray[j]:
                acc = acc * x ** int(ray[j])
        if acc != ONE:
            return False
    return True


class CoxVerdict(NamedTuple):
    symbolic: bool
    sampled: bool


def cox_criterion(rays, D: Sequence[int], lam=2) -> CoxVerdict:
    if len(D) != len(rays):
        raise ShapeError("degree vector and ray list differ in length")
    m = len(rays[0])
    symbolic = all(sum(d * ray[j] for d, ray in zip(D, rays)) == 0 for j in range(m))
    lam = GaussianRational.coerce(lam)
    sampled = in_group([lam ** int(d) for d in D], rays)
    if symbolic != sampled:
        raise AssertionError(f"criterion mismatch for D={tuple(D)}")
    return CoxVerdict(symbolic, sampled)


def group_rank(rays) -> int:
    """Rank r - m of the Cox torus; the rays must span R^m."""
    rows = [list(v) for v in rays]
    m = len(rows[0])
    if rank(rows) != m or len(smith_divisors(rows)) != m:
        raise NotSpanning("rays do not span R^m")
    return len(rows) - m
