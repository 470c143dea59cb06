"""Simplicial rational fans: validation, smoothness, completeness, relations.

All arithmetic is exact; cone intersections are decided by rational LP.
Rays are stored 0-based; a cone is a sorted tuple of ray indices.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Optional, Sequence

from .errors import InvalidInput, InvalidRay, TooLarge, UnsupportedCone
from .linalg import primitive_integer_vector, rank, simplex, smith_divisors, solve

LatticeVector = tuple  # tuple[int, ...]

MAX_RELATION_RAYS = 16


def primitive_generator(v: Sequence[int]) -> LatticeVector:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise InvalidRay("zero vector has no primitive generator")
    return tuple(int(x) // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


@dataclass(frozen=True)
class Cone:
    generator_indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "generator_indices", tuple(sorted(set(self.generator_indices))))

    def __len__(self):
        return len(self.generator_indices)

    def __iter__(self):
        return iter(self.generator_indices)


@dataclass(frozen=True)
class Fan:
    """Rays (primitive, pairwise distinct) and maximal cones in R^m.

    Rays not covered by any listed cone become 1-dimensional maximal cones,
    and listed cones contained in another listed cone are dropped.
    """

    m: int
    rays: tuple
    max_cones: tuple = field(default=())

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in v) for v in self.rays)
        if not rays:
            raise InvalidInput("a fan needs at least one ray")
        for v in rays:
            if len(v) != self.m:
                raise InvalidInput(f"ray {v} does not have dimension {self.m}")
            if not any(v):
                raise InvalidRay("zero ray")
            if not is_primitive(v):
                raise InvalidRay(f"ray {v} is not primitive")
        if len(set(rays)) != len(rays):
            raise InvalidRay("rays must be pairwise distinct")
        cones = []
        for c in self.max_cones:
            cone = c if isinstance(c, Cone) else Cone(tuple(c))
            for i in cone:
                if not 0 <= i < len(rays):
                    raise InvalidInput(f"cone index {i} out of range")
            cones.append(cone)
        covered = {i for c in cones for i in c}
        cones += [Cone((i,)) for i in range(len(rays)) if i not in covered]
        sets = [frozenset(c) for c in cones]
        maximal = []
        for k, s in enumerate(sets):
            if any(s < t for t in sets) or s in sets[:k]:
                continue
            maximal.append(cones[k])
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", tuple(sorted(maximal, key=lambda c: c.generator_indices)))

    @property
    def r(self) -> int:
        return len(self.rays)

    def generators(self, cone: Cone) -> list:
        return [self.rays[i] for i in cone]

    def faces(self) -> set:
        """All cones of the fan as frozensets of ray indices (simplicial face model)."""
        out = {frozenset()}
        for c in self.max_cones:
            idx = c.generator_indices
            for k in range(1, len(idx) + 1):
                out.update(frozenset(s) for s in combinations(idx, k))
        return out


def is_simplicial(c: Cone, fan: Fan) -> bool:
    gens = fan.generators(c)
    return not gens or rank(gens) == len(gens)


def is_strongly_convex(c: Cone, fan: Fan) -> bool:
    """True iff the cone contains no line, i.e. no nonnegative nontrivial relation."""
    gens = fan.generators(c)
    if not gens:
        return True
    # lambda >= 0, sum(lambda) = 1, sum(lambda_k g_k) = 0
    a_eq = [[g[j] for g in gens] for j in range(fan.m)] + [[1] * len(gens)]
    b_eq = [0] * fan.m + [1]
    return not simplex(a_eq, b_eq).feasible


def point_in_cone(x: Sequence, c: Cone, fan: Fan) -> bool:
    if len(x) != fan.m:
        raise InvalidInput("point has the wrong dimension")
    if not is_simplicial(c, fan):
        raise UnsupportedCone(f"cone {c.generator_indices} is not simplicial")
    gens = fan.generators(c)
    if not gens:
        return all(Fraction(v) == 0 for v in x)
    coeffs = solve([[g[j] for g in gens] for j in range(fan.m)], [Fraction(v) for v in x])
    return coeffs is not None and all(t >= 0 for t in coeffs)


@dataclass
class Violation:
    kind: str
    cones: tuple
    witness: Optional[tuple] = None

    def __str__(self):
        w = "" if self.witness is None else " witness=(" + ", ".join(map(str, self.witness)) + ")"
        return f"{self.kind} {list(self.cones)}{w}"


@dataclass
class ValidationReport:
    violations: list

    @property
    def valid(self) -> bool:
        return not self.violations


def _intersection_witness(fan: Fan, c1: Cone, c2: Cone):
    """A point of c1 ∩ c2 outside the cone on their shared rays, or None."""
    shared = set(c1) & set(c2)
    a, b = list(c1), list(c2)
    outside = [int(i not in shared) for i in a] + [int(j not in shared) for j in b]
    if not any(outside):
        return None
    rows = []
    for j in range(fan.m):
        rows.append([fan.rays[i][j] for i in a] + [-fan.rays[k][j] for k in b])
    rows.append(outside)
    res = simplex(rows, [0] * fan.m + [1])
    if not res.feasible:
        return None
    lam = res.x[: len(a)]
    return tuple(sum((lam[t] * fan.rays[i][j] for t, i in enumerate(a)), Fraction(0))
                 for j in range(fan.m))


def validate_fan(fan: Fan) -> ValidationReport:
    for c in fan.max_cones:
        if not is_simplicial(c, fan):
            raise UnsupportedCone(f"cone {c.generator_indices} is not simplicial")
    violations = []
    for c in fan.max_cones:
        if not is_strongly_convex(c, fan):
            violations.append(Violation("not-strongly-convex", (c.generator_indices,)))
    for c1, c2 in combinations(fan.max_cones, 2):
        w = _intersection_witness(fan, c1, c2)
        if w is not None:
            violations.append(Violation("bad-intersection", (c1.generator_indices, c2.generator_indices), w))
    return ValidationReport(violations)


def is_smooth(fan: Fan) -> bool:
    for c in fan.max_cones:
        divs = smith_divisors(fan.generators(c))
        if len(divs) != len(c) or any(d != 1 for d in divs):
            return False
    return True


@dataclass
class CompletenessReport:
    complete: bool
    diagnostics: list
    wall_test: bool = False
    sampled: int = 0
    sampled_uncovered: int = 0


def completeness_report(fan: Fan, seed: int = 0, samples: int = 64) -> CompletenessReport:
    diags = []
    dims = {len(c) for c in fan.max_cones}
    if dims != {fan.m}:
        if fan.m in dims:
            diags.append(f"mixed-dimension maximal cones: {sorted(dims)}")
        else:
            diags.append("no maximal cone of full dimension")
    walls: dict = {}
    for k, c in enumerate(fan.max_cones):
        if len(c) != fan.m:
            continue
        for v in c:
            wall = frozenset(c) - {v}
            walls.setdefault(wall, []).append(k)
    for wall, owners in sorted(walls.items(), key=lambda kv: sorted(kv[0])):
        if len(owners) != 2:
            diags.append(f"wall {sorted(wall)} lies on {len(owners)} maximal cone(s)")
    full = [k for k, c in enumerate(fan.max_cones) if len(c) == fan.m]
    if full:
        adj = {k: set() for k in full}
        for owners in walls.values():
            for a, b in combinations(owners, 2):
                adj[a].add(b)
                adj[b].add(a)
        seen = {full[0]}
        stack = [full[0]]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(full):
            diags.append("wall-adjacency graph is disconnected")
    complete = wall_ok = not diags

    rng = random.Random(seed)
    uncovered = 0
    for _ in range(samples):
        x = [0] * fan.m
        while not any(x):
            x = [Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for _ in range(fan.m)]
        if not any(point_in_cone(x, c, fan) for c in fan.max_cones):
            uncovered += 1
    if complete and uncovered:
        diags.append(f"random directions uncovered: {uncovered}/{samples}")
        complete = False
    return CompletenessReport(complete, diags, wall_ok, samples, uncovered)


def is_complete(fan: Fan, seed: int = 0, samples: int = 64) -> bool:
    return completeness_report(fan, seed, samples).complete


def ray_matrix_rank(rays) -> int:
    return rank([list(v) for v in rays])


def spans_lattice(rays, m: Optional[int] = None) -> bool:
    rays = [list(v) for v in rays]
    m = len(rays[0]) if m is None else m
    divs = smith_divisors(rays)
    return len(divs) == m and all(d == 1 for d in divs)


def find_positive_relation(rays) -> Optional[tuple]:
    """Smallest-sum strictly positive integer D with sum_k d_k n_k = 0, or None.

    Solved as the exact LP  min sum(y)  s.t.  sum_k (1 + y_k) n_k = 0, y >= 0,
    then scaled to a primitive integer vector.
    """
    rays = [list(v) for v in rays]
    r = len(rays)
    if r > MAX_RELATION_RAYS:
        raise TooLarge(f"positive-relation search limited to {MAX_RELATION_RAYS} rays")
    if r == 0:
        return None
    m = len(rays[0])
    if rank(rays) == r:
        return None  # trivial kernel
    a_eq = [[rays[k][j] for k in range(r)] for j in range(m)]
    b_eq = [-sum(rays[k][j] for k in range(r)) for j in range(m)]
    res = simplex(a_eq, b_eq, cost=[1] * r)
    if not res.feasible:
        return None
    d = primitive_integer_vector([1 + y for y in res.x])
    return tuple(d)


def verify_relation(rays, d) -> bool:
    m = len(rays[0])
    return all(d_k > 0 for d_k in d) and all(
        sum(dk * v[j] for dk, v in zip(d, rays)) == 0 for j in range(m))


def fan_from_dict(data: dict) -> tuple[Fan, bool]:
    """Build a fan from the JSON schema; returns (fan, any_ray_primitivized)."""
    try:
        m = int(data["dim"])
        raw = [list(map(int, v)) for v in data["rays"]]
        cones = [list(map(int, c)) for c in data.get("max_cones", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed fan description: {exc}") from exc
    rays = [primitive_generator(v) for v in raw]
    changed = any(tuple(v) != p for v, p in zip(raw, rays))
    return Fan(m, tuple(rays), tuple(cones)), changed


def load_fan(path) -> tuple[Fan, bool]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return fan_from_dict(data)


def fan_to_dict(fan: Fan) -> dict:
    return {"dim": fan.m, "rays": [list(v) for v in fan.rays],
            "max_cones": [list(c.generator_indices) for c in fan.max_cones]}
