"""Simplicial complexes stored by their minimal non-faces.

Vertices are 0-based integers. The power complex on [r] x [n] numbers the
vertex (i, j) as ``i * n + j``, matching the ray order of :func:`fan_power`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import InvalidInput, TooLarge, Undefined
from .lattice_fan import Fan
from .linalg import smith_divisors

MAX_FACES = 2 ** 20
MAX_SUBSET_VERTICES = 20


def _mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def _unmask(m: int) -> tuple:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    num_vertices: int
    min_non_faces: tuple = ()
    allow_ghosts: bool = False

    def __post_init__(self):
        mnf = sorted({tuple(sorted(set(s))) for s in self.min_non_faces}, key=lambda s: (len(s), s))
        for s in mnf:
            if not s:
                raise InvalidInput("the empty set is always a face")
            if not all(0 <= v < self.num_vertices for v in s):
                raise InvalidInput(f"non-face {s} uses a vertex outside [0, {self.num_vertices})")
            if len(s) == 1 and not self.allow_ghosts:
                raise InvalidInput(f"vertex {s[0]} is not a face; pass allow_ghosts=True to permit this")
        sets = [frozenset(s) for s in mnf]
        for a, b in combinations(sets, 2):
            if a < b or b < a:
                raise InvalidInput(f"non-faces {sorted(a)} and {sorted(b)} are nested")
        object.__setattr__(self, "min_non_faces", tuple(mnf))

    @classmethod
    def from_non_faces(cls, num_vertices: int, non_faces, allow_ghosts: bool = False):
        """Keep only the inclusion-minimal members of ``non_faces``."""
        sets = {frozenset(s) for s in non_faces}
        minimal = [s for s in sets if not any(t < s for t in sets)]
        return cls(num_vertices, tuple(tuple(sorted(s)) for s in minimal), allow_ghosts)

    @classmethod
    def from_faces(cls, num_vertices: int, faces) -> "SimplicialComplex":
        """Complex generated by ``faces`` (closed under subsets here)."""
        closed = {0}
        for f in faces:
            fm = _mask(f)
            sub = fm
            while True:
                closed.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        mnf = []
        for fm in closed:
            top = fm.bit_length()
            for v in range(top, num_vertices):
                cand = fm | (1 << v)
                if cand in closed:
                    continue
                if all((cand & ~(1 << u)) in closed for u in _unmask(cand)):
                    mnf.append(_unmask(cand))
        ghosts = any(len(s) == 1 for s in mnf)
        return cls(num_vertices, tuple(mnf), allow_ghosts=ghosts)

    @cached_property
    def _mnf_masks(self) -> tuple:
        return tuple(_mask(s) for s in self.min_non_faces)

    def is_face(self, s: Iterable[int]) -> bool:
        m = _mask(s)
        return not any(t & m == t for t in self._mnf_masks)

    def face_masks(self, limit: int = MAX_FACES) -> list:
        masks = self._mnf_masks
        by_top: dict = {}
        for t in masks:
            by_top.setdefault(t.bit_length() - 1, []).append(t)
        out = [0]
        stack = [0]
        while stack:
            fm = stack.pop()
            for v in range(fm.bit_length(), self.num_vertices):
                cand = fm | (1 << v)
                if any(t & cand == t for t in by_top.get(v, ())):
                    continue
                out.append(cand)
                if len(out) > limit:
                    raise TooLarge(f"complex has more than {limit} faces")
                stack.append(cand)
        return out

    def faces(self, limit: int = MAX_FACES) -> list:
        return sorted((_unmask(m) for m in self.face_masks(limit)), key=lambda f: (len(f), f))

    @cached_property
    def facets(self) -> tuple:
        masks = set(self.face_masks())
        out = []
        for fm in masks:
            if not any((fm | (1 << v)) in masks for v in range(self.num_vertices) if not fm >> v & 1):
                out.append(_unmask(fm))
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    def restrict(self, vertices) -> "SimplicialComplex":
        """Full subcomplex on ``vertices``, relabelled 0..len-1 in sorted order."""
        vs = sorted(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        keep = set(vs)
        mnf = [tuple(pos[v] for v in s) for s in self.min_non_faces if keep.issuperset(s)]
        return SimplicialComplex(len(vs), tuple(mnf), allow_ghosts=True)


def minimal_non_faces(K: SimplicialComplex) -> list:
    return [tuple(s) for s in K.min_non_faces]


def underlying_complex(fan: Fan) -> SimplicialComplex:
    return SimplicialComplex.from_faces(fan.r, fan.faces())


def primitive_collections(fan: Fan) -> list:
    return minimal_non_faces(underlying_complex(fan))


def r_min(K: SimplicialComplex) -> int:
    if not K.min_non_faces:
        raise Undefined("r_min is undefined for a full simplex (no non-faces)")
    return min(len(s) for s in K.min_non_faces)


def complex_power(K: SimplicialComplex, n: int) -> SimplicialComplex:
    if n < 1:
        raise InvalidInput("n must be positive")
    mnf = [tuple(i * n + j for i in s for j in range(n)) for s in K.min_non_faces]
    return SimplicialComplex(K.num_vertices * n, tuple(mnf), allow_ghosts=K.allow_ghosts and n == 1)


def fan_power(fan: Fan, n: int) -> Fan:
    """Block rays n_{i,j} in R^{mn} with one cone per facet of the power complex."""
    if n < 1:
        raise InvalidInput("n must be positive")
    m = fan.m
    rays = []
    for ray in fan.rays:
        for j in range(n):
            v = [0] * (m * n)
            v[j * m:(j + 1) * m] = ray
            rays.append(tuple(v))
    K = complex_power(underlying_complex(fan), n)
    return Fan(m * n, tuple(rays), K.facets)


@dataclass(frozen=True)
class GradedRanks:
    """Homology groups Z^rank + sum Z/t, one entry per nonzero degree."""

    entries: tuple = field(default=())

    @classmethod
    def from_dict(cls, groups: dict) -> "GradedRanks":
        entries = []
        for deg in sorted(groups):
            rk, tors = groups[deg]
            tors = tuple(sorted(t for t in tors if t > 1))
            if rk or tors:
                entries.append((deg, rk, tors))
        return cls(tuple(entries))

    def as_dict(self) -> dict:
        return {d: (rk, tuple(t)) for d, rk, t in self.entries}

    def rank(self, degree: int) -> int:
        return next((rk for d, rk, _ in self.entries if d == degree), 0)

    def torsion(self, degree: int) -> tuple:
        return next((t for d, _, t in self.entries if d == degree), ())

    def is_zero_through(self, degree: int) -> bool:
        return all(d > degree for d, _, _ in self.entries)

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for d, rk, tors in self.entries:
            pieces = ([f"Z^{rk}" if rk > 1 else "Z"] if rk else []) + [f"Z/{t}" for t in tors]
            parts.append(f"H{d}=" + "+".join(pieces))
        return ", ".join(parts)


def _homology_dict(K: SimplicialComplex, limit: int = MAX_FACES) -> dict:
    masks = K.face_masks(limit)
    by_dim: dict = {}
    for fm in masks:
        by_dim.setdefault(bin(fm).count("1") - 1, []).append(fm)
    index = {d: {fm: k for k, fm in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    top = max(by_dim)
    divisors = {}
    for d in range(0, top + 1):
        rows_idx = index[d - 1]
        mat = [[0] * len(index[d]) for _ in range(len(rows_idx))]
        for col, fm in enumerate(sorted(by_dim[d])):
            verts = _unmask(fm)
            for pos, v in enumerate(verts):
                mat[rows_idx[fm & ~(1 << v)]][col] = -1 if pos % 2 else 1
        divisors[d] = smith_divisors(mat)
    out = {}
    for d in range(-1, top + 1):
        size = len(by_dim[d])
        rk_d = len(divisors.get(d, ()))
        nxt = divisors.get(d + 1, [])
        free = size - rk_d - len(nxt)
        tors = [t for t in nxt if t > 1]
        if free or tors:
            out[d] = (free, tors)
    return out


def reduced_homology(K: SimplicialComplex, limit: int = MAX_FACES) -> GradedRanks:
    """Reduced integral homology. The void complex {∅} reports Z in degree -1."""
    return GradedRanks.from_dict(_homology_dict(K, limit))


def moment_angle_homology(K: SimplicialComplex, n: int, ball_dim: int,
                          limit: int = MAX_FACES) -> GradedRanks:
    """Reduced homology of the polyhedral product Z_K(D^b, S^{b-1}), b = ball_dim.

    Uses the full-subcomplex splitting
        H~_p(Z_K) = sum over nonempty J of H~_{p - (b-1)|J| - 1}(K_J).
    """
    if ball_dim not in (n, 2 * n):
        raise InvalidInput("ball_dim must be n (real model) or 2n (complex model)")
    r = K.num_vertices
    if r > MAX_SUBSET_VERTICES:
        raise TooLarge(f"full-subcomplex enumeration limited to {MAX_SUBSET_VERTICES} vertices")
    total: dict = {}
    cache: dict = {}
    for size in range(1, r + 1):
        for J in combinations(range(r), size):
            KJ = K.restrict(J)
            if not KJ.min_non_faces:
                continue  # a simplex is contractible
            key = (KJ.num_vertices, KJ.min_non_faces)
            if key not in cache:
                cache[key] = _homology_dict(KJ, limit)
            shift = (ball_dim - 1) * size + 1
            for q, (rk, tors) in cache[key].items():
                acc = total.setdefault(q + shift, [0, []])
                acc[0] += rk
                acc[1].extend(tors)
    return GradedRanks.from_dict({d: (v[0], v[1]) for d, v in total.items()})


def complex_from_dict(data: dict) -> SimplicialComplex:
    try:
        r = int(data["vertices"])
        mnf = [tuple(int(v) for v in s) for s in data["min_non_faces"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed complex description: {exc}") from exc
    return SimplicialComplex(r, tuple(mnf), allow_ghosts=bool(data.get("allow_ghosts", False)))


def complex_to_dict(K: SimplicialComplex) -> dict:
    return {"vertices": K.num_vertices, "min_non_faces": [list(s) for s in K.min_non_faces]}
