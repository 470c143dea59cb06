"""Truncated E^1 vanishing tables and brute-force checks of the stability ranges.

Only Zero / PossiblyNonzero information is tracked; the E^1 groups
themselves are never computed.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .errors import RangeError
from .polysys import StabilityParams

ZERO = "zero"
POSSIBLY_NONZERO = "possibly-nonzero"


class AuxDimensions(NamedTuple):
    N: int
    dimL: int
    dimC: int
    rank_l: int


def aux_dimensions(p: StabilityParams, r: int, k: int) -> AuxDimensions:
    if not 1 <= k <= p.quotient:
        raise RangeError(f"k must lie in [1, {p.quotient}], got {k}")
    dk, n = p.d_field, p.n
    N = sum(p.D)
    dimL = n * dk * (r - p.r_min)
    dimC = k + dk * k * n * (r - p.r_min)
    rank_l = dk * (N - n * r * k) + k - 1
    return AuxDimensions(N, dimL, dimC, rank_l)


def e1_vanishing(p: StabilityParams, k: int, s: int) -> str:
    q = p.quotient
    slope = p.d_field * p.n * p.r_min - 2
    if k < 0 or k >= q + 2:
        return ZERO
    if k == 0:
        return POSSIBLY_NONZERO if s == 0 else ZERO
    if k <= q:
        return ZERO if s - k <= slope * k - 1 else POSSIBLY_NONZERO
    return ZERO if s - k <= slope * q - 2 else POSSIBLY_NONZERO


@dataclass
class E1Grid:
    params: StabilityParams
    r: int
    s_max: int
    cells: dict = field(default_factory=dict)

    @classmethod
    def build(cls, params: StabilityParams, r: int, s_max=None) -> "E1Grid":
        q = params.quotient
        if s_max is None:
            s_max = (params.d_field * params.n * params.r_min - 1) * max(q, 1) + q + 2
        grid = cls(params, r, s_max)
        for k in range(0, q + 2):
            for s in range(0, s_max + 1):
                grid.cells[(k, s)] = e1_vanishing(params, k, s)
        return grid

    def marker(self, k: int, s: int) -> str:
        state = self.cells.get((k, s), ZERO)
        if state == ZERO:
            return "."
        return "Z" if (k, s) == (0, 0) else "?"

    def rows(self):
        ks = sorted({k for k, _ in self.cells})
        for s in range(self.s_max, -1, -1):
            yield s, [self.marker(k, s) for k in ks]

    def to_text(self) -> str:
        ks = sorted({k for k, _ in self.cells})
        width = max(len(str(self.s_max)), 1)
        lines = [f"{'s':>{width}} | " + " ".join(str(k) for k in ks)]
        lines.append("-" * (width + 1) + "+" + "-" * (2 * len(ks)))
        for s, marks in self.rows():
            lines.append(f"{s:>{width}} | " + " ".join(marks))
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        ks = sorted({k for k, _ in self.cells})
        writer.writerow(["s"] + [f"k={k}" for k in ks])
        for s, marks in self.rows():
            writer.writerow([s] + marks)
        return buf.getvalue()


def _require_nondegenerate(p: StabilityParams):
    if p.quotient < 1:
        raise RangeError("floor(d_min / n) must be at least 1")


def frontier_sets(p: StabilityParams) -> dict:
    """For each t with A_t nonempty, min{s - k : (k, s) in A_t} found by scanning a box.

    A_t holds (u, v) with u >= 0 such that some 1 <= l_1 < ... < l_t has
    u + sum(l) = q + 1 and v + sum(l - 1) >= (d n r_min - 1) q, q = floor(d_min/n).
    Points with larger v only increase v - u, so v is scanned up to the threshold.
    """
    _require_nondegenerate(p)
    q = p.quotient
    threshold = (p.d_field * p.n * p.r_min - 1) * q
    out = {}
    t = 1
    while t * (t + 1) // 2 <= q + 1:
        sums = {sum(ls) for ls in combinations(range(1, q + 2), t) if sum(ls) <= q + 1}
        best = None
        for u in range(0, q + 2):
            for v in range(threshold - q - 1, threshold + 1):
                member = any(u + S == q + 1 and v + (S - t) >= threshold for S in sums)
                if member and (best is None or v - u < best):
                    best = v - u
        if best is not None:
            out[t] = best
        t += 1
    return out


def stable_frontier_oracle(p: StabilityParams) -> int:
    """min over nonempty A_t of a(t), minus 2."""
    return min(frontier_sets(p).values()) - 2


def frontier_closed_form(p: StabilityParams, t: int) -> int:
    return (p.d_field * p.n * p.r_min - 2) * p.quotient + t - 1


def connectivity_terms(p: StabilityParams) -> dict:
    """a(k) = (d n r_min - 2) n0(k) - eps(k) for 1 <= k <= q + 1."""
    _require_nondegenerate(p)
    q = p.quotient
    slope = p.d_field * p.n * p.r_min - 2
    terms = {}
    for k in range(1, q + 2):
        n0, eps = (k, 1) if k <= q else (q, 2)
        terms[k] = slope * n0 - eps
    return terms


def connectivity_oracle(p: StabilityParams) -> int:
    return min(connectivity_terms(p).values())


def connectivity_closed_form(p: StabilityParams) -> int:
    _require_nondegenerate(p)
    base = p.d_field * p.n * p.r_min
    return base - 3 if p.quotient >= 2 else base - 4


def vanishing_line_from_grid(p: StabilityParams) -> int:
    """Largest m with E^1_{k,s} = 0 for all (k, s) != (0, 0) with s - k <= m, by scanning cells."""
    _require_nondegenerate(p)
    q = p.quotient
    span = (p.d_field * p.n * p.r_min) * (q + 2) + 4
    m = -span
    while True:
        nxt = m + 1
        ok = all(e1_vanishing(p, k, k + nxt) == ZERO for k in range(1, q + 2))
        if not ok:
            return m
        m = nxt
