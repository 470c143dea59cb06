"""Reference fans used across tests and the CLI."""
from __future__ import annotations

from .lattice_fan import Fan


def cp1() -> Fan:
    return Fan(1, ((1,), (-1,)), ((0,), (1,)))


def cp2() -> Fan:
    return Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)))


def cp1_x_cp1() -> Fan:
    """Rays ordered e1, e2, -e1, -e2 with the four quadrant cones."""
    return Fan(2, ((1, 0), (0, 1), (-1, 0), (0, -1)), ((0, 1), (1, 2), (2, 3), (0, 3)))


def hirzebruch(a: int) -> Fan:
    return Fan(2, ((1, 0), (0, 1), (-1, a), (0, -1)), ((0, 1), (1, 2), (2, 3), (0, 3)))


def cp(m: int) -> Fan:
    """Projective space CP^m: e_1..e_m and -(e_1+...+e_m)."""
    rays = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    rays.append(tuple(-1 for _ in range(m)))
    cones = [tuple(j for j in range(m + 1) if j != skip) for skip in range(m + 1)]
    return Fan(m, tuple(rays), tuple(cones))


CORPUS = {
    "CP1": cp1,
    "CP2": cp2,
    "CP1xCP1": cp1_x_cp1,
    "H0": lambda: hirzebruch(0),
    "H1": lambda: hirzebruch(1),
    "H2": lambda: hirzebruch(2),
    "H3": lambda: hirzebruch(3),
}


def corpus_fans() -> dict:
    return {name: build() for name, build in CORPUS.items()}
