"""Point-set generators: random grids, the two structured families, stress sets.

All generators are pure functions of their arguments and return certified
(general-position) :class:`~tripts.geometry.PointSet` objects with rational
coordinates.

The structured families are stacks of triplets ``c_i = (0, 3i)``,
``a_i = (-1, 3i + 1)``, ``b_i = (1, 3i + 1/2)``. In G▽ every ``a_i`` and
``b_i`` only sees ``c``'s (and, in the 3-connected family, the three frame
points), so the ``c``'s form a Tutte set: removing them leaves ``2m``
isolated vertices and no matching can exceed the size of the separator.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .geometry import PointSet

__all__ = [
    "GeneratorError",
    "random_general_position",
    "tight_family",
    "three_connected_family",
    "reflect_x",
    "perturb",
    "near_sixty_chain",
    "vertical_stack",
    "large_coordinates",
]

DEFAULT_RESOLUTION = 1 << 12


class GeneratorError(RuntimeError):
    """A generator could not produce (or certify) what it promised."""


def random_general_position(n: int, seed: int = 0, resolution: int = DEFAULT_RESOLUTION,
                            budget: int | None = None) -> PointSet:
    """``n`` random points on a ``resolution`` x ``resolution`` grid in [0, 1)^2.

    A candidate sharing its y coordinate with an accepted point (the only way
    rational points can break general position) is resampled. Raises
    :class:`GeneratorError` once ``budget`` draws are spent.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if resolution < 1:
        raise ValueError("resolution must be positive")
    rng = np.random.default_rng(seed)
    budget = 50 * n + 100 if budget is None else budget
    used_y: set = set()
    pts = []
    draws = 0
    while len(pts) < n:
        if draws >= budget:
            raise GeneratorError(
                f"resample budget exhausted: placed {len(pts)} of {n} points on a {resolution}x{resolution} grid"
            )
        draws += 1
        i, j = (int(v) for v in rng.integers(0, resolution, size=2))
        if j in used_y:
            continue
        used_y.add(j)
        pts.append((Fraction(i, resolution), Fraction(j, resolution)))
    return PointSet(pts)


def _triplets(m: int):
    pts, labels = [], []
    for i in range(m):
        pts += [(-1, 3 * i + 1), (1, 3 * i + Fraction(1, 2)), (0, 3 * i)]
        labels += [f"a{i}", f"b{i}", f"c{i}"]
    return pts, labels


def _self_check(ps: PointSet, expected: int, three_connected: bool, what: str) -> PointSet:
    from .graphs import build_cone_minimum
    from .matching import max_matching
    from .structure import is_k_connected

    g = build_cone_minimum(ps, "down")
    size = max_matching(g).size
    if size != expected:
        raise GeneratorError(f"{what}: matching {size}, expected {expected}")
    if three_connected and not is_k_connected(g, 3):
        raise GeneratorError(f"{what}: G_down is not 3-connected")
    return ps


def tight_family(m: int, verify: bool = True) -> PointSet:
    """``3m`` points whose G▽ has a maximum matching of exactly ``m = ceil((n-2)/3)``.

    Points are labelled ``a0, b0, c0, a1, ...``.
    """
    if m < 5:
        raise ValueError("tight_family needs m >= 5")
    pts, labels = _triplets(m)
    ps = PointSet(pts, labels)
    if verify:
        _self_check(ps, m, False, f"tight_family({m})")
    return ps


def three_connected_family(m: int, verify: bool = True) -> PointSet:
    """``3m + 3`` points with a 3-connected G▽ and maximum matching ``m + 3``.

    The triplet stack is framed by ``p1`` (far lower left), ``p2`` (far lower
    right) and ``p3`` (above). ``m + 3 = ceil((n + 5)/3)``.
    """
    if m < 5:
        raise ValueError("three_connected_family needs m >= 5")
    pts, labels = _triplets(m)
    pts += [(-3 * m, Fraction(-1, 3)), (3 * m, Fraction(-2, 3)), (Fraction(1, 7), 3 * m + 3)]
    labels += ["p1", "p2", "p3"]
    ps = PointSet(pts, labels)
    if verify:
        _self_check(ps, m + 3, True, f"three_connected_family({m})")
    return ps


def reflect_x(ps: PointSet) -> PointSet:
    """Mirror in the x axis (y -> -y); swaps the roles of G▽ and G△."""
    return PointSet([(p.x, -p.y) for p in ps], labels=ps.labels, certify=ps.certified_general_position)


def perturb(ps: PointSet, seed: int, scale=Fraction(1, 1000), resolution: int = 1000) -> PointSet:
    """Jitter every rational point by a multiple of ``scale / resolution``; retries on collisions."""
    rng = np.random.default_rng(seed)
    for _ in range(100):
        d = rng.integers(-resolution, resolution + 1, size=(len(ps), 2))
        coords = [
            (p.x.rational_part + Fraction(int(dx)) * scale / resolution,
             p.y.rational_part + Fraction(int(dy)) * scale / resolution)
            for p, (dx, dy) in zip(ps, d)
        ]
        if len({c[1] for c in coords}) == len(coords) and len(set(coords)) == len(coords):
            return PointSet(coords, labels=ps.labels)
    raise GeneratorError("could not perturb into general position")


def near_sixty_chain(n: int, seed: int = 0) -> PointSet:
    """Points close to a line at ~60.3 degrees: every pair sits next to a cone boundary."""
    rng = np.random.default_rng(seed)
    pts = []
    for k in range(n):
        jitter = Fraction(int(rng.integers(-50, 51)), 10_000)
        pts.append((Fraction(4 * k) + jitter, Fraction(7 * k) + Fraction(k, 997)))
    return PointSet(pts)


def vertical_stack(n: int, seed: int = 0) -> PointSet:
    """Nearly vertical column (all pairs near the A_2 / A_5 bisectors)."""
    rng = np.random.default_rng(seed)
    return PointSet([(Fraction(int(rng.integers(-3, 4)), 100), k) for k in range(n)])


def large_coordinates(n: int, seed: int = 0) -> PointSet:
    """Random set whose integer lattice exceeds the int64-safe bound (object-dtype path)."""
    base = random_general_position(n, seed)
    big = 1 << 40
    return PointSet([(p.x * big, p.y * big + Fraction(1, 3)) for p in base])
