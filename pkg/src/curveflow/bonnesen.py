"""Inradius, circumradius, and the inner-parallel-area quadratic.

For a convex domain the area of the inner parallel set at offset t is
A - L*t + pi*t^2; its roots t1 <= t2 bracket the inradius and circumradius,
t1 <= r <= R <= t2, with any equality forcing a circle. The module measures
all four quantities on the sample polygon and reports the chain.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .curves import ClosedCurve, is_convex, length, signed_area
from .errors import IsoperimetricViolation, NotConvex


@dataclass(frozen=True)
class BonnesenReport:
    area: float
    length: float
    inradius: float
    circumradius: float
    t1: float
    t2: float
    chain_ok: bool
    equality_gap: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "area": self.area,
                "length": self.length,
                "inradius": self.inradius,
                "circumradius": self.circumradius,
                "t1": self.t1,
                "t2": self.t2,
                "chain_ok": self.chain_ok,
                "equality_gap": self.equality_gap,
            }
        )


def inradius(curve: ClosedCurve) -> tuple[float, np.ndarray]:
    """Chebyshev center of the convex sample polygon.

    Maximizes the minimum distance to the edge lines, which for a convex
    polygon equals the distance to the boundary. Solved as the standard
    linear program max r s.t. n_i . x + r <= n_i . v_i over inward normals.
    """
    if not is_convex(curve):
        raise NotConvex("inradius requires a convex curve")
    pts = curve.points
    e = np.roll(pts, -1, axis=0) - pts
    elen = np.hypot(e[:, 0], e[:, 1])
    orient = 1.0 if signed_area(curve) > 0.0 else -1.0
    inward = orient * np.column_stack([-e[:, 1], e[:, 0]]) / elen[:, None]
    # inward . (x - v_i) >= r  <=>  -inward . x + r <= -inward . v_i
    a_ub = np.column_stack([-inward, np.ones(len(pts))])
    b_ub = -np.einsum("ij,ij->i", inward, pts)
    res = linprog(
        c=[0.0, 0.0, -1.0],
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(None, None), (None, None), (0.0, None)],
        method="highs",
    )
    if not res.success:
        raise NotConvex(f"Chebyshev center LP failed: {res.message}")
    x, y, r = res.x
    return float(r), np.array([x, y])


def _circle_from_two(a, b):
    cx, cy = 0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return cx, cy, r


def _circle_from_three(a, b, c):
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
              + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
              + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(x - a[0], y - a[1]),
            math.hypot(x - b[0], y - b[1]),
            math.hypot(x - c[0], y - c[1]))
    return x, y, r


_EPS_FACTOR = 1.0 + 1e-14


def _in_circle(circle, p) -> bool:
    return math.hypot(p[0] - circle[0], p[1] - circle[1]) <= circle[2] * _EPS_FACTOR


def minimal_enclosing_circle(points, seed: int = 0) -> tuple[float, float, float]:
    """Smallest circle containing the points; randomized incremental, O(n) expected.

    The shuffle is seeded for reproducible runs; the result itself does not
    depend on the seed.
    """
    pts = [(float(x), float(y)) for x, y in np.asarray(points, dtype=float)]
    rng = random.Random(seed)
    rng.shuffle(pts)
    circle = None
    for i, p in enumerate(pts):
        if circle is None or not _in_circle(circle, p):
            circle = _grow_with_one(pts[: i + 1], p)
    if circle is None:
        raise ValueError("no points given")
    return circle


def _grow_with_one(pts, p):
    circle = (p[0], p[1], 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(circle, q):
            if circle[2] == 0.0:
                circle = _circle_from_two(p, q)
            else:
                circle = _grow_with_two(pts[: i + 1], p, q)
    return circle


def _grow_with_two(pts, p, q):
    base = _circle_from_two(p, q)
    left = None
    right = None
    px, py = p
    qx, qy = q
    for r in pts:
        if _in_circle(base, r):
            continue
        cross = (qx - px) * (r[1] - py) - (qy - py) * (r[0] - px)
        cand = _circle_from_three(p, q, r)
        if cand is None:
            continue
        cand_cross = (qx - px) * (cand[1] - py) - (qy - py) * (cand[0] - px)
        if cross > 0.0 and (left is None
                            or cand_cross > (qx - px) * (left[1] - py) - (qy - py) * (left[0] - px)):
            left = cand
        elif cross < 0.0 and (right is None
                              or cand_cross < (qx - px) * (right[1] - py) - (qy - py) * (right[0] - px)):
            right = cand
    if left is None and right is None:
        return base
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def circumradius(curve: ClosedCurve, seed: int = 0) -> tuple[float, np.ndarray]:
    """Radius and center of the minimal circle enclosing the curve samples."""
    x, y, r = minimal_enclosing_circle(curve.points, seed=seed)
    return float(r), np.array([x, y])


def bonnesen_roots(area: float, length_value: float) -> tuple[float, float]:
    """Roots of pi*t^2 - L*t + A, clamped to the double root near equality."""
    if area <= 0.0 or length_value <= 0.0:
        raise ValueError("area and length must be positive")
    disc = length_value * length_value - 4.0 * math.pi * area
    if disc < -1e-9 * length_value * length_value:
        raise IsoperimetricViolation(
            f"L^2 - 4*pi*A = {disc:.6g} < 0: no real roots; inputs are inconsistent"
        )
    root = math.sqrt(max(disc, 0.0))
    return (length_value - root) / (2.0 * math.pi), (length_value + root) / (2.0 * math.pi)


def bonnesen_chain(curve: ClosedCurve, tol: float | None = None, seed: int = 0) -> BonnesenReport:
    """Measure A, L, r, R, t1, t2 and verify t1 <= r <= R <= t2.

    ``tol`` defaults to 1e-6 times the curve diameter. The quadratic is also
    checked to be negative at the midpoint of (t1, t2) when the roots are
    distinct; one interior point suffices for an upward parabola.
    """
    if not is_convex(curve):
        raise NotConvex("the inner-parallel-area quadratic needs a convex domain")
    area = abs(signed_area(curve))
    perim = length(curve)
    r, _ = inradius(curve)
    big_r, _ = circumradius(curve, seed=seed)
    t1, t2 = bonnesen_roots(area, perim)
    if tol is None:
        tol = 1e-6 * curve.diameter
    chain_ok = (t1 <= r + tol) and (r <= big_r + tol) and (big_r <= t2 + tol)
    if t1 < t2:
        mid = 0.5 * (t1 + t2)
        chain_ok = chain_ok and (area - perim * mid + math.pi * mid * mid) < 0.0
    gap = max(r - t1, t2 - big_r)
    return BonnesenReport(
        area=area,
        length=perim,
        inradius=r,
        circumradius=big_r,
        t1=t1,
        t2=t2,
        chain_ok=chain_ok,
        equality_gap=gap,
    )
