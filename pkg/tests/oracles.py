"""Independent oracles for the test suite.

Everything here is deliberately brute-force or quadrature-based so it shares
no code path with the library implementations it checks.
"""

import numpy as np
from scipy.integrate import quad

# Frozen value of the 2x1 ellipse perimeter, computed by ellipse_perimeter()
# below; test_curves asserts the oracle still reproduces it.
ELLIPSE_2_1_PERIMETER = 9.688448220547675


def ellipse_perimeter(a: float, b: float) -> float:
    """Adaptive quadrature of the arclength integrand."""
    value, _ = quad(lambda u: np.hypot(a * np.sin(u), b * np.cos(u)), 0.0, 2.0 * np.pi,
                    limit=200, epsabs=1e-13, epsrel=1e-13)
    return value


def ellipse_curvature(a: float, b: float, u: float) -> float:
    """kappa = a*b / (a^2 sin^2 u + b^2 cos^2 u)^(3/2) at parameter u."""
    return a * b / (a * a * np.sin(u) ** 2 + b * b * np.cos(u) ** 2) ** 1.5


def osculating_circle_curvature(p_prev, p, p_next) -> float:
    """Unsigned curvature of the circle through three points."""
    a = np.hypot(*(p - p_prev))
    b = np.hypot(*(p_next - p))
    c = np.hypot(*(p_next - p_prev))
    cross = (p[0] - p_prev[0]) * (p_next[1] - p_prev[1]) - (p[1] - p_prev[1]) * (
        p_next[0] - p_prev[0]
    )
    if a * b * c == 0.0:
        return 0.0
    return abs(2.0 * cross) / (a * b * c)


def grid_inradius(points: np.ndarray, resolution: int = 200) -> float:
    """Brute-force inradius: best min-distance-to-edges over a dense grid."""
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    xs = np.linspace(lo[0], hi[0], resolution)
    ys = np.linspace(lo[1], hi[1], resolution)
    nxt = np.roll(points, -1, axis=0)
    e = nxt - points
    elen = np.hypot(e[:, 0], e[:, 1])
    # inward normals for a CCW polygon
    inner = np.column_stack([-e[:, 1], e[:, 0]]) / elen[:, None]
    best = 0.0
    for x in xs:
        for y in ys:
            d = (inner * (np.array([x, y]) - points)).sum(axis=1)
            best = max(best, d.min())
    return best


def brute_enclosing_radius(points: np.ndarray) -> float:
    """Minimal enclosing circle by checking all pairs and triples (small n)."""
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    best = None

    def covers(cx, cy, r):
        return np.all(np.hypot(pts[:, 0] - cx, pts[:, 1] - cy) <= r * (1 + 1e-12))

    for i in range(n):
        for j in range(i + 1, n):
            cx, cy = (pts[i] + pts[j]) / 2.0
            r = np.hypot(*(pts[i] - pts[j])) / 2.0
            if covers(cx, cy, r) and (best is None or r < best):
                best = r
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ax, ay = pts[i]
                bx, by = pts[j]
                cx, cy = pts[k]
                d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
                if d == 0.0:
                    continue
                ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
                      + (cx * cx + cy * cy) * (ay - by)) / d
                uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
                      + (cx * cx + cy * cy) * (bx - ax)) / d
                r = np.hypot(ax - ux, ay - uy)
                if covers(ux, uy, r) and (best is None or r < best):
                    best = r
    return best


def parseval_cosine_area(mean: float, coefficients: dict) -> float:
    """Area 0.5 * integral (p^2 - p'^2) for p = mean + sum a_k cos + b_k sin."""
    total = np.pi * mean * mean
    for k, (a, b) in coefficients.items():
        total += 0.5 * np.pi * (1.0 - k * k) * (a * a + b * b)
    return total


def segments_cross(p1, p2, p3, p4) -> bool:
    """Independent segment intersection predicate (orientation based)."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if v == 0 else (1 if v > 0 else -1)

    def between(a, b, c):
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    o1, o2 = orient(p1, p2, p3), orient(p1, p2, p4)
    o3, o4 = orient(p3, p4, p1), orient(p3, p4, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and between(p1, p2, p3):
        return True
    if o2 == 0 and between(p1, p2, p4):
        return True
    if o3 == 0 and between(p3, p4, p1):
        return True
    if o4 == 0 and between(p3, p4, p2):
        return True
    return False


def polygon_is_simple(points: np.ndarray) -> bool:
    """All-pairs non-adjacent edge intersection test."""
    n = len(points)
    nxt = np.roll(points, -1, axis=0)
    for i in range(n):
        for j in range(i + 1, n):
            if (i + 1) % n == j or (j + 1) % n == i:
                continue
            if segments_cross(points[i], nxt[i], points[j], nxt[j]):
                return False
    return True
