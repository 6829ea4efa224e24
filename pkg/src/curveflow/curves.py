"""Discrete closed plane curves and their differential-geometric measurements.

A curve is an ordered loop of 2D samples; the polygon closes implicitly from
the last point back to the first. Orientation is carried by point order and is
never auto-corrected: positive (counter-clockwise) order gives positive signed
area and positive curvature on convex curves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import DegenerateSegment, TooFewPoints

FloatArray = NDArray[np.float64]

# Relative scale below which two consecutive samples count as coincident.
_DEGENERATE_REL = 1e-12


@dataclass(frozen=True)
class ClosedCurve:
    """Ordered 2D sample loop; the closing point is not duplicated."""

    points: FloatArray

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise TooFewPoints(f"expected an (n, 2) array, got shape {pts.shape}")
        if pts.shape[0] < 3:
            raise TooFewPoints(f"a closed curve needs >= 3 points, got {pts.shape[0]}")
        if not np.all(np.isfinite(pts)):
            raise DegenerateSegment("curve contains non-finite coordinates")
        extent = float(np.hypot(*(pts.max(axis=0) - pts.min(axis=0))))
        diff = np.empty_like(pts)
        diff[:-1] = pts[1:] - pts[:-1]
        diff[-1] = pts[0] - pts[-1]
        chords = np.hypot(diff[:, 0], diff[:, 1])
        if np.any(chords <= _DEGENERATE_REL * extent):
            raise DegenerateSegment("consecutive samples coincide")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def diameter(self) -> float:
        """Bounding-box diagonal; the scale used for relative tolerances."""
        span = self.points.max(axis=0) - self.points.min(axis=0)
        return float(np.hypot(span[0], span[1]))

    def edges(self) -> FloatArray:
        pts = self.points
        e = np.empty_like(pts)
        e[:-1] = pts[1:] - pts[:-1]
        e[-1] = pts[0] - pts[-1]
        return e

    def chord_lengths(self) -> FloatArray:
        e = self.edges()
        return np.hypot(e[:, 0], e[:, 1])

    def reversed(self) -> "ClosedCurve":
        return ClosedCurve(self.points[::-1].copy())

    def translated(self, offset) -> "ClosedCurve":
        return ClosedCurve(self.points + np.asarray(offset, dtype=float))

    def rotated(self, angle: float) -> "ClosedCurve":
        c, s = np.cos(angle), np.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        return ClosedCurve(self.points @ rot.T)

    def scaled(self, factor: float) -> "ClosedCurve":
        return ClosedCurve(self.points * float(factor))


@dataclass(frozen=True)
class FrenetData:
    """Per-sample moving frame: unit tangent, left unit normal, signed curvature.

    For a counter-clockwise curve the left normal points inward. ``points``
    holds the samples the frame refers to.
    """

    points: FloatArray
    tangent: FloatArray
    normal: FloatArray
    curvature: FloatArray


def build_closed_curve(points) -> ClosedCurve:
    """Validate an ordered point loop into a ClosedCurve."""
    return ClosedCurve(np.asarray(points, dtype=float))


def length(curve: ClosedCurve) -> float:
    """Polygon perimeter: the sum of cyclic chord lengths."""
    return float(curve.chord_lengths().sum())


def signed_area(curve: ClosedCurve) -> float:
    """Shoelace area; positive for counter-clockwise orientation."""
    pts = curve.points
    x, y = pts[:, 0], pts[:, 1]
    total = float(np.dot(x[:-1], y[1:]) - np.dot(x[1:], y[:-1]))
    total += float(x[-1] * y[0] - x[0] * y[-1])
    return 0.5 * total


def centroid(curve: ClosedCurve) -> FloatArray:
    """Area centroid of the enclosed polygon (vertex mean if area ~ 0)."""
    pts = curve.points
    x, y = pts[:, 0], pts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    a = 0.5 * cross.sum()
    if abs(a) < 1e-300:
        return pts.mean(axis=0)
    cx = np.sum((x + xn) * cross) / (6.0 * a)
    cy = np.sum((y + yn) * cross) / (6.0 * a)
    return np.array([cx, cy])


def recenter_to_centroid(curve: ClosedCurve) -> ClosedCurve:
    """Translate so the area centroid sits at the origin."""
    return curve.translated(-centroid(curve))


def _interp_on_polygon(pts: FloatArray, cum: FloatArray, s: FloatArray) -> FloatArray:
    """Points at arclength positions ``s`` along the closed polygon.

    ``cum`` is the cumulative chord length with cum[0] = 0 and cum[n] = total;
    ``pts`` already carries the wrapped first point at the end.
    """
    s = np.mod(s, cum[-1])
    idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(cum) - 2)
    seg = cum[idx + 1] - cum[idx]
    frac = (s - cum[idx]) / seg
    return pts[idx] + frac[:, None] * (pts[idx + 1] - pts[idx])


def resample_arclength(
    curve: ClosedCurve,
    m: int,
    rel_tol: float = 1e-10,
    max_passes: int = 200,
) -> ClosedCurve:
    """Redistribute to ``m`` samples with equal consecutive chord lengths.

    Samples stay on the input polygon: an initial placement at equal
    cumulative-chord positions is followed by smoothing passes that slide the
    parameters until the chords agree to ``rel_tol`` of their mean. The first
    sample stays pinned at the first input point.
    """
    if m < 3:
        raise TooFewPoints(f"resampling needs m >= 3, got {m}")
    base = np.vstack([curve.points, curve.points[:1]])
    seglen = np.hypot(*(base[1:] - base[:-1]).T)
    cum = np.concatenate([[0.0], np.cumsum(seglen)])
    total = cum[-1]

    fractions = np.arange(m) / m
    t = total * fractions
    pts = _interp_on_polygon(base, cum, t)
    for _ in range(max_passes):
        diff = np.empty_like(pts)
        diff[:-1] = pts[1:] - pts[:-1]
        diff[-1] = pts[0] - pts[-1]
        chords = np.hypot(diff[:, 0], diff[:, 1])
        mean = chords.sum() / m
        if np.max(np.abs(chords - mean)) <= rel_tol * mean:
            break
        u = np.concatenate([[0.0], np.cumsum(chords)])
        t_knots = np.concatenate([t, [total]])
        t = np.interp(u[-1] * fractions, u, t_knots)
        pts = _interp_on_polygon(base, cum, t)
    return ClosedCurve(pts)


def _cyclic_prev(a: FloatArray) -> FloatArray:
    """a shifted so index i holds a[i-1]; faster than np.roll in hot loops."""
    out = np.empty_like(a)
    out[0] = a[-1]
    out[1:] = a[:-1]
    return out


def _vertex_turns(curve: ClosedCurve) -> tuple[FloatArray, FloatArray]:
    """Signed turning angle at each vertex and the cyclic chord lengths."""
    e = curve.edges()
    ang = np.arctan2(e[:, 1], e[:, 0])
    turn = ang - _cyclic_prev(ang)
    turn = (turn + np.pi) % (2.0 * np.pi) - np.pi
    return turn, np.hypot(e[:, 0], e[:, 1])


def signed_curvature(curve: ClosedCurve) -> FrenetData:
    """Moving frame with curvature from tangent-angle differences.

    Curvature at vertex i is the turn between the adjacent edges divided by
    the average adjacent chord length; second-order accurate on near-uniform
    arclength grids (use :func:`resample_arclength` first when spacing is
    uneven). The normal is the tangent rotated by +pi/2.
    """
    turn, chords = _vertex_turns(curve)
    ds = 0.5 * (chords + _cyclic_prev(chords))
    kappa = turn / ds
    e = curve.edges()
    unit = e / chords[:, None]
    tangent = unit + _cyclic_prev(unit)
    norms = np.hypot(tangent[:, 0], tangent[:, 1])
    degenerate = norms < 1e-14
    if np.any(degenerate):
        # 180-degree reversal at a vertex; fall back to the outgoing edge
        tangent[degenerate] = unit[degenerate]
        norms[degenerate] = 1.0
    tangent /= norms[:, None]
    normal = np.column_stack([-tangent[:, 1], tangent[:, 0]])
    return FrenetData(points=curve.points, tangent=tangent, normal=normal, curvature=kappa)


def turning_number(curve: ClosedCurve) -> int:
    """Total tangent turning divided by 2*pi, rounded to the nearest integer."""
    turn, _ = _vertex_turns(curve)
    return int(round(turn.sum() / (2.0 * np.pi)))


def is_convex(curve: ClosedCurve) -> bool:
    """True iff all consecutive-edge cross products share one sign.

    Cross products within 1e-12 of zero (relative to the squared diameter)
    count as collinear and do not break convexity.
    """
    e = curve.edges()
    en = np.roll(e, -1, axis=0)
    cross = e[:, 0] * en[:, 1] - e[:, 1] * en[:, 0]
    tol = 1e-12 * curve.diameter ** 2
    return not (np.any(cross > tol) and np.any(cross < -tol))


def _segments_intersect(p1, p2, p3, p4) -> bool:
    """Proper or improper intersection of segments p1p2 and p3p4."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True

    def on_segment(a, b, c):
        return (
            min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])
        )

    if d1 == 0 and on_segment(p3, p4, p1):
        return True
    if d2 == 0 and on_segment(p3, p4, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, p3):
        return True
    if d4 == 0 and on_segment(p1, p2, p4):
        return True
    return False


def is_simple(curve: ClosedCurve) -> bool:
    """True iff no two non-adjacent edges intersect.

    Sweeps edges by x-extent with an all-pairs fallback below 64 samples
    (the fallback doubles as the correctness oracle in the tests).
    """
    pts = curve.points
    n = curve.n
    if n < 64:
        return _is_simple_bruteforce(curve)
    nxt = np.roll(pts, -1, axis=0)
    xmin = np.minimum(pts[:, 0], nxt[:, 0])
    xmax = np.maximum(pts[:, 0], nxt[:, 0])
    ymin = np.minimum(pts[:, 1], nxt[:, 1])
    ymax = np.maximum(pts[:, 1], nxt[:, 1])
    order = np.argsort(xmin, kind="stable")
    xmin_s = xmin[order]
    for pos, i in enumerate(order):
        hi = np.searchsorted(xmin_s, xmax[i], side="right")
        for j in order[pos + 1 : hi]:
            if j == i or (i + 1) % n == j or (j + 1) % n == i:
                continue
            if ymax[i] < ymin[j] or ymax[j] < ymin[i]:
                continue
            if _segments_intersect(pts[i], nxt[i], pts[j], nxt[j]):
                return False
    return True


def _is_simple_bruteforce(curve: ClosedCurve) -> bool:
    pts = curve.points
    n = curve.n
    nxt = np.roll(pts, -1, axis=0)
    for i in range(n):
        for j in range(i + 1, n):
            if (i + 1) % n == j or (j + 1) % n == i:
                continue
            if _segments_intersect(pts[i], nxt[i], pts[j], nxt[j]):
                return False
    return True


def winding_number(curve: ClosedCurve, point) -> int:
    """Winding number of the closed polygon around ``point``."""
    px, py = float(point[0]), float(point[1])
    pts = curve.points
    x, y = pts[:, 0], pts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = (xn - x) * (py - y) - (px - x) * (yn - y)
    up = (y <= py) & (yn > py) & (cross > 0)
    down = (y > py) & (yn <= py) & (cross < 0)
    return int(np.sum(up) - np.sum(down))


def read_curve_csv(path) -> ClosedCurve:
    """Read an ``x,y``-per-line curve file (no header, order = orientation)."""
    try:
        data = np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)
    except Exception as exc:
        raise TooFewPoints(f"cannot parse curve file {path}: {exc}") from exc
    return ClosedCurve(data)


def write_curve_csv(curve: ClosedCurve, path) -> None:
    """Write the curve as ``x,y`` lines with 17 significant digits."""
    with open(path, "w", encoding="ascii") as fh:
        for x, y in curve.points:
            fh.write(f"{x:.17g},{y:.17g}\n")
