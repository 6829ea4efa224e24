"""Gage's equal-area chord and point-reflection symmetrization.

For an oval, the chord joining the boundary points with opposite normals at
angles theta and theta + pi cuts the domain into two parts; the cut area
sigma(theta) is continuous and satisfies sigma(theta) + sigma(theta + pi) = A,
so some chord bisects the area. Reflecting each arc through the chord midpoint
produces two centrally symmetric ovals of the same area, which reduces the
general shrinker classification to the symmetric case.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .bonnesen import bonnesen_roots, circumradius, inradius
from .curves import ClosedCurve, is_convex, length, signed_area
from .errors import (
    NotAnOval,
    NotAShrinker,
    NotConvexAfterGluing,
    NotSymmetric,
    ToleranceNotMet,
)
from .support import SupportFunction, curve_from_support

FloatArray = NDArray[np.float64]


@dataclass(frozen=True)
class ChordCut:
    """An opposite-normal chord and the area on its [theta, theta+pi] side."""

    theta: float
    endpoints: FloatArray  # (2, 2): boundary points at theta and theta + pi
    midpoint: FloatArray
    sigma: float


@dataclass(frozen=True)
class SymmetrizedPair:
    """The two centrally symmetric ovals glued from the chord arcs."""

    curve1: ClosedCurve
    curve2: ClosedCurve
    junction_tangent_gap: float
    theta0: float
    sigma: float
    omega0: FloatArray

    def sidecar_json(self) -> str:
        return json.dumps(
            {
                "theta0": self.theta0,
                "sigma": self.sigma,
                "omega0": [float(self.omega0[0]), float(self.omega0[1])],
                "junction_tangent_gap": self.junction_tangent_gap,
                "areas": [signed_area(self.curve1), signed_area(self.curve2)],
                "lengths": [length(self.curve1), length(self.curve2)],
            }
        )


def _oval_point(p: SupportFunction, theta: float) -> np.ndarray:
    pv = float(p.eval(theta, order=0))
    dv = float(p.eval(theta, order=1))
    c, s = math.cos(theta), math.sin(theta)
    return np.array([pv * c - dv * s, pv * s + dv * c])


def _check_oval(p: SupportFunction) -> None:
    if np.min(p.curvature_radius(mode="spectral")) <= 0.0:
        raise NotAnOval("p + p'' must stay positive for the chord construction")


def _arc_polygon(p: SupportFunction, vertices: FloatArray, theta: float) -> FloatArray:
    """Vertices from theta to theta + pi: exact endpoints plus interior grid nodes."""
    n = p.count
    h = p.step
    j0 = int(math.ceil(theta / h - 1e-12))
    j1 = int(math.floor((theta + math.pi) / h + 1e-12))
    idx = np.arange(j0, j1 + 1)
    inner = vertices[np.mod(idx, n)]
    start = _oval_point(p, theta)
    end = _oval_point(p, theta + math.pi)
    tiny = 1e-12 * float(np.mean(p.values))
    if inner.shape[0] and np.hypot(*(inner[0] - start)) < tiny:
        inner = inner[1:]
    if inner.shape[0] and np.hypot(*(inner[-1] - end)) < tiny:
        inner = inner[:-1]
    return np.vstack([start, inner, end])


def _shoelace(pts: FloatArray) -> float:
    x, y = pts[:, 0], pts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    return float(0.5 * np.sum(x * yn - xn * y))


def chord_cut(p: SupportFunction, theta: float, snap: bool = True) -> ChordCut:
    """Chord between the boundary points at theta and theta + pi.

    ``snap`` rounds theta to the nearest grid node (theta + pi is then a node
    too); with ``snap=False`` the endpoints are evaluated spectrally between
    nodes, which keeps sigma continuous for the bisection search.
    """
    _check_oval(p)
    if snap:
        theta = p.step * round(float(theta) / p.step)
    theta = float(np.mod(theta, 2.0 * np.pi))
    vertices = curve_from_support(p, mode="spectral").points
    arc = _arc_polygon(p, vertices, theta)
    sigma = _shoelace(arc)
    endpoints = np.vstack([arc[0], arc[-1]])
    return ChordCut(
        theta=theta,
        endpoints=endpoints,
        midpoint=0.5 * (arc[0] + arc[-1]),
        sigma=sigma,
    )


def node_cut_areas(p: SupportFunction) -> np.ndarray:
    """sigma at every grid node in one pass (cumulative shoelace sums).

    Entry j is the area bounded by the arc from node j to node j + count/2
    and the closing chord; opposite entries sum exactly to the polygon area.
    """
    _check_oval(p)
    pts = curve_from_support(p, mode="spectral").points
    n = p.count
    half = n // 2
    nxt = np.roll(pts, -1, axis=0)
    cross = pts[:, 0] * nxt[:, 1] - nxt[:, 0] * pts[:, 1]
    csum = np.concatenate([[0.0], np.cumsum(np.tile(cross, 2))])
    arcs = csum[np.arange(n) + half] - csum[np.arange(n)]
    j2 = (np.arange(n) + half) % n
    closing = pts[j2, 0] * pts[:, 1] - pts[:, 0] * pts[j2, 1]
    return 0.5 * (arcs + closing)


def find_bisecting_chord(p: SupportFunction, tol: float = 1e-8) -> ChordCut:
    """Bisection for the chord with sigma(theta) = sigma(theta + pi).

    The gap g(theta) = sigma(theta) - sigma(theta + pi) flips sign between 0
    and pi because g(theta + pi) = -g(theta) exactly; plain bisection needs no
    monotonicity. ``tol`` bounds |sigma - A/2| relative to the area A.
    """
    _check_oval(p)
    vertices = curve_from_support(p, mode="spectral").points

    def halves(theta: float) -> tuple[float, float]:
        s1 = _shoelace(_arc_polygon(p, vertices, theta))
        s2 = _shoelace(_arc_polygon(p, vertices, theta + math.pi))
        return s1, s2

    def gap(theta: float) -> float:
        s1, s2 = halves(theta)
        return s1 - s2

    lo, hi = 0.0, math.pi
    g_lo = gap(lo)
    area = sum(halves(lo))
    if abs(g_lo) <= 2.0 * tol * area:
        return chord_cut(p, lo, snap=False)
    g_hi = -g_lo
    if g_lo > 0.0:
        lo, hi, g_lo, g_hi = hi, lo, g_hi, g_lo
    # invariant: g(lo) < 0 < g(hi); interval may be reversed, bisection is fine
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if abs(g_mid) <= 2.0 * tol * area:
            return chord_cut(p, mid, snap=False)
        if abs(hi - lo) < 1e-15:
            raise ToleranceNotMet(
                f"bisection stalled with |sigma(t) - sigma(t+pi)| = {abs(g_mid):.3g}"
            )
        if g_mid < 0.0:
            lo = mid
        else:
            hi = mid
    raise ToleranceNotMet("equal-area chord bisection did not converge")


def symmetrize(p: SupportFunction, cut: ChordCut) -> SymmetrizedPair:
    """Glue each chord arc with its point reflection through the midpoint.

    The reflection maps one chord endpoint to the other, so each glued polygon
    closes; vertex i and vertex i + m/2 are exact reflections, making the
    output centrally symmetric by construction. Convexity of both halves is
    verified and fails only when the grid is too coarse.
    """
    _check_oval(p)
    vertices = curve_from_support(p, mode="spectral").points
    omega = cut.midpoint
    curves = []
    gaps = []
    for theta in (cut.theta, cut.theta + math.pi):
        arc = _arc_polygon(p, vertices, theta)
        glued = np.vstack([arc, 2.0 * omega - arc[1:-1]])
        curve = ClosedCurve(glued)
        if not is_convex(curve):
            raise NotConvexAfterGluing(
                "symmetrized arc is not convex; refine the support grid"
            )
        curves.append(curve)
        k = arc.shape[0]
        edges = np.roll(glued, -1, axis=0) - glued
        ang = np.arctan2(edges[:, 1], edges[:, 0])
        # vertex turns at the two gluing points (indices k-1 and 0)
        for j in (k - 2, glued.shape[0] - 1):
            turn = (ang[(j + 1) % glued.shape[0]] - ang[j] + np.pi) % (2.0 * np.pi) - np.pi
            gaps.append(abs(turn))
    return SymmetrizedPair(
        curve1=curves[0],
        curve2=curves[1],
        junction_tangent_gap=float(max(gaps)),
        theta0=cut.theta,
        sigma=cut.sigma,
        omega0=omega,
    )


@dataclass(frozen=True)
class SymmetricShrinkerReport:
    """Numerical form of the symmetric-case contradiction scaffold.

    For a centrally symmetric solution of kappa = p the support is pinched
    between the inradius and circumradius, r <= p <= R; strict Bonnesen
    inequalities would then force the impossible strict bound
    pi*p^2 < L*p - pi, so the support must be constant: a circle.
    """

    is_circle: bool
    p_min: float
    p_max: float
    inradius: float
    circumradius: float
    t1: float
    t2: float
    symmetry_dev: float
    shrinker_residual: float
    bounds_ok: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "is_circle": self.is_circle,
                "p_min": self.p_min,
                "p_max": self.p_max,
                "inradius": self.inradius,
                "circumradius": self.circumradius,
                "t1": self.t1,
                "t2": self.t2,
                "symmetry_dev": self.symmetry_dev,
                "shrinker_residual": self.shrinker_residual,
                "bounds_ok": self.bounds_ok,
            }
        )


def symmetric_shrinker_check(p: SupportFunction, tol: float = 1e-2) -> SymmetricShrinkerReport:
    """Check a symmetric support function against the shrinker relation.

    Raises NotSymmetric when p(theta + pi) deviates from p(theta) by more than
    ``tol`` (relative to the mean support) and NotAShrinker when the relation
    kappa = p fails at the same tolerance. The verdict is whether p is
    constant within ``tol``, which every symmetric numerical shrinker must be.
    """
    scale = float(np.mean(p.values))
    half = p.count // 2
    sym_dev = float(np.max(np.abs(p.values - np.roll(p.values, half))))
    if sym_dev > tol * scale:
        raise NotSymmetric(
            f"support is not centrally symmetric: max |p(t) - p(t+pi)| = {sym_dev:.3g}"
        )
    rad = p.curvature_radius(mode="spectral")
    if np.min(rad) <= 0.0:
        raise NotAnOval("p + p'' must stay positive")
    residual = float(np.max(np.abs(1.0 / rad - p.values)))
    if residual > tol:
        raise NotAShrinker(
            f"curvature 1/(p+p'') deviates from p by {residual:.3g} > tol = {tol:.3g}"
        )
    curve = curve_from_support(p, mode="spectral")
    r, _ = inradius(curve)
    big_r, _ = circumradius(curve)
    t1, t2 = bonnesen_roots(abs(signed_area(curve)), length(curve))
    p_min = float(np.min(p.values))
    p_max = float(np.max(p.values))
    bounds_ok = (r <= p_min + tol * scale) and (p_max <= big_r + tol * scale)
    is_circle = (p_max - p_min) <= tol * scale
    return SymmetricShrinkerReport(
        is_circle=is_circle,
        p_min=p_min,
        p_max=p_max,
        inradius=r,
        circumradius=big_r,
        t1=t1,
        t2=t2,
        symmetry_dev=sym_dev,
        shrinker_residual=residual,
        bounds_ok=bounds_ok,
    )
