"""Polar tangential coordinates for ovals.

The support function p(theta) is the distance from the origin to the tangent
line with outward normal (cos theta, sin theta). It is sampled on a uniform
grid over [0, 2*pi); the grid count is required even so that theta + pi always
lands on a grid node (width and symmetrization then need no interpolation).

Derivatives are taken by centered differences on the periodic grid by default;
``mode="spectral"`` switches to FFT differentiation for high-accuracy work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .curves import ClosedCurve, is_convex, winding_number
from .errors import NotAnOval, NotConvex, OriginOutside

FloatArray = NDArray[np.float64]

MIN_GRID = 16


def _check_mode(mode: str) -> None:
    if mode not in ("centered", "spectral"):
        raise ValueError(f"unknown derivative mode {mode!r}")


@dataclass(frozen=True)
class SupportFunction:
    """Positive support samples on the uniform grid theta_k = 2*pi*k/count."""

    values: FloatArray

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if v.ndim != 1:
            raise ValueError("support samples must be a 1-D array")
        if v.size < MIN_GRID or v.size % 2 != 0:
            raise ValueError(f"grid count must be even and >= {MIN_GRID}, got {v.size}")
        if not np.all(np.isfinite(v)) or np.any(v <= 0.0):
            raise ValueError("support samples must be finite and strictly positive")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def count(self) -> int:
        return self.values.size

    @property
    def step(self) -> float:
        return 2.0 * np.pi / self.count

    @property
    def theta(self) -> FloatArray:
        return 2.0 * np.pi * np.arange(self.count) / self.count

    def derivative(self, order: int = 1, mode: str = "centered") -> FloatArray:
        """Periodic derivative of the given order on the grid."""
        _check_mode(mode)
        v = self.values
        if mode == "centered":
            h = self.step
            out = v
            for _ in range(order // 2):
                out = (np.roll(out, -1) - 2.0 * out + np.roll(out, 1)) / (h * h)
            if order % 2:
                out = (np.roll(out, -1) - np.roll(out, 1)) / (2.0 * h)
            return out
        coef = np.fft.rfft(v)
        k = np.arange(coef.size)
        coef = coef * (1j * k) ** order
        if order % 2:
            coef[-1] = 0.0  # Nyquist mode has no well-defined odd derivative
        return np.fft.irfft(coef, n=self.count)

    def curvature_radius(self, mode: str = "centered") -> FloatArray:
        """p + p'' on the grid (the radius of curvature of the oval)."""
        return self.values + self.derivative(2, mode=mode)

    def eval(self, theta, order: int = 0, mode: str = "spectral"):
        """Evaluate p (or a derivative) at arbitrary angles.

        Spectral mode evaluates the interpolating trigonometric polynomial and
        is exact for band-limited support functions; linear mode interpolates
        the grid samples (order 0 only).
        """
        theta = np.asarray(theta, dtype=float)
        if mode == "linear":
            if order != 0:
                raise ValueError("linear evaluation supports order 0 only")
            grid = np.concatenate([self.theta, [2.0 * np.pi]])
            vals = np.concatenate([self.values, self.values[:1]])
            return np.interp(np.mod(theta, 2.0 * np.pi), grid, vals)
        if mode != "spectral":
            raise ValueError(f"unknown evaluation mode {mode!r}")
        coef = np.fft.rfft(self.values) / self.count
        k = np.arange(coef.size)
        coef = coef * (1j * k) ** order
        if order % 2:
            coef[-1] = 0.0
        # real series: c_0 + 2*Re sum_{k>=1} c_k e^{ik theta}, Nyquist unhalved
        phases = np.exp(1j * np.multiply.outer(theta, k))
        weights = np.full(coef.size, 2.0)
        weights[0] = 1.0
        if self.count % 2 == 0:
            weights[-1] = 1.0
        return np.real(phases @ (weights * coef))


@dataclass(frozen=True)
class WidthFunction:
    """w(theta) = p(theta) + p(theta + pi) on the half grid [0, pi)."""

    values: FloatArray

    @property
    def theta(self) -> FloatArray:
        return np.pi * np.arange(self.values.size) / self.values.size


def support_from_curve(curve: ClosedCurve, count: int) -> SupportFunction:
    """Extract support samples of a convex curve containing the origin.

    Uses the vertex-max form p(theta) = max_i <x_i, u(theta)>, which stays
    robust on polygons where normal directions jump at vertices.
    """
    if count < MIN_GRID or count % 2 != 0:
        raise ValueError(f"grid count must be even and >= {MIN_GRID}, got {count}")
    if not is_convex(curve):
        raise NotConvex("support function requires a convex curve")
    if winding_number(curve, (0.0, 0.0)) == 0:
        raise OriginOutside("origin must lie strictly inside the curve")
    theta = 2.0 * np.pi * np.arange(count) / count
    u = np.column_stack([np.cos(theta), np.sin(theta)])
    pts = curve.points
    p = np.empty(count)
    block = max(1, int(4_000_000 // max(pts.shape[0], 1)))
    for start in range(0, count, block):
        stop = min(start + block, count)
        p[start:stop] = (pts @ u[start:stop].T).max(axis=0)
    return SupportFunction(p)


def curve_from_support(p: SupportFunction, mode: str = "centered") -> ClosedCurve:
    """Reconstruct the oval: x = p cos - p' sin, y = p sin + p' cos."""
    rad = p.curvature_radius(mode=mode)
    if np.min(rad) <= 0.0:
        raise NotAnOval(f"p + p'' reaches {np.min(rad):.6g}; not a strictly convex oval")
    theta = p.theta
    dp = p.derivative(1, mode=mode)
    c, s = np.cos(theta), np.sin(theta)
    return ClosedCurve(np.column_stack([p.values * c - dp * s, p.values * s + dp * c]))


def cauchy_length(p: SupportFunction) -> float:
    """Perimeter as the full-period integral of p (trapezoid = rectangle rule)."""
    return float(p.step * p.values.sum())


def area_from_support(p: SupportFunction, mode: str = "centered") -> float:
    """Enclosed area 0.5 * integral of p * (p + p'')."""
    return float(0.5 * p.step * np.sum(p.values * p.curvature_radius(mode=mode)))


def curvature_from_support(p: SupportFunction, theta: float, mode: str = "centered") -> float:
    """Curvature 1 / (p + p'') interpolated to ``theta``."""
    rad = p.curvature_radius(mode=mode)
    if np.min(rad) <= 0.0:
        raise NotAnOval(f"p + p'' reaches {np.min(rad):.6g}; not a strictly convex oval")
    if mode == "spectral":
        value = float(p.eval(theta, order=0) + p.eval(theta, order=2))
    else:
        grid = np.concatenate([p.theta, [2.0 * np.pi]])
        vals = np.concatenate([rad, rad[:1]])
        value = float(np.interp(np.mod(theta, 2.0 * np.pi), grid, vals))
    if value <= 0.0:
        raise NotAnOval(f"p + p'' interpolates to {value:.6g} at theta={theta:.6g}")
    return 1.0 / value


def width(p: SupportFunction) -> WidthFunction:
    """Pointwise width from exactly opposite grid samples."""
    half = p.count // 2
    w = p.values[:half] + p.values[half:]
    return WidthFunction(values=w)


def read_support_csv(path) -> SupportFunction:
    """Read ``theta,p`` lines; theta must be the uniform ascending grid."""
    data = np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)
    theta, values = data[:, 0], data[:, 1]
    count = values.size
    expected = 2.0 * np.pi * np.arange(count) / count
    if count < MIN_GRID or not np.allclose(theta, expected, atol=1e-9):
        raise ValueError(f"support file {path} is not on the uniform [0, 2pi) grid")
    return SupportFunction(values)


def write_support_csv(p: SupportFunction, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for t, v in zip(p.theta, p.values):
            fh.write(f"{t:.17g},{v:.17g}\n")
