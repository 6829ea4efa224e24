"""Self-shrinker verification and the support ODE p'' = 1/p - p.

A contracting homothetic solution of the curve shortening flow satisfies
kappa + gamma . n = 0 pointwise; on an oval in polar tangential coordinates
this becomes kappa = p, i.e. the second-order ODE p'' = 1/p - p for the
support function. Both views are implemented: residual/gauge checks on
discrete curves, and shooting of the ODE with event detection to produce the
period evidence that no closed embedded solution exists besides the circle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from .curves import ClosedCurve, is_simple, length, signed_area, signed_curvature
from .errors import BlowUp, NotConvex, ToleranceNotMet

FloatArray = NDArray[np.float64]

# Support values below this are treated as collapse: the 1/p term then makes
# local error control meaningless at double precision.
P_FLOOR = 1e-7


@dataclass(frozen=True)
class ShrinkerReport:
    """Residual statistics of kappa + gamma . n plus the circle verdict.

    ``gauge_constant``/``gauge_max_rel_dev`` stay None when only the residual
    aggregation ran. The contracting sign convention (epsilon = -1) is fixed;
    ``contracting`` is metadata only.
    """

    max_residual: float
    gauge_constant: float | None
    gauge_max_rel_dev: float | None
    area: float
    length: float
    verdict: bool | None
    contracting: bool = True

    def to_json(self) -> str:
        fields = {
            "max_residual": self.max_residual,
            "gauge_constant": self.gauge_constant,
            "gauge_max_rel_dev": self.gauge_max_rel_dev,
            "area": self.area,
            "length": self.length,
            "verdict": self.verdict,
        }
        return json.dumps(fields)


@dataclass(frozen=True)
class OdeTrajectory:
    """Adaptive-integrator samples of theta, p, p', and the energy integral."""

    theta: FloatArray
    p: FloatArray
    dp: FloatArray
    energy: FloatArray

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            for t, p, dp, e in zip(self.theta, self.p, self.dp, self.energy):
                fh.write(f"{t:.17g},{p:.17g},{dp:.17g},{e:.17g}\n")


def _require_simple_ccw(curve: ClosedCurve) -> None:
    if signed_area(curve) <= 0.0:
        raise ValueError("curve must be counter-clockwise oriented")
    if not is_simple(curve):
        raise ValueError("curve must be simple (embedded)")


def fundamental_residual(curve: ClosedCurve) -> tuple[FloatArray, ShrinkerReport]:
    """Per-sample kappa_i + gamma_i . n_i and its aggregate report."""
    _require_simple_ccw(curve)
    frame = signed_curvature(curve)
    residual = frame.curvature + np.einsum("ij,ij->i", frame.points, frame.normal)
    report = ShrinkerReport(
        max_residual=float(np.max(np.abs(residual))),
        gauge_constant=None,
        gauge_max_rel_dev=None,
        area=signed_area(curve),
        length=length(curve),
        verdict=None,
    )
    return residual, report


def gauge_constant(curve: ClosedCurve) -> tuple[float, float]:
    """Fit kappa = C * exp(|gamma|^2 / 2) on a convex CCW curve.

    C is the geometric mean of kappa_i * exp(-|gamma_i|^2 / 2); the second
    return value is the largest relative deviation of the samples from C.
    """
    frame = signed_curvature(curve)
    if np.any(frame.curvature <= 0.0):
        raise NotConvex("gauge fit requires positive curvature (convex, CCW)")
    log_v = np.log(frame.curvature) - 0.5 * np.einsum("ij,ij->i", frame.points, frame.points)
    log_c = float(np.mean(log_v))
    dev = float(np.max(np.abs(np.exp(log_v - log_c) - 1.0)))
    return math.exp(log_c), dev


def verify_shrinker(
    curve: ClosedCurve,
    tol: float = 1e-3,
    *,
    area_tol: float | None = None,
    length_tol: float | None = None,
    residual_tol: float | None = None,
    gauge_tol: float | None = None,
) -> ShrinkerReport:
    """Full shrinker check: residual, gauge, area = pi, length = 2*pi.

    Per-quantity tolerances default to ``tol``. The verdict is true iff all
    four hold, in which case the curve is (numerically) the unit circle.
    """
    residual, base = fundamental_residual(curve)
    c, dev = gauge_constant(curve)
    area_tol = tol if area_tol is None else area_tol
    length_tol = tol if length_tol is None else length_tol
    residual_tol = tol if residual_tol is None else residual_tol
    gauge_tol = tol if gauge_tol is None else gauge_tol
    verdict = (
        abs(base.area - math.pi) <= area_tol
        and abs(base.length - 2.0 * math.pi) <= length_tol
        and base.max_residual <= residual_tol
        and dev <= gauge_tol
    )
    return ShrinkerReport(
        max_residual=base.max_residual,
        gauge_constant=c,
        gauge_max_rel_dev=dev,
        area=base.area,
        length=base.length,
        verdict=verdict,
    )


def _ode_rhs(_theta, y):
    p, dp = y
    return (dp, 1.0 / p - p)


def ode_energy(p, dp):
    """First integral E = dp^2/2 + p^2/2 - ln p of the support ODE."""
    return 0.5 * np.asarray(dp) ** 2 + 0.5 * np.asarray(p) ** 2 - np.log(np.asarray(p))


def _floor_event(_theta, y):
    return y[0] - P_FLOOR


_floor_event.terminal = True
_floor_event.direction = -1


def integrate_support_ode(
    p0: float, dp0: float, theta_span: float, tol: float = 1e-10, samples: int | None = None
) -> OdeTrajectory:
    """Integrate p'' = 1/p - p with an adaptive embedded Runge-Kutta pair.

    Records the accepted integrator steps, or ``samples`` evenly spaced
    angles when given. Raises BlowUp when p reaches the collapse floor within
    the span and ToleranceNotMet when the step controller gives up.
    """
    if p0 <= 0.0:
        raise ValueError(f"p0 must be positive, got {p0}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if p0 <= P_FLOOR:
        raise BlowUp(f"p0 = {p0:.3g} is at or below the collapse floor {P_FLOOR:.0e}")
    sol = solve_ivp(
        _ode_rhs,
        (0.0, float(theta_span)),
        (float(p0), float(dp0)),
        method="DOP853",
        rtol=tol,
        atol=tol,
        t_eval=None if samples is None else np.linspace(0.0, float(theta_span), samples),
        dense_output=False,
        events=_floor_event,
    )
    if sol.t_events[0].size > 0:
        raise BlowUp(f"support reached the collapse floor at theta = {sol.t_events[0][0]:.6g}")
    if not sol.success:
        raise ToleranceNotMet(f"integrator failed: {sol.message}")
    p, dp = sol.y
    return OdeTrajectory(theta=sol.t, p=p, dp=dp, energy=ode_energy(p, dp))


def _maximum_event(_theta, y):
    return y[1]


_maximum_event.direction = -1


def shoot_period(p0: float, tol: float = 1e-12) -> float:
    """Angular distance between successive maxima of p from a rest start.

    Events are p' zero-crossings with p'' < 0, refined by root finding on the
    dense output; the trajectory starts at (p0, 0).
    """
    if p0 <= 0.0:
        raise ValueError(f"p0 must be positive, got {p0}")
    if p0 == 1.0:
        raise ValueError("p0 = 1 is the constant (circle) solution; no oscillation")
    if p0 <= P_FLOOR:
        raise BlowUp(f"p0 = {p0:.3g} is at or below the collapse floor {P_FLOOR:.0e}")
    sol = solve_ivp(
        _ode_rhs,
        (0.0, 16.0 * np.pi),
        (float(p0), 0.0),
        method="DOP853",
        rtol=tol,
        atol=tol,
        events=(_maximum_event, _floor_event),
    )
    if sol.t_events[1].size > 0:
        raise BlowUp(f"support reached the collapse floor at theta = {sol.t_events[1][0]:.6g}")
    maxima = sol.t_events[0]
    maxima = maxima[maxima > 1e-9]
    if maxima.size < 2:
        raise ToleranceNotMet("fewer than two maxima detected within the shooting span")
    return float(maxima[1] - maxima[0])


def period_by_quadrature(p0: float) -> float:
    """Oscillation period from the energy level, by singularity-free quadrature.

    Independent of the shooting route: the turning points of
    E = p^2/2 - ln p are bracketed by root finding and the period integral is
    regularized with the cosine substitution. Handles amplitudes whose orbits
    dip far below the integration floor.
    """
    if p0 <= 0.0 or p0 == 1.0:
        raise ValueError("p0 must be positive and different from 1")

    def potential(p):
        return 0.5 * p * p - math.log(p)

    energy = potential(p0)
    if p0 > 1.0:
        lo = brentq(lambda p: potential(p) - energy, 1e-300, 1.0, rtol=8.9e-16)
        p_min, p_max = lo, p0
    else:
        hi = brentq(lambda p: potential(p) - energy, 1.0, 1e9, rtol=8.9e-16)
        p_min, p_max = p0, hi
    mid, half = 0.5 * (p_min + p_max), 0.5 * (p_max - p_min)

    def integrand(u):
        p = mid - half * math.cos(u)
        gap = energy - potential(p)
        if gap <= 0.0:
            return 0.0
        return half * math.sin(u) / math.sqrt(2.0 * gap)

    value, _ = quad(integrand, 0.0, math.pi, limit=2000)
    return 2.0 * value


@dataclass(frozen=True)
class PeriodEntry:
    p0: float
    period: float
    ratio_to_2pi: float
    is_constant: bool
    two_pi_match: bool
    al_candidate: tuple[int, int] | None  # (windings, maxima) with ratio ~ q/m


@dataclass(frozen=True)
class ClassificationReport:
    """Period survey over an amplitude grid.

    ``no_circle_period`` asserts that no measured period equals 2*pi within
    the tolerance except the constant solution, i.e. no closed embedded
    solution with turning number one appears besides the circle. Rational
    ratios period/(2*pi) = q/m with m >= 2 are flagged as candidates for the
    known closed-but-nonembedded curves.
    """

    entries: tuple[PeriodEntry, ...]
    tol: float
    no_circle_period: bool

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_csv())

    def to_csv(self) -> str:
        lines = ["p0,period,ratio_to_2pi"]
        for e in self.entries:
            lines.append(f"{e.p0:.17g},{e.period:.17g},{e.ratio_to_2pi:.17g}")
        lines.append(
            "# no period equals 2*pi within tol=%.17g: %s"
            % (self.tol, "true" if self.no_circle_period else "false")
        )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "tol": self.tol,
                "no_circle_period": self.no_circle_period,
                "entries": [
                    {
                        "p0": e.p0,
                        "period": e.period,
                        "ratio_to_2pi": e.ratio_to_2pi,
                        "is_constant": e.is_constant,
                        "two_pi_match": e.two_pi_match,
                        "al_candidate": list(e.al_candidate) if e.al_candidate else None,
                    }
                    for e in self.entries
                ],
            }
        )


def _rational_candidate(ratio: float, tol: float, max_maxima: int = 12):
    best = None
    for m in range(2, max_maxima + 1):
        q = round(ratio * m)
        if q < 1:
            continue
        err = abs(ratio - q / m)
        if err <= tol and (best is None or err < best[2]):
            best = (q, m, err)
    if best is None:
        return None
    return (best[0], best[1])


def classify_closed_solutions(
    amplitudes, tol: float = 1e-3, *, shoot_tol: float = 1e-12, jobs: int = 1
) -> ClassificationReport:
    """Measure the period at each amplitude and test the closing condition.

    Closing a curve of turning number q with m curvature maxima needs
    period = 2*pi*q/m; turning number one needs period = 2*pi exactly, so the
    survey asserting no such period is the numerical side of the uniqueness
    statement for embedded shrinkers. Grid points are independent;
    ``jobs > 1`` evaluates them concurrently and merges in grid order.
    """
    amplitudes = [float(p0) for p0 in amplitudes]
    for p0 in amplitudes:
        if p0 <= 0.0:
            raise ValueError(f"amplitudes must be positive, got {p0}")

    def measure(p0: float) -> float:
        return math.nan if p0 == 1.0 else shoot_period(p0, tol=shoot_tol)

    if jobs > 1 and len(amplitudes) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=int(jobs)) as pool:
            periods = list(pool.map(measure, amplitudes))
    else:
        periods = [measure(p0) for p0 in amplitudes]

    entries = []
    for p0, period in zip(amplitudes, periods):
        if math.isnan(period):
            entries.append(
                PeriodEntry(
                    p0=p0,
                    period=float("nan"),
                    ratio_to_2pi=float("nan"),
                    is_constant=True,
                    two_pi_match=False,
                    al_candidate=None,
                )
            )
            continue
        ratio = period / (2.0 * math.pi)
        entries.append(
            PeriodEntry(
                p0=p0,
                period=period,
                ratio_to_2pi=ratio,
                is_constant=False,
                two_pi_match=abs(period - 2.0 * math.pi) <= tol,
                al_candidate=_rational_candidate(ratio, tol / (2.0 * math.pi)),
            )
        )
    no_circle = not any(e.two_pi_match for e in entries)
    return ClassificationReport(entries=tuple(entries), tol=tol, no_circle_period=no_circle)
