"""Tests for shrinker verification and the support ODE."""

import json
import math

import numpy as np
import pytest
from scipy.optimize import brentq

from curveflow import (
    BlowUp,
    NotConvex,
    classify_closed_solutions,
    fundamental_residual,
    gauge_constant,
    integrate_support_ode,
    ode_energy,
    period_by_quadrature,
    shoot_period,
    verify_shrinker,
)
from curveflow import shapes

SQRT2_PI = math.sqrt(2.0) * math.pi


class TestFundamentalResidual:
    def test_unit_circle_vanishes(self):
        res, rep = fundamental_residual(shapes.circle(4096))
        assert np.max(np.abs(res)) < 1e-4
        assert rep.max_residual < 1e-4

    def test_radius_two_offset(self):
        res, _ = fundamental_residual(shapes.circle(2048, radius=2.0))
        assert np.max(np.abs(res + 1.5)) < 1e-4

    def test_off_center_circle(self):
        # gamma . n = -(1 + cos s) on the unit circle centered at (1, 0)
        c = shapes.circle(2048, center=(1.0, 0.0))
        res, rep = fundamental_residual(c)
        s = 2 * np.pi * np.arange(2048) / 2048
        assert np.max(np.abs(res + np.cos(s))) < 1e-3
        assert rep.max_residual >= 0.9

    def test_rejects_clockwise(self):
        with pytest.raises(ValueError):
            fundamental_residual(shapes.circle(256, clockwise=True))

    def test_rejects_self_intersecting(self):
        with pytest.raises(ValueError):
            fundamental_residual(shapes.limacon(128))


class TestGaugeConstant:
    def test_unit_circle(self):
        c, dev = gauge_constant(shapes.circle(2048))
        assert c == pytest.approx(math.exp(-0.5), abs=1e-6)
        assert dev < 1e-6

    def test_radius_two(self):
        c, dev = gauge_constant(shapes.circle(2048, radius=2.0))
        assert c == pytest.approx(0.5 * math.exp(-2.0), abs=1e-6)
        assert dev < 1e-6

    def test_ellipse_deviates(self):
        # kappa * exp(-|x|^2/2) is 2e^-2 at (2,0) but e^-1/2/4 at (0,1)
        _, dev = gauge_constant(shapes.ellipse(2048))
        assert dev > 0.1

    def test_not_convex(self):
        with pytest.raises(NotConvex):
            gauge_constant(shapes.l_hexagon())


class TestSupportOde:
    def test_equilibrium_held_100_periods(self):
        traj = integrate_support_ode(1.0, 0.0, 100 * 2 * np.pi, tol=1e-10)
        assert np.max(np.abs(traj.p - 1.0)) < 1e-12
        assert np.max(np.abs(traj.energy - 0.5)) < 1e-12

    def test_oscillation_energy_conserved(self):
        tol = 1e-11
        traj = integrate_support_ode(1.2, 0.0, 4 * np.pi, tol=tol)
        assert traj.p.min() < 1.0 < traj.p.max()
        assert traj.p.max() == pytest.approx(1.2, abs=1e-9)
        drift = np.max(np.abs(traj.energy - traj.energy[0]))
        assert drift <= 100 * tol
        assert drift <= 1e-9

    def test_tiny_start_blows_up(self):
        with pytest.raises(BlowUp):
            integrate_support_ode(1e-9, 0.0, 2 * np.pi)

    def test_even_symmetry_from_rest(self):
        fwd = integrate_support_ode(1.3, 0.0, 2 * np.pi, tol=1e-12, samples=201)
        bwd = integrate_support_ode(1.3, 0.0, -2 * np.pi, tol=1e-12, samples=201)
        assert np.max(np.abs(bwd.theta + fwd.theta)) < 1e-15
        assert np.max(np.abs(fwd.p - bwd.p)) < 1e-9
        assert np.max(np.abs(fwd.dp + bwd.dp)) < 1e-9

    def test_energy_helper_at_equilibrium(self):
        assert ode_energy(1.0, 0.0) == pytest.approx(0.5, rel=1e-15)

    def test_csv_dump(self, tmp_path):
        traj = integrate_support_ode(1.2, 0.0, np.pi)
        path = tmp_path / "traj.csv"
        traj.write_csv(path)
        data = np.loadtxt(path, delimiter=",")
        assert data.shape[1] == 4
        assert data[0, 1] == 1.2


class TestShootPeriod:
    def test_small_amplitude_linearization(self):
        # p = 1 + eps obeys eps'' = -2 eps, so the period tends to 2*pi/sqrt(2)
        assert shoot_period(1.001) == pytest.approx(2 * np.pi / math.sqrt(2), abs=1e-3)

    @pytest.mark.parametrize("p0", [1.1, 1.5, 2.0, 3.0, 5.0, 0.5])
    def test_agrees_with_quadrature_oracle(self, p0):
        assert shoot_period(p0) == pytest.approx(period_by_quadrature(p0), abs=1e-8)

    def test_constant_solution_rejected(self):
        with pytest.raises(ValueError):
            shoot_period(1.0)

    def test_min_start_same_orbit(self):
        # starting at the orbit minimum measures the same period
        e_match = 0.5 * 1.5**2 - math.log(1.5)
        p_min = brentq(lambda p: 0.5 * p * p - math.log(p) - e_match, 1e-6, 1.0)
        assert shoot_period(p_min) == pytest.approx(shoot_period(1.5), abs=1e-8)

    def test_deep_orbit_blows_up(self):
        # p0 = 8 dips to ~1e-13, far below the integration floor
        with pytest.raises(BlowUp):
            shoot_period(8.0)

    def test_measured_window_is_pi_to_sqrt2_pi(self):
        """Every period sits in (pi, sqrt(2)*pi), decreasing with amplitude.

        This is the closing-condition window: a closed solution with q
        windings and m curvature maxima needs period 2*pi*q/m, so the ratio
        window (1/2, 1/sqrt(2)) admits no integer solution with q = 1 --
        only the circle closes with turning number one. Both measurement
        routes (shooting and energy quadrature) agree on the window.
        """
        p0s = [1.01, 1.1, 1.5, 2.0, 3.0, 5.0]
        periods = [shoot_period(p0) for p0 in p0s]
        for t in periods:
            assert math.pi < t < SQRT2_PI
        assert all(a > b for a, b in zip(periods, periods[1:]))
        quad_periods = [period_by_quadrature(p0) for p0 in [6.0, 8.0, 10.0]]
        for t in quad_periods:
            assert math.pi < t < SQRT2_PI

    def test_period_continuity_on_fine_grid(self):
        # increments shrink with the grid: no event-detection jumps
        coarse = np.array([shoot_period(p0) for p0 in np.linspace(1.2, 1.4, 9)])
        fine = np.array([shoot_period(p0) for p0 in np.linspace(1.2, 1.4, 17)])
        step_c = np.max(np.abs(np.diff(coarse)))
        step_f = np.max(np.abs(np.diff(fine)))
        assert step_c < 2e-2
        assert step_f < 0.6 * step_c


class TestClassification:
    def test_no_two_pi_period(self):
        rep = classify_closed_solutions([1.1, 1.5, 2.0, 3.0], tol=1e-3)
        assert rep.no_circle_period
        for e in rep.entries:
            assert not e.two_pi_match
            assert math.pi < e.period < SQRT2_PI

    def test_small_amplitude_entry(self):
        rep = classify_closed_solutions([1 + 1e-6], tol=1e-3)
        assert rep.entries[0].period == pytest.approx(2 * np.pi / math.sqrt(2), abs=1e-3)
        assert rep.entries[0].ratio_to_2pi == pytest.approx(1 / math.sqrt(2), abs=1e-3)

    def test_empty_grid(self):
        rep = classify_closed_solutions([], tol=1e-3)
        assert rep.entries == ()
        assert rep.no_circle_period

    def test_constant_entry(self):
        rep = classify_closed_solutions([1.0], tol=1e-3)
        assert rep.entries[0].is_constant
        assert math.isnan(rep.entries[0].period)

    def test_flags_abresch_langer_candidate(self):
        # locate the amplitude whose period closes a 2-winding, 3-maxima curve
        target = 2 * math.pi * 2 / 3
        p0_star = brentq(lambda p0: shoot_period(p0) - target, 1.5, 2.5, xtol=1e-10)
        rep = classify_closed_solutions([p0_star], tol=1e-6)
        assert rep.entries[0].al_candidate == (2, 3)
        assert rep.no_circle_period

    def test_jobs_merge_deterministic(self):
        grid = [1.1, 1.7, 2.4, 3.1]
        serial = classify_closed_solutions(grid, tol=1e-3)
        parallel = classify_closed_solutions(grid, tol=1e-3, jobs=4)
        assert serial.to_csv() == parallel.to_csv()

    def test_csv_and_json_shapes(self, tmp_path):
        rep = classify_closed_solutions([1.1, 1.5], tol=1e-3)
        text = rep.to_csv()
        assert text.splitlines()[0] == "p0,period,ratio_to_2pi"
        assert text.splitlines()[-1].startswith("# no period equals 2*pi")
        payload = json.loads(rep.to_json())
        assert payload["no_circle_period"] is True
        assert len(payload["entries"]) == 2


class TestVerifyShrinker:
    def test_unit_circle_verdict_true(self):
        rep = verify_shrinker(shapes.circle(4096), tol=1e-3)
        assert rep.verdict
        assert rep.area == pytest.approx(np.pi, abs=1e-5)
        assert rep.length == pytest.approx(2 * np.pi, abs=1e-5)

    def test_ellipse_verdict_false(self):
        rep = verify_shrinker(shapes.ellipse(2048), tol=1e-3)
        assert not rep.verdict
        assert rep.max_residual > 0.5

    def test_radius_two_circle_verdict_false(self):
        rep = verify_shrinker(shapes.circle(2048, radius=2.0), tol=1e-3)
        assert not rep.verdict
        assert rep.max_residual == pytest.approx(1.5, abs=1e-3)
        assert rep.area == pytest.approx(4 * np.pi, rel=1e-4)

    def test_json_field_names(self):
        rep = verify_shrinker(shapes.circle(1024), tol=1e-3)
        payload = json.loads(rep.to_json())
        assert list(payload) == [
            "max_residual",
            "gauge_constant",
            "gauge_max_rel_dev",
            "area",
            "length",
            "verdict",
        ]

    def test_gauge_deviation_tracks_log_derivative_identity(self):
        # kappa' = kappa * (gamma . gamma') holds iff the gauge fit is exact
        c = shapes.circle(2048)
        fr_res, _ = fundamental_residual(c)
        _, dev_circle = gauge_constant(c)
        _, dev_ellipse = gauge_constant(shapes.ellipse(2048))
        assert dev_circle < 1e-6 < dev_ellipse
