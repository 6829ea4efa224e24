"""Tests for polar tangential coordinates and support-function operations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curveflow import (
    NotAnOval,
    NotConvex,
    OriginOutside,
    SupportFunction,
    area_from_support,
    cauchy_length,
    curvature_from_support,
    curve_from_support,
    length,
    read_support_csv,
    signed_area,
    support_from_curve,
    width,
    write_support_csv,
)
from curveflow import shapes

import oracles


def oval(count, coeffs, mean=1.0):
    return shapes.cosine_oval_support(count, coeffs, mean=mean)


class TestSupportFromCurve:
    def test_unit_circle_constant(self):
        p = support_from_curve(shapes.circle(4096), 256)
        assert np.max(np.abs(p.values - 1.0)) < 1e-6

    def test_translated_circle_adds_first_harmonic(self):
        p = support_from_curve(shapes.circle(4096, center=(0.3, 0.0)), 256)
        expected = 1.0 + 0.3 * np.cos(p.theta)
        assert np.max(np.abs(p.values - expected)) < 1e-6

    def test_ellipse_apex_support(self):
        p = support_from_curve(shapes.ellipse(4096), 256)
        assert p.values[0] == pytest.approx(2.0, abs=1e-12)
        expected = np.hypot(2.0 * np.cos(p.theta), np.sin(p.theta))
        assert np.max(np.abs(p.values - expected)) < 1e-5

    def test_not_convex(self):
        with pytest.raises(NotConvex):
            support_from_curve(shapes.l_hexagon(), 64)

    def test_origin_outside(self):
        with pytest.raises(OriginOutside):
            support_from_curve(shapes.circle(256, center=(5.0, 0.0)), 64)

    def test_odd_grid_rejected(self):
        with pytest.raises(ValueError):
            support_from_curve(shapes.circle(256), 65)

    def test_small_grid_rejected(self):
        with pytest.raises(ValueError):
            support_from_curve(shapes.circle(256), 8)


class TestCurveFromSupport:
    def test_constant_gives_unit_circle(self):
        c = curve_from_support(oval(64, {}))
        radii = np.hypot(c.points[:, 0], c.points[:, 1])
        assert np.max(np.abs(radii - 1.0)) < 1e-10

    def test_roundtrip_mild_oval(self):
        p = oval(256, {3: (0.1, 0.0)})
        back = support_from_curve(curve_from_support(p), 256)
        assert np.max(np.abs(back.values - p.values)) < 1e-4

    def test_not_an_oval(self):
        # p + p'' = 1 - 1.6 cos(3 theta) dips to -0.6
        with pytest.raises(NotAnOval):
            curve_from_support(oval(256, {3: (0.2, 0.0)}))

    def test_reconstruction_is_ccw_convex(self):
        from curveflow import is_convex, turning_number

        c = curve_from_support(shapes.random_oval_support(512, 3))
        assert signed_area(c) > 0
        assert is_convex(c)
        assert turning_number(c) == 1


class TestCauchyLength:
    def test_constant(self):
        assert cauchy_length(oval(64, {})) == pytest.approx(2 * np.pi, rel=1e-15)

    def test_third_harmonic_integrates_away(self):
        assert cauchy_length(oval(256, {3: (0.1, 0.0)})) == pytest.approx(
            2 * np.pi, abs=1e-10
        )

    def test_ellipse_support_against_quadrature(self):
        # dense polygon + fine grid keep both discretization errors ~1e-7
        p = support_from_curve(shapes.ellipse(32768), 4096)
        assert cauchy_length(p) == pytest.approx(
            oracles.ELLIPSE_2_1_PERIMETER, abs=1e-6 * oracles.ELLIPSE_2_1_PERIMETER
        )

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_polygon_length(self, seed):
        p = shapes.random_oval_support(1024, seed, offset=0.1)
        c = curve_from_support(p, mode="spectral")
        assert cauchy_length(p) == pytest.approx(length(c), rel=1e-5)


class TestArea:
    def test_unit_disk(self):
        assert area_from_support(oval(64, {})) == pytest.approx(np.pi, rel=1e-14)

    def test_third_harmonic_parseval(self):
        coeffs = {3: (0.1, 0.0)}
        p = oval(256, coeffs)
        expected = oracles.parseval_cosine_area(1.0, coeffs)
        assert expected == pytest.approx(0.96 * np.pi, abs=1e-12)
        assert area_from_support(p, mode="spectral") == pytest.approx(expected, abs=1e-8)

    def test_translation_invariance(self):
        p = oval(256, {1: (0.3, 0.0)})
        assert area_from_support(p, mode="spectral") == pytest.approx(np.pi, abs=1e-8)

    def test_matches_shoelace(self):
        p = shapes.random_oval_support(4096, 11, offset=0.1)
        a_support = area_from_support(p, mode="spectral")
        a_shoelace = signed_area(curve_from_support(p, mode="spectral"))
        assert a_support == pytest.approx(a_shoelace, rel=1e-6)


class TestCurvature:
    def test_constant_radius(self):
        p = oval(64, {}, mean=2.5)
        for theta in (0.0, 1.0, 4.5):
            assert curvature_from_support(p, theta) == pytest.approx(1 / 2.5, rel=1e-12)

    def test_third_harmonic_values(self):
        p = oval(768, {3: (0.1, 0.0)})
        assert curvature_from_support(p, 0.0, mode="spectral") == pytest.approx(5.0, abs=1e-6)
        assert curvature_from_support(p, np.pi / 3, mode="spectral") == pytest.approx(
            1.0 / 1.8, abs=1e-6
        )

    def test_matches_polygon_curvature(self):
        from curveflow import signed_curvature

        p = shapes.random_oval_support(2048, 5)
        c = curve_from_support(p, mode="spectral")
        fr = signed_curvature(c)
        k_support = np.array(
            [curvature_from_support(p, t, mode="spectral") for t in p.theta[:64]]
        )
        assert np.max(np.abs(k_support - fr.curvature[:64])) < 1e-4

    def test_not_an_oval(self):
        with pytest.raises(NotAnOval):
            curvature_from_support(oval(256, {3: (0.2, 0.0)}), 0.0)


class TestWidth:
    def test_disk_diameter(self):
        w = width(oval(64, {}))
        assert np.max(np.abs(w.values - 2.0)) < 1e-14

    def test_odd_harmonic_cancels(self):
        w = width(oval(256, {1: (0.3, 0.0)}))
        assert np.max(np.abs(w.values - 2.0)) < 1e-12

    def test_even_harmonic_doubles(self):
        w = width(oval(256, {2: (0.1, 0.0)}))
        assert w.values[0] == pytest.approx(2.2, abs=1e-10)
        assert w.values[64] == pytest.approx(1.8, abs=1e-10)  # theta = pi/2


class TestCoordinateIdentities:
    def test_tangent_direction_depends_only_on_angle(self):
        # x'(theta) is parallel to (-sin, cos): support-side tangents at theta
        # and theta + pi are exactly antiparallel
        theta = np.linspace(0, np.pi, 7)
        t1 = np.column_stack([-np.sin(theta), np.cos(theta)])
        t2 = np.column_stack([-np.sin(theta + np.pi), np.cos(theta + np.pi)])
        assert np.max(np.abs(t1 + t2)) < 1e-8

    def test_edge_directions_follow_tangent_formula(self):
        p = shapes.random_oval_support(1024, 9)
        c = curve_from_support(p, mode="spectral")
        e = c.edges()
        e = e / np.hypot(e[:, 0], e[:, 1])[:, None]
        mid = p.theta + p.step / 2.0
        expected = np.column_stack([-np.sin(mid), np.cos(mid)])
        assert np.max(np.hypot(*(e - expected).T)) < 1e-4

    def test_first_derivative_identity(self):
        # -x sin + y cos = p' both against the construction and analytically
        coeffs = {2: (0.05, 0.02), 3: (0.02, -0.03)}
        p = oval(2048, coeffs)
        c = curve_from_support(p, mode="spectral")
        theta = p.theta
        lhs = -c.points[:, 0] * np.sin(theta) + c.points[:, 1] * np.cos(theta)
        analytic = np.zeros_like(theta)
        for k, (a, b) in coeffs.items():
            analytic += -a * k * np.sin(k * theta) + b * k * np.cos(k * theta)
        assert np.max(np.abs(lhs - analytic)) < 1e-6

    def test_derivative_of_reconstruction(self):
        # x' = -(p + p'') sin, y' = (p + p'') cos, checked by centered differences
        p = shapes.random_oval_support(4096, 13)
        c = curve_from_support(p, mode="spectral")
        pts = c.points
        diff = (np.roll(pts, -1, axis=0) - np.roll(pts, 1, axis=0)) / (2.0 * p.step)
        rad = p.curvature_radius(mode="spectral")
        expected = rad[:, None] * np.column_stack([-np.sin(p.theta), np.cos(p.theta)])
        assert np.max(np.hypot(*(diff - expected).T)) < 1e-5

    @settings(max_examples=20, deadline=None)
    @given(cx=st.floats(-0.3, 0.3), cy=st.floats(-0.3, 0.3))
    def test_translation_covariance(self, cx, cy):
        base = shapes.circle(2048)
        p0 = support_from_curve(base, 128)
        p1 = support_from_curve(base.translated((cx, cy)), 128)
        shift = cx * np.cos(p0.theta) + cy * np.sin(p0.theta)
        assert np.max(np.abs(p1.values - (p0.values + shift))) < 1e-12
        assert cauchy_length(p1) == pytest.approx(cauchy_length(p0), rel=1e-12)


class TestSpectralEval:
    def test_band_limited_exactness(self):
        coeffs = {2: (0.08, -0.03), 4: (0.01, 0.02)}
        p = oval(128, coeffs)
        rng = np.random.default_rng(0)
        thetas = rng.uniform(0, 2 * np.pi, 32)
        exact = np.ones_like(thetas)
        d1 = np.zeros_like(thetas)
        for k, (a, b) in coeffs.items():
            exact += a * np.cos(k * thetas) + b * np.sin(k * thetas)
            d1 += -a * k * np.sin(k * thetas) + b * k * np.cos(k * thetas)
        assert np.max(np.abs(p.eval(thetas) - exact)) < 1e-13
        assert np.max(np.abs(p.eval(thetas, order=1) - d1)) < 1e-12


class TestValidationAndIO:
    def test_positive_samples_required(self):
        with pytest.raises(ValueError):
            SupportFunction(np.full(64, -1.0))

    def test_odd_count_rejected(self):
        with pytest.raises(ValueError):
            SupportFunction(np.ones(65))

    def test_csv_roundtrip(self, tmp_path):
        p = shapes.random_oval_support(128, 2)
        path = tmp_path / "support.csv"
        write_support_csv(p, path)
        back = read_support_csv(path)
        assert np.array_equal(back.values, p.values)

    def test_nonuniform_grid_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0.0,1.0\n0.5,1.0\n1.7,1.0\n" * 8)
        with pytest.raises(ValueError):
            read_support_csv(path)
