"""Orbit geometry and two-body quantities.

Expected values come from independent routes: high-precision evaluation of
the defining formulas (frozen constants below), the angular-momentum
identity h = sqrt(mu*a*(1-e^2)), and direct trigonometric evaluation of the
rotation elements. None reuse the code paths they check.
"""
import math

import numpy as np
import pytest

from dualspin.orbit import (EarthModel, KeplerianElements,
                            perifocal_to_inertial, state_from_elements,
                            transversal_velocity, two_body_acceleration,
                            orbital_rate)

EARTH = EarthModel()

# mpmath (50 digits) evaluations of mu/R^2 and sqrt(mu/a) at a = 8078.14 km.
ACC_AT_A0 = 6.1082249787261271e-3      # km/s^2
CIRC_SPEED_AT_A0 = 7.0244641453741278  # km/s


class TestEarthModel:
    def test_defaults_are_standard_geodetic_values(self):
        assert EARTH.mu == 398600.4418
        assert EARTH.r_eq == 6378.137
        assert EARTH.j2 == 1.08263e-3

    @pytest.mark.parametrize("kwargs", [
        {"mu": -1.0}, {"mu": 0.0}, {"r_eq": 0.0}, {"j2": -1e-4}, {"j2": 0.02},
    ])
    def test_rejects_invalid_constants(self, kwargs):
        with pytest.raises(ValueError):
            EarthModel(**kwargs)


class TestKeplerianElements:
    @pytest.mark.parametrize("kwargs", [
        {"a": -1.0, "e": 0.0}, {"a": 8078.14, "e": 1.0},
        {"a": 8078.14, "e": -0.1}, {"a": 8078.14, "e": 0.2, "i": -0.1},
        {"a": 8078.14, "e": 0.2, "i": 3.2},
    ])
    def test_rejects_invalid_elements(self, kwargs):
        with pytest.raises(ValueError):
            KeplerianElements(**kwargs)

    def test_from_degrees(self):
        el = KeplerianElements.from_degrees(8078.14, 0.2, 30.0, 45.0, 90.0, 180.0)
        assert el.i == pytest.approx(math.pi / 6)
        assert el.raan == pytest.approx(math.pi / 4)
        assert el.argp == pytest.approx(math.pi / 2)
        assert el.true_anomaly == pytest.approx(math.pi)


class TestPerifocalToInertial:
    def test_zero_angles_give_identity(self):
        el = KeplerianElements(a=8078.14, e=0.0)
        np.testing.assert_allclose(perifocal_to_inertial(el), np.eye(3),
                                   atol=1e-15)

    def test_orthonormal_for_random_elements(self):
        rng = np.random.default_rng(42)
        for _ in range(1000):
            i, raan, argp = rng.uniform(0, math.pi), *rng.uniform(0, 2 * math.pi, 2)
            el = KeplerianElements(8078.14, 0.1, i, raan, argp, 0.0)
            c = perifocal_to_inertial(el)
            np.testing.assert_allclose(c.T @ c, np.eye(3), atol=1e-12)
            assert np.linalg.det(c) == pytest.approx(1.0, abs=1e-12)

    def test_raan_90_is_rotation_about_z(self):
        # Direct trig evaluation of the nine elements at raan=90, i=omega=0.
        el = KeplerianElements.from_degrees(8078.14, 0.0, 0.0, 90.0, 0.0)
        expected = np.array([[0.0, -1.0, 0.0],
                             [1.0, 0.0, 0.0],
                             [0.0, 0.0, 1.0]])
        np.testing.assert_allclose(perifocal_to_inertial(el), expected,
                                   atol=1e-15)

    def test_elementwise_against_direct_trig(self):
        # Independent transcription of the nine element formulas.
        rng = np.random.default_rng(13)
        for _ in range(50):
            i, o, w = rng.uniform(0, math.pi), *rng.uniform(0, 2 * math.pi, 2)
            el = KeplerianElements(8078.14, 0.3, i, o, w, 0.0)
            c = perifocal_to_inertial(el)
            si, ci = math.sin(i), math.cos(i)
            sO, cO = math.sin(o), math.cos(o)
            sw, cw = math.sin(w), math.cos(w)
            expected = np.array([
                [cw * cO - sw * ci * sO, -sw * cO - cw * ci * sO, sO * si],
                [cw * sO + sw * ci * cO, -sw * sO + cw * ci * cO, -si * cO],
                [sw * si, cw * si, ci]])
            np.testing.assert_allclose(c, expected, atol=1e-15)


class TestStateFromElements:
    def test_circular_epoch_state(self):
        el = KeplerianElements(a=8078.14, e=0.0)
        st = state_from_elements(el, EARTH)
        np.testing.assert_allclose(st.position, [8078.14, 0.0, 0.0], atol=1e-9)
        assert st.speed == pytest.approx(CIRC_SPEED_AT_A0, rel=1e-12)
        np.testing.assert_allclose(st.velocity / st.speed, [0.0, 1.0, 0.0],
                                   atol=1e-15)

    def test_perigee_altitude_for_e02(self):
        el = KeplerianElements(a=8078.14, e=0.2)
        st = state_from_elements(el, EARTH)
        assert st.radius == pytest.approx(8078.14 * 0.8, rel=1e-12)
        assert st.radius - EARTH.r_eq == pytest.approx(84.375, abs=1e-9)

    def test_circular_speed_independent_of_anomaly(self):
        speeds = []
        for nu_deg in range(0, 360, 15):
            el = KeplerianElements.from_degrees(8078.14, 0.0,
                                                true_anomaly_deg=nu_deg)
            speeds.append(state_from_elements(el, EARTH).speed)
        assert max(speeds) - min(speeds) < 1e-12

    def test_energy_and_momentum_match_elements(self):
        # vis-viva and h = sqrt(mu*a*(1-e^2)) pin the state for any anomaly.
        rng = np.random.default_rng(7)
        for _ in range(200):
            el = KeplerianElements(
                a=rng.uniform(7000, 45000), e=rng.uniform(0, 0.8),
                i=rng.uniform(0, math.pi), raan=rng.uniform(0, 2 * math.pi),
                argp=rng.uniform(0, 2 * math.pi),
                true_anomaly=rng.uniform(0, 2 * math.pi))
            st = state_from_elements(el, EARTH)
            energy = st.speed ** 2 / 2 - EARTH.mu / st.radius
            assert energy == pytest.approx(-EARTH.mu / (2 * el.a), rel=1e-10)
            h = np.cross(st.position, st.velocity)
            h_expected = math.sqrt(EARTH.mu * el.a * (1 - el.e ** 2))
            assert np.linalg.norm(h) == pytest.approx(h_expected, rel=1e-10)
            # Prograde convention: momentum along +Z for equatorial orbits.
            if el.i < math.pi / 2:
                assert h[2] > 0

    def test_rejects_orbit_inside_earth(self):
        with pytest.raises(ValueError):
            state_from_elements(KeplerianElements(a=6000.0, e=0.0), EARTH)


class TestTwoBodyAcceleration:
    def test_magnitude_and_direction_at_a0(self):
        acc = two_body_acceleration(np.array([8078.14, 0.0, 0.0]), EARTH)
        assert np.linalg.norm(acc) == pytest.approx(ACC_AT_A0, rel=1e-12)
        assert acc[0] < 0 and acc[1] == 0 and acc[2] == 0

    def test_central_force_symmetry(self):
        r = np.array([1234.5, -6000.0, 3456.7])
        np.testing.assert_allclose(two_body_acceleration(-r, EARTH),
                                   -two_body_acceleration(r, EARTH), rtol=1e-15)

    def test_collinearity(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            r = rng.uniform(-2e4, 2e4, 3)
            acc = two_body_acceleration(r, EARTH)
            assert np.linalg.norm(np.cross(r, acc)) < 1e-12 * np.linalg.norm(r)

    def test_zero_radius_is_domain_error(self):
        with pytest.raises(ValueError):
            two_body_acceleration(np.zeros(3), EARTH)


class TestTransversalVelocity:
    def test_circular_equals_speed_everywhere(self):
        for nu_deg in range(0, 360, 30):
            el = KeplerianElements.from_degrees(8078.14, 0.0,
                                                true_anomaly_deg=nu_deg)
            st = state_from_elements(el, EARTH)
            assert transversal_velocity(st, el) == pytest.approx(st.speed,
                                                                 rel=1e-12)

    def test_perigee_is_purely_transversal(self):
        el = KeplerianElements(a=8078.14, e=0.2)
        st = state_from_elements(el, EARTH)
        assert transversal_velocity(st, el) == pytest.approx(st.speed, rel=1e-12)

    def test_matches_angular_momentum_oracle_at_90deg(self):
        el = KeplerianElements.from_degrees(8078.14, 0.2, true_anomaly_deg=90.0)
        st = state_from_elements(el, EARTH)
        h_over_r = np.linalg.norm(np.cross(st.position, st.velocity)) / st.radius
        assert abs(transversal_velocity(st, el) - h_over_r) < 1e-9 * h_over_r

    def test_matches_oracle_for_random_anomalies(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            el = KeplerianElements(a=rng.uniform(7000, 3e4),
                                   e=rng.uniform(0, 0.7),
                                   i=rng.uniform(0, math.pi),
                                   true_anomaly=rng.uniform(0, 2 * math.pi))
            st = state_from_elements(el, EARTH)
            oracle = np.linalg.norm(np.cross(st.position, st.velocity)) / st.radius
            assert abs(transversal_velocity(st, el) - oracle) < 1e-9 * oracle

    def test_rejects_radius_beyond_ellipse(self):
        el = KeplerianElements(a=8078.14, e=0.2)
        st = state_from_elements(el, EARTH)
        bad = KeplerianElements(a=st.radius / 2.5, e=0.2)
        with pytest.raises(ValueError):
            transversal_velocity(st, bad)


class TestOrbitalRate:
    def test_delta_n_zero_at_start(self):
        el = KeplerianElements(a=8078.14, e=0.2)
        st = state_from_elements(el, EARTH)
        n, dn = orbital_rate(st, el)
        assert dn == 0.0
        assert n < 0  # n = -V_theta/R

    def test_circular_rate_constant(self):
        el0 = KeplerianElements(a=8078.14, e=0.0)
        n0, _ = orbital_rate(state_from_elements(el0, EARTH), el0)
        for nu_deg in (45, 137, 301):
            el = KeplerianElements.from_degrees(8078.14, 0.0,
                                                true_anomaly_deg=nu_deg)
            n, dn = orbital_rate(state_from_elements(el, EARTH), el, n0)
            assert dn == pytest.approx(0.0, abs=1e-18)

    def test_perigee_apogee_rate_ratio(self):
        # h conservation: |n_perigee| / |n_apogee| = ((1+e)/(1-e))^2.
        e = 0.2
        el_p = KeplerianElements(a=8078.14, e=e, true_anomaly=0.0)
        el_a = KeplerianElements(a=8078.14, e=e, true_anomaly=math.pi)
        n_p, _ = orbital_rate(state_from_elements(el_p, EARTH), el_p)
        n_a, _ = orbital_rate(state_from_elements(el_a, EARTH), el_a)
        assert abs(n_p) / abs(n_a) == pytest.approx(((1 + e) / (1 - e)) ** 2,
                                                    rel=1e-12)
