"""Keplerian orbit geometry and two-body propagation quantities.

Internal units are kilometers and seconds; angles are radians. Torque-side
code converts to SI at the module boundary so inertia products never carry
1e9 scale factors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Standard geodetic values (GRS80/WGS84 class). Overridable via EarthModel.
MU_EARTH_KM3_S2 = 398600.4418
R_EARTH_EQ_KM = 6378.137
J2_EARTH = 1.08263e-3


@dataclass(frozen=True)
class EarthModel:
    """Central-body constants for gravity and torque models.

    Attributes:
        mu: Gravitational parameter (km^3/s^2).
        r_eq: Equatorial radius (km).
        j2: Second zonal harmonic (dimensionless). Zero disables oblateness.
    """
    mu: float = MU_EARTH_KM3_S2
    r_eq: float = R_EARTH_EQ_KM
    j2: float = J2_EARTH

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if self.r_eq <= 0:
            raise ValueError(f"r_eq must be positive, got {self.r_eq}")
        if not 0.0 <= self.j2 < 0.01:
            raise ValueError(f"j2 out of range [0, 0.01): {self.j2}")


@dataclass(frozen=True)
class KeplerianElements:
    """Classical orbital elements, epoch state parameterized by true anomaly.

    Attributes:
        a: Semimajor axis (km).
        e: Eccentricity, closed orbits only (0 <= e < 1).
        i: Inclination (rad), 0 <= i <= pi.
        raan: Right ascension of ascending node (rad).
        argp: Argument of perigee (rad).
        true_anomaly: True anomaly at epoch (rad).
    """
    a: float
    e: float
    i: float = 0.0
    raan: float = 0.0
    argp: float = 0.0
    true_anomaly: float = 0.0

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"semimajor axis must be positive, got {self.a}")
        if not 0.0 <= self.e < 1.0:
            raise ValueError(f"eccentricity must be in [0, 1), got {self.e}")
        if not 0.0 <= self.i <= math.pi:
            raise ValueError(f"inclination must be in [0, pi], got {self.i}")

    @classmethod
    def from_degrees(cls, a_km, e, i_deg=0.0, raan_deg=0.0, argp_deg=0.0,
                     true_anomaly_deg=0.0) -> "KeplerianElements":
        """Build elements with the angular fields given in degrees."""
        return cls(a_km, e, math.radians(i_deg), math.radians(raan_deg),
                   math.radians(argp_deg), math.radians(true_anomaly_deg))

    def period(self, earth: EarthModel) -> float:
        """Orbital period 2*pi*sqrt(a^3/mu) in seconds."""
        return 2.0 * math.pi * math.sqrt(self.a ** 3 / earth.mu)


@dataclass(frozen=True)
class InertialState:
    """Position/velocity in the geocentric non-rotating equatorial frame."""
    position: np.ndarray  # (3,) km
    velocity: np.ndarray  # (3,) km/s

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.position))

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))


def perifocal_to_inertial(elements: KeplerianElements) -> np.ndarray:
    """Rotation matrix from the perifocal (orbit-plane) frame to inertial axes.

    Columns follow the classical 3-1-3 composition over (raan, i, argp);
    the matrix is orthonormal with determinant +1.
    """
    co, so = math.cos(elements.argp), math.sin(elements.argp)
    cO, sO = math.cos(elements.raan), math.sin(elements.raan)
    ci, si = math.cos(elements.i), math.sin(elements.i)
    return np.array([
        [co * cO - so * ci * sO, -so * cO - co * ci * sO, sO * si],
        [co * sO + so * ci * cO, -so * sO + co * ci * cO, -si * cO],
        [so * si, co * si, ci],
    ])


def state_from_elements(elements: KeplerianElements,
                        earth: EarthModel) -> InertialState:
    """Inertial position and velocity at the epoch true anomaly.

    Position is the conic radius a(1-e^2)/(1+e*cos(nu)) in the orbit plane
    rotated to inertial axes. Velocity combines the radial component
    sqrt(mu/p)*e*sin(nu) and transversal component sqrt(mu/p)*(1+e*cos(nu)),
    rotated the same way.

    Raises:
        ValueError: if e >= 1 or the semimajor axis sits inside the Earth.
    """
    if elements.a <= earth.r_eq:
        raise ValueError(
            f"semimajor axis {elements.a} km inside Earth radius {earth.r_eq} km")
    nu = elements.true_anomaly
    p = elements.a * (1.0 - elements.e ** 2)
    r = p / (1.0 + elements.e * math.cos(nu))
    cn, sn = math.cos(nu), math.sin(nu)

    pos_pf = np.array([r * cn, r * sn, 0.0])
    v_radial = math.sqrt(earth.mu / p) * elements.e * sn
    v_transversal = math.sqrt(earth.mu / p) * (1.0 + elements.e * cn)
    # Rotate the (radial, transversal) pair into the perifocal frame.
    vel_pf = np.array([v_radial * cn - v_transversal * sn,
                       v_radial * sn + v_transversal * cn,
                       0.0])

    rot = perifocal_to_inertial(elements)
    return InertialState(rot @ pos_pf, rot @ vel_pf)


def two_body_acceleration(position: np.ndarray, earth: EarthModel) -> np.ndarray:
    """Point-mass gravitational acceleration -mu/R^3 * R (km/s^2).

    Raises:
        ValueError: at zero radius (field singular).
    """
    r = float(np.linalg.norm(position))
    if r == 0.0:
        raise ValueError("two-body acceleration undefined at zero radius")
    return (-earth.mu / r ** 3) * np.asarray(position, dtype=float)


def transversal_velocity(state: InertialState,
                         elements: KeplerianElements) -> float:
    """Along-track velocity component perpendicular to the radius vector.

    V_theta = V * sqrt(a^2*(1-e^2) / (R*(2a-R))). Equals |R x V| / R for any
    state consistent with the elements, which tests use as the independent
    angular-momentum cross-check.

    Raises:
        ValueError: if R >= 2a (state not on an ellipse with these elements).
    """
    r = state.radius
    denom = r * (2.0 * elements.a - r)
    if denom <= 0.0:
        raise ValueError(
            f"radius {r} km not on an ellipse with a={elements.a} km")
    return state.speed * math.sqrt(
        elements.a ** 2 * (1.0 - elements.e ** 2) / denom)


def orbital_rate(state: InertialState, elements: KeplerianElements,
                 n0: float | None = None) -> tuple[float, float]:
    """Instantaneous orbital angular rate n = -V_theta/R and its deviation.

    Args:
        state: Current inertial state.
        elements: Orbit elements the state belongs to.
        n0: Rate at simulation start. None means "this sample is the start",
            which makes delta_n zero by definition.

    Returns:
        (n, delta_n) with delta_n = n - n0, both in rad/s.
    """
    n = -transversal_velocity(state, elements) / state.radius
    if n0 is None:
        return n, 0.0
    return n, n - n0
