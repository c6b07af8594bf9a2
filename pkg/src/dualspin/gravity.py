"""J2-perturbed gravity field and gravity-gradient torque models.

Two routes to the torque live here and are kept deliberately independent:
the production path is the linearized coefficient model (gmu_coefficient,
gg_coefficients, linearized_gg_moment); the validation path is a per-element
torque sum over a small point-mass body (brute_force_gg_torque). Tests
compare the two and neither may be expressed through the other.

The gravity field itself is in km/s^2 over km positions; torques come out
in N*m over kg*m^2 inertias. g_mu is 1/s^2 and therefore length-unit free,
but its individual terms are not, so every term is evaluated in km before
summation (see tests for the unit audit).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .orbit import EarthModel

KM_TO_M = 1000.0


@dataclass(frozen=True)
class GGCoefficients:
    """Linearized gravity-gradient torque coefficients.

    Attributes:
        g_x, g_y, g_z: Torque per radian of attitude deviation (N*m/rad).
        g_mu: Gravity-gradient strength (1/s^2); positive above the surface
            for any J2 in its valid range.
    """
    g_x: float
    g_y: float
    g_z: float
    g_mu: float

    def __post_init__(self):
        if self.g_mu <= 0.0:
            raise ValueError(f"g_mu must be positive, got {self.g_mu}")


@dataclass(frozen=True)
class MassElement:
    """Point mass of a discretized rigid body, position in body axes (m)."""
    r: np.ndarray  # (3,) m
    dm: float      # kg

    def __post_init__(self):
        if self.dm <= 0.0:
            raise ValueError(f"element mass must be positive, got {self.dm}")


def gravity_vector_j2(position: np.ndarray, earth: EarthModel) -> np.ndarray:
    """Gravity vector at an inertial point, J2 oblateness included.

    g = -(mu/R^3) * [1 - (3/2)*J2*(Re/R)^2*(5*Rz^2/R^2 - 1)] * R

    where Rz is the component of the position along the Earth's polar axis.
    Returns km/s^2 for a position in km.

    Raises:
        ValueError: at zero radius.
    """
    pos = np.asarray(position, dtype=float)
    r = float(np.linalg.norm(pos))
    if r == 0.0:
        raise ValueError("gravity undefined at zero radius")
    rz = pos[2]
    bracket = 1.0 - 1.5 * earth.j2 * (earth.r_eq / r) ** 2 * (
        5.0 * rz ** 2 / r ** 2 - 1.0)
    return (-earth.mu / r ** 3) * bracket * pos


def gmu_coefficient(r_km: float, r_z1_km: float, earth: EarthModel) -> float:
    """Gravity-gradient strength g_mu in 1/s^2.

    g_mu = 3*mu/R^3 + (105/2)*(mu/R^7)*J2*Re^2*Rz1^2
                    - (15/2)*(mu/R^5)*J2*Re^2

    Rz1 is the satellite's polar-axis coordinate; inclination enters the
    torque model only through it, eccentricity only through R.
    """
    if r_km <= 0.0:
        raise ValueError(f"radius must be positive, got {r_km}")
    mu = earth.mu
    j2re2 = earth.j2 * earth.r_eq ** 2
    return (3.0 * mu / r_km ** 3
            + 52.5 * (mu / r_km ** 7) * j2re2 * r_z1_km ** 2
            - 7.5 * (mu / r_km ** 5) * j2re2)


def gg_coefficients(g_mu: float, i_x: float, i_y: float, i_z: float,
                    i_yz: float) -> GGCoefficients:
    """Torque-per-angle coefficients from g_mu and the body inertias (SI).

    G_X = g_mu*(I_Z - I_Y), G_Y = g_mu*(I_Z - I_X), G_Z = g_mu*I_YZ.
    """
    return GGCoefficients(g_x=g_mu * (i_z - i_y),
                          g_y=g_mu * (i_z - i_x),
                          g_z=g_mu * i_yz,
                          g_mu=g_mu)


def linearized_gg_moment(coeffs: GGCoefficients, phi_s: float,
                         theta_s: float) -> np.ndarray:
    """Small-angle gravity-gradient torque (N*m).

    (M_GX, M_GY, M_GZ) = (G_X*phi_s, G_Y*theta_s, G_Z*theta_s). Validity
    degrades as angle^2; the caller owns the small-angle regime.
    """
    return np.array([coeffs.g_x * phi_s,
                     coeffs.g_y * theta_s,
                     coeffs.g_z * theta_s])


def stability_to_body(phi_s: float, theta_s: float, psi_s: float) -> np.ndarray:
    """Rotation from stability (local-horizon) axes to body axes, 3-2-1 order.

    Yaw psi about Z, then pitch theta about Y, then roll phi about X. With
    psi_s = 0 the nadir column reproduces the direction cosines
    (R*sin(theta), -R*sin(phi)cos(theta), -R*cos(phi)cos(theta)).
    """
    cf, sf = math.cos(phi_s), math.sin(phi_s)
    ct, st = math.cos(theta_s), math.sin(theta_s)
    cp, sp = math.cos(psi_s), math.sin(psi_s)
    r1 = np.array([[1.0, 0.0, 0.0], [0.0, cf, sf], [0.0, -sf, cf]])
    r2 = np.array([[ct, 0.0, -st], [0.0, 1.0, 0.0], [st, 0.0, ct]])
    r3 = np.array([[cp, sp, 0.0], [-sp, cp, 0.0], [0.0, 0.0, 1.0]])
    return r1 @ r2 @ r3


def local_horizon_frame(position: np.ndarray, velocity: np.ndarray) -> np.ndarray:
    """Stability-axes basis at an orbit point, as columns in inertial axes.

    Y along the orbit normal, Z toward nadir, X completing the right-handed
    set. The returned matrix maps stability-frame vectors to inertial.
    """
    pos = np.asarray(position, dtype=float)
    vel = np.asarray(velocity, dtype=float)
    h = np.cross(pos, vel)
    y_s = h / np.linalg.norm(h)
    z_s = -pos / np.linalg.norm(pos)
    x_s = np.cross(y_s, z_s)
    return np.column_stack([x_s, y_s, z_s])


def recenter(elements: list[MassElement]) -> list[MassElement]:
    """Shift an element set so its summed first moment is exactly zero."""
    total = sum(e.dm for e in elements)
    cg = sum(e.dm * e.r for e in elements) / total
    return [MassElement(e.r - cg, e.dm) for e in elements]


def box_dumbbell(i_x: float, i_y: float, i_z: float, i_yz: float = 0.0,
                 arm_m: float = 25.0) -> list[MassElement]:
    """Smallest point-mass body realizing target inertias I_X, I_Y, I_Z, I_YZ.

    Six masses on the body axes at +/-arm_m produce the diagonal inertias;
    an optional antisymmetric pair in the Y-Z plane produces the product of
    inertia. All masses must come out positive, which restricts the targets
    to physically realizable combinations (triangle inequalities).

    Args:
        i_x, i_y, i_z: Target principal-plane moments (kg*m^2).
        i_yz: Target product of inertia sum(m*y*z) in kg*m^2, the convention
            the torque coefficients use; the inertia tensor off-diagonal is
            its negative.
        arm_m: Lever arm of the point masses (m). Larger arms reduce the
            cancellation noise of the per-element field differencing; keep
            well below the orbit radius so the quadrupole still dominates.

    Returns:
        List of 6 or 8 elements with zero first moment by construction.
    """
    a2 = arm_m ** 2
    elements: list[MassElement] = []

    ix, iy, iz = i_x, i_y, i_z
    if i_yz != 0.0:
        # Pair at (0, d, d) and (0, -d, -d) gives sum(m*y*z) = +2*m*d^2;
        # mirror across the Y axis for the negative sign.
        d = arm_m
        m_pair = abs(i_yz) / (2.0 * d ** 2)
        sgn = 1.0 if i_yz > 0 else -1.0
        elements.append(MassElement(np.array([0.0, d, sgn * d]), m_pair))
        elements.append(MassElement(np.array([0.0, -d, -sgn * d]), m_pair))
        ix -= 4.0 * m_pair * d ** 2
        iy -= 2.0 * m_pair * d ** 2
        iz -= 2.0 * m_pair * d ** 2

    # 2*m_y*a2 + 2*m_z*a2 = ix, and cyclic. Solve the 3x3 system.
    m_x = (-ix + iy + iz) / (4.0 * a2)
    m_y = (ix - iy + iz) / (4.0 * a2)
    m_z = (ix + iy - iz) / (4.0 * a2)
    if min(m_x, m_y, m_z) <= 0.0:
        raise ValueError(
            f"inertia targets not realizable with positive masses: "
            f"m_x={m_x}, m_y={m_y}, m_z={m_z}")
    for axis, m in ((0, m_x), (1, m_y), (2, m_z)):
        for sign in (1.0, -1.0):
            r = np.zeros(3)
            r[axis] = sign * arm_m
            elements.append(MassElement(r, m))
    return elements


def inertia_of(elements: list[MassElement]) -> np.ndarray:
    """3x3 inertia tensor of a point-mass set about the origin (kg*m^2)."""
    tensor = np.zeros((3, 3))
    for e in elements:
        r2 = float(e.r @ e.r)
        tensor += e.dm * (r2 * np.eye(3) - np.outer(e.r, e.r))
    return tensor


def brute_force_gg_torque(elements: list[MassElement],
                          position_km: np.ndarray,
                          velocity_km_s: np.ndarray,
                          attitude: tuple[float, float, float],
                          earth: EarthModel) -> np.ndarray:
    """Gravity-gradient torque by exact per-element field evaluation (N*m).

    Sums r x (g(R+r) - g(R)) dm over the body in body axes, with each
    element's field evaluated at its true inertial position (so the J2
    polar-axis dependence is exact, no expansion in |r|/R). Subtracting the
    center-of-mass field g(R) drops the common-mode term that is identically
    zero for a centered body but numerically dominant; the elements are
    re-centered first so the identity holds.

    Args:
        elements: Point-mass body, positions in body axes (m).
        position_km: Satellite position, inertial (km).
        velocity_km_s: Satellite velocity, inertial (km/s); orients the
            local-horizon frame.
        attitude: (phi_s, theta_s, psi_s) of body axes in stability axes (rad).
        earth: Field constants.

    Returns:
        Torque about the center of mass in body axes (N*m).

    Raises:
        ValueError: if any element lands at or below the Earth's center.
    """
    centered = recenter(elements)
    pos = np.asarray(position_km, dtype=float)

    c_is = local_horizon_frame(pos, velocity_km_s)          # stability -> inertial
    c_bs = stability_to_body(*attitude)                      # stability -> body
    c_ib = c_is @ c_bs.T                                     # body -> inertial

    g_cg = gravity_vector_j2(pos, earth)
    torque = np.zeros(3)
    for e in centered:
        r_inertial_km = pos + (c_ib @ e.r) / KM_TO_M
        if np.linalg.norm(r_inertial_km) <= 0.0:
            raise ValueError("mass element at or below Earth center")
        dg_inertial = gravity_vector_j2(r_inertial_km, earth) - g_cg
        dg_body = c_ib.T @ dg_inertial * KM_TO_M             # km/s^2 -> m/s^2
        torque += e.dm * np.cross(e.r, dg_body)
    return torque
