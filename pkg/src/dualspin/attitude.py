"""Dual-spin rigid-body dynamics and the 6-state attitude state space.

The satellite is a despun platform with a momentum rotor spinning about the
body Y axis; the despin motor torque and its back-EMF/viscous damping act in
the pitch (q) equation, and the rotor momentum I_S*Omega_R0 gyroscopically
couples roll (p) and yaw (r). Gravity-gradient torque enters through the
linearized coefficients G_X, G_Y, G_Z.

Governing equations (X, Y, Z body axes), with h = I_S*Omega_R0 and
D = N*K_V/R_dc + c:

    (I_X+I_T)*p_dot - h*r - G_X*phi_s = 0
    I_Y*q_dot + I_YZ*r_dot + D*(I_Y/I_S+1)*q + D*(I_YZ/I_S)*r
        - G_Y*theta_s + (N/R_dc)*de = 0
    I_YZ*q_dot + (I_Z+I_T)*r_dot + h*p - G_Z*theta_s = 0

plus the stability-axis kinematics

    phi_s_dot = p + dn*psi_s,  theta_s_dot = q + dn,  psi_s_dot = r - dn*phi_s.

build_state_space() inverts the coupled q/r pair exactly (the 2x2 mass
matrix has determinant Delta_I = I_Y*I_Z + I_Y*I_T - I_YZ^2), so the
assembled rows back-substitute into the equations above to machine
precision. Two assembly modes exist: builder mode computes every entry from
SatelliteParams; direct mode loads published numeric constants (the only
ground truth for the study vehicle, whose inertias are proprietary) while
the gravity-gradient and dn entries are still refreshed from the orbit.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .gravity import GGCoefficients

SMALL_ANGLE_LIMIT_RAD = 0.35  # ~20 deg, beyond which the linear model is untrusted

# State vector layout: [p, q, r, phi_s, theta_s, psi_s]; inputs [de, dn].
N_STATES = 6
N_INPUTS = 2

# (row, col) of A entries refreshed every step, plus the B-column-2 coupling.
TIME_VARYING_ENTRIES = ((0, 3), (1, 4), (2, 4), (3, 5), (5, 3))


def delta_I(params: "SatelliteParams") -> float:
    """Determinant of the coupled q/r mass matrix (kg^2*m^4).

    Delta_I = I_Y*I_Z + I_Y*I_T - I_YZ^2; must be positive for the
    dynamics inversion to exist.
    """
    return (params.i_y * params.i_z + params.i_y * params.i_t
            - params.i_yz ** 2)


@dataclass(frozen=True)
class SatelliteParams:
    """Platform/rotor inertias and despin-motor constants.

    Attributes:
        i_x, i_y, i_z: Platform moments of inertia (kg*m^2).
        i_yz: Product of inertia from the antenna reflector imbalance (kg*m^2).
        i_s: Rotor spin-axis inertia (kg*m^2).
        i_t: Rotor transverse inertia (kg*m^2).
        omega_r0: Nominal rotor spin rate (rad/s).
        n_gear: Motor torque/gear constant.
        k_v: Back-EMF constant (V*s/rad).
        r_dc: Armature resistance (ohm).
        c_visc: Viscous damping (N*m*s/rad).
    """
    i_x: float
    i_y: float
    i_z: float
    i_yz: float
    i_s: float
    i_t: float
    omega_r0: float
    n_gear: float = 1.0
    k_v: float = 0.5
    r_dc: float = 2.0
    c_visc: float = 0.01

    def __post_init__(self):
        for name in ("i_x", "i_y", "i_z", "i_s", "i_t"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if delta_I(self) <= 0.0:
            raise ValueError(
                f"Delta_I = {delta_I(self)} must be positive; the q/r "
                f"dynamics inversion is undefined")
        composite = {"X": self.i_x + self.i_t,
                     "Y": self.i_y + self.i_s,
                     "Z": self.i_z + self.i_t}
        if composite["Y"] >= min(composite["X"], composite["Z"]):
            warnings.warn(
                f"rotor spin axis is not the minimum composite inertia axis "
                f"(X={composite['X']}, Y={composite['Y']}, Z={composite['Z']}); "
                f"the vehicle is not prolate", stacklevel=2)


# Synthetic parameter set for builder-mode tests and demos. Not flight data
# for any real vehicle, and deliberately not prolate (the warning is muted
# here; tests cover it explicitly).
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    SYNTHETIC_PARAMS = SatelliteParams(
        i_x=900.0, i_y=1000.0, i_z=400.0, i_yz=120.0,
        i_s=300.0, i_t=160.0, omega_r0=10.0,
        n_gear=1.0, k_v=0.5, r_dc=2.0, c_visc=0.01)


@dataclass(frozen=True)
class DirectMatrices:
    """Published numeric state-space constants (direct assembly mode).

    Defaults are the study vehicle's values. The gravity-gradient entries
    A14/A25/A35 were printed only symbolically (they are time-varying), so
    they are not part of this set; see derive_gg_ratios().
    """
    a13: float = 3.7113
    a21: float = 0.49773
    a22: float = -9.7138e-4
    a23: float = -3.4402e-5
    a31: float = -4.0326
    a32: float = 3.3636e-5
    a33: float = -1.1912e-6
    b21: float = -5.1218e-4
    b31: float = 1.7735e-5

    def as_dict(self) -> dict[str, float]:
        return {k: getattr(self, k) for k in
                ("a13", "a21", "a22", "a23", "a31", "a32", "a33", "b21", "b31")}


def derive_gg_ratios(matrices: DirectMatrices = DirectMatrices(),
                     i_t_over_i_y: float = 1.5) -> tuple[float, float, float]:
    """Gravity-gradient entry shapes (A14, A25, A35 per unit g_mu).

    The published constants pin every inertia ratio except the split of
    I_Z+I_T into its two terms: with I_Y normalized to 1,

        I_YZ      = -a21/a31
        I_Z + I_T = I_YZ * (-a22/a32)
        I_S       = I_YZ * |a22/a23| - 1
        I_X + I_T = (I_S*Omega_R0) / a13,  I_S*Omega_R0 = -a31*Delta_I

    which comes out prolate about the rotor axis with a ~55 rpm spin, so the
    reconstruction is taken at face value. A25 and A35 depend only on the
    pinned combinations; A14 needs I_Z alone, so the rotor transverse share
    i_t_over_i_y remains a modeling choice.

    Returns:
        (a14_hat, a25_hat, a35_hat), dimensionless; multiply by g_mu (1/s^2)
        for the state-space entries.
    """
    i_yz = -matrices.a21 / matrices.a31
    q_zt = i_yz * (-matrices.a22 / matrices.a32)       # I_Z + I_T
    delta = q_zt - i_yz ** 2                           # I_Y = 1
    h_rotor = -matrices.a31 * delta
    p_xt = h_rotor / matrices.a13                      # I_X + I_T
    i_z = q_zt - i_t_over_i_y
    i_x = p_xt - i_t_over_i_y

    a14_hat = (i_z - 1.0) / p_xt
    a25_hat = (q_zt * (i_z - i_x) - i_yz ** 2) / delta
    a35_hat = (i_yz - i_yz * (i_z - i_x)) / delta
    return a14_hat, a25_hat, a35_hat


@dataclass
class AttitudeState:
    """Body rates and stability-axis Euler deviations."""
    p: float = 0.0
    q: float = 0.0
    r: float = 0.0
    phi_s: float = 0.0
    theta_s: float = 0.0
    psi_s: float = 0.0

    def as_vector(self) -> np.ndarray:
        return np.array([self.p, self.q, self.r,
                         self.phi_s, self.theta_s, self.psi_s])

    @classmethod
    def from_vector(cls, x: np.ndarray) -> "AttitudeState":
        return cls(*(float(v) for v in x))

    def exceeds_small_angle(self, limit: float = SMALL_ANGLE_LIMIT_RAD) -> bool:
        """True when any Euler deviation leaves the trusted linear regime."""
        return max(abs(self.phi_s), abs(self.theta_s), abs(self.psi_s)) > limit


def _wrap_angle(x: float) -> float:
    """Wrap to (-pi, pi]."""
    wrapped = math.fmod(x + math.pi, 2.0 * math.pi)
    if wrapped <= 0.0:
        wrapped += 2.0 * math.pi
    return wrapped - math.pi


@dataclass(frozen=True)
class EulerInertial:
    """Euler angles of body axes in inertial axes, wrapped to (-pi, pi]."""
    phi: float
    theta: float
    psi: float

    def __post_init__(self):
        object.__setattr__(self, "phi", _wrap_angle(self.phi))
        object.__setattr__(self, "theta", _wrap_angle(self.theta))
        object.__setattr__(self, "psi", _wrap_angle(self.psi))


@dataclass(frozen=True)
class StateSpace:
    """Immutable snapshot of the 6x6/6x2 attitude state space.

    Time variation is expressed by assembling a new snapshot per step; the
    entries listed in TIME_VARYING_ENTRIES (plus the dn input column) are
    the only ones that change between snapshots of the same vehicle.
    """
    a: np.ndarray  # (6, 6)
    b: np.ndarray  # (6, 2)

    def __post_init__(self):
        self.a.setflags(write=False)
        self.b.setflags(write=False)

    @property
    def time_varying_mask(self) -> np.ndarray:
        mask = np.zeros((N_STATES, N_STATES), dtype=bool)
        for row, col in TIME_VARYING_ENTRIES:
            mask[row, col] = True
        return mask


def _kinematics_rows(a: np.ndarray, b: np.ndarray, delta_n: float) -> None:
    a[3, 0] = 1.0
    a[3, 5] = delta_n
    a[4, 1] = 1.0
    a[5, 2] = 1.0
    a[5, 3] = -delta_n
    b[4, 1] = 1.0


def build_state_space(params: SatelliteParams,
                      gg: GGCoefficients | None,
                      delta_n: float = 0.0) -> StateSpace:
    """Assemble A and B from physical parameters (builder mode).

    The dynamic rows are the exact inversion of the governing equations in
    the module docstring; gg=None (or gravity gradient switched off) zeroes
    A14/A25/A35. Entry ratios A21/A31 = -I_YZ/I_Y and
    B21/B31 = -(I_Z+I_T)/I_YZ hold for every valid parameter set.
    """
    p_xt = params.i_x + params.i_t
    q_zt = params.i_z + params.i_t
    delta = delta_I(params)
    if delta <= 0.0 or p_xt <= 0.0:
        raise ValueError("parameter set does not admit a state-space inversion")

    h = params.i_s * params.omega_r0
    d_motor = params.n_gear * params.k_v / params.r_dc + params.c_visc
    d1 = d_motor * (params.i_y / params.i_s + 1.0)
    d2 = d_motor * (params.i_yz / params.i_s)
    beta = params.n_gear / params.r_dc

    g_x = gg.g_x if gg is not None else 0.0
    g_y = gg.g_y if gg is not None else 0.0
    g_z = gg.g_z if gg is not None else 0.0

    a = np.zeros((N_STATES, N_STATES))
    b = np.zeros((N_STATES, N_INPUTS))

    a[0, 2] = h / p_xt
    a[0, 3] = g_x / p_xt

    a[1, 0] = params.i_yz * h / delta
    a[1, 1] = -q_zt * d1 / delta
    a[1, 2] = -q_zt * d2 / delta
    a[1, 4] = (q_zt * g_y - params.i_yz * g_z) / delta
    b[1, 0] = -q_zt * beta / delta

    a[2, 0] = -params.i_y * h / delta
    a[2, 1] = params.i_yz * d1 / delta
    a[2, 2] = params.i_yz * d2 / delta
    a[2, 4] = (params.i_y * g_z - params.i_yz * g_y) / delta
    b[2, 0] = params.i_yz * beta / delta

    _kinematics_rows(a, b, delta_n)
    return StateSpace(a, b)


def direct_state_space(matrices: DirectMatrices,
                       gg_entries: tuple[float, float, float] = (0.0, 0.0, 0.0),
                       delta_n: float = 0.0) -> StateSpace:
    """Assemble A and B from published constants (direct mode).

    The nine printed constants are loaded verbatim; the gravity-gradient
    entries (A14, A25, A35) and dn come from the orbit each step.
    """
    a = np.zeros((N_STATES, N_STATES))
    b = np.zeros((N_STATES, N_INPUTS))
    a[0, 2] = matrices.a13
    a[1, 0] = matrices.a21
    a[1, 1] = matrices.a22
    a[1, 2] = matrices.a23
    a[2, 0] = matrices.a31
    a[2, 1] = matrices.a32
    a[2, 2] = matrices.a33
    b[1, 0] = matrices.b21
    b[2, 0] = matrices.b31

    a[0, 3], a[1, 4], a[2, 4] = gg_entries
    _kinematics_rows(a, b, delta_n)
    return StateSpace(a, b)


def dynamics_rhs(x: np.ndarray, u: tuple[float, float],
                 ss: StateSpace) -> np.ndarray:
    """State derivative x_dot = A*x + B*u for u = (de, dn)."""
    return ss.a @ x + ss.b @ np.asarray(u, dtype=float)


def kinematics_inertial(p: float, q: float, r: float, phi: float, psi: float,
                        n: float) -> tuple[float, float, float]:
    """Approximate Euler-angle rates of body axes in inertial axes.

    phi_dot = p + n*psi, theta_dot = q + n, psi_dot = r - n*phi, with n the
    orbital angular rate. Same structure as the stability-axis kinematics
    with n in place of dn.
    """
    return p + n * psi, q + n, r - n * phi


def kinematics_stability(p: float, q: float, r: float, phi_s: float,
                         psi_s: float, delta_n: float) -> tuple[float, float, float]:
    """Stability-axis Euler rates; the inertial relations with n -> dn."""
    return kinematics_inertial(p, q, r, phi_s, psi_s, delta_n)


def nutation_frequency(ss: StateSpace) -> float | None:
    """Roll/yaw gyroscopic coupling frequency sqrt(-A13*A31) in rad/s.

    Returns None when A13*A31 >= 0 (no oscillatory coupling, e.g. a
    non-spinning rotor).
    """
    product = float(ss.a[0, 2] * ss.a[2, 0])
    if product >= 0.0:
        return None
    return math.sqrt(-product)
