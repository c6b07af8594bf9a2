"""Prolate dual-spin satellite dynamics in an inclined elliptical orbit.

A batch simulator: two-body orbit propagation, J2-perturbed gravity-gradient
torques, linearized dual-spin attitude dynamics with time-varying
coefficients, and open-loop stability analysis.
"""
from .orbit import (EarthModel, InertialState, KeplerianElements,
                    perifocal_to_inertial, state_from_elements,
                    transversal_velocity, two_body_acceleration, orbital_rate)
from .gravity import (GGCoefficients, MassElement, box_dumbbell,
                      brute_force_gg_torque, gg_coefficients, gmu_coefficient,
                      gravity_vector_j2, linearized_gg_moment)
from .attitude import (AttitudeState, DirectMatrices, EulerInertial,
                       SatelliteParams, StateSpace, SYNTHETIC_PARAMS,
                       build_state_space, delta_I, derive_gg_ratios,
                       direct_state_space, dynamics_rhs, kinematics_inertial,
                       kinematics_stability, nutation_frequency)
from .engine import (DivergenceReport, ImpactError, InputSignal,
                     OrbitTrajectory, Scenario, SweepResult, Trajectory,
                     divergence_detector, dominant_period, eigen_analysis,
                     envelope, integrate_orbit, measure_period_by_crossings,
                     run_coupled, settling_time, sweep, zero_crossing_omega)

__version__ = "0.1.0"
