"""
Nutation and open-loop stability
================================

Loads the published state-space constants, inspects the eigenvalue map of
the assembled system, then excites the vehicle with a short despin-motor
pulse and measures the roll-rate ring frequency from its zero crossings.
"""
import numpy as np

from dualspin import (DirectMatrices, InputSignal, KeplerianElements,
                      Scenario, direct_state_space, eigen_analysis,
                      nutation_frequency, run_coupled, zero_crossing_omega)

matrices = DirectMatrices()
ss = direct_state_space(matrices)
print(f"rotor momentum coupling gives sqrt(-A13*A31) = "
      f"{nutation_frequency(ss):.5f} rad/s")

print("\neigenvalues of the constant-coefficient system (circular orbit):")
for lam in sorted(eigen_analysis(ss.a), key=lambda c: (abs(c.imag), c.real)):
    kind = "nutation pair" if abs(lam.imag) > 1 else (
        "rigid-body/kinematic" if lam == 0 or abs(lam) < 1e-9 else "subsidence")
    print(f"  {lam.real:+.3e} {lam.imag:+.3e}j   {kind}")

# One-volt, one-second pulse at t = 10 s, then free response.
scenario = Scenario(elements=KeplerianElements(a=8078.14, e=0.0),
                    duration_s=120.0, dt_s=0.1,
                    signal=InputSignal.impulse(start_s=10.0, width_s=1.0))
traj = run_coupled(scenario)
ring = traj.t >= 15.0
omega = zero_crossing_omega(traj.t[ring], traj.p[ring])
print(f"\nsimulated p(t) rings at {omega:.5f} rad/s "
      f"(peak |p| = {np.max(np.abs(traj.p)):.3e} rad/s)")
