"""
Two-body orbit propagation
==========================

Propagates the circular and the e=0.2 reference orbits, measures the period
from axis crossings, and checks how well the fixed-step RK4 integrator
conserves energy and angular momentum.
"""
import numpy as np

from dualspin import (EarthModel, InputSignal, KeplerianElements, Scenario,
                      integrate_orbit, measure_period_by_crossings)

earth = EarthModel()

# Circular reference orbit: a = 8078.14 km, about 1700 km altitude.
circular = KeplerianElements(a=8078.14, e=0.0)
scenario = Scenario(elements=circular, duration_s=1.05 * circular.period(earth),
                    dt_s=1.0, signal=InputSignal.zero())
traj = integrate_orbit(scenario)
print(f"analytic period : {circular.period(earth):10.3f} s")
print(f"measured period : {measure_period_by_crossings(traj):10.3f} s")

# Eccentric orbit, perigee skimming 85 km above the surface.
elliptic = KeplerianElements(a=8078.14, e=0.2)
scenario = Scenario(elements=elliptic, duration_s=elliptic.period(earth),
                    dt_s=1.0, signal=InputSignal.zero())
traj = integrate_orbit(scenario)
print(f"perigee altitude: {traj.radius.min() - earth.r_eq:10.3f} km")
print(f"apogee radius   : {traj.radius.max():10.3f} km")

# Conservation along the run (the integrator never sees these invariants).
energy = 0.5 * np.sum(traj.velocity ** 2, axis=1) - earth.mu / traj.radius
h = np.linalg.norm(np.cross(traj.position, traj.velocity), axis=1)
print(f"energy drift    : {np.max(np.abs(energy - energy[0])) / abs(energy[0]):.2e} (relative)")
print(f"momentum drift  : {np.max(np.abs(h - h[0])) / h[0]:.2e} (relative)")
