"""
Gravity-gradient torque, two ways
=================================

Evaluates the oblateness-corrected gravity field, shows how the torque
strength g_mu breathes along an inclined orbit, and cross-checks the
linearized torque model against the brute-force per-element integral on a
point-mass dumbbell.
"""
import math

import numpy as np

from dualspin import (EarthModel, box_dumbbell, brute_force_gg_torque,
                      gg_coefficients, gmu_coefficient, gravity_vector_j2,
                      linearized_gg_moment)

earth = EarthModel()
R0 = 8078.14

# The J2 correction is a few parts in 1e3 at this altitude.
g_eq = gravity_vector_j2(np.array([R0, 0.0, 0.0]), earth)
g_pole = gravity_vector_j2(np.array([0.0, 0.0, R0]), earth)
print(f"|g| equatorial : {np.linalg.norm(g_eq) * 1e3:.6f} m/s^2")
print(f"|g| polar      : {np.linalg.norm(g_pole) * 1e3:.6f} m/s^2")

# g_mu along one circular orbit inclined 60 deg: the polar-axis term makes
# it swing twice per revolution.
print("\nargument of latitude vs g_mu (1/s^2):")
for u_deg in range(0, 181, 30):
    r_z1 = R0 * math.sin(math.radians(u_deg)) * math.sin(math.radians(60.0))
    print(f"  u = {u_deg:3d} deg: {gmu_coefficient(R0, r_z1, earth):.6e}")

# Oracle vs linearized model on a rod-like body (I_Z << I_X = I_Y).
body = box_dumbbell(i_x=1000.0, i_y=1000.0, i_z=10.0)
no_j2 = EarthModel(j2=0.0)
gg = gg_coefficients(gmu_coefficient(R0, 0.0, no_j2), 1000.0, 1000.0, 10.0, 0.0)
pos = np.array([R0, 0.0, 0.0])
vel = np.array([0.0, math.sqrt(earth.mu / R0), 0.0])

print("\nroll offset vs torque (N*m), exact integral vs linear model:")
for deg in (0.5, 1.0, 2.0, 5.0):
    phi = math.radians(deg)
    exact = brute_force_gg_torque(body, pos, vel, (phi, 0.0, 0.0), no_j2)[0]
    linear = linearized_gg_moment(gg, phi, 0.0)[0]
    print(f"  phi = {deg:3.1f} deg: exact {exact:+.6e}  linear {linear:+.6e}"
          f"  rel diff {abs(exact - linear) / abs(exact):.2e}")
