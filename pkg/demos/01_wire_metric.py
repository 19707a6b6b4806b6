# %% [markdown]
# # The wire spacetime and its axial light speed
#
# A static wire of radius R bends the axial light cone through the shape
# function F(r). Inside the wire F grows without bound towards r = 0; outside
# it is exactly 1.

# %%
import numpy as np

from ctcsim import WireProfile, axial_light_speed, axial_metric, shape_function

wire = WireProfile(R=1.0, n=2)
for r in (0.25, 0.4, 0.5, 0.75, 1.0, 1.5):
    F = shape_function(wire, r)
    print(f"r={r:5.2f}  F={F:8.4f}  c_z/c_v={axial_light_speed(F):.4f}")

# %% [markdown]
# The null directions of the reduced metric give back the same speed.

# %%
m = axial_metric(shape_function(wire, 0.5))
print(m, "null speeds:", m.null_speeds())

# %% [markdown]
# Higher exponents make the profile flatter near the surface and steeper
# near the axis.

# %%
r = np.linspace(0.3, 1.2, 10)
for n in (2, 3, 4):
    p = WireProfile(1.0, n)
    print(n, np.round([shape_function(p, x) for x in r], 3))
