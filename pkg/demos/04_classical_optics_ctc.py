# %% [markdown]
# # A CTC drawn with light on two tilted surfaces
#
# A scattering spot on a surface tilted at theta moves at c_v / (1 - cot theta),
# which is negative below 45 degrees. One surface plays the wire at rest, the
# other plays the boosted wire, and the two spots annihilate at the junction.

# %%
from ctcsim import design_ctc_assembly, scatter_speed, simulate_wavefront
from ctcsim.squid import feasibility_report

for theta in (30, 40, 44, 46, 60, 90):
    print(f"theta={theta:3d}  v={scatter_speed(theta):+9.3f}")

# %%
sym = design_ctc_assembly(6.25, 6.25, mode="symmetric")
print(sym.as_dict())
tl = simulate_wavefront(sym, n_samples=5)
for e in tl.events:
    print(f"t={e.time:.4f}  x={e.x:.4f}  {e.image_id:5s} {e.kind}")

# %% [markdown]
# A strict CTC above the threshold: the images appear at different times
# but still meet at the junction. The SQUID line would refuse the same
# return speed.

# %%
strict = design_ctc_assembly(6.25, 6.25, 0.8, mode="as-given")
tl = simulate_wavefront(strict, n_samples=3)
print(strict.theta1, strict.theta2, tl.meeting_x, tl.meeting_time)
print(feasibility_report(strict.v2, 0.45).verdict)
