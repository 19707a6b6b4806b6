# %% [markdown]
# # Moving wires, negative-time legs and closed timelike curves
#
# A photon runs along the wire at rest with speed c_v sqrt(F1) and returns
# along a second wire boosted by beta. Seen from the lab, the return speed
# can turn negative, and for large enough beta the whole loop ends before
# it started.

# %%
from ctcsim import (
    boosted_metric,
    classify_point,
    ctc_threshold_beta,
    ctc_threshold_beta_general,
    null_speed_backward,
    null_speed_forward,
    round_trip_time,
)

F, beta = 6.25, 0.8
print("boosted metric:", boosted_metric(F, beta))
print("forward speed:", null_speed_forward(F, beta))
print("backward speed:", null_speed_backward(F, beta))
print("negative-time boundary beta:", 1 / F**0.5)
print("CTC threshold beta:", ctc_threshold_beta(F))
print("loop time, L=1:", round_trip_time(1.0, F, F, beta))

# %% [markdown]
# Walk the boost upwards at c_z = 2.5 c_v and watch the labels change.

# %%
for b in (0.2, 0.39, 0.4, 0.41, 0.6, 0.7, 0.9):
    print(f"beta={b:.2f}  {classify_point(2.5, b)}")

# %% [markdown]
# With different wires, the threshold depends on both shape values.

# %%
for F1, F2 in ((4, 4), (4, 9), (9, 4), (2, 6)):
    print(F1, F2, round(ctc_threshold_beta_general(F1, F2), 6))
