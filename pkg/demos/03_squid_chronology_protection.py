# %% [markdown]
# # Why the SQUID line cannot close the loop
#
# The line speed follows c0 sqrt(cos(pi phi)). A DC bias of 0.45 flux quanta
# sets the simulated vacuum speed, and removing flux speeds light up to
# about 2.53 c_v. No flux gives a negative c^2, so the return leg of any
# CTC is out of reach.

# %%
import numpy as np

from ctcsim import (
    feasibility_report,
    line_speed,
    max_speed_ratio,
    synthesize_flux_for_F,
)
from ctcsim.boost import pulse_frame_params
from ctcsim.squid import pulse_feasibility_report

dc = 0.45
print("simulated c_v / c0:", line_speed(dc))
print("max c_z / c_v:", max_speed_ratio(dc))

for F in (1.0, 2.0, 4.0, 6.25):
    ac = synthesize_flux_for_F(F, dc)
    print(f"F={F:5.2f}  ac={ac:+.5f}  total={dc + ac:.5f}")

# %% [markdown]
# Targets taken from the boosted wire: c_z = 2.5 c_v at increasing beta.

# %%
from ctcsim import null_speed_backward

for beta in (0.2, 0.35, 0.45, 0.8):
    target = null_speed_backward(6.25, beta)
    r = feasibility_report(target, dc)
    print(f"beta={beta:.2f}  c_z^beta={target:+9.4f}  {r.verdict}  ({r.reason})")

# %% [markdown]
# Rewriting the moving wire as a pulse on a line does not help: beyond the
# horizon the pulse would have to move backwards.

# %%
for F in np.linspace(1.5, 4.0, 6):
    p = pulse_frame_params(F, 0.6)
    print(f"F={F:.2f}  c_p={p.c_p:+8.3f}  v={p.v_pulse:+8.3f}  "
          f"{pulse_feasibility_report(p, dc).verdict}")
