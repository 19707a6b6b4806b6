# %% [markdown]
# # Parameter-space scans
#
# Region map over (rest-wire speed, boost) and the pulse-frame speeds at
# beta = 0.6. The same tables come out of `ctcsim scan-fig2` and
# `ctcsim pulse-fig3`. Plots are written when matplotlib is installed.

# %%
from collections import Counter

import numpy as np

from ctcsim import ScanGrid, scan_figure2, scan_figure3

rows = scan_figure2(ScanGrid())
print(Counter(r.region.value for r in rows))

fig3 = scan_figure3(0.6, np.linspace(1, 7, 601))
print([r for r in fig3 if r.horizon])

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    codes = {"POSITIVE_TIME": 0, "NEGATIVE_LEG": 1, "CTC": 2, "SINGULAR": 3}
    grid = ScanGrid()
    img = np.array([codes[r.region.value] for r in rows]).reshape(grid.n_beta, grid.n_speed)
    fig, ax = plt.subplots(1, 2, figsize=(10, 4))
    ax[0].imshow(img, origin="lower", aspect="auto",
                 extent=(grid.speed_min, grid.speed_max, grid.beta_min, grid.beta_max))
    ax[0].set_xlabel("c_z / c_v (rest wire)")
    ax[0].set_ylabel("beta")
    F = np.array([r.F for r in fig3])
    cp = np.array([np.nan if r.c_p is None else r.c_p for r in fig3])
    v = np.array([np.nan if r.v_pulse is None else r.v_pulse for r in fig3])
    ax[1].plot(F, np.clip(cp, -10, 10), label="c_p")
    ax[1].plot(F, np.clip(np.abs(cp), -10, 10), "--", label="|c_p|")
    ax[1].plot(F, np.clip(v, -10, 10), label="v")
    ax[1].axvline(25 / 9, color="k", lw=0.5)
    ax[1].legend()
    fig.savefig("figure_scans.png", dpi=120)
    print("wrote figure_scans.png")
