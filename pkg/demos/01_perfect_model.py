"""
Tracking with a perfect latent model
====================================

Before any learning, run the feedback-linearizing controller with the true
inverse mixing, drift and input gain. Whatever error remains is the
controller's own transient, so it sets the floor that learned models are
measured against.

Runs in a few seconds.
"""

# %%
import math

import numpy as np

from latentrack.closedloop import EpisodeConfig, run_episode, tracking_report
from latentrack.controller import Gains, PerfectModel, build_A
from latentrack.plant import Plant

plant = Plant.create(seed=0)
gains = Gains.default()  # K0 = K1 = 50 on every axis

# %% [markdown]
# Each axis has error dynamics e'' + K1 e' + K0 e = 0. With K0 = K1 = 50 the
# roots are (-50 +/- sqrt(2300)) / 2, so the slow root sets a decay rate of
# about 1.02 per second.

# %%
ed = build_A(gains)
print("error-dynamics roots per axis:\n", ed.eigenvalues)
slow = (50 - math.sqrt(2300)) / 2
print(f"slow decay rate: {slow:.5f} 1/s")

# %%
log = run_episode(plant, PerfectModel(plant), gains, EpisodeConfig(T=20.0))
rep = tracking_report(log)
print("attitude error on [10, 20] s:", np.round(rep.attitude_error, 8))
print("rate error on [10, 20] s:    ", np.round(rep.rate_error, 8))
print(f"convergence time (0.02 rad): {rep.convergence_time:.2f} s")

# %% [markdown]
# The latent error norm should fall along exp(-1.02 t) until it reaches the
# small floor left by the one-step feed-forward difference.

# %%
e = np.linalg.norm(log.latent_error, axis=1)
sel = (log.t >= 2) & (log.t <= 8)
fitted = -np.polyfit(log.t[sel], np.log(e[sel]), 1)[0]
print(f"fitted decay {fitted:.5f} 1/s vs predicted {slow:.5f} 1/s")
for t in (0, 1, 2, 4, 8, 12, 16):
    i = int(round(t / 0.01))
    print(f"  t = {t:4.1f} s   |e| = {e[i]:.3e}")
