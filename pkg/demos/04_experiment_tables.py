"""
Noise, deviation and environment tables
=======================================

Regenerates the three experiment tables. Each row trains (or reuses) one
model and runs one 20 s episode. Trained models and per-row results are
cached under OUT, so an interrupted run resumes where it stopped.

Expect well over an hour on one CPU from an empty cache. The command-line
equivalent is `latentrack suite noise|deviation|env`.
"""

# %%
from pathlib import Path

from latentrack.closedloop import (
    ExperimentSettings,
    run_noiseless,
    suite_deviation_table,
    suite_env_comparison,
    suite_noise_table,
)

OUT = Path("runs/demo_tables")
settings = ExperimentSettings(out_dir=str(OUT))


def show(rows):
    for r in rows:
        rep = r["report"]
        cells = {k: v for k, v in r.items() if k != "report"}
        errs = ", ".join(f"{e:.4f}" for e in rep.attitude_error)
        print(f"  {cells}  {rep.verdict:8s} [{errs}]")


# %%
_, _, base = run_noiseless(settings)
print("noiseless:", [round(e, 5) for e in base.attitude_error])

# %% [markdown]
# Observation noise. Noise that varies slowly during training behaves like
# a small perturbation of the mixing and is harmless. Noise that is redrawn
# every sample corrupts the one-step differences the model learns from.

# %%
show(suite_noise_table(settings))

# %% [markdown]
# Actuation deviations. Control noise enters as a disturbance the
# feedback rejects; training noise blurs the learned input gain.

# %%
show(suite_deviation_table(settings))

# %% [markdown]
# An unobserved environment variable s. A model trained in one environment
# absorbs s into its attitude latents and breaks in the test environment;
# a model trained in two learns latents that ignore s.

# %%
show(suite_env_comparison(settings))
