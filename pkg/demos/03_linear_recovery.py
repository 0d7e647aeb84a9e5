"""
Recovering a linear system from mixed observations
==================================================

A single-axis plant z'' = f1 z + f2 z' + b u is observed through a 10-d
mixing net. With an affine drift head the learned latent is an affine image
of the true one, so the learned drift coefficients should match f1 and f2
directly. This is the cleanest end-to-end check of identifiability.

Takes about half a minute.
"""

# %%
import numpy as np

from latentrack.identcheck import LinearPlant, identity_fixture, jacobian_structure_check, linear_recovery_check

print("true system:", LinearPlant())

# %%
report = linear_recovery_check(seed=0)
print(report.summary())

# %% [markdown]
# The same check with three seeds shows the errors are not a lucky draw.

# %%
for seed in (1, 2):
    r = linear_recovery_check(seed=seed)
    print(f"seed {seed}: relative errors {np.round(r.relative_error.ravel(), 4)}, residual {r.affine_residual:.1e}")

# %% [markdown]
# For reference, the Jacobian diagnostic on a model that inverts the lift
# exactly (a linear lift and its pseudo-inverse) reports zero off-structure
# mass.

# %%
g, h = identity_fixture()
print(jacobian_structure_check(g, h, n_points=50).summary())
