"""
Minimum replicated paths
========================

Exact minima of replicated paths for small n, set against the explicit
construction and the lower bounds.  Runs in about a minute.
"""

# %%
from rho_r import (
    check_path,
    min_profiles_path,
    path_bounds,
    path_ub_profile,
    simple_lower,
)

# %% [markdown]
# A profile gives the size of the clique substituted for each path vertex.
# The verifier either accepts it or returns a set of positions whose cliques
# can be colored with too few colors.

# %%
print(check_path((1, 2, 2, 2, 3)))
print(check_path((1, 1, 2, 2, 3)))

# %% [markdown]
# Iterative deepening on the total finds the minimum and every profile that
# attains it, listed up to reversal.

# %%
for n in range(3, 11):
    r = min_profiles_path(n)
    print(f"n={n:2d}  rho={r.rho:3d}  minimal profiles={r.count:3d}  "
          f"floor={simple_lower(n):3d}  construction={sum(path_ub_profile(n)):3d}")

# %%
r = min_profiles_path(8)
print("the unique minimal P_8 profile:", r.profiles[0])

# %% [markdown]
# For odd n the construction meets the exact value; for even n it can be one
# above it.  The quadratic lower bound only becomes meaningful for large n.

# %%
for n in (28, 56, 112, 784):
    b = path_bounds(n)
    print(n, b["simple_lower"], float(b["th1"]), b["upper"])
