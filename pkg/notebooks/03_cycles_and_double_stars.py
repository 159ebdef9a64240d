"""
Cycles and double stars
=======================

Replicated cycles track replicated paths from n = 6 on; double stars have a
closed-form minimum that exhaustive search confirms for small sizes.
"""

# %%
from rho_r import (
    DoubleStarSpec,
    double_star_graph,
    double_star_profile,
    double_star_value,
    min_profiles_cycle,
    min_profiles_general,
    min_profiles_path,
)

# %%
for n in range(4, 11):
    c, p = min_profiles_cycle(n), min_profiles_path(n)
    print(f"n={n:2d}  cycle={c.rho:3d} ({c.count} profiles)  path={p.rho:3d}")

# %% [markdown]
# A double star S(a, b) has centers C and D with a leaves on C and b on D.
# The construction spreads the leaves so that no run of B leaves is longer
# than ceil(b / (a + 1)).

# %%
for a, b in [(1, 1), (1, 3), (2, 3), (3, 4)]:
    spec = DoubleStarSpec(a, b)
    found = min_profiles_general(double_star_graph(spec))
    print(f"S({a},{b})  construction={double_star_profile(spec)}  "
          f"formula={double_star_value(spec)}  search={found.rho}")
