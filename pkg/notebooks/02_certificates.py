"""
Certificates both ways
======================

A feasible profile yields a rainbow transversal for every proper coloring;
an infeasible one yields a coloring with none.  Both answers are checkable.
"""

# %%
import random

from rho_r import (
    NoRainbowError,
    check_path,
    cycle_graph,
    extract_rainbow,
    is_valid_rainbow,
    make_bad_coloring,
    path_graph,
    random_proper_coloring,
)

rng = random.Random(0)

# %% [markdown]
# Feasible: random proper colorings of the blowup always contain a rainbow
# copy of the host, found by bipartite matching between cliques and colors.

# %%
h, p = path_graph(5), (1, 2, 2, 2, 3)
for _ in range(3):
    c = random_proper_coloring(h, p, rng)
    ra = extract_rainbow(h, p, c)
    print(c.colors, "->", ra.colors, is_valid_rainbow(h, p, c, ra))

# %% [markdown]
# Infeasible: the witness subset is colored optimally with fewer colors than
# it has cliques, the rest greedily.  Matching then fails and reports the
# deficient set of cliques.

# %%
q = (1, 1, 2, 2, 3)
w = check_path(q).witness
bad = make_bad_coloring(h, q, w.subset)
print("witness", w.subset, "achieves", w.achieved, "coloring", bad.colors)
try:
    extract_rainbow(h, q, bad)
except NoRainbowError as exc:
    print("no rainbow:", exc.hall_set, "use", exc.colors_used, "colors")

# %% [markdown]
# On an odd cycle the whole vertex set can be the obstruction.

# %%
c5 = cycle_graph(5)
bad = make_bad_coloring(c5, (1, 1, 1, 1, 1), range(5))
print(bad.colors)
