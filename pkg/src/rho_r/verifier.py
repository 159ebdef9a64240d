"""Deciding whether a replication profile forces a rainbow copy of its host.

A replication graph ``G`` of ``H`` forces a rainbow transversal (every proper
coloring of ``G`` has one vertex per clique, all colors distinct) exactly
when every set ``S`` of host vertices spans cliques whose union needs at
least ``|S|`` colors.  The checks below evaluate that condition; the
matching routine turns it into an actual transversal for a given coloring.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .coloring import (  # noqa: F401  (re-exported)
    DEFAULT_VERTEX_CAP,
    chromatic_number_exact,
    max_weight_clique,
    optimal_coloring,
)
from .errors import (
    DimensionError,
    DomainError,
    NoRainbowError,
    ResourceError,
    ValidationError,
)
from .graph import (
    ColoringAssignment,
    HostGraph,
    Profile,
    ReplicationVertex,
    as_profile,
    clique_offsets,
    replicate,
    validate_coloring,
)

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class Witness:
    subset: tuple[int, ...]
    achieved: int

    def to_json(self) -> dict:
        return {"subset": list(self.subset), "achieved": self.achieved}


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if self.feasible and self.witness is not None:
            raise ValidationError("a feasible verdict carries no witness")
        if not self.feasible:
            if self.witness is None:
                raise ValidationError("an infeasible verdict needs a witness")
            if self.witness.achieved >= len(self.witness.subset):
                raise ValidationError("witness value must be below its size")

    @classmethod
    def ok(cls) -> Verdict:
        return cls(True)

    @classmethod
    def fail(cls, subset: Sequence[int], achieved: int) -> Verdict:
        return cls(False, Witness(tuple(sorted(subset)), achieved))

    def to_json(self) -> dict:
        out: dict = {"feasible": self.feasible}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


# --- paths -----------------------------------------------------------------


def subset_value_path(p: Sequence[int], s: Sequence[int]) -> int:
    """Clique number of the replicated path restricted to positions ``s``."""
    chosen = set(s)
    if not chosen:
        raise DomainError("subset value of an empty set is undefined")
    for i in chosen:
        if not 0 <= i < len(p):
            raise DomainError(f"position {i} out of range for length {len(p)}")
    best = max(p[i] for i in chosen)
    for i in chosen:
        if i + 1 in chosen:
            best = max(best, p[i] + p[i + 1])
    return best


def _max_pickable(p: Sequence[int], t: int) -> list[int]:
    """Earliest-lexicographic largest position set whose members are all
    <= t and whose chosen adjacent pairs all sum to <= t."""
    n = len(p)
    # after[i][taken]: best count over positions i.. given whether i-1 is taken
    after = [[0, 0] for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        for prev_taken in (0, 1):
            best = after[i + 1][0]
            if p[i] <= t and not (prev_taken and p[i - 1] + p[i] > t):
                best = max(best, 1 + after[i + 1][1])
            after[i][prev_taken] = best
    picks = []
    prev_taken = 0
    for i in range(n):
        can = p[i] <= t and not (prev_taken and p[i - 1] + p[i] > t)
        if can and 1 + after[i + 1][1] == after[i][prev_taken]:
            picks.append(i)
            prev_taken = 1
        else:
            prev_taken = 0
    return picks


def check_path(p: Sequence[int]) -> Verdict:
    """Decide the rainbow condition for a replicated path in O(n^2).

    For each threshold t, a set of more than t positions that are pickable
    at t spans cliques of clique number (hence chromatic number) at most t.
    """
    p = as_profile(p)
    for t in range(1, len(p)):
        picks = _max_pickable(p, t)
        if len(picks) > t:
            return Verdict.fail(picks, subset_value_path(p, picks))
    return Verdict.ok()


# --- cycles ----------------------------------------------------------------


def _cycle_colorable(w: Sequence[int], k: int) -> bool:
    """Whether the replicated cycle with clique orders ``w`` is k-colorable.

    Walk around the cycle tracking only how many colors the current clique
    shares with clique 0; colors are otherwise interchangeable, so the set of
    reachable overlaps is an exact summary of all partial colorings.
    """
    n = len(w)
    w0 = w[0]
    if w0 > k:
        return False
    states = {w0}
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a + b > k:
            return False
        nxt = set()
        for x in states:
            free_c0 = w0 - x
            free_other = k - (w0 + a - x)
            lo = max(0, b - free_other)
            hi = min(b, free_c0)
            nxt.update(range(lo, hi + 1))
        if not nxt:
            return False
        states = nxt
    return w[-1] + w0 <= k and 0 in states


def cycle_chromatic_lower_bound(w: Sequence[int]) -> int:
    """max(heaviest adjacent pair, ceil(total / independence number))."""
    n = len(w)
    pair = max(w[i] + w[(i + 1) % n] for i in range(n))
    k = n // 2
    return max(pair, -(-sum(w) // k))


def weighted_cycle_chromatic(w: Sequence[int]) -> int:
    """Exact chromatic number of the cycle replicated by orders ``w``."""
    w = as_profile(w)
    n = len(w)
    if n < 3:
        raise DimensionError(f"cycle needs at least 3 vertices, got {n}")
    pair = max(w[i] + w[(i + 1) % n] for i in range(n))
    if n % 2 == 0:
        # replications of perfect graphs are perfect
        return pair
    k = cycle_chromatic_lower_bound(w)
    while not _cycle_colorable(w, k):
        k += 1
    return k


def cycle_subset_value(p: Sequence[int], s: Sequence[int]) -> int:
    """Max over members and cyclically adjacent pairs within ``s``."""
    n = len(p)
    chosen = set(s)
    if not chosen:
        raise DomainError("subset value of an empty set is undefined")
    best = max(p[i] for i in chosen)
    for i in chosen:
        j = (i + 1) % n
        if j in chosen and j != i:
            best = max(best, p[i] + p[j])
    return best


def check_cycle(p: Sequence[int]) -> Verdict:
    """Decide the rainbow condition for a replicated cycle.

    Proper subsets of a cycle induce unions of paths, so they reduce to path
    checks on the n windows that omit one position; the whole vertex set is
    checked against the exact chromatic number.
    """
    p = as_profile(p)
    n = len(p)
    if n < 3:
        raise DimensionError(f"cycle needs at least 3 vertices, got {n}")
    candidates = []
    for j in range(n):
        order = [(j + 1 + i) % n for i in range(n - 1)]
        v = check_path([p[i] for i in order])
        if not v.feasible:
            subset = tuple(sorted(order[i] for i in v.witness.subset))
            candidates.append((len(subset), subset))
    if candidates:
        _, subset = min(candidates)
        return Verdict.fail(subset, cycle_subset_value(p, subset))
    chi = weighted_cycle_chromatic(p)
    if chi < n:
        return Verdict.fail(range(n), chi)
    return Verdict.ok()


# --- general hosts -----------------------------------------------------------


def _replicated_masks(h: HostGraph, p: Sequence[int], subset: Sequence[int]) -> HostGraph:
    return replicate(h.induced(list(subset)), [p[i] for i in subset])


def subset_clique_weights(h: HostGraph, p: Sequence[int]) -> list[int]:
    """Heaviest clique weight inside every host subset, indexed by bitmask.

    A clique of ``S`` either avoids the lowest vertex ``v`` of ``S`` or
    consists of ``v`` plus a clique of ``S`` inside the neighbourhood of
    ``v``, which gives a one-pass recurrence over all ``2^n`` masks.
    """
    masks = h.masks
    f = [0] * (1 << h.vertex_count)
    for s in range(1, len(f)):
        low = s & -s
        v = low.bit_length() - 1
        rest = f[s ^ low]
        with_v = p[v] + f[s & masks[v]]
        f[s] = rest if rest > with_v else with_v
    return f


def check_general(
    h: HostGraph,
    p: Sequence[int],
    mode: Literal["chromatic", "clique"] = "chromatic",
    subset_cap: int = DEFAULT_SUBSET_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Verdict:
    """Check every nonempty host subset, smallest first then lexicographic.

    ``mode="clique"`` measures each subset by the heaviest clique of the host
    subgraph, which equals the chromatic number only for perfect hosts; the
    caller vouches for that.  ``mode="chromatic"`` colors a subset exactly
    only when its clique weight alone does not already reach its size.
    """
    if len(p) != h.vertex_count:
        raise DimensionError(
            f"profile has {len(p)} entries but graph has {h.vertex_count} vertices"
        )
    p = as_profile(p)
    n = h.vertex_count
    if n > subset_cap:
        raise ResourceError(f"2^{n} subsets exceed the cap of 2^{subset_cap}")
    if mode not in ("chromatic", "clique"):
        raise DomainError(f"unknown mode {mode!r}")
    weights = subset_clique_weights(h, p)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            value = weights[sum(1 << i for i in s)]
            if value >= k:
                continue
            if mode == "chromatic":
                value = optimal_coloring(_replicated_masks(h, p, s), vertex_cap)[0]
                if value >= k:
                    continue
            return Verdict.fail(s, value)
    return Verdict.ok()


def check_anticlique(p: Sequence[int]) -> Verdict:
    """Edgeless host: a subset is worth its largest order, so the ``k``
    smallest orders are the hardest ``k``-subset."""
    p = as_profile(p)
    order = sorted(range(len(p)), key=lambda i: (p[i], i))
    for k, i in enumerate(order, start=1):
        if p[i] < k:
            return Verdict.fail(order[:k], p[i])
    return Verdict.ok()


# --- rainbow transversals ------------------------------------------------------


@dataclass(frozen=True)
class RainbowAssignment:
    picks: tuple[ReplicationVertex, ...]
    colors: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "picks": [[v.clique, v.member] for v in self.picks],
            "colors": list(self.colors),
        }


def _as_coloring(p: Profile, c: ColoringAssignment | Sequence[int]) -> ColoringAssignment:
    if isinstance(c, ColoringAssignment):
        if tuple(c.orders) != p:
            raise DimensionError("coloring was built for a different profile")
        return c
    return ColoringAssignment(p, tuple(c))


def _augment(u: int, adj: list[list[int]], owner: dict[int, int], seen: set[int]) -> bool:
    for c in adj[u]:
        if c in seen:
            continue
        seen.add(c)
        if c not in owner or _augment(owner[c], adj, owner, seen):
            owner[c] = u
            return True
    return False


def _hall_violator(root: int, adj: list[list[int]], owner: dict[int, int]) -> tuple[list[int], set[int]]:
    """Host vertices reachable from unmatched ``root`` by alternating paths."""
    verts = {root}
    colors: set[int] = set()
    stack = [root]
    while stack:
        u = stack.pop()
        for c in adj[u]:
            if c in colors:
                continue
            colors.add(c)
            v = owner[c]
            if v not in verts:
                verts.add(v)
                stack.append(v)
    return sorted(verts), colors


def extract_rainbow(
    h: HostGraph, p: Sequence[int], c: ColoringAssignment | Sequence[int]
) -> RainbowAssignment:
    """Pick one vertex per clique so that all picked colors differ.

    Builds the bipartite graph between host vertices and the colors their
    cliques use and finds a saturating matching by augmenting paths.
    """
    if len(p) != h.vertex_count:
        raise DimensionError(
            f"profile has {len(p)} entries but graph has {h.vertex_count} vertices"
        )
    p = as_profile(p)
    coloring = _as_coloring(p, c)
    if not validate_coloring(replicate(h, p), coloring):
        raise ValidationError("coloring is not proper")
    adj = [sorted(set(coloring.clique_colors(i))) for i in range(len(p))]
    owner: dict[int, int] = {}
    for u in range(len(p)):
        if not _augment(u, adj, owner, set()):
            hall_set, used = _hall_violator(u, adj, owner)
            raise NoRainbowError(
                f"cliques {hall_set} use only {len(used)} colors",
                tuple(hall_set),
                len(used),
            )
    matched = {u: col for col, u in owner.items()}
    picks = []
    colors = []
    for i in range(len(p)):
        member = coloring.clique_colors(i).index(matched[i])
        picks.append(ReplicationVertex(i, member))
        colors.append(matched[i])
    return RainbowAssignment(tuple(picks), tuple(colors))


def is_valid_rainbow(
    h: HostGraph,
    p: Sequence[int],
    c: ColoringAssignment | Sequence[int],
    ra: RainbowAssignment,
) -> bool:
    """Check every invariant of a rainbow transversal against its coloring."""
    p = as_profile(p)
    coloring = _as_coloring(p, c)
    if len(ra.picks) != len(p) or len(ra.colors) != len(p):
        return False
    if [v.clique for v in ra.picks] != list(range(len(p))):
        return False
    if len(set(ra.colors)) != len(ra.colors):
        return False
    off = clique_offsets(p)
    g = replicate(h, p)
    idx = []
    for v, col in zip(ra.picks, ra.colors):
        if not 0 <= v.member < p[v.clique] or coloring[v] != col:
            return False
        idx.append(off[v.clique] + v.member)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if g.has_edge(idx[i], idx[j]) != h.has_edge(i, j):
                return False
    return True


def _greedy_extend(g: HostGraph, colors: list[int]) -> list[int]:
    for v in range(g.vertex_count):
        if colors[v] >= 0:
            continue
        used = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        col = 0
        while col in used:
            col += 1
        colors[v] = col
    return colors


def make_bad_coloring(
    h: HostGraph,
    p: Sequence[int],
    s: Sequence[int],
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> ColoringAssignment:
    """Proper coloring with no rainbow transversal, built from a witness.

    The cliques of ``s`` get an optimal coloring with fewer than ``|s|``
    colors; the rest of the graph is colored greedily.
    """
    if len(p) != h.vertex_count:
        raise DimensionError(
            f"profile has {len(p)} entries but graph has {h.vertex_count} vertices"
        )
    p = as_profile(p)
    s = sorted(set(s))
    if not s or not all(0 <= i < len(p) for i in s):
        raise DomainError(f"invalid witness subset {s}")
    chi, local = optimal_coloring(_replicated_masks(h, p, s), vertex_cap)
    if chi >= len(s):
        raise DomainError(
            f"subset {s} needs {chi} colors, not fewer than its size {len(s)}"
        )
    off = clique_offsets(p)
    colors = [-1] * off[-1]
    pos = 0
    for i in s:
        for m in range(p[i]):
            colors[off[i] + m] = local[pos]
            pos += 1
    _greedy_extend(replicate(h, p), colors)
    return ColoringAssignment(p, tuple(colors))


def random_proper_coloring(
    h: HostGraph, p: Sequence[int], rng: random.Random, spare: int = 2
) -> ColoringAssignment:
    """Random proper coloring: vertices in random order, each takes a random
    color not used by its neighbours from a palette of Δ + 1 + ``spare``."""
    p = as_profile(p)
    g = replicate(h, p)
    palette = max((bin(m).count("1") for m in g.masks), default=0) + 1 + spare
    colors = [-1] * g.vertex_count
    order = list(range(g.vertex_count))
    rng.shuffle(order)
    for v in order:
        used = {colors[u] for u in g.neighbors(v)}
        colors[v] = rng.choice([c for c in range(palette) if c not in used])
    return ColoringAssignment(p, tuple(colors))
