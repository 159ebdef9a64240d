"""Exact clique and coloring routines on bitmask adjacency.

Graphs are passed as tuples of neighbourhood bitmasks (``HostGraph.masks``);
vertex sets are ints.  All routines are exact branch and bound searches meant
for graphs of up to a few dozen vertices.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DimensionError, ResourceError
from .graph import HostGraph

DEFAULT_VERTEX_CAP = 64


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _color_sort(masks: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns vertices with their
    (nondecreasing) color numbers, which bound the clique size of any suffix."""
    order: list[int] = []
    bounds: list[int] = []
    rest = cand
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            rest &= ~low
            avail &= ~low & ~masks[v]
    return order, bounds


def max_clique_mask(masks: Sequence[int], cand: int | None = None) -> int:
    """A maximum clique inside ``cand`` (all vertices by default), as a mask."""
    if cand is None:
        cand = (1 << len(masks)) - 1
    best_mask = 0
    best_size = 0

    def expand(r_mask: int, r_size: int, p: int) -> None:
        nonlocal best_mask, best_size
        if not p:
            if r_size > best_size:
                best_mask, best_size = r_mask, r_size
            return
        order, bounds = _color_sort(masks, p)
        for v, b in zip(reversed(order), reversed(bounds)):
            if r_size + b <= best_size:
                return
            bit = 1 << v
            expand(r_mask | bit, r_size + 1, p & masks[v])
            p &= ~bit

    expand(0, 0, cand)
    return best_mask


def max_weight_clique_mask(
    masks: Sequence[int], weights: Sequence[int], cand: int | None = None
) -> tuple[int, int]:
    """Maximum total weight of a clique inside ``cand`` and one such clique."""
    if cand is None:
        cand = (1 << len(masks)) - 1
    best_w = 0
    best_mask = 0

    def expand(r_mask: int, r_w: int, p: int) -> None:
        nonlocal best_w, best_mask
        if not p:
            if r_w > best_w:
                best_w, best_mask = r_w, r_mask
            return
        # weighted coloring bound: each color class contributes its heaviest vertex
        classes: list[int] = []
        rest = p
        while rest:
            avail = rest
            top = 0
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                top = max(top, weights[v])
                rest &= ~low
                avail &= ~low & ~masks[v]
            classes.append(top)
        if r_w + sum(classes) <= best_w:
            return
        for v in sorted(_bits(p), key=lambda u: -weights[u]):
            bit = 1 << v
            if not p & bit:
                continue
            remaining = sum(weights[u] for u in _bits(p))
            if r_w + remaining <= best_w:
                return
            expand(r_mask | bit, r_w + weights[v], p & masks[v])
            p &= ~bit

    expand(0, 0, cand)
    return best_w, best_mask


def _dsatur_greedy(masks: Sequence[int], n: int) -> list[int]:
    colors = [-1] * n
    neighbor_colors = [0] * n
    degree = [bin(m).count("1") for m in masks]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(neighbor_colors[u]).count("1"), degree[u], -u),
        )
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in _bits(masks[v]):
            neighbor_colors[u] |= 1 << c
    return colors


def optimal_coloring(g: HostGraph, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, list[int]]:
    """Chromatic number of ``g`` together with a coloring attaining it.

    Clique lower bound, DSATUR upper bound, then DSATUR branch and bound with
    the clique vertices pre-colored to break color symmetry.
    """
    n = g.vertex_count
    if n > cap:
        raise ResourceError(f"graph has {n} vertices, exact coloring cap is {cap}")
    if n == 0:
        return 0, []
    masks = g.masks
    clique = _bits(max_clique_mask(masks))
    lower = len(clique)
    best_colors = _dsatur_greedy(masks, n)
    best = max(best_colors) + 1
    if best == lower:
        return best, best_colors

    colors = [-1] * n
    class_masks: list[int] = []
    for c, v in enumerate(clique):
        colors[v] = c
        class_masks.append(1 << v)
    degree = [bin(m).count("1") for m in masks]

    def search(colored: int) -> None:
        nonlocal best, best_colors
        if colored == n:
            k = len(class_masks)
            if k < best:
                best, best_colors = k, colors.copy()
            return
        # most saturated uncolored vertex
        pick = -1
        pick_key = None
        for u in range(n):
            if colors[u] >= 0:
                continue
            sat = sum(1 for cm in class_masks if cm & masks[u])
            key = (sat, degree[u])
            if pick_key is None or key > pick_key:
                pick, pick_key = u, key
        k = len(class_masks)
        for c in range(k):
            if class_masks[c] & masks[pick]:
                continue
            colors[pick] = c
            class_masks[c] |= 1 << pick
            search(colored + 1)
            class_masks[c] &= ~(1 << pick)
            colors[pick] = -1
            if best == lower:
                return
        if k + 1 < best:
            colors[pick] = k
            class_masks.append(1 << pick)
            search(colored + 1)
            class_masks.pop()
            colors[pick] = -1

    search(lower)
    return best, best_colors


def chromatic_number_exact(g: HostGraph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    return optimal_coloring(g, cap)[0]


def max_weight_clique(h: HostGraph, w: Sequence[int]) -> int:
    """Largest total order of a clique of ``h`` under weights ``w``.

    This is the clique number of the replication graph of ``h`` by ``w``.
    """
    if len(w) != h.vertex_count:
        raise DimensionError(
            f"weights have {len(w)} entries but graph has {h.vertex_count} vertices"
        )
    return max_weight_clique_mask(h.masks, w)[0]
