"""Exhaustive search for minimal feasible profiles.

Iterative deepening on the profile total: every total from a proven lower
bound upwards is enumerated completely, so the first total with a feasible
profile is the minimum and the profiles found there are all minimal ones.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Literal

import numpy as np

from . import _kernels
from .bounds import simple_lower
from .cache import ResultCache
from .coloring import max_clique_mask, optimal_coloring
from .constructions import path_ub_value
from .errors import BudgetExhaustedError, DomainError, ParameterError
from .graph import (
    HostGraph,
    replicate,
    Profile,
    canonical_cycle_profile,
    canonical_path_profile,
)
from .verifier import check_cycle, check_general, check_path

log = logging.getLogger(__name__)

Family = Literal["path", "cycle", "general"]


@dataclass(frozen=True)
class SearchConfig:
    budget: int | None = None
    prune_prefix: bool = True
    prune_floor: bool = True
    prune_lm1: bool = True
    threads: int = 1
    cache_path: str | None = None
    recompute: bool = False

    @classmethod
    def no_prune(cls, **kw) -> SearchConfig:
        return cls(prune_prefix=False, prune_floor=False, prune_lm1=False, **kw)


@dataclass(frozen=True)
class SearchResult:
    family: str
    n: int
    rho: int
    profiles: tuple[Profile, ...]
    nodes: int = field(default=0, compare=False)
    seconds: float = field(default=0.0, compare=False)

    @property
    def count(self) -> int:
        return len(self.profiles)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "rho": self.rho,
            "count": self.count,
            "profiles": [list(p) for p in self.profiles],
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3),
        }

    @classmethod
    def from_json(cls, d: dict) -> SearchResult:
        return cls(
            d["family"],
            d["n"],
            d["rho"],
            tuple(tuple(p) for p in d["profiles"]),
            d.get("nodes", 0),
            d.get("seconds", 0.0),
        )


def _run_task(n, total, prefix, family, cfg):
    capacity = 1024
    while True:
        out = np.zeros((capacity, n), dtype=np.int64)
        flags = np.zeros(capacity, dtype=np.int64)
        counters = np.zeros(1, dtype=np.int64)
        found = _kernels.search_level(
            n, total, np.asarray(prefix, dtype=np.int64), family,
            cfg.prune_prefix, cfg.prune_floor, cfg.prune_lm1,
            out, flags, counters,
        )
        if found >= 0:
            rows = [(tuple(int(x) for x in out[i]), int(flags[i])) for i in range(found)]
            return rows, int(counters[0])
        capacity *= 4


def _split(n: int, total: int, family: int, threads: int) -> list[tuple[int, ...]]:
    if threads <= 1 or n < 3:
        return [()]
    tasks = []
    for a in range(1, total - (n - 1) + 1):
        low = a if family == _kernels.CYCLE else 1
        for b in range(low, total - a - (n - 2) * low + 1):
            tasks.append((a, b))
    return tasks


def _search_level(n: int, total: int, family: int, cfg: SearchConfig):
    tasks = _split(n, total, family, cfg.threads)
    if len(tasks) == 1:
        results = [_run_task(n, total, tasks[0], family, cfg)]
    else:
        # the kernel releases the GIL; every task is drained, so the level
        # result does not depend on scheduling
        with ThreadPoolExecutor(cfg.threads) as pool:
            results = list(pool.map(lambda pre: _run_task(n, total, pre, family, cfg), tasks))
    rows = [r for task_rows, _ in results for r in task_rows]
    nodes = sum(k for _, k in results)
    return rows, nodes


def _cached(family: str, n: int, cfg: SearchConfig) -> SearchResult | None:
    if cfg.cache_path is None or cfg.recompute:
        return None
    entry = ResultCache(cfg.cache_path).lookup(family, n)
    if entry is None:
        return None
    log.info("cache hit for %s %d in %s", family, n, cfg.cache_path)
    return SearchResult.from_json(entry)


def _store(result: SearchResult, cfg: SearchConfig) -> None:
    if cfg.cache_path is not None:
        ResultCache(cfg.cache_path).append(result.to_json())


def _check_budget(cfg: SearchConfig, start: int) -> None:
    if cfg.budget is not None and cfg.budget < start:
        raise ParameterError(f"budget {cfg.budget} is below the proven lower bound {start}")


def min_profiles_path(n: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact ``rho_R(P_n)`` with every minimal profile, up to reversal."""
    cfg = cfg or SearchConfig()
    if n < 1:
        raise DomainError(f"path length must be >= 1, got {n}")
    hit = _cached("path", n, cfg)
    if hit is not None:
        return hit
    start = simple_lower(n)
    _check_budget(cfg, start)
    cap = cfg.budget if cfg.budget is not None else path_ub_value(n)
    t0 = time.perf_counter()
    nodes = 0
    for total in range(start, cap + 1):
        rows, k = _search_level(n, total, _kernels.PATH, cfg)
        nodes += k
        log.debug("path n=%d total=%d nodes=%d found=%d", n, total, k, len(rows))
        if rows:
            profiles = sorted({canonical_path_profile(p) for p, _ in rows})
            for p in profiles:
                if not check_path(p).feasible:
                    raise AssertionError(f"search emitted infeasible profile {p}")
            result = SearchResult("path", n, total, tuple(profiles), nodes,
                                  time.perf_counter() - t0)
            _store(result, cfg)
            return result
    raise BudgetExhaustedError(
        f"no feasible profile for P_{n} with total <= {cap}", largest_tried=cap
    )


def cycle_start(n: int) -> int:
    """Lower bound on a feasible cycle total.

    The n - 1 smallest orders form a proper subset, which must obey the
    sorted-floor rule; the largest order is at least the last floor.
    """
    return max(n, simple_lower(n - 1) + n // 2)


def min_profiles_cycle(n: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact ``rho_R(C_n)`` with every minimal profile up to rotation and
    reflection."""
    cfg = cfg or SearchConfig()
    if n < 3:
        raise DomainError(f"cycle length must be >= 3, got {n}")
    hit = _cached("cycle", n, cfg)
    if hit is not None:
        return hit
    start = cycle_start(n)
    _check_budget(cfg, start)
    cap = cfg.budget if cfg.budget is not None else path_ub_value(n)
    t0 = time.perf_counter()
    nodes = 0
    total = start
    while True:
        if total > cap:
            if cfg.budget is not None:
                raise BudgetExhaustedError(
                    f"no feasible profile for C_{n} with total <= {cap}", largest_tried=cap
                )
            # the path value is only a search cap here, not a proven bound
            cap += 1
            continue
        rows, k = _search_level(n, total, _kernels.CYCLE, cfg)
        nodes += k
        feasible = set()
        for p, flag in rows:
            if flag == _kernels.NEEDS_EXACT_CHI and not check_cycle(p).feasible:
                continue
            feasible.add(canonical_cycle_profile(p))
        if feasible:
            profiles = sorted(feasible)
            for p in profiles:
                if not check_cycle(p).feasible:
                    raise AssertionError(f"search emitted infeasible profile {p}")
            result = SearchResult("cycle", n, total, tuple(profiles), nodes,
                                  time.perf_counter() - t0)
            _store(result, cfg)
            return result
        total += 1


# --- general hosts ---------------------------------------------------------


def twin_classes(h: HostGraph) -> list[list[int]]:
    """Vertices with equal open or equal closed neighbourhoods.

    Twins are interchangeable under an automorphism, so requiring their
    orders to be nondecreasing loses no profile up to symmetry.
    """
    n = h.vertex_count
    masks = h.masks
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(range(n), 2):
        if masks[u] & ~(1 << v) == masks[v] & ~(1 << u):
            parent[find(v)] = find(u)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def independence_number(h: HostGraph) -> int:
    return bin(independent_set(h)).count("1")


def independent_set(h: HostGraph) -> int:
    """A maximum independent set, as a bitmask."""
    full = (1 << h.vertex_count) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(h.masks)]
    return max_clique_mask(comp)


def maximal_cliques(h: HostGraph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    masks = h.masks
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(_iter_bits(p | x), key=lambda u: bin(p & masks[u]).count("1"))
        for v in _iter_bits(p & ~masks[pivot]):
            bit = 1 << v
            expand(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << h.vertex_count) - 1, 0)
    return sorted(out)


def _iter_bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def anticlique_completion(placed: list[int], r: int) -> int:
    """Least sum of ``r`` further orders on an independent set already
    holding ``placed``.

    Sorted orders on an independent set must dominate 1, 2, 3, ..., i.e. at
    most k orders are <= k.  The j-th smallest new order is therefore at
    least the smallest x with ``#{placed <= k} + j <= k`` for all k >= x.
    """
    m = len(placed)
    top = m + r + 1
    cum = [0] * (top + 1)
    for y in placed:
        if y <= top:
            cum[y] += 1
    for k in range(1, top + 1):
        cum[k] += cum[k - 1]
    cost = 0
    x = 1
    for j in range(1, r + 1):
        for k in range(m + j, x - 1, -1):
            if cum[k] + j > k:
                x = k + 1
                break
        cost += x
    return cost


def general_start(h: HostGraph) -> int:
    """An independent set of size k needs orders >= 1..k (sorted), every
    other vertex needs at least 1."""
    alpha = independence_number(h)
    return alpha * (alpha + 1) // 2 + (h.vertex_count - alpha)


def _canonical_general(p: Profile, classes: list[list[int]]) -> Profile:
    out = list(p)
    for cls in classes:
        vals = sorted(p[v] for v in cls)
        for v, x in zip(cls, vals):
            out[v] = x
    return tuple(out)


def min_profiles_general(
    h: HostGraph,
    cfg: SearchConfig | None = None,
    mode: Literal["clique", "chromatic"] = "clique",
    family: str = "general",
) -> SearchResult:
    """Minimal profiles for a small arbitrary host.

    Depth-first over vertices in index order; each new vertex is checked
    against every subset of the already assigned vertices that contains it,
    which is sound because those subsets' values never change later.
    ``mode="clique"`` is only valid for perfect hosts.
    """
    cfg = cfg or SearchConfig()
    n = h.vertex_count
    if n < 1:
        raise DomainError("host graph has no vertices")
    classes = twin_classes(h)
    prev_twin = [-1] * n
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            prev_twin[b] = a
    start = general_start(h)
    _check_budget(cfg, start)
    cap = cfg.budget if cfg.budget is not None else None
    t0 = time.perf_counter()
    nodes = 0
    vals = [0] * n
    cliques = np.array(maximal_cliques(h), dtype=np.int64)
    kvals = np.zeros(n, dtype=np.int64)
    indep = independent_set(h)
    in_indep = [(indep >> v) & 1 for v in range(n)]

    def prefix_ok(i: int) -> bool:
        if not cfg.prune_prefix and i < n - 1:
            return True
        if mode == "clique":
            return _kernels.clique_prefix_ok(i, kvals, cliques)
        for k in range(0, i + 1):
            for rest in combinations(range(i), k):
                sub = sorted(rest + (i,))
                g = replicate(h.induced(sub), [vals[v] for v in sub])
                if optimal_coloring(g)[0] < k + 1:
                    return False
        return True

    def completion_cost(i: int) -> int:
        placed = [vals[v] for v in range(i + 1) if in_indep[v]]
        free_indep = sum(in_indep[v] for v in range(i + 1, n))
        cost = (n - 1 - i) - free_indep
        if cfg.prune_floor:
            return cost + anticlique_completion(placed, free_indep)
        return cost + free_indep

    def dfs(i: int, remaining: int, out: list[Profile]) -> None:
        nonlocal nodes
        left = n - 1 - i
        low = vals[prev_twin[i]] if prev_twin[i] >= 0 else 1
        if left == 0:
            candidates = [remaining] if remaining >= low else []
        else:
            candidates = range(low, remaining - left + 1)
        for v in candidates:
            nodes += 1
            vals[i] = v
            kvals[i] = v
            if left and completion_cost(i) > remaining - v:
                continue
            if not prefix_ok(i):
                continue
            if left == 0:
                out.append(tuple(vals))
            else:
                dfs(i + 1, remaining - v, out)
        vals[i] = 0
        kvals[i] = 0

    total = start
    while True:
        if cap is not None and total > cap:
            raise BudgetExhaustedError(
                f"no feasible profile with total <= {cap}", largest_tried=cap
            )
        found: list[Profile] = []
        dfs(0, total, found)
        if found:
            profiles = sorted({_canonical_general(p, classes) for p in found})
            for p in profiles:
                if not check_general(h, p, mode).feasible:
                    raise AssertionError(f"search emitted infeasible profile {p}")
            return SearchResult(family, n, total, tuple(profiles), nodes,
                                time.perf_counter() - t0)
        total += 1


# --- conjectures -------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    rho_path: int
    upper: int
    residual: Fraction
    rho_cycle: int | None

    @property
    def gap(self) -> int:
        """Exact value minus the construction's total; 0 means tight."""
        return self.rho_path - self.upper

    @property
    def odd_tight(self) -> bool | None:
        return self.rho_path == self.upper if self.n % 2 else None

    @property
    def cycle_equal(self) -> bool | None:
        return None if self.rho_cycle is None else self.rho_cycle == self.rho_path

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rho_path": self.rho_path,
            "upper": self.upper,
            "gap": self.gap,
            "odd_tight": self.odd_tight,
            "residual": str(self.residual),
            "rho_cycle": self.rho_cycle,
            "cycle_equal": self.cycle_equal,
        }


def verify_conjectures(n_max: int, cfg: SearchConfig | None = None,
                       n_min: int = 5) -> list[ConjectureRow]:
    """Exact values for ``n_min <= n <= n_max`` against the three conjectures:
    odd-n tightness of the upper bound, the ``n^2/4 + n^2/16`` leading term
    (reported as a residual), and equality of cycle and path values for
    ``n >= 6``."""
    if n_max < 5:
        raise DomainError(f"n_max must be >= 5, got {n_max}")
    cfg = cfg or SearchConfig()
    rows = []
    for n in range(n_min, n_max + 1):
        rp = min_profiles_path(n, cfg).rho
        rc = min_profiles_cycle(n, cfg).rho if n >= 6 else None
        residual = rp - Fraction(n * n, 4) - Fraction(n * n, 16)
        rows.append(ConjectureRow(n, rp, path_ub_value(n), residual, rc))
    return rows


