from __future__ import annotations

import sys
from itertools import combinations

import pytest


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Searches never touch the user's result cache during tests."""
    path = tmp_path / "results.jsonl"
    monkeypatch.setenv("RHO_R_CACHE", str(path))
    return path


def brute_chromatic(n: int, adj: list[set[int]]) -> int:
    """Smallest k admitting a proper k-coloring, by plain backtracking."""
    if n == 0:
        return 0
    colors = [-1] * n

    def place(v: int, k: int, used: int) -> bool:
        if v == n:
            return True
        # colors are interchangeable: open at most one new color per step
        for c in range(min(k, used + 1)):
            if all(colors[u] != c for u in adj[v] if u < v):
                colors[v] = c
                if place(v + 1, k, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    k = 1
    while not place(0, k, 0):
        k += 1
    return k


def brute_feasible(edges: set[tuple[int, int]], p: tuple[int, ...]) -> bool:
    """Hall condition checked subset by subset on the explicit blowup."""
    n = len(p)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            verts = [(i, m) for i in s for m in range(p[i])]
            index = {v: j for j, v in enumerate(verts)}
            adj = [set() for _ in verts]
            for (i, a), (j, b) in combinations(verts, 2):
                if i == j or (min(i, j), max(i, j)) in edges:
                    adj[index[(i, a)]].add(index[(j, b)])
                    adj[index[(j, b)]].add(index[(i, a)])
            if brute_chromatic(len(verts), adj) < k:
                return False
    return True


def path_edges(n: int) -> set[tuple[int, int]]:
    return {(i, i + 1) for i in range(n - 1)}


def cycle_edges(n: int) -> set[tuple[int, int]]:
    return path_edges(n) | {(0, n - 1)}
