"""Host graphs, profiles and explicit replication graphs.

A profile is a plain tuple of positive ints, one clique order per host
vertex.  Replication graphs number their vertices block by block: clique 0
first, members in order, then clique 1, and so on.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from .errors import DimensionError, DomainError, ValidationError

Profile = tuple[int, ...]


@dataclass(frozen=True)
class HostGraph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError(f"negative vertex count {self.vertex_count}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValidationError(
                    f"edge ({u}, {v}) out of range for {self.vertex_count} vertices"
                )
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> HostGraph:
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
        return cls(vertex_count, frozenset(edges))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        out = [0] * self.vertex_count
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def neighbors(self, v: int) -> list[int]:
        m = self.masks[v]
        return [u for u in range(self.vertex_count) if m >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, subset: Sequence[int]) -> HostGraph:
        """Subgraph induced by ``subset``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(subset)}
        return HostGraph(
            len(subset),
            frozenset(
                (index[u], index[v])
                for u, v in self.edges
                if u in index and v in index
            ),
        )


def path_graph(n: int) -> HostGraph:
    return HostGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> HostGraph:
    if n < 3:
        raise DimensionError(f"cycle needs at least 3 vertices, got {n}")
    return HostGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def anticlique_graph(n: int) -> HostGraph:
    return HostGraph(n)


def complete_graph(n: int) -> HostGraph:
    return HostGraph(n, frozenset(combinations(range(n), 2)))


def as_profile(values: Iterable[int]) -> Profile:
    """Validate and freeze a sequence of clique orders."""
    p = tuple(int(x) for x in values)
    for x in p:
        if x < 1:
            raise DomainError(f"clique orders must be >= 1, got {x}")
    return p


def total(p: Sequence[int]) -> int:
    return sum(p)


def _check_lengths(h: HostGraph, p: Sequence[int]) -> None:
    if len(p) != h.vertex_count:
        raise DimensionError(
            f"profile has {len(p)} entries but graph has {h.vertex_count} vertices"
        )


def clique_offsets(p: Sequence[int]) -> list[int]:
    """Start index of every clique block, plus the total as a sentinel."""
    out = [0]
    for x in p:
        out.append(out[-1] + x)
    return out


def replicate(h: HostGraph, p: Sequence[int]) -> HostGraph:
    """Blow every host vertex ``i`` up into a clique of order ``p[i]``."""
    _check_lengths(h, p)
    p = as_profile(p)
    off = clique_offsets(p)
    edges = set()
    for i, size in enumerate(p):
        block = range(off[i], off[i] + size)
        edges.update(combinations(block, 2))
    for i, j in h.edges:
        for x in range(off[i], off[i + 1]):
            for y in range(off[j], off[j + 1]):
                edges.add((x, y) if x < y else (y, x))
    return HostGraph(off[-1], frozenset(edges))


class ReplicationVertex(NamedTuple):
    clique: int
    member: int


def replication_vertices(p: Sequence[int]) -> list[ReplicationVertex]:
    """All replication vertices in deterministic numbering order."""
    return [ReplicationVertex(i, m) for i, size in enumerate(p) for m in range(size)]


@dataclass(frozen=True)
class ColoringAssignment:
    """Colors of a replication graph, stored in deterministic numbering.

    Index with an int (global vertex number) or a ``(clique, member)`` pair.
    """

    orders: Profile
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != sum(self.orders):
            raise DimensionError(
                f"coloring has {len(self.colors)} entries, "
                f"replication graph has {sum(self.orders)} vertices"
            )
        for c in self.colors:
            if c < 0:
                raise DomainError(f"color ids must be nonnegative, got {c}")

    @classmethod
    def from_mapping(
        cls, orders: Sequence[int], mapping: Mapping[tuple[int, int], int]
    ) -> ColoringAssignment:
        verts = replication_vertices(orders)
        missing = [v for v in verts if v not in mapping]
        if missing:
            raise DimensionError(f"coloring undefined on {len(missing)} vertices, e.g. {missing[0]}")
        return cls(tuple(orders), tuple(mapping[v] for v in verts))

    @cached_property
    def _offsets(self) -> list[int]:
        return clique_offsets(self.orders)

    def __getitem__(self, key: int | tuple[int, int]) -> int:
        if isinstance(key, tuple):
            clique, member = key
            if not 0 <= member < self.orders[clique]:
                raise IndexError(f"member {member} out of range for clique {clique}")
            return self.colors[self._offsets[clique] + member]
        return self.colors[key]

    def __len__(self) -> int:
        return len(self.colors)

    def clique_colors(self, clique: int) -> tuple[int, ...]:
        off = self._offsets
        return self.colors[off[clique]:off[clique + 1]]

    def as_mapping(self) -> dict[ReplicationVertex, int]:
        return dict(zip(replication_vertices(self.orders), self.colors))


def validate_coloring(g: HostGraph, c: ColoringAssignment | Sequence[int]) -> bool:
    """True iff no edge of ``g`` is monochromatic."""
    colors = c.colors if isinstance(c, ColoringAssignment) else tuple(c)
    if len(colors) != g.vertex_count:
        raise DimensionError(
            f"coloring has {len(colors)} entries, graph has {g.vertex_count} vertices"
        )
    return all(colors[u] != colors[v] for u, v in g.edges)


def canonical_path_profile(p: Sequence[int]) -> Profile:
    p = tuple(p)
    r = p[::-1]
    return min(p, r)


def canonical_cycle_profile(p: Sequence[int]) -> Profile:
    p = tuple(p)
    n = len(p)
    if n < 3:
        raise DimensionError(f"cycle profiles need length >= 3, got {n}")
    r = p[::-1]
    return min(min(q[i:] + q[:i] for i in range(n)) for q in (p, r))
