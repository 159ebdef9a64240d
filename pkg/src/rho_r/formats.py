"""Text forms for profiles, host graphs and colorings.

* profile: ``1,2,2,2,3``; profile files hold one per line, ``#`` comments.
* graph: edge-list text (first line ``n m``, then ``m`` lines ``u v``) or a
  shorthand ``path:N``, ``cycle:N``, ``doublestar:A,B``, ``anticlique:N``;
  ``@file`` reads the edge-list text from a file.
* coloring: one color id per line, vertices in deterministic numbering.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .constructions import DoubleStarSpec, double_star_graph
from .errors import DomainError, ValidationError
from .graph import (
    ColoringAssignment,
    HostGraph,
    Profile,
    anticlique_graph,
    as_profile,
    cycle_graph,
    path_graph,
)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_profile(text: str) -> Profile:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return as_profile(int(x) for x in re.split(r"[,\s]+", text) if x)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"cannot parse profile {text!r}") from None


def format_profile(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_profiles(text: str) -> list[Profile]:
    out = []
    for line in text.splitlines():
        line = _strip_comment(line)
        if line:
            out.append(parse_profile(line))
    return out


def read_profiles(path: str | Path) -> list[Profile]:
    return parse_profiles(Path(path).read_text())


def parse_edge_list(text: str) -> HostGraph:
    lines = [ln for ln in (_strip_comment(x) for x in text.splitlines()) if ln]
    if not lines:
        raise DomainError("empty graph description")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise DomainError("graph header must be 'n m' followed by 'u v' lines") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise ValidationError(f"header announces {m} edges, found {len(edges)}")
    return HostGraph.from_edges(n, edges)


def format_edge_list(h: HostGraph) -> str:
    lines = [f"{h.vertex_count} {h.edge_count}"]
    lines += [f"{u} {v}" for u, v in h.sorted_edges()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Target:
    """What a command runs against.

    ``kind`` is ``path``, ``cycle``, ``doublestar``, ``anticlique`` or
    ``graph``.  ``n`` is None for a bare family word whose length comes from
    the profile.
    """

    kind: str
    n: int | None = None
    double_star: DoubleStarSpec | None = None
    host: HostGraph | None = None

    @property
    def perfect(self) -> bool:
        return self.kind in ("path", "doublestar", "anticlique") or (
            self.kind == "cycle" and self.n is not None and self.n % 2 == 0
        )

    def graph(self, n: int | None = None) -> HostGraph:
        size = self.n if self.n is not None else n
        if self.kind == "graph":
            return self.host
        if self.kind == "doublestar":
            return double_star_graph(self.double_star)
        if size is None:
            raise DomainError(f"target {self.kind!r} needs a length")
        return {"path": path_graph, "cycle": cycle_graph, "anticlique": anticlique_graph}[
            self.kind
        ](size)


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse {what} arguments {text!r}") from None
    if len(vals) != count:
        raise DomainError(f"{what} takes {count} argument(s), got {len(vals)}")
    return vals


def parse_target(text: str) -> Target:
    text = text.strip()
    if text.startswith("@"):
        return Target("graph", host=parse_edge_list(Path(text[1:]).read_text()))
    if text in ("path", "cycle", "anticlique"):
        return Target(text)
    kind, sep, args = text.partition(":")
    if not sep:
        raise DomainError(f"unknown target {text!r}")
    if kind in ("path", "cycle", "anticlique"):
        (n,) = _ints(args, 1, kind)
        if n < 1 or (kind == "cycle" and n < 3):
            raise DomainError(f"invalid length {n} for {kind}")
        return Target(kind, n=n)
    if kind == "doublestar":
        a, b = _ints(args, 2, kind)
        spec = DoubleStarSpec(a, b)
        return Target(kind, n=spec.n, double_star=spec)
    raise DomainError(f"unknown graph shorthand {kind!r}")


def parse_graph(text: str) -> HostGraph:
    """A graph from shorthand, ``@file`` or inline edge-list text."""
    if "\n" in text.strip():
        return parse_edge_list(text)
    return parse_target(text).graph()


def parse_coloring(text: str, orders: Sequence[int]) -> ColoringAssignment:
    colors = []
    for line in text.splitlines():
        line = _strip_comment(line)
        if line:
            try:
                colors.append(int(line))
            except ValueError:
                raise DomainError(f"bad color id {line!r}") from None
    return ColoringAssignment(tuple(orders), tuple(colors))


def format_coloring(c: ColoringAssignment | Iterable[int]) -> str:
    colors = c.colors if isinstance(c, ColoringAssignment) else c
    return "".join(f"{x}\n" for x in colors)
