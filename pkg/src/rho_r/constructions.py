"""Explicit feasible profiles: the interleaved path construction, the
optimal double-star profile and the anticlique baseline."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .graph import HostGraph, Profile


def _path_sequences(n: int) -> tuple[list[int], list[int], list[int], list[int]]:
    r = n % 4
    if r == 0:
        q = n // 4
        s1 = list(range(1, q + 1))
        t1 = [n // 2] * q
        s2 = list(range(q + 1, n // 2 + 1))
        t2 = [q] * (q - 1) + [n // 2]
    elif r == 1:
        a = (n + 3) // 4
        m = (n - 1) // 4
        s1 = list(range(1, a + 1))
        t1 = [a] * m
        s2 = list(range(a + 1, (n + 1) // 2 + 1))
        t2 = ([(n + 1) // 2] * (m - 1) + [a]) if m else []
    elif r == 2:
        a = (n + 2) // 4
        s1 = list(range(1, a + 1))
        t1 = [n // 2] * a
        s2 = list(range(a + 1, n // 2 + 1))
        t2 = [a] * ((n - 2) // 4)
    else:
        a = (n + 1) // 4
        s1 = list(range(1, a + 1))
        t1 = [a] * a
        s2 = list(range(a + 1, (n + 1) // 2 + 1))
        t2 = [(n + 1) // 2] * ((n - 3) // 4)
    return s1, t1, s2, t2


def path_ub_profile(n: int) -> Profile:
    """Round-robin interleaving of the four sequences for ``n mod 4``.

    >>> path_ub_profile(13)
    (1, 4, 5, 7, 2, 4, 6, 7, 3, 4, 7, 4, 4)
    """
    if n < 1:
        raise DomainError(f"path length must be >= 1, got {n}")
    seqs = _path_sequences(n)
    out: list[int] = []
    for i in range(max(len(s) for s in seqs)):
        out.extend(s[i] for s in seqs if i < len(s))
    assert len(out) == n
    return tuple(out)


def path_ub_value_exact(n: int) -> Fraction:
    n = Fraction(n)
    base = n * n / 4 + n * n / 16
    r = int(n) % 4
    if r == 0:
        return base + n / 2
    if r == 1:
        return base + 3 * n / 8 + Fraction(5, 16)
    if r == 2:
        return base + n / 2 - Fraction(1, 4)
    return base + 3 * n / 8 + Fraction(1, 16)


def path_ub_value(n: int) -> int:
    """Closed-form total of :func:`path_ub_profile`."""
    if n < 1:
        raise DomainError(f"path length must be >= 1, got {n}")
    v = path_ub_value_exact(n)
    if v.denominator != 1:
        raise ArithmeticError(f"upper bound for n={n} is not integral: {v}")
    return int(v)


@dataclass(frozen=True)
class DoubleStarSpec:
    """Double star with ``a`` leaves on one center and ``b`` on the other."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise DomainError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")

    @property
    def n(self) -> int:
        return self.a + self.b + 2

    @property
    def g(self) -> int:
        return -(-self.b // (self.a + 1))

    # vertex numbering: A leaves, C, D, B leaves, so S(1,1) is the path 0-1-2-3
    @property
    def a_vertices(self) -> range:
        return range(self.a)

    @property
    def c_vertex(self) -> int:
        return self.a

    @property
    def d_vertex(self) -> int:
        return self.a + 1

    @property
    def b_vertices(self) -> range:
        return range(self.a + 2, self.a + 2 + self.b)


def double_star_graph(spec: DoubleStarSpec) -> HostGraph:
    c, d = spec.c_vertex, spec.d_vertex
    edges = [(v, c) for v in spec.a_vertices]
    edges.append((c, d))
    edges += [(d, v) for v in spec.b_vertices]
    return HostGraph(spec.n, frozenset(edges))


def _leaf_pattern(spec: DoubleStarSpec) -> list[str]:
    # B-runs of at most g, every A preceded by at least one B so no two
    # A leaves get consecutive orders; leave enough B for the later A's
    runs = []
    left = spec.b
    for j in range(spec.a):
        need_later = spec.a - 1 - j
        run = min(spec.g, left - need_later)
        runs.append(run)
        left -= run
    pattern: list[str] = []
    for run in runs:
        pattern += ["B"] * run + ["A"]
    pattern += ["B"] * left
    return pattern


def double_star_profile(spec: DoubleStarSpec) -> Profile:
    """Leaf ``v_i`` of the fixed leaf order gets order ``i``; the A-center
    gets ``g + 1`` and the B-center gets 2."""
    orders = [0] * spec.n
    a_iter = iter(spec.a_vertices)
    b_iter = iter(spec.b_vertices)
    for i, side in enumerate(_leaf_pattern(spec), start=1):
        orders[next(a_iter) if side == "A" else next(b_iter)] = i
    orders[spec.c_vertex] = spec.g + 1
    orders[spec.d_vertex] = 2
    return tuple(orders)


def double_star_value(spec: DoubleStarSpec) -> int:
    n = spec.n
    return (n - 2) * (n - 1) // 2 + spec.g + 3


def anticlique_profile(n: int) -> Profile:
    if n < 1:
        raise DomainError(f"anticlique order must be >= 1, got {n}")
    return tuple(range(1, n + 1))
