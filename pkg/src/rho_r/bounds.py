"""Lower bounds and necessary conditions for replicated paths.

All arithmetic is exact (ints and ``Fraction``).  ``lm1_check`` and
``sorted_floor_check`` double as pruning predicates for the search.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError

HALF = Fraction(1, 2)


def edge_min_sum(p: Sequence[int]) -> int:
    """Sum over path edges of the smaller of the two clique orders."""
    return sum(min(a, b) for a, b in zip(p, p[1:]))


def lm1_check(p: Sequence[int]) -> bool:
    """``total + edge_min_sum >= n(n+1)/2``.

    Dissolving every path edge into its smaller endpoint turns a feasible
    path profile into a feasible anticlique profile, which needs at least
    ``n(n+1)/2`` vertices.
    """
    n = len(p)
    return sum(p) + edge_min_sum(p) >= n * (n + 1) // 2


def sorted_floor_check(p: Sequence[int]) -> bool:
    """The i-th smallest order (1-indexed) is at least ceil(i/2)."""
    return all(x >= (i + 1) // 2 for i, x in enumerate(sorted(p), start=1))


def simple_lower(n: int) -> int:
    """Least total allowed by :func:`sorted_floor_check`."""
    if n < 1:
        raise DomainError(f"path length must be >= 1, got {n}")
    return sum((i + 1) // 2 for i in range(1, n + 1))


@dataclass(frozen=True)
class Th1Params:
    a_prime: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("a_prime", "a", "b", "c", "d"):
            value = Fraction(getattr(self, name))
            object.__setattr__(self, name, value)
            if not 0 <= value <= HALF:
                raise ParameterError(f"{name}={value} is outside [0, 1/2]")
        if not self.b < self.a < self.a_prime:
            raise ParameterError("condition 1 failed: need b < a < a'")
        spread = self.a + Fraction(3, 2) * self.c + self.d
        if spread > self.a_prime:
            raise ParameterError("condition 2 failed: need a + 3c/2 + d <= a'")
        if spread > 2 * self.b:
            raise ParameterError("condition 3 failed: need a + 3c/2 + d <= 2b")

    @classmethod
    def parse(cls, text: str) -> Th1Params:
        """From ``"a',a,b,c,d"``; each entry an int, fraction or decimal."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 5:
            raise ParameterError(f"expected 5 comma-separated values, got {len(parts)}")
        try:
            values = [Fraction(s) for s in parts]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot parse parameters {text!r}: {exc}") from None
        return cls(*values)


COROLLARY_PARAMS = Th1Params(
    a_prime=HALF,
    a=Fraction(1, 4) + Fraction(1, 14),
    b=Fraction(1, 4),
    c=Fraction(1, 14),
    d=Fraction(1, 14),
)


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise DomainError(f"bound needs an even n >= 2, got {n}")


def th1_value(n: int, params: Th1Params = COROLLARY_PARAMS) -> Fraction:
    """(n/2)(n/2+1) + min(cn(cn-1)/4, d(a-b)n^2/4) for even ``n``."""
    _require_even(n)
    h = Fraction(n, 2)
    cn = params.c * n
    return h * (h + 1) + min(cn * (cn - 1) / 4, params.d * (params.a - params.b) * n * n / 4)


def corollary_value(n: int, as_stated: bool = False) -> Fraction:
    """Quadratic lower bound with the n^2/784 excess.

    By default returns the form the derivation supports,
    ``(n/2)(n/2+1) + n^2/784 - n/56``; ``as_stated=True`` drops the
    ``-n/56`` term.
    """
    _require_even(n)
    h = Fraction(n, 2)
    value = h * (h + 1) + Fraction(n * n, 784)
    if not as_stated:
        value -= Fraction(n, 56)
    return value


def path_bounds(n: int, params: Th1Params | None = None, as_stated: bool = False) -> dict:
    """Every applicable lower bound for ``rho_R(P_n)`` plus the upper bound."""
    from .constructions import path_ub_value

    out: dict = {"n": n, "simple_lower": simple_lower(n), "upper": path_ub_value(n)}
    if n % 2 == 0:
        out["th1"] = th1_value(n, params or COROLLARY_PARAMS)
        out["corollary"] = corollary_value(n, as_stated=as_stated)
    return out
