import random
from fractions import Fraction

import pytest

from rho_r.bounds import (
    COROLLARY_PARAMS,
    Th1Params,
    corollary_value,
    edge_min_sum,
    lm1_check,
    path_bounds,
    simple_lower,
    sorted_floor_check,
    th1_value,
)
from rho_r.errors import DomainError, ParameterError
from rho_r.verifier import check_path

# exact minima of the replicated path, n = 1..12
KNOWN_RHO = {1: 1, 2: 2, 3: 4, 4: 7, 5: 10, 6: 14, 7: 18, 8: 23, 9: 29, 10: 35, 11: 42, 12: 49}


@pytest.mark.parametrize("p, e", [((1, 1, 2, 2, 3), 6), ((1,), 0), ((1, 8, 5, 4), 10)])
def test_edge_min_sum(p, e):
    assert edge_min_sum(p) == e


@pytest.mark.parametrize(
    "p, ok", [((1, 1, 2, 2, 3), True), ((1, 1, 1, 1, 1), False), ((1, 2, 2, 2, 3), True)]
)
def test_lm1_check(p, ok):
    assert lm1_check(p) is ok


@pytest.mark.parametrize(
    "p, ok",
    [
        ((1, 1, 2, 2, 3), True),
        ((1, 1, 1, 2, 3), False),
        ((1, 8, 5, 4, 2, 8, 6, 4, 3, 8, 7, 4, 4, 8, 8, 8), True),
    ],
)
def test_sorted_floor_check(p, ok):
    assert sorted_floor_check(p) is ok


@pytest.mark.parametrize("n, value", [(4, 6), (5, 9), (16, 72)])
def test_simple_lower(n, value):
    assert simple_lower(n) == value


def test_simple_lower_below_known_minima():
    for n, rho in KNOWN_RHO.items():
        assert simple_lower(n) <= rho
    for n in range(2, 200, 2):
        assert simple_lower(n) == (n // 2) * (n // 2 + 1)


def test_th1_examples():
    assert th1_value(28, COROLLARY_PARAMS) == Fraction(421, 2)
    assert th1_value(56) == 815
    with pytest.raises(DomainError):
        th1_value(27)


def test_th1_param_conditions():
    with pytest.raises(ParameterError, match="condition 1"):
        Th1Params(Fraction(3, 10), Fraction(2, 5), Fraction(1, 10), 0, 0)
    with pytest.raises(ParameterError, match="condition 2"):
        Th1Params(Fraction(1, 2), Fraction(2, 5), Fraction(3, 10), Fraction(1, 10), Fraction(1, 10))
    with pytest.raises(ParameterError, match="condition 3"):
        Th1Params(Fraction(1, 2), Fraction(1, 4), Fraction(1, 10), 0, 0)
    with pytest.raises(ParameterError):
        Th1Params(1, Fraction(1, 4), Fraction(1, 5), 0, 0)
    assert Th1Params.parse("1/2, 9/28, 1/4, 1/14, 1/14") == COROLLARY_PARAMS
    with pytest.raises(ParameterError):
        Th1Params.parse("1/2,1/4")
    with pytest.raises(ParameterError):
        Th1Params.parse("1/2,x,1/4,0,0")


@pytest.mark.parametrize("n, value", [(28, Fraction(421, 2)), (56, 815), (784, 154826)])
def test_corollary_examples(n, value):
    assert corollary_value(n) == value


def test_corollary_as_stated_drops_linear_term():
    for n in (28, 56, 784):
        assert corollary_value(n, as_stated=True) - corollary_value(n) == Fraction(n, 56)


def test_th1_matches_corollary_even_range():
    for n in range(28, 1001, 2):
        assert th1_value(n, COROLLARY_PARAMS) == corollary_value(n)


def test_th1_never_exceeds_known_minima():
    for n in (6, 8, 10, 12):
        assert th1_value(n) <= KNOWN_RHO[n]


def test_path_bounds_report():
    out = path_bounds(28)
    assert out["simple_lower"] == 210 and out["th1"] == Fraction(421, 2)
    assert out["upper"] >= out["th1"]
    assert "th1" not in path_bounds(27)


def test_necessary_conditions_on_random_feasible_profiles():
    rng = random.Random(2024)
    seen = 0
    while seen < 10_000:
        n = rng.randint(1, 12)
        p = tuple(rng.randint(1, n) for _ in range(n))
        if check_path(p).feasible:
            seen += 1
            assert lm1_check(p) and sorted_floor_check(p), p
