from fractions import Fraction
import math

import pytest

from ramsey_goodness.errors import InputError, WindowError
from ramsey_goodness.thresholds import (
    GoodnessParams, burr_lower_bound, ceil_div, ceiling_identity_check, degree_threshold,
    extremal_degree, goodness_value, k_of, window,
)


def oracle_threshold(r, t, n):
    """Rational-arithmetic evaluation, sharing no integer tricks with the module."""
    base = (r - 1) * (t - 1)
    k = next(k for k in range(1, n + 1) if base * k < n <= base * (k + 1))
    x = math.ceil(Fraction(n, r - 1))
    return k, x, n - math.ceil(Fraction(k, k + 1) * x)


@pytest.mark.parametrize("r,t,n,k,x,M,thr", [
    (3, 3, 8, 1, 4, 2, 6),
    (2, 5, 9, 2, 9, 3, 3),
    (3, 3, 5, 1, 3, 1, 3),
    (3, 4, 12, 1, 6, 3, 9),
])
def test_threshold_examples(r, t, n, k, x, M, thr):
    p = GoodnessParams.for_order(r, t, n)
    assert (p.k, p.x, p.M, degree_threshold(p)) == (k, x, M, thr)


def test_threshold_matches_rational_oracle():
    for r in range(2, 8):
        for t in range(2, 8):
            for n in range((r - 1) * (t - 1) + 1, 6 * (r - 1) * (t - 1)):
                p = GoodnessParams.for_order(r, t, n)
                assert (p.k, p.x, degree_threshold(p)) == oracle_threshold(r, t, n)


def test_window_and_errors():
    assert window(3, 3, 1) == (5, 8)
    assert k_of(3, 3, 8) == 1 and k_of(3, 3, 9) == 2
    with pytest.raises(WindowError, match="below classical Ramsey window"):
        k_of(3, 3, 4)
    with pytest.raises(WindowError):
        GoodnessParams(3, 3, 1, 9)
    with pytest.raises(WindowError):
        GoodnessParams(3, 3, 0, 4)
    with pytest.raises(InputError):
        GoodnessParams(1, 3, 1, 3)


def test_as_dict():
    d = GoodnessParams(3, 3, 1, 8).as_dict()
    assert d == {"r": 3, "t": 3, "k": 1, "n": 8, "x": 4, "M": 2, "threshold": 6, "window": [4, 8]}


def test_ceiling_identity_small():
    assert all(ceiling_identity_check(y, k) for y in range(200) for k in range(1, 20))
    with pytest.raises(InputError):
        ceiling_identity_check(3, 0)


def test_ceil_div():
    assert [ceil_div(a, 3) for a in range(-3, 7)] == [-1, 0, 0, 0, 1, 1, 1, 2, 2, 2]


def test_burr_and_goodness():
    assert goodness_value(3, 3) == 5 and goodness_value(3, 4) == 7 and goodness_value(4, 3) == 7
    assert burr_lower_bound(3, 1, 3) == 5
    with pytest.raises(InputError):
        burr_lower_bound(2, 0, 3)


def test_extremal_degree():
    assert extremal_degree(GoodnessParams(3, 3, 1, 8)) == 5
    assert extremal_degree(GoodnessParams(3, 4, 1, 12)) == 8
    with pytest.raises(InputError):
        extremal_degree(GoodnessParams(3, 3, 1, 7))
