import itertools
import math

import pytest
from hypothesis import given, strategies as st

from terrain_search import (InvalidParameter, InvalidStrategy, MotionModel, Strategy, format_strategy,
                            parse_strategy, run_time, turning_points, validate)
from terrain_search.models import Frontier, Run


def test_doubling_prefix():
    assert turning_points(Strategy.doubling(), 5) == [1, 2, 4, 8, 16]
    assert turning_points(Strategy.doubling(), 1) == [1, 2]


def test_tailwind_balanced_first_four():
    strat = Strategy.tailwind_balanced(4)
    assert strat.r == pytest.approx(math.sqrt(4.5), rel=1e-15)
    assert strat.alpha == pytest.approx(math.sqrt(2), rel=1e-15)
    want = [4, math.sqrt(2) * math.sqrt(4.5), 4 * 4.5, math.sqrt(2) * 4.5 ** 1.5]
    assert list(itertools.islice(strat, 4)) == pytest.approx(want, rel=1e-14)


def test_history_optimal_geometric_prefix():
    r = 1 + math.sqrt(2 / 3)
    pts = turning_points(Strategy.geometric(r), 3)
    assert pts == pytest.approx([r ** k for k in range(len(pts))])
    assert max(pts[0::2]) >= 3 and max(pts[1::2]) >= 3
    assert not (max(pts[:-1][0::2]) >= 3 and max(pts[:-1][1::2]) >= 3)


def test_doubling_is_geometric_two():
    assert list(itertools.islice(Strategy.doubling(), 30)) == list(itertools.islice(Strategy.geometric(2, 1), 30))


def test_validate_examples():
    assert validate(Strategy.doubling(), 10) is None
    assert validate(Strategy.explicit([1, 2, 0.5]), 3) == 1
    assert validate(Strategy.geometric(1.01), 100) is None
    assert validate(Strategy.explicit([1, -2, 3, 4]), 4) == 2
    assert validate(Strategy.explicit([1, 2, 3, 2]), 4) == 2


def test_non_expanding_rejected():
    with pytest.raises(InvalidStrategy):
        Strategy.geometric(1.0)
    with pytest.raises(InvalidStrategy):
        Strategy.geometric(2.0, alpha=0)
    with pytest.raises(InvalidStrategy):
        turning_points(Strategy.explicit([1, 2, 0.5, 4]), 3)
    with pytest.raises(InvalidStrategy):
        turning_points(Strategy.explicit([1, 2]), 10)  # never covers
    with pytest.raises(InvalidParameter):
        turning_points(Strategy.doubling(), 0)


@given(st.floats(min_value=1.001, max_value=10), st.floats(min_value=0.01, max_value=100),
       st.integers(min_value=3, max_value=60))
def test_geometric_side_ratio(r, alpha, n):
    xs = list(itertools.islice(Strategy.geometric(r, alpha), n))
    for a, b in zip(xs, xs[2:]):
        assert b / a == pytest.approx(r * r, rel=1e-12)


@given(st.sampled_from(["doubling", "geom", "tailwind"]), st.floats(min_value=1.01, max_value=5),
       st.floats(min_value=1, max_value=1e6))
def test_turning_points_always_valid(family, r, d_max):
    strat = {"doubling": Strategy.doubling(), "geom": Strategy.geometric(r),
             "tailwind": Strategy.tailwind_balanced(r)}[family]
    pts = turning_points(strat, d_max)
    assert validate(Strategy.explicit(pts), len(pts)) is None
    assert max(pts[0::2]) >= d_max and max(pts[1::2]) >= d_max


@given(st.floats(min_value=1, max_value=50), st.integers(min_value=1, max_value=8))
def test_tailwind_balanced_leg_times(s, k):
    """Outbound right leg k takes time r^(2k-2); outbound left leg takes alpha * r^(2k-1)."""
    strat = Strategy.tailwind_balanced(s)
    m = MotionModel.tailwind(s)
    r, a = strat.r, strat.alpha
    right_leg = run_time(m, Run(0, strat.x(2 * k - 1)), Frontier())
    left_leg = run_time(m, Run(0, -strat.x(2 * k)), Frontier())
    assert right_leg == pytest.approx(r ** (2 * k - 2), rel=1e-12)
    assert left_leg == pytest.approx(a * r ** (2 * k - 1), rel=1e-12)


@pytest.mark.parametrize("text", ["doubling", "geom:alpha=0.5,r=3", "geom:r=1.5",
                                  "tailwind-balanced:s=4", "tailwind-balanced:s=2,r=2,alpha=1.5",
                                  "explicit:1,2,4,8"])
def test_strategy_descriptor_round_trip(text):
    strat = parse_strategy(text)
    assert parse_strategy(format_strategy(strat)) == strat


def test_tailwind_descriptor_defaults_to_closed_form():
    assert parse_strategy("tailwind-balanced:s=4") == Strategy.tailwind_balanced(4)


@pytest.mark.parametrize("text", ["halving", "geom:r=0.5", "geom:alpha=1", "geom:r=x", "explicit:",
                                  "doubling:r=3", "tailwind-balanced:r=2", "geom:r"])
def test_strategy_descriptor_rejects(text):
    with pytest.raises((InvalidParameter, InvalidStrategy)):
        parse_strategy(text)


@given(st.floats(min_value=1.0001, max_value=100), st.floats(min_value=1e-3, max_value=1e3))
def test_geom_descriptor_round_trip_property(r, alpha):
    strat = Strategy.geometric(r, alpha)
    assert parse_strategy(format_strategy(strat)) == strat
