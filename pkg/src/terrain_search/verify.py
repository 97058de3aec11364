"""Numerical cross-checks of the closed forms, the recurrence thresholds and the growth bounds."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any

from . import analysis
from .models import LEFT, RIGHT, MotionModel
from .simulator import Trajectory
from .strategy import Strategy

SUITES = ("closed-forms", "feasibility", "sandwich")

D_MAX = 2.0 ** 20
DOUBLING = Strategy.doubling()


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    tolerance: float | None
    passed: bool

    def to_dict(self):
        return asdict(self)


def _close(name, expected, actual, rel=None, abs_=None):
    tol = rel if rel is not None else abs_
    if rel is not None:
        ok = abs(actual - expected) <= rel * abs(expected)
    else:
        ok = abs(actual - expected) <= abs_
    return Check(name, expected, actual, tol, bool(ok))


def _within(name, lo, hi, actual):
    return Check(name, [lo, hi], actual, None, bool(lo <= actual <= hi))


def worst_ratio(model, d, strat=DOUBLING):
    traj = Trajectory(model, strat)
    return max(traj.outcome(d, side).ratio for side in (LEFT, RIGHT))


def closed_form_checks() -> list[Check]:
    out = []
    for s, want in ((1.0, 9.0), (4.0, 12.25)):
        out.append(_close(f"tailwind cr_upper s={s:g}", want, analysis.tailwind_cr_upper(s), rel=1e-12))
    for s in (1.0, 1.5, 2.0, 4.0, 10.0):
        p = analysis.tailwind_closed_form(s)
        out.append(_close(f"tailwind balance s={s:g}", 0.0,
                          analysis.tailwind_balance_residual(s, p.r, p.alpha), abs_=1e-10))
        out.append(_close(f"tailwind sigma+ = cr_upper s={s:g}", p.cr_upper, p.sigma_plus, rel=1e-10))
        want = 2.0 + (s + 1.0) / math.sqrt(s)
        roots = analysis.tailwind_quartic_roots(s)
        nearest = min(roots, key=lambda x: abs(x - want))
        out.append(_close(f"tailwind quartic root s={s:g}", want, nearest, abs_=1e-6))
    for s, want in ((1.0, 9.0), (2.0, 7.0), (4.0, 6.0)):
        out.append(_close(f"beacon cr s={s:g}", want, analysis.beacon_cr(s), abs_=1e-12))
    for s, want in ((1.0, 9.0), (2.0, 5.95), (3.0, 4.88), (4.0, 4.33)):
        r, cr = analysis.history_optimal(s)
        # quoted to two decimals, truncated rather than rounded at s=3
        out.append(_close(f"history optimal cr s={s:g}", want, cr, abs_=1e-2))
        out.append(_close(f"history cr(r*) consistency s={s:g}", cr, analysis.history_cr(s, r), rel=1e-12))
    lo, hi = analysis.flat_accel_bounds()
    out.append(_close("flat accel lower", 6.36396, lo, abs_=1e-5))
    out.append(_close("flat accel upper", 11.0952, hi, abs_=1e-4))

    sims = [
        ("classic doubling", MotionModel.classic(), DOUBLING, 9.0),
        ("beacon s=2 doubling", MotionModel.beacon(2), DOUBLING, 7.0),
        ("history s=2 optimal r", MotionModel.history(2),
         Strategy.geometric(analysis.history_optimal(2)[0]), analysis.history_optimal(2)[1]),
        ("tailwind s=4 balanced", MotionModel.tailwind(4), Strategy.tailwind_balanced(4), 12.25),
    ]
    for name, model, strat, want in sims:
        got = analysis.cr_estimate(model, strat, D_MAX, 32).sup_ratio
        out.append(_close(f"simulated sup {name}", want, got, rel=1e-2))
    return out


FEASIBILITY_CASES = (
    ("classic", MotionModel.classic()),
    ("beacon s=2", MotionModel.beacon(2)),
    ("flataccel", MotionModel.flataccel(1)),
    ("valley", MotionModel.valley(1)),
)


def feasibility_checks(budget: int = 500) -> list[Check]:
    out = []
    for name, model in FEASIBILITY_CASES:
        sigma = analysis.optimal_cr(model)
        at = analysis.feasibility_test(analysis.sigma_to_mu0(model, sigma), budget)
        below = analysis.feasibility_test(analysis.sigma_to_mu0(model, sigma * (1 - 1e-3)), budget)
        out.append(Check(f"feasible at sigma*={sigma:.6g} ({name})", "feasible", at.verdict, None, at.feasible))
        out.append(Check(f"infeasible below sigma* ({name})", "infeasible", below.verdict, None,
                         not below.feasible))
        out.append(Check(f"discriminant sign below sigma* ({name})", "<0", below.discriminant, None,
                         below.discriminant < 0))
    return out


def sandwich_checks() -> list[Check]:
    out = []
    lo, hi = analysis.flat_accel_bounds()
    sups = [analysis.cr_estimate(MotionModel.flataccel(c), DOUBLING, D_MAX, 32).sup_ratio
            for c in (0.5, 2.0, 8.0)]
    out.append(_within("flat accel doubling sup", lo, hi, sups[0]))
    out.append(_close("flat accel sup independent of c", sups[0], max(sups, key=lambda v: abs(v - sups[0])),
                      rel=1e-9))

    c = 2.0
    incline = MotionModel.incline(c)
    for d in (1e2, 1e4, 1e6):
        got = worst_ratio(incline, d)
        per_d, lo_g, hi_g = analysis.inclined_bounds(c, d)
        out.append(Check(f"incline d={d:g} strict lower sqrt(2c d)", f">{lo_g:.6g}", got, None, got > lo_g))
        out.append(Check(f"incline d={d:g} upper sqrt(8c d)+10", f"<={hi_g + 10:.6g}", got, 10.0,
                         got <= hi_g + 10))
        out.append(Check(f"incline d={d:g} any-strategy lower", f">={per_d:.6g}", got, None, got >= per_d))

    hill = MotionModel.hill(c)
    for d in (1e2, 1e4, 1e6):
        got = worst_ratio(hill, d)
        bound = analysis.hill_lower(c, d)
        out.append(Check(f"hill d={d:g} above lower bound", f">={bound:.6g}", got, None, got >= bound))
    hill_traj = Trajectory(hill, DOUBLING)
    ds = sorted({d for d, _ in analysis.sup_grid(DOUBLING, 1e6, 32)})
    slack = min(max(hill_traj.outcome(d, s).ratio for s in (LEFT, RIGHT)) - analysis.hill_lower_tight(c, d)
                for d in ds)
    out.append(Check("hill tight lower bound on [1, 1e6]", ">=0 slack", slack, 1e-12, slack >= -1e-12))
    g4 = worst_ratio(hill, 1e4) / 1e2
    g6 = worst_ratio(hill, 1e6) / 1e3
    out.append(_close("hill sigma/sqrt(d) at 1e4 vs 1e6", g4, g6, rel=0.10))

    valley = MotionModel.valley(c)
    grid = analysis.sup_grid(DOUBLING, 1e6, 32)
    traj = Trajectory(valley, DOUBLING)
    slack = min(analysis.valley_bounds(c, d)[1] - traj.outcome(d, side).ratio for d, side in grid)
    out.append(Check("valley pointwise upper bound on [1, 1e6]", ">=0 slack", slack, None, slack >= 0))
    far = max(traj.outcome(d, side).ratio for d, side in grid if d >= 1e4)
    out.append(_within("valley sup over d >= 1e4", 5.0, 5.1, far))
    return out


def run_suite(suite: str) -> list[Check]:
    if suite == "closed-forms":
        return closed_form_checks()
    if suite == "feasibility":
        return feasibility_checks()
    if suite == "sandwich":
        return sandwich_checks()
    if suite == "all":
        return closed_form_checks() + feasibility_checks() + sandwich_checks()
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
