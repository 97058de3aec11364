"""Strategy-parameter minimization and a brute-force adversary probe."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import analysis
from .errors import BracketError, InvalidGrid, InvalidParameter, UnsupportedModel
from .models import LEFT, RIGHT, Frontier, MotionModel, Run, opt_time, run_time, time_to_point
from .strategy import Strategy, tailwind_alpha

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0

FAMILIES = ("geom", "tailwind-balanced")
OBJECTIVES = ("closed-form", "simulated")


@dataclass
class OptResult:
    r: float
    alpha: float | None
    best_cr: float
    evaluations: int
    bracket: tuple[float, float]

    @property
    def best_params(self):
        return (self.r, self.alpha)


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-6):
    """Minimize a unimodal ``f`` on [lo, hi].

    Returns (x_best, f_best, evaluations).  Raises BracketError when one of
    the first interior probes is worse than both endpoints, which a unimodal
    function cannot produce.
    """
    f_lo, f_hi = f(lo), f(hi)
    a, b = lo, hi
    h = b - a
    c, d = a + INV_PHI2 * h, a + INV_PHI * h
    fc, fd = f(c), f(d)
    evals = 4
    worst_end = max(f_lo, f_hi)
    if fc > worst_end or fd > worst_end:
        raise BracketError(f"objective not unimodal on [{lo}, {hi}]: interior probe exceeds both ends")
    best = min((f_lo, lo), (f_hi, hi), (fc, c), (fd, d))
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = f(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
            best = min(best, (fd, d))
        evals += 1
    return best[1], best[0], evals


def _closed_form_objective(model, family):
    if family == "geom" and model.kind in ("history", "classic"):
        s = model.s if model.kind == "history" else 1.0
        return lambda r: analysis.history_cr(s, r)
    if family == "tailwind-balanced" and model.kind in ("tailwind", "classic"):
        s = model.s if model.kind == "tailwind" else 1.0
        return lambda r: analysis.tailwind_sigma_plus(s, r, tailwind_alpha(s, r))
    raise UnsupportedModel(f"no closed-form objective for {model.kind} with family {family}")


def _strategy_for(model, family, r):
    if family == "geom":
        return Strategy.geometric(r)
    s = model.s if model.kind == "tailwind" else 1.0
    return Strategy.tailwind_balanced(s, r)


def minimize_cr(model: MotionModel, family: str = "geom", r_bracket=(1.01, 4.0),
                objective: str = "closed-form", d_max: float = 2.0 ** 16,
                grid_density: int = 16, tol: float = 1e-6) -> OptResult:
    """Find the expansion factor minimizing the competitive ratio.

    For the tailwind family the scale alpha follows r through the balance
    condition.  The simulated objective is the supremum estimate up to d_max.
    """
    lo, hi = map(float, r_bracket)
    if not 1 < lo < hi:
        raise InvalidParameter(f"bracket must satisfy 1 < lo < hi, got {r_bracket!r}")
    if family not in FAMILIES:
        raise InvalidParameter(f"family must be one of {FAMILIES}, got {family!r}")
    if objective == "closed-form":
        f = _closed_form_objective(model, family)
    elif objective == "simulated":
        def f(r):
            return analysis.cr_estimate(model, _strategy_for(model, family, r), d_max, grid_density).sup_ratio
    else:
        raise InvalidParameter(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    r, cr, evals = golden_section(f, lo, hi, tol)
    alpha = None
    if family == "tailwind-balanced":
        alpha = _strategy_for(model, family, r).alpha
    return OptResult(r, alpha, cr, evals, (lo, hi))


# ------------------------------------------------------------ adversary

MAX_TURNS = 6
MAX_GRID = 24


def adversary_oracle(model: MotionModel, num_turns: int, grid) -> float:
    """min over grid strategies of max over adversarial targets of the ratio.

    The robot makes ``num_turns`` reversals (num_turns + 1 runs) with turning
    points drawn from ``grid``.  The adversary may place the target at
    distance min(grid) on either side, or just past any turning point that a
    later run on the same side goes beyond.  Both players are restricted, so
    the value is only an approximation of the true minimax ratio.
    """
    grid = [float(g) for g in grid]
    if not 1 <= num_turns <= MAX_TURNS:
        raise InvalidParameter(f"num_turns must be in [1, {MAX_TURNS}], got {num_turns!r}")
    if not grid or len(grid) > MAX_GRID:
        raise InvalidGrid(f"grid must have 1..{MAX_GRID} points, got {len(grid)}")
    if grid[0] <= 0 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidGrid("grid must be positive and strictly increasing")
    n_runs = num_turns + 1
    # each side needs ceil(n_runs / 2) strictly increasing values
    if len(grid) < (n_runs + 1) // 2:
        raise InvalidGrid(f"{len(grid)} grid points cannot support {n_runs} expanding runs")

    g_min = grid[0]
    eps = analysis.EPS_PAST
    best = math.inf

    def ratio(xs, elapsed, frontiers, runs, d, side):
        # first run reaching d on that side
        sign = 1 if side == RIGHT else -1
        for k in range(len(runs)):
            if (k % 2 == 0) == (side == RIGHT) and xs[k] >= d:
                t = elapsed[k] + time_to_point(model, runs[k], frontiers[k], sign * d)
                return t / opt_time(model, d, side)
        raise AssertionError("placement not covered")

    def dfs(xs, elapsed, frontiers, runs, worst):
        nonlocal best
        m = len(xs)
        if m == n_runs:
            best = min(best, worst)
            return
        for x in grid:
            if m >= 2 and not x > xs[m - 2]:
                continue
            side = RIGHT if m % 2 == 0 else LEFT
            end = x if side == RIGHT else -x
            run = Run(runs[-1].end if runs else 0.0, end)
            dt = run_time(model, run, frontiers[-1])
            nxs = xs + [x]
            nel = elapsed + [elapsed[-1] + dt]
            nfr = frontiers + [frontiers[-1].widen(end)]
            nruns = runs + [run]
            w = worst
            if m + 1 == 2:
                w = max(w, ratio(nxs, nel, nfr, nruns, g_min, RIGHT),
                        ratio(nxs, nel, nfr, nruns, g_min, LEFT))
            if m + 1 >= 3:
                # x_{m-1} is now overtaken on its side
                prev = xs[m - 2]
                w = max(w, ratio(nxs, nel, nfr, nruns, prev * (1 + eps), side))
            if w >= best:
                continue
            dfs(nxs, nel, nfr, nruns, w)

    dfs([], [0.0], [Frontier()], [], -math.inf)
    return best
