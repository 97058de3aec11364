"""Zig-zag search execution.

The robot runs turning point to turning point (0 -> +x1 -> -x2 -> +x3 ...)
without pausing at the origin.  A target is found on the first run whose
segment reaches it.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .errors import InvalidParameter, InvalidStrategy, SimulationError
from .models import LEFT, RIGHT, SIDES, Frontier, MotionModel, Run, opt_time, run_time, time_to_point
from .strategy import Strategy, validate


@dataclass
class SearchOutcome:
    total_time: float
    opt_time: float
    ratio: float
    found_on_run: int
    trajectory: list[tuple[Run, float, Frontier]] | None = None


def _signed(d, side):
    return d if side == RIGHT else -d


class Trajectory:
    """Runs of a strategy under a model, materialized on demand.

    ``elapsed[k]`` is the time at which run k ends (``elapsed[0] == 0``) and
    ``frontiers[k]`` the explored interval after run k.
    """

    def __init__(self, model: MotionModel, strat: Strategy):
        self.model = model
        self.strat = strat
        self.runs: list[Run] = []
        self.durations: list[float] = []
        self.elapsed = [0.0]
        self.frontiers = [Frontier()]
        # per side: increasing reach and the run index achieving it
        self._reach = {LEFT: [], RIGHT: []}
        self._run_of = {LEFT: [], RIGHT: []}
        self._points = iter(strat)
        self._exhausted = False

    def _step(self) -> bool:
        try:
            x = next(self._points)
        except StopIteration:
            self._exhausted = True
            return False
        k = len(self.runs) + 1
        side = RIGHT if k % 2 else LEFT
        if not x > 0:
            raise InvalidStrategy(f"turning point x_{k} = {x} is not positive")
        reach = self._reach[side]
        if reach and not x > reach[-1]:
            raise InvalidStrategy(f"turning points violate x_k < x_k+2 at k={k - 2}")
        start = self.runs[-1].end if self.runs else 0.0
        run = Run(start, _signed(x, side))
        frontier = self.frontiers[-1]
        dt = run_time(self.model, run, frontier)
        self.runs.append(run)
        self.durations.append(dt)
        self.elapsed.append(self.elapsed[-1] + dt)
        self.frontiers.append(frontier.widen(run.end))
        reach.append(x)
        self._run_of[side].append(k)
        return True

    def extend_to(self, d: float, side: str) -> bool:
        """Materialize runs until ``side`` is explored out to ``d``; False if impossible."""
        reach = self._reach[side]
        while not (reach and reach[-1] >= d):
            if self._exhausted or not self._step():
                return False
        return True

    def locate(self, d: float, side: str) -> int:
        """1-based index of the first run that reaches distance ``d`` on ``side``."""
        if not self.extend_to(d, side):
            raise SimulationError(f"strategy never reaches {d} on the {side}")
        reach = self._reach[side]
        return self._run_of[side][bisect.bisect_left(reach, d)]

    def time_to_target(self, d: float, side: str) -> tuple[float, int]:
        k = self.locate(d, side)
        run = self.runs[k - 1]
        t = self.elapsed[k - 1] + time_to_point(self.model, run, self.frontiers[k - 1], _signed(d, side))
        return t, k

    def outcome(self, d: float, side: str, log: bool = False) -> SearchOutcome:
        if not d > 0:
            raise InvalidParameter(f"target distance must be > 0, got {d!r}")
        if side not in SIDES:
            raise InvalidParameter(f"side must be 'left' or 'right', got {side!r}")
        total, k = self.time_to_target(d, side)
        opt = opt_time(self.model, d, side)
        traj = None
        if log:
            traj = list(zip(self.runs[:k], self.durations[:k], self.frontiers[1:k + 1]))
        return SearchOutcome(total, opt, total / opt, k, traj)


def search_time(model: MotionModel, strat: Strategy, d: float, side: str,
                log: bool = False) -> SearchOutcome:
    if strat.finite and validate(strat, len(strat.points)) is not None:
        raise InvalidStrategy(f"{strat} violates 0 < x_k < x_k+2")
    return Trajectory(model, strat).outcome(d, side, log=log)


def ratio_curve(model: MotionModel, strat: Strategy, d_grid) -> list[float]:
    """Competitive ratio at each (distance, side) pair, in input order."""
    if strat.finite and validate(strat, len(strat.points)) is not None:
        raise InvalidStrategy(f"{strat} violates 0 < x_k < x_k+2")
    traj = Trajectory(model, strat)
    return [traj.outcome(d, side).ratio for d, side in d_grid]
