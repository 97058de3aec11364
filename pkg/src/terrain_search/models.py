"""Terrain and speed regimes for a robot moving on the line.

Every model answers three questions about a run between two turning points:
how long the whole run takes, how long until an interior point is first
reached, and how fast an omniscient robot reaches a target directly.

Runs are decomposed into phases that are each either uniform motion or
uniform acceleration from a known initial speed.  The positive axis is the
tailwind direction, and downhill for the inclined line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import kinematics
from .errors import InvalidParameter, InvalidRun, OutOfRange

SPEED_KINDS = ("tailwind", "beacon", "history")
ACCEL_KINDS = ("flataccel", "incline", "hill", "valley")
KINDS = ("classic",) + SPEED_KINDS + ACCEL_KINDS

LEFT, RIGHT = "left", "right"
SIDES = (LEFT, RIGHT)

# slack for "point lies on the run" and frontier membership checks
_POS_TOL = 1e-12


@dataclass(frozen=True)
class MotionModel:
    kind: str
    s: float | None = None
    c: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown model kind {self.kind!r}")
        if self.kind in SPEED_KINDS:
            # s = 1 is accepted as the degenerate unit-speed case
            if self.s is None or not self.s >= 1 or math.isinf(self.s):
                raise InvalidParameter(f"{self.kind} needs speed ratio s >= 1, got {self.s!r}")
            if self.c is not None:
                raise InvalidParameter(f"{self.kind} takes no acceleration")
        elif self.kind in ACCEL_KINDS:
            if self.c is None or not self.c > 0 or math.isinf(self.c):
                raise InvalidParameter(f"{self.kind} needs acceleration c > 0, got {self.c!r}")
            if self.s is not None:
                raise InvalidParameter(f"{self.kind} takes no speed ratio")
        elif self.s is not None or self.c is not None:
            raise InvalidParameter("classic model takes no parameters")

    @property
    def b(self) -> float:
        return kinematics.accel_scale(self.c)

    @classmethod
    def classic(cls):
        return cls("classic")

    @classmethod
    def tailwind(cls, s):
        return cls("tailwind", s=float(s))

    @classmethod
    def beacon(cls, s):
        return cls("beacon", s=float(s))

    @classmethod
    def history(cls, s):
        return cls("history", s=float(s))

    @classmethod
    def flataccel(cls, c):
        return cls("flataccel", c=float(c))

    @classmethod
    def incline(cls, c):
        return cls("incline", c=float(c))

    @classmethod
    def hill(cls, c):
        return cls("hill", c=float(c))

    @classmethod
    def valley(cls, c):
        return cls("valley", c=float(c))

    def __str__(self):
        return format_model(self)


@dataclass(frozen=True)
class Run:
    start: float
    end: float
    # False means the run begins with unit speed instead of at rest
    start_at_rest: bool = True

    def __post_init__(self):
        if self.start == self.end:
            raise InvalidRun("zero-length run")

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    @property
    def direction(self) -> int:
        return 1 if self.end > self.start else -1

    def contains(self, p: float) -> bool:
        lo, hi = sorted((self.start, self.end))
        return lo - _POS_TOL <= p <= hi + _POS_TOL


@dataclass(frozen=True)
class Frontier:
    left: float = 0.0
    right: float = 0.0

    def __post_init__(self):
        if self.left > 0 or self.right < 0:
            raise InvalidParameter(f"frontier must satisfy left <= 0 <= right, got {self}")

    def widen(self, p: float) -> Frontier:
        return Frontier(min(self.left, p), max(self.right, p))

    def covers(self, p: float) -> bool:
        return self.left - _POS_TOL <= p <= self.right + _POS_TOL


class Phase(NamedTuple):
    """A stretch of a run with a single motion law.

    ``accel`` is None for uniform motion at ``speed``; otherwise the robot
    accelerates at ``accel`` from initial speed ``speed`` (0 or 1).
    """

    start: float
    end: float
    speed: float
    accel: float | None = None

    @property
    def length(self):
        return abs(self.end - self.start)

    def time_for(self, length):
        if self.accel is None:
            return kinematics.time_const(length, self.speed)
        return kinematics.time_accel(length, self.accel, self.speed)


def _split(start, end, cuts):
    """Split the segment start->end at the given positions that fall strictly inside it."""
    lo, hi = sorted((start, end))
    inner = sorted({p for p in cuts if lo < p < hi}, reverse=end < start)
    points = [start, *inner, end]
    return list(zip(points[:-1], points[1:]))


def _merge(parts):
    """Join consecutive uniform phases with equal speed, so s = 1 reproduces one unit-speed phase."""
    out = []
    for ph in parts:
        if out and ph.accel is None and out[-1].accel is None and ph.speed == out[-1].speed:
            out[-1] = out[-1]._replace(end=ph.end)
        else:
            out.append(ph)
    return out


def _toward_origin(a, b):
    return abs(b) < abs(a)


def phases(model: MotionModel, run: Run, frontier: Frontier) -> list[Phase]:
    """Decompose ``run`` into phases under ``model`` given the explored interval."""
    if not frontier.covers(run.start):
        raise InvalidRun(f"run starts at {run.start} outside explored {frontier}")
    a, b = run.start, run.end
    v_start = 0.0 if run.start_at_rest else 1.0
    kind = model.kind

    if kind == "classic":
        return [Phase(a, b, 1.0)]
    if kind == "tailwind":
        return [Phase(a, b, model.s if b > a else 1.0)]
    if kind == "beacon":
        return _merge([Phase(p, q, model.s if _toward_origin(p, q) else 1.0)
                       for p, q in _split(a, b, [0.0])])
    if kind == "history":
        out = []
        for p, q in _split(a, b, [frontier.left, frontier.right]):
            explored = frontier.covers(0.5 * (p + q))
            out.append(Phase(p, q, model.s if explored else 1.0))
        return _merge(out)
    if kind == "flataccel":
        return [Phase(a, b, v_start, model.c)]
    if kind == "incline":
        if b > a:
            return [Phase(a, b, v_start, model.c)]
        return [Phase(a, b, 1.0)]
    if kind == "hill":
        out = []
        for p, q in _split(a, b, [0.0]):
            if _toward_origin(p, q):
                out.append(Phase(p, q, 1.0))
            else:
                # unit speed over the top; a run leaving from the top starts at rest
                v0 = 1.0 if out else v_start
                out.append(Phase(p, q, v0, model.c))
        return out
    if kind == "valley":
        out = []
        for p, q in _split(a, b, [0.0]):
            if _toward_origin(p, q):
                out.append(Phase(p, q, v_start, model.c))
            else:
                # speed gained downhill is lost at the bottom
                out.append(Phase(p, q, 1.0))
        return out
    raise InvalidParameter(f"unknown model kind {kind!r}")


def run_time(model: MotionModel, run: Run, frontier: Frontier) -> float:
    return sum(ph.time_for(ph.length) for ph in phases(model, run, frontier))


def time_to_point(model: MotionModel, run: Run, frontier: Frontier, p: float) -> float:
    """Elapsed time from the start of ``run`` until it first reaches ``p``."""
    if not run.contains(p):
        raise OutOfRange(f"point {p} is not on run {run.start} -> {run.end}")
    elapsed = 0.0
    for ph in phases(model, run, frontier):
        lo, hi = sorted((ph.start, ph.end))
        if lo - _POS_TOL <= p <= hi + _POS_TOL:
            partial = min(abs(p - ph.start), ph.length)
            return elapsed + ph.time_for(partial)
        elapsed += ph.time_for(ph.length)
    return elapsed


def opt_time(model: MotionModel, d: float, side: str) -> float:
    """Time for a robot that knows the target to travel straight to it."""
    if not d > 0:
        raise InvalidParameter(f"distance must be > 0, got {d!r}")
    if side not in SIDES:
        raise InvalidParameter(f"side must be 'left' or 'right', got {side!r}")
    kind = model.kind
    if kind == "tailwind" and side == RIGHT:
        return d / model.s
    if kind in ("flataccel", "hill") or (kind == "incline" and side == RIGHT):
        return kinematics.time_from_rest(d, model.c)
    return d


def format_model(model: MotionModel) -> str:
    if model.kind == "classic":
        return "classic"
    if model.kind in SPEED_KINDS:
        return f"{model.kind}:s={model.s!r}"
    return f"{model.kind}:c={model.c!r}"


def parse_model(text: str) -> MotionModel:
    """Parse descriptors like ``classic``, ``beacon:s=2`` or ``hill:c=0.5``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind not in KINDS:
        raise InvalidParameter(f"unknown model {text!r}; expected one of {', '.join(KINDS)}")
    params = _parse_params(rest, text)
    if kind == "classic":
        if params:
            raise InvalidParameter(f"classic takes no parameters: {text!r}")
        return MotionModel.classic()
    key = "s" if kind in SPEED_KINDS else "c"
    if set(params) != {key}:
        raise InvalidParameter(f"{kind} expects exactly '{key}=<float>': {text!r}")
    return MotionModel(kind, **{key: params[key]})


def _parse_params(rest: str, text: str) -> dict[str, float]:
    params = {}
    if not rest.strip():
        return params
    for item in rest.split(","):
        key, eq, value = item.partition("=")
        if not eq:
            raise InvalidParameter(f"malformed parameter {item!r} in {text!r}")
        try:
            params[key.strip().lower()] = float(value)
        except ValueError:
            raise InvalidParameter(f"not a number: {value!r} in {text!r}") from None
    return params
