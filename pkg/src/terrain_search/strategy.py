"""Turning-point sequences for zig-zag search.

Odd-indexed turning points lie right of the origin, even-indexed ones left.
A strategy is usable when every x_k is positive and each side keeps
expanding (x_k < x_{k+2}).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidParameter, InvalidStrategy

FAMILIES = ("doubling", "geom", "tailwind-balanced", "explicit")


def tailwind_alpha(s: float, r: float) -> float:
    """Positive root of r*a^2 + (s - 1)*a - r*s = 0, the time-balancing scale."""
    delta = (s - 1.0) ** 2 + 4.0 * r * r * s
    # 1 - s + sqrt(delta) loses digits for large s; use the conjugate form
    return 2.0 * s * r / (s - 1.0 + math.sqrt(delta))


def tailwind_r(s: float) -> float:
    return math.sqrt(2.0 + (s + 1.0) / math.sqrt(s))


@dataclass(frozen=True)
class Strategy:
    family: str
    r: float = 2.0
    alpha: float = 1.0
    s: float | None = None
    points: tuple[float, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidStrategy(f"unknown strategy family {self.family!r}")
        if self.family == "explicit":
            if not self.points:
                raise InvalidStrategy("explicit strategy needs at least one turning point")
            object.__setattr__(self, "points", tuple(float(x) for x in self.points))
            return
        if not self.r > 1 or math.isinf(self.r):
            raise InvalidStrategy(f"expansion factor must be > 1, got {self.r!r}")
        if not self.alpha > 0 or math.isinf(self.alpha):
            raise InvalidStrategy(f"alpha must be > 0, got {self.alpha!r}")
        if self.family == "tailwind-balanced" and (self.s is None or not self.s >= 1):
            raise InvalidStrategy(f"tailwind-balanced needs s >= 1, got {self.s!r}")

    @classmethod
    def doubling(cls):
        return cls("doubling")

    @classmethod
    def geometric(cls, r, alpha=1.0):
        return cls("geom", r=float(r), alpha=float(alpha))

    @classmethod
    def tailwind_balanced(cls, s, r=None, alpha=None):
        s = float(s)
        if s < 1:
            raise InvalidStrategy(f"tailwind-balanced needs s >= 1, got {s!r}")
        r = tailwind_r(s) if r is None else float(r)
        if alpha is None:
            alpha = tailwind_alpha(s, r)
        return cls("tailwind-balanced", r=r, alpha=float(alpha), s=s)

    @classmethod
    def explicit(cls, points):
        return cls("explicit", points=tuple(points))

    @property
    def finite(self) -> bool:
        return self.family == "explicit"

    def x(self, k: int) -> float:
        """The k-th turning distance, k >= 1."""
        if k < 1:
            raise InvalidParameter(f"turning points are 1-indexed, got {k}")
        if self.family == "doubling":
            return 2.0 ** (k - 1)
        if self.family == "geom":
            return self.alpha * self.r ** (k - 1)
        if self.family == "tailwind-balanced":
            if k % 2:
                return self.s * self.r ** (k - 1)
            return self.alpha * self.r ** (k - 1)
        if k > len(self.points):
            raise IndexError(f"explicit strategy has only {len(self.points)} turning points")
        return self.points[k - 1]

    def __iter__(self) -> Iterator[float]:
        if self.finite:
            return iter(self.points)
        return (self.x(k) for k in itertools.count(1))

    def __str__(self):
        return format_strategy(self)


def turning_points(strat: Strategy, d_max: float) -> list[float]:
    """Shortest prefix that reaches at least ``d_max`` on both sides of the origin."""
    if not d_max > 0:
        raise InvalidParameter(f"d_max must be > 0, got {d_max!r}")
    out = []
    reach = [0.0, 0.0]  # [left, right]
    for k, x in enumerate(strat, start=1):
        out.append(x)
        side = k % 2
        reach[side] = max(reach[side], x)
        if min(reach) >= d_max:
            break
    else:
        raise InvalidStrategy(f"explicit strategy does not reach {d_max} on both sides")
    bad = validate(strat, len(out))
    if bad is not None:
        raise InvalidStrategy(f"turning points violate 0 < x_k < x_k+2 at k={bad}")
    return out


def validate(strat: Strategy, prefix_len: int) -> int | None:
    """Return the first 1-based index k where x_k <= 0 or x_k >= x_{k+2}, else None."""
    if strat.finite:
        prefix_len = min(prefix_len, len(strat.points))
    xs = list(itertools.islice(strat, prefix_len))
    for k, x in enumerate(xs, start=1):
        if not x > 0:
            return k
        if k + 2 <= len(xs) and not x < xs[k + 1]:
            return k
    return None


def format_strategy(strat: Strategy) -> str:
    if strat.family == "doubling":
        return "doubling"
    if strat.family == "geom":
        return f"geom:alpha={strat.alpha!r},r={strat.r!r}"
    if strat.family == "tailwind-balanced":
        return f"tailwind-balanced:s={strat.s!r},r={strat.r!r},alpha={strat.alpha!r}"
    return "explicit:" + ",".join(repr(x) for x in strat.points)


def parse_strategy(text: str) -> Strategy:
    """Parse ``doubling``, ``geom:alpha=1,r=2``, ``tailwind-balanced:s=4`` or ``explicit:1,2,4``."""
    family, _, rest = text.strip().partition(":")
    family = family.strip().lower()
    try:
        if family == "doubling":
            if rest.strip():
                raise InvalidParameter(f"doubling takes no parameters: {text!r}")
            return Strategy.doubling()
        if family == "explicit":
            return Strategy.explicit(float(v) for v in rest.split(",") if v.strip())
        params = {}
        for item in filter(None, (p.strip() for p in rest.split(","))):
            key, eq, value = item.partition("=")
            if not eq:
                raise InvalidParameter(f"malformed parameter {item!r} in {text!r}")
            params[key.strip().lower()] = float(value)
    except ValueError as exc:
        if isinstance(exc, InvalidParameter):
            raise
        raise InvalidParameter(f"cannot parse strategy {text!r}: {exc}") from None
    if family == "geom":
        if not set(params) <= {"alpha", "r"} or "r" not in params:
            raise InvalidParameter(f"geom expects r=<f>[,alpha=<f>]: {text!r}")
        return Strategy.geometric(params["r"], params.get("alpha", 1.0))
    if family == "tailwind-balanced":
        if not set(params) <= {"s", "r", "alpha"} or "s" not in params:
            raise InvalidParameter(f"tailwind-balanced expects s=<f>[,r=<f>,alpha=<f>]: {text!r}")
        return Strategy.tailwind_balanced(params["s"], params.get("r"), params.get("alpha"))
    raise InvalidParameter(f"unknown strategy {text!r}; expected one of {', '.join(FAMILIES)}")
