"""Travel-time and position kernels for uniform and uniformly accelerated motion."""

import math

from .errors import InvalidParameter


def _check_length(length):
    if not length >= 0:
        raise InvalidParameter(f"length must be >= 0, got {length!r}")


def _check_accel(c):
    if not c > 0 or math.isinf(c):
        raise InvalidParameter(f"acceleration must be > 0, got {c!r}")


def accel_scale(c: float) -> float:
    """Return b = sqrt(2/c): time to cover distance x from rest is b*sqrt(x)."""
    _check_accel(c)
    return math.sqrt(2.0 / c)


def time_const(length: float, v: float) -> float:
    _check_length(length)
    if not v > 0:
        raise InvalidParameter(f"speed must be > 0, got {v!r}")
    return length / v


def time_from_rest(length: float, c: float) -> float:
    """Time to cover ``length`` starting at rest with acceleration ``c``."""
    _check_length(length)
    _check_accel(c)
    return math.sqrt(2.0 * length / c)


def time_unit_initial(length: float, c: float) -> float:
    """Time to cover ``length`` starting at unit speed with acceleration ``c``.

    Closed form is (sqrt(1 + 2cL) - 1)/c; evaluated as 2L/(sqrt(1 + 2cL) + 1)
    which is algebraically equal and keeps full precision when cL is small.
    """
    _check_length(length)
    _check_accel(c)
    return 2.0 * length / (math.sqrt(1.0 + 2.0 * c * length) + 1.0)


def dist_within_run(t: float, c: float, v0: float = 0.0) -> float:
    """Distance covered after time ``t`` with initial speed ``v0``."""
    if not t >= 0:
        raise InvalidParameter(f"time must be >= 0, got {t!r}")
    _check_accel(c)
    if not v0 >= 0:
        raise InvalidParameter(f"initial speed must be >= 0, got {v0!r}")
    return v0 * t + 0.5 * c * t * t


def time_accel(length: float, c: float, v0: float) -> float:
    """Dispatch to the from-rest (v0 = 0) or unit-speed (v0 = 1) kernel."""
    if v0 == 0:
        return time_from_rest(length, c)
    if v0 == 1:
        return time_unit_initial(length, c)
    raise InvalidParameter(f"initial speed must be 0 or 1, got {v0!r}")
