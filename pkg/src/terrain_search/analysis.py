"""Competitive-ratio formulas, supremum estimates and the lower-bound recurrence."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameter, UnsupportedModel
from .models import LEFT, RIGHT, MotionModel
from .simulator import Trajectory
from .strategy import Strategy, tailwind_alpha, tailwind_r, turning_points

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

# relative offset placing a target just past a turning point
EPS_PAST = 1e-9


@dataclass
class CrReport:
    sup_ratio: float
    argmax_d: float
    argmax_side: str
    grid_size: int
    d_max: float


def sup_grid(strat: Strategy, d_max: float, grid_density: int) -> list[tuple[float, str]]:
    """Distances at which the ratio is probed: just past every turning point, plus a log grid."""
    ds = {x * (1.0 + EPS_PAST) for x in turning_points(strat, d_max) if x <= d_max}
    n = max(2, math.ceil(grid_density * math.log10(d_max)) + 1)
    ds.update(np.geomspace(1.0, d_max, n).tolist())
    ds = sorted(d for d in ds if d >= 1.0)
    return [(d, side) for d in ds for side in (RIGHT, LEFT)]


def cr_estimate(model: MotionModel, strat: Strategy, d_max: float,
                grid_density: int = 32) -> CrReport:
    """Estimate sup over d >= 1 of the ratio; worst cases sit just past turning points."""
    if not d_max >= 2:
        raise InvalidParameter(f"d_max must be >= 2, got {d_max!r}")
    if grid_density < 8:
        raise InvalidParameter(f"grid_density must be >= 8, got {grid_density!r}")
    grid = sup_grid(strat, d_max, grid_density)
    traj = Trajectory(model, strat)
    best = (-math.inf, 0.0, RIGHT)
    for d, side in grid:
        ratio = traj.outcome(d, side).ratio
        if ratio > best[0]:
            best = (ratio, d, side)
    return CrReport(best[0], best[1], best[2], len(grid), d_max)


# ---------------------------------------------------------------- tailwind

@dataclass
class TailwindParams:
    s: float
    r: float
    alpha: float
    delta: float
    sigma_plus: float
    sigma_minus: float
    cr_upper: float
    cr_lower: float


def tailwind_sigma_plus(s, r, alpha):
    """Ratio bound for targets on the fast (right) side."""
    return 1.0 + (1.0 + s) * (1.0 + alpha * r / s) * r * r / (r * r - 1.0)


def tailwind_sigma_minus(s, r, alpha):
    """Ratio bound for targets on the slow (left) side."""
    return 1.0 + r * r / (r * r - 1.0) * (1.0 + s) * (r / alpha + 1.0 / s)


def tailwind_cr_upper(s: float) -> float:
    q = math.sqrt(s)
    inner = math.sqrt((s - 1.0) ** 2 + 8.0 * s + 4.0 * q * (s + 1.0))
    return 1.0 + (s + 2.0 * q + 1.0) / (s + q + 1.0) * (s + 1.0) / (2.0 * s) * (s + 1.0 + inner)


def tailwind_closed_form(s: float) -> TailwindParams:
    if not s >= 1:
        raise InvalidParameter(f"tailwind needs s >= 1, got {s!r}")
    r = tailwind_r(s)
    alpha = tailwind_alpha(s, r)
    return TailwindParams(
        s=s, r=r, alpha=alpha,
        delta=(s - 1.0) ** 2 + 4.0 * r * r * s,
        sigma_plus=tailwind_sigma_plus(s, r, alpha),
        sigma_minus=tailwind_sigma_minus(s, r, alpha),
        cr_upper=tailwind_cr_upper(s),
        cr_lower=2.0 + 1.0 / s,
    )


def tailwind_balance_residual(s: float, r: float, alpha: float) -> float:
    """Zero exactly when the left- and right-side ratio bounds coincide."""
    return (1.0 + alpha * r / s) - (r / alpha + 1.0 / s)


def tailwind_quartic(s: float) -> np.ndarray:
    """Coefficients (highest degree first) of the quartic in R = r^2 whose root minimizes the ratio."""
    return np.array([s, -6.0 * s, 9.0 * s - (s - 1.0) ** 2, 2.0 * s * s - 8.0 * s + 2.0,
                     -(s - 1.0) ** 2])


def _newton(coeffs, x, iters=50):
    deriv = np.polyder(coeffs)
    for _ in range(iters):
        fx, dfx = np.polyval(coeffs, x), np.polyval(deriv, x)
        if fx == 0 or dfx == 0:
            break
        step = fx / dfx
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def real_roots(coeffs, imag_tol: float = 1e-6, cluster_tol: float = 1e-3) -> list[float]:
    """Real roots with multiplicity: companion-matrix eigenvalues, then Newton polishing.

    A root of multiplicity m comes back as m eigenvalues scattered around it
    (by about eps**(1/m)), some off the real axis.  Eigenvalues are grouped by
    distance in the complex plane; a group whose centroid is real counts as a
    real root of that multiplicity and is polished as a simple root of the
    (m-1)-th derivative.
    """
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    raw = sorted(np.roots(coeffs).tolist(), key=lambda z: (z.real, z.imag))
    clusters: list[list[complex]] = []
    for z in raw:
        for cl in clusters:
            centre = sum(cl) / len(cl)
            if abs(z - centre) <= cluster_tol * max(1.0, abs(centre)):
                cl.append(z)
                break
        else:
            clusters.append([z])
    out = []
    for cl in clusters:
        centre = sum(cl) / len(cl)
        if abs(centre.imag) > imag_tol * max(1.0, abs(centre)):
            continue
        m = len(cl)
        target = coeffs
        for _ in range(m - 1):
            target = np.polyder(target)
        x = _newton(target, float(centre.real))
        out.extend([float(x)] * m)
    return sorted(out)


def tailwind_quartic_roots(s: float) -> list[float]:
    if not s >= 1:
        raise InvalidParameter(f"tailwind needs s >= 1, got {s!r}")
    return real_roots(tailwind_quartic(s))


# ------------------------------------------------------ beacon and history

def beacon_cr(s: float) -> float:
    if not s >= 1:
        raise InvalidParameter(f"beacon needs s >= 1, got {s!r}")
    return 5.0 + 4.0 / s


def history_cr(s: float, r: float) -> float:
    """Ratio of the geometric strategy 1, r, r^2, ... when explored ground is crossed at speed s."""
    if not r > 1:
        raise InvalidParameter(f"expansion factor must be > 1, got {r!r}")
    if not s >= 1:
        raise InvalidParameter(f"history needs s >= 1, got {s!r}")
    return (1.0 + 1.0 / s) * r + 2.0 * r / (s * (r - 1.0)) + 1.0


def history_optimal(s: float) -> tuple[float, float]:
    if not s >= 1:
        raise InvalidParameter(f"history needs s >= 1, got {s!r}")
    r = 1.0 + math.sqrt(2.0 / (s + 1.0))
    return r, 2.0 + (3.0 + 2.0 * math.sqrt(2.0 * s + 2.0)) / s


def history_lower(s: float) -> float:
    return 2.0 + 1.0 / s


# ---------------------------------------------------- acceleration models

def flat_accel_bounds() -> tuple[float, float]:
    lower = 3.0 * (SQRT2 + 1.0 / SQRT2)
    upper = 2.0 * SQRT3 / (SQRT2 - 1.0) + SQRT3 + 1.0
    return lower, upper


def _check_cd(c, d):
    if not c > 0:
        raise InvalidParameter(f"acceleration must be > 0, got {c!r}")
    if not d >= 1:
        raise InvalidParameter(f"distance must be >= 1, got {d!r}")


def inclined_bounds(c: float, d: float) -> tuple[float, float, float]:
    """(any-strategy lower bound at d, doubling lower growth, doubling upper growth without O(1))."""
    _check_cd(c, d)
    per_d_lower = min(2.0 + math.sqrt(2.0 / (c * d)), SQRT2 + math.sqrt(c * d / 2.0))
    return per_d_lower, math.sqrt(2.0 * c * d), math.sqrt(8.0 * c * d)


def hill_lower(c: float, d: float) -> float:
    _check_cd(c, d)
    b = math.sqrt(2.0 / c)
    return 1.0 + math.sqrt(d) / b + math.sqrt(1.0 / (c * c * b * b * d) + 1.0)


def hill_lower_tight(c: float, d: float) -> float:
    """Ratio of the forced path 0 -> -d -> 0 -> +d, keeping the -1/c of the downhill kernel.

    Differs from ``hill_lower`` by 1/(c*b*sqrt(d)); only this form is attained
    (by doubling at d = 1).
    """
    _check_cd(c, d)
    b = math.sqrt(2.0 / c)
    downhill = (math.sqrt(1.0 + 2.0 * c * d) - 1.0) / c
    return 1.0 + math.sqrt(d) / b + downhill / (b * math.sqrt(d))


def valley_bounds(c: float, d: float) -> tuple[float, float]:
    _check_cd(c, d)
    b = math.sqrt(2.0 / c)
    return 5.0, 5.0 + 2.0 * b / ((SQRT2 - 1.0) * math.sqrt(d))


# ------------------------------------------------------------ feasibility

@dataclass
class FeasibilityTrace:
    mu0: float
    nu0: float
    iterations: list[tuple[float, float]] = field(default_factory=list)
    feasible: bool = True
    infeasible_at: int | None = None
    discriminant: float = 0.0

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else f"infeasible-at-index {self.infeasible_at}"


_RESCALE_AT = 1e100


def feasibility_test(mu0: float, budget: int = 200) -> FeasibilityTrace:
    """Iterate mu' = mu0*mu - nu, nu' = mu + nu from (mu0, 1) and look for mu <= 0.

    A strategy with ratio sigma exists only if every mu stays positive, which
    happens exactly when the discriminant (mu0 - 1)^2 - 4 is nonnegative
    (for mu0 > 0).  Iterates are rescaled jointly when large; only signs matter.
    """
    if budget < 1:
        raise InvalidParameter(f"budget must be >= 1, got {budget!r}")
    nu0 = 1.0
    trace = FeasibilityTrace(mu0=mu0, nu0=nu0, discriminant=(mu0 - 1.0) ** 2 - 4.0)
    mu, nu = mu0, nu0
    trace.iterations.append((mu, nu))
    if mu <= 0:
        trace.feasible, trace.infeasible_at = False, 0
        return trace
    for m in range(1, budget + 1):
        mu, nu = mu0 * mu - nu, nu0 * mu + nu
        scale = max(abs(mu), abs(nu))
        if scale > _RESCALE_AT:
            mu, nu = mu / scale, nu / scale
        trace.iterations.append((mu, nu))
        if mu <= 0:
            trace.feasible, trace.infeasible_at = False, m
            break
    return trace


def sigma_to_mu0(model: MotionModel, sigma: float) -> float:
    kind = model.kind
    if kind in ("classic", "beacon"):
        s = 1.0 if kind == "classic" else model.s
        return (sigma - (2.0 + 1.0 / s)) / (1.0 + 1.0 / s)
    if kind == "flataccel":
        return (sigma - 3.0 / SQRT2) / SQRT2
    if kind == "valley":
        return sigma - 2.0
    raise UnsupportedModel(f"no lower-bound recurrence for {kind}")


def optimal_cr(model: MotionModel) -> float:
    """The ratio threshold at which the recurrence becomes feasible (mu0 = 3)."""
    kind = model.kind
    if kind == "classic":
        return 9.0
    if kind == "beacon":
        return beacon_cr(model.s)
    if kind == "flataccel":
        return flat_accel_bounds()[0]
    if kind == "valley":
        return 5.0
    raise UnsupportedModel(f"no lower-bound recurrence for {kind}")


def lower_bound(model: MotionModel, d: float | None = None) -> float:
    """A proven lower bound on the ratio of any strategy (per distance where it depends on d)."""
    kind = model.kind
    if kind == "classic":
        return 9.0
    if kind == "tailwind":
        return 2.0 + 1.0 / model.s
    if kind == "beacon":
        return beacon_cr(model.s)
    if kind == "history":
        return history_lower(model.s)
    if kind == "flataccel":
        return flat_accel_bounds()[0]
    if kind == "valley":
        return 5.0
    if d is None:
        raise InvalidParameter(f"{kind} lower bound depends on the distance d")
    if kind == "incline":
        return inclined_bounds(model.c, d)[0]
    return hill_lower_tight(model.c, d)
