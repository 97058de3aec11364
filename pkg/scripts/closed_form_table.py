"""Closed-form competitive ratios next to simulated suprema, one row per model setting."""

import argparse

from terrain_search import MotionModel, Strategy, cr_estimate
from terrain_search.analysis import beacon_cr, flat_accel_bounds, history_optimal, tailwind_cr_upper


def rows(d_max, density):
    d = Strategy.doubling()
    yield "classic", "doubling", 9.0, cr_estimate(MotionModel.classic(), d, d_max, density)
    for s in (1.5, 2.0, 4.0, 8.0):
        yield f"beacon s={s:g}", "doubling", beacon_cr(s), cr_estimate(MotionModel.beacon(s), d, d_max, density)
    for s in (2.0, 3.0, 4.0):
        r, cr = history_optimal(s)
        yield (f"history s={s:g}", f"geom r={r:.4f}", cr,
               cr_estimate(MotionModel.history(s), Strategy.geometric(r), d_max, density))
    for s in (1.0, 2.0, 4.0, 10.0):
        yield (f"tailwind s={s:g}", "tailwind-balanced", tailwind_cr_upper(s),
               cr_estimate(MotionModel.tailwind(s), Strategy.tailwind_balanced(s), d_max, density))
    lo, hi = flat_accel_bounds()
    yield f"flataccel [{lo:.4f}, {hi:.4f}]", "doubling", None, cr_estimate(MotionModel.flataccel(1), d, d_max, density)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=float, default=2.0 ** 20)
    ap.add_argument("--grid-density", type=int, default=32)
    args = ap.parse_args()
    print(f"{'model':<28} {'strategy':<20} {'formula':>10} {'simulated':>10} {'rel gap':>9}")
    for name, strat, formula, rep in rows(args.d_max, args.grid_density):
        if formula is None:
            print(f"{name:<28} {strat:<20} {'':>10} {rep.sup_ratio:>10.6f} {'':>9}")
        else:
            gap = (rep.sup_ratio - formula) / formula
            print(f"{name:<28} {strat:<20} {formula:>10.6f} {rep.sup_ratio:>10.6f} {gap:>9.2e}")


if __name__ == "__main__":
    main()
