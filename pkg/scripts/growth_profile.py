"""Worst-side ratio of doubling on the acceleration terrains, scaled by sqrt(d).

Targets sit just past every power of two, so the output shows how the scaled
ratio alternates between consecutive octaves instead of settling.
Writes CSV to stdout.
"""

import argparse
import csv
import math
import sys

from terrain_search import MotionModel, Strategy
from terrain_search.analysis import EPS_PAST, hill_lower_tight, inclined_bounds, valley_bounds
from terrain_search.simulator import Trajectory


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--c", type=float, default=2.0)
    ap.add_argument("--max-exp", type=int, default=20)
    args = ap.parse_args()
    c = args.c
    models = {"incline": MotionModel.incline(c), "hill": MotionModel.hill(c), "valley": MotionModel.valley(c)}
    trajs = {k: Trajectory(m, Strategy.doubling()) for k, m in models.items()}
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["k", "d", "model", "worst_ratio", "ratio_over_sqrt_d", "reference"])
    for k in range(args.max_exp + 1):
        d = 2.0 ** k * (1 + EPS_PAST)
        refs = {"incline": inclined_bounds(c, d)[1], "hill": hill_lower_tight(c, d), "valley": valley_bounds(c, d)[1]}
        for name, traj in trajs.items():
            worst = max(traj.outcome(d, side).ratio for side in ("left", "right"))
            out.writerow([k, format(d, ".10g"), name, format(worst, ".10g"),
                          format(worst / math.sqrt(d), ".6g"), format(refs[name], ".10g")])


if __name__ == "__main__":
    main()
