"""Brute-force minimax ratio by number of turns on a small geometric grid."""

import argparse

from terrain_search import MotionModel, adversary_oracle, parse_model


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--models", nargs="+", default=["classic", "beacon:s=2", "history:s=2", "valley:c=2"])
    ap.add_argument("--ratio", type=float, default=2.0, help="grid spacing factor")
    ap.add_argument("--points", type=int, default=6)
    ap.add_argument("--max-turns", type=int, default=5)
    args = ap.parse_args()
    grid = [args.ratio ** i for i in range(args.points)]
    turns = range(1, args.max_turns + 1)
    print(f"{'model':<16}" + "".join(f"{t:>10}" for t in turns))
    for text in args.models:
        model = parse_model(text)
        vals = [adversary_oracle(model, t, grid) for t in turns]
        print(f"{text:<16}" + "".join(f"{v:>10.4f}" for v in vals))


if __name__ == "__main__":
    main()
