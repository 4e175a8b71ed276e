"""Closure battery: for which d is every map of degree < d a limit of degree-d maps."""
import argparse

from cremona.degeneration import theorem1_battery


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-degree", type=int, default=16)
    args = p.parse_args()
    for v in theorem1_battery(args.max_degree):
        state = {True: "yes", False: "no", None: "undecided"}[v.holds]
        note = ""
        if v.holds is False:
            note = f"  (+1 fails at {v.blocking} for {len(v.failing_types)} types)"
        print(f"d={v.degree:<3} {state}{note}")


if __name__ == "__main__":
    main()
