"""Print the proper homaloidal types of each degree, with duals and +1 verdicts."""
import argparse

from cremona.degeneration import in_closure_plus_one
from cremona.enumeration import enumerate_proper
from cremona.lattice import dual_type


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-degree", type=int, default=11)
    p.add_argument("--threads", type=int, default=1)
    args = p.parse_args()
    for d in range(2, args.max_degree + 1):
        types = enumerate_proper(d, threads=args.threads)
        print(f"degree {d}: {len(types)} proper types")
        for t in types:
            plus = "+1" if in_closure_plus_one(t) else "  "
            print(f"  {plus} {str(t):<28} dual {dual_type(t)}")


if __name__ == "__main__":
    main()
