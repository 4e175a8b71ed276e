"""Tabulate the obstruction search above Lambda_a for small a and k."""
import argparse

from cremona.halphen import obstruction_candidates


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--max-k", type=int, default=4)
    args = p.parse_args()
    print(f"{'a':>2} {'k':>2} {'sols':>5} {'r=9 only':>9}  verdict")
    for a in range(1, args.max_a + 1):
        for k in range(1, args.max_k + 1):
            r = obstruction_candidates(a, k)
            print(f"{a:>2} {k:>2} {len(r.solutions):>5} {str(r.all_r9):>9}  {r.verdict}")


if __name__ == "__main__":
    main()
