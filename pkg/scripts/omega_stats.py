"""Ω distribution and moments per order, next to the published figures.

    python scripts/omega_stats.py --max-order 6
"""
import argparse

from semischur.census import census
from semischur.known import OMEGA_DISTRIBUTIONS, OMEGA_MOMENTS
from semischur.schur import enumerate_schur_rings
from semischur.stats import round_half_up, summarize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-order", type=int, default=3)
    ap.add_argument("--max-order", type=int, default=5)
    args = ap.parse_args()
    for n in range(args.min_order, args.max_order + 1):
        s = summarize(n, (len(enumerate_schur_rings(r.table).rings) for r in census(n)))
        print(f"## order {n}\n")
        print(s.report())
        if n in OMEGA_MOMENTS:
            mu, sigma = OMEGA_MOMENTS[n]
            print(f"published mean {mu:.2f}, stdev {sigma:.2f}; "
                  f"computed {round_half_up(s.mean)}, {round_half_up(s.stdev)} "
                  f"(exact {s.mean:.4f}, {s.stdev:.4f})")
        if n in OMEGA_DISTRIBUTIONS:
            pub = OMEGA_DISTRIBUTIONS[n]
            diff = {k: (s.distribution.get(k, 0), pub.get(k, 0)) for k in sorted(set(pub) | set(s.distribution))
                    if s.distribution.get(k, 0) != pub.get(k, 0)}
            print("distribution matches the published table" if not diff
                  else f"differs from the published table (computed, published): {diff}")
        print()


if __name__ == "__main__":
    main()
