"""Compare braided dimensions of Schr(k[G]) with Freyd-Yetter fixed-point counts."""

import argparse

from hopfbraid import braided_dim, build_double, fy_fixed_points, group_algebra, make_group, schrodinger
from hopfbraid.checks import random_braids


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="S3")
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    G = make_group(args.group)
    Q = build_double(group_algebra(G))
    M = schrodinger(Q)
    agree = 0
    for b in random_braids(args.count, args.seed):
        count = fy_fixed_points(G, b)
        left, right = braided_dim(Q, M, b, "left"), braided_dim(Q, M, b, "right")
        ok = left == right == count
        agree += ok
        print(f"{str(b):<22} oracle {count:>5}  left {str(left):>5}  right {str(right):>5}  {'ok' if ok else 'MISMATCH'}")
    print(f"{agree}/{args.count} braids agree")


if __name__ == "__main__":
    main()
