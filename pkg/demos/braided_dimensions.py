"""Table of braided dimensions of Schroedinger modules on a few small braids."""

from hopfbraid import algebra_from_spec, braided_dim, build_double, parse_braid, schrodinger

ALGEBRAS = ["group:C2", "group:S3", "dualgroup:S3", "sweedler", "taft:3"]
BRAIDS = ["1:", "2: 1", "2: 1 1", "2: 1 1 1", "3: 1 -2"]


def main():
    header = ["algebra"] + [f"[{b}]" for b in BRAIDS]
    rows = []
    for spec in ALGEBRAS:
        A = algebra_from_spec(spec)
        Q = build_double(A)
        M = schrodinger(Q)
        row = [A.name]
        for b in BRAIDS:
            left = braided_dim(Q, M, parse_braid(b), "left")
            right = braided_dim(Q, M, parse_braid(b), "right")
            text = A.field.format(left)
            row.append(text if left == right else f"{text}|{A.field.format(right)}")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())


if __name__ == "__main__":
    main()
