"""Tabulate zero counts of all nondegenerate forms over GF(2) against their Arf bit."""

import argparse
import collections
import itertools

from arfinv import linalg
from arfinv.arf import arf_invariant
from arfinv.checks import alternating_grams
from arfinv.gf2n import binary_field
from arfinv.quadform import QuadForm, qf_eval


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 4])
    args = ap.parse_args()
    F = binary_field(1)
    for d in args.dims:
        table = collections.Counter()
        vectors = list(itertools.product((0, 1), repeat=d))
        for g in alternating_grams(F, d):
            if not linalg.is_invertible(F, g):
                continue
            for diag in itertools.product((0, 1), repeat=d):
                q = QuadForm(F, g, diag)
                zeros = sum(qf_eval(q, v) == 0 for v in vectors)
                table[arf_invariant(q).bit, zeros] += 1
        print(f"dim {d}")
        for (bit, zeros), count in sorted(table.items()):
            print(f"  arf={bit}  zeros={zeros:4d}  forms={count}")


if __name__ == "__main__":
    main()
