"""How often does {q(w + l) : l in L} fill the whole class q(w) + P(K)?

Containment always holds; full coverage depends on how much of K the
values sqrt(q(l)) reach. This measures it over random (q, L) pairs.
"""

import argparse
import random

from arfinv.arf import find_lagrangian, wu_vector
from arfinv.gf2n import binary_field
from arfinv.quadform import qf_eval, random_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for n in (1, 2, 3, 4):
        F = binary_field(n)
        coset_size = F.order // 2
        for d in (2, 4, 6):
            if F.order ** (d // 2) > 1 << 12:
                continue
            full = zero_classes = 0
            for _ in range(args.count):
                q = random_form(F, d, rng)
                L = find_lagrangian(q, rng)
                w = list(wu_vector(q, L).vector)
                values = {qf_eval(q, [a ^ b for a, b in zip(w, l)]) for l in L.elements(F)}
                full += len(values) == coset_size
                zero_classes += values == {0}
            print(f"{F.spec:<10} d={d}  full coverage {full}/{args.count}  value set {{0}}: {zero_classes}/{args.count}")


if __name__ == "__main__":
    main()
