"""Sweep p_k(D) over random integer matrices and tabulate where it fails to vanish.

usage: python scripts/vanishing_sweep.py [trials] [seed]
"""
import random
import sys
from collections import Counter

from hasse_schmidt.cayley_hamilton import verify_ch_theorem_upto
from hasse_schmidt.matrices import Matrix


def main(trials: int = 50, seed: int = 0):
    rng = random.Random(seed)
    for r in range(2, 6):
        fails = Counter()
        singular = 0
        for _ in range(trials):
            f = Matrix([[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)])
            singular += f.det() == 0
            for rep in verify_ch_theorem_upto(f, r + 3):
                for b in rep.failures:
                    fails[(rep.k, "scalar" if b == () else str(b))] += 1
        summary = ", ".join(f"k={k} on {where}: {n}" for (k, where), n in sorted(fails.items())) or "none"
        print(f"r={r}: {trials} matrices ({singular} singular); failures: {summary}")


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    main(*args)
