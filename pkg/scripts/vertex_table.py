"""Gamma_r / Gamma*_r against the differential-operator formulas, for every |lambda| <= W.

usage: python scripts/vertex_table.py [max_weight] [order] [r_max]
"""
import sys

from hasse_schmidt.symmetric import partitions_up_to
from hasse_schmidt.vertex import convergence_check


def main(max_weight: int = 3, order: int = 3, r_max: int = 4):
    for lam in partitions_up_to(max_weight):
        rep = convergence_check(lam, order, max(lam.length, 1), r_max)
        print(f"lambda=({lam}) {'ok' if rep.ok else 'MISMATCH'}")
        for line in rep.lines():
            print("   ", line)


if __name__ == "__main__":
    main(*[int(a) for a in sys.argv[1:4]])
