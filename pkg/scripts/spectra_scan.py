"""Closed-form spectra of Q(alpha) across all labels for one (n, d).

For every partition alpha of n-2 prints the eigenvalue of each grown
label (d plus the content of the added box), the multiplicity, and the
rank deficit when an eigenvalue vanishes.

Usage: python scripts/spectra_scan.py [n] [d]
"""

import sys

from ptalgebra import partitions_of, spectral_q


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    d = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    for alpha in partitions_of(n - 2):
        record = spectral_q(alpha, d, n)
        pairs = ", ".join(f"lambda({nu}) = {lam:g} x{mult}"
                          for nu, lam, mult in record.eigenpairs)
        theta = f"  [vanishing: {record.theta}]" if record.theta else ""
        print(f"alpha = {alpha}: {pairs}; rank {record.rank}/{record.block_dim}{theta}")


if __name__ == "__main__":
    main()
