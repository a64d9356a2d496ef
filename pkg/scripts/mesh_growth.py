"""Tabulate how the synthesized search circuit grows with database size.

For each N the dilated comparison map spans 2(N+1) modes; the complete
triangular mesh needs (N+1)(2N+1) couplers, while skipping entries that
are already zero gives a sparser equivalent circuit.

Usage: python scripts/mesh_growth.py [--max-n 8]
"""

import argparse

import numpy as np

from cohcirc import comparison_map, compile_circuit, dilate, reck_decompose


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()

    print(f"{'N':>3} {'modes':>6} {'full mesh':>10} {'sparse':>7} {'formula':>8} {'residual':>9}")
    for n in range(2, args.max_n + 1):
        u, ports = dilate(comparison_map(n))
        full = reck_decompose(u, full_mesh=True)
        sparse = reck_decompose(u)
        residual = np.max(np.abs(compile_circuit(sparse) - u))
        print(
            f"{n:>3} {ports.width:>6} {full.beamsplitter_count:>10} "
            f"{sparse.beamsplitter_count:>7} {(n + 1) * (2 * n + 1):>8} "
            f"{residual:>9.1e}"
        )


if __name__ == "__main__":
    main()
