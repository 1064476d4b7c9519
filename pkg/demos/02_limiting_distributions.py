"""Limiting distributions of the walk: projectors vs closed forms.

The time-averaged vertex distribution converges to a limit built from
projections onto degenerate eigenspaces.  On cycles and d=1 combs that
limit is known in closed form; this script computes it both ways and
prints the flat-plus-peaks profile (double weight on the start pearl and,
for an even pearl count, on the pearl directly opposite).

Run:  python demos/02_limiting_distributions.py
"""

import numpy as np

from necklace_walks import (
    NecklaceSpec,
    comb1_high_k,
    comb1_limiting,
    cycle_limiting,
    full_spectrum,
    limiting_distribution,
    make_comb_pearl,
    make_cycle_pearl,
    vertex_state,
)


def cycle_demo(K):
    neck = NecklaceSpec(make_cycle_pearl(), K)
    spec = full_spectrum(neck)
    pi = limiting_distribution(spec, vertex_state(neck, 1, 1))
    closed = np.array([cycle_limiting(K, x, 1) for x in range(1, K + 1)])
    print(f"cycle K={K} ({'even' if K % 2 == 0 else 'odd'}), start at vertex 0:")
    print(f"  start vertex: {pi[0]:.6f}   generic vertex: {pi[1]:.6f}")
    if K % 2 == 0:
        print(f"  antipode:     {pi[K // 2]:.6f}")
    print(f"  max |projector - closed form| = {np.abs(pi - closed).max():.2e}\n")


def comb1_demo(K, z=50):
    neck = NecklaceSpec(make_comb_pearl(1), K)
    spec = full_spectrum(neck)
    pi = limiting_distribution(spec, vertex_state(neck, z, 1))
    closed = np.empty(2 * K)
    for x in range(1, K + 1):
        closed[neck.flat_index(x, 1)] = comb1_limiting(K, "base", "base", x, z)
        closed[neck.flat_index(x, 2)] = comb1_limiting(K, "base", "tooth", x, z)
    print(f"d=1 comb K={K}, start at base of pearl {z - 1} (0-based):")
    print(f"  max |projector - closed form| = {np.abs(pi - closed).max():.2e}")

    bases = pi[0::2]
    teeth = pi[1::2]
    peaks = [z - 1] + ([z - 1 + K // 2] if K % 2 == 0 else [])
    generic = [i for i in range(K) if i not in peaks]
    print(f"  base profile:  peak {bases[z - 1]:.6f}, generic ~ {bases[generic[0]]:.6f}")
    print(f"  tooth profile: peak {teeth[z - 1]:.6f}, generic ~ {teeth[generic[0]]:.6f}")

    summary = comb1_high_k(K)
    print("  flat approximation:")
    print(f"    generic base {summary.generic_base:.6f}, generic tooth {summary.generic_tooth:.6f}")
    print(f"    peak base    {summary.peak_base:.6f}, peak tooth    {summary.peak_tooth:.6f}")
    print(f"    antipodal peak present: {summary.has_antipode}\n")


def main():
    cycle_demo(8)
    cycle_demo(9)
    comb1_demo(201)
    comb1_demo(200)


if __name__ == "__main__":
    main()
