"""Convergence of the time-averaged walk and empirical mixing times.

The total variation distance between the time-averaged distribution and
its limit decays like 1/T, controlled by a bound built from initial-state
overlaps and inverse eigenvalue gaps.  When the gaps obey a cos-momentum
lower bound with constant c, each branch pair contributes at most
(1/(8c)) (K/T) ln^2(K/2), so the mixing time grows only slightly faster
than linearly in the pearl count, as for a bare cycle.

Run:  python demos/03_mixing_convergence.py
"""

import math

import numpy as np

from necklace_walks import (
    NecklaceSpec,
    full_spectrum,
    limiting_distribution,
    make_comb_pearl,
    make_cycle_pearl,
    mixing_bound_curve,
    mixing_time,
    time_averaged,
    tv_convergence_bound,
    tv_distance,
    vertex_state,
)

K1_CONSTANT = (math.sqrt(2) - 1) / math.sqrt(2)


def tv_curve_demo(K=32):
    neck = NecklaceSpec(make_comb_pearl(1), K)
    spec = full_spectrum(neck)
    phi = vertex_state(neck, 1, 1)
    pi = limiting_distribution(spec, phi)
    print(f"d=1 comb, K={K}: total variation decay and its bounds")
    print(f"  {'T':>8s} {'tv':>10s} {'gap bound':>10s} {'cos bound':>10s}")
    for T in (10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0):
        tv = tv_distance(time_averaged(spec, phi, T), pi)
        bound = tv_convergence_bound(spec, phi, T)
        curve = 2 * mixing_bound_curve(K1_CONSTANT, K, T)  # two governing pairs
        print(f"  {T:8.0f} {tv:10.5f} {bound:10.5f} {curve:10.5f}")
    print()


def mixing_scaling_demo():
    print("Empirical mixing times T_mix(eps = 0.1), geometric grid ratio 1.05:")
    families = (
        ("cycle", make_cycle_pearl()),
        ("comb d=1", make_comb_pearl(1)),
        ("comb d=2", make_comb_pearl(2)),
    )
    header = "  {:10s}".format("family") + "".join(f"  K={K:<6d}" for K in (16, 32, 64))
    print(header)
    for name, pearl in families:
        cells = []
        for K in (16, 32, 64):
            neck = NecklaceSpec(pearl, K)
            spec = full_spectrum(neck)
            phi = vertex_state(neck, 1, 1)
            result = mixing_time(spec, phi, 0.1, t_hi=1e5)
            ratio = result.t_mix / (K * math.log(K / 2) ** 2)
            cells.append(f"{result.t_mix:7.1f} (r={ratio:.2f})")
        print(f"  {name:10s}" + "  ".join(cells))
    print("  r = T_mix / (K ln^2(K/2)); non-growing r means cycle-like mixing\n")


def main():
    tv_curve_demo()
    mixing_scaling_demo()


if __name__ == "__main__":
    main()
