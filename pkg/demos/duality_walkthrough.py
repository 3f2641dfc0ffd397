#!/usr/bin/env python3
"""Walkthrough of the oscillator <-> Coulomb duality.

The substitution u = sqrt(x / kappa0) turns the radial Coulomb problem with
angular number m, energy E, and coupling g into the radial oscillator problem
with the same m, spectral parameter W = -4 kappa0 g, and frequency parameter
lambda = -4 kappa0^2 E.  This script demonstrates the correspondence at three
levels: individual solutions, connection coefficients, and whole spectra.
"""

import math

from radialspec import (
    DualityMap,
    coul_solution,
    osc_solution,
    verify_coefficient_identities,
    verify_solution_identity,
    verify_spectrum_correspondence,
)


def show_map() -> None:
    mp = DualityMap(kappa0=1.0)
    x, E, g = 4.0, -0.25, -1.0
    u, W, lam = mp.forward(x, E, g)
    print("Parameter map (kappa0 = 1):")
    print(f"  Coulomb    : x = {x}, E = {E}, g = {g}")
    print(f"  Oscillator : u = {u}, W = {W}, lambda = {lam}")
    x2, E2, g2 = mp.backward(u, W, lam)
    print(f"  round trip : x = {x2}, E = {E2}, g = {g2}")
    print()


def show_solution_identity() -> None:
    # pointwise: C_k(x; E, g) = sqrt(kappa0 u) * O_k(u; W, lambda)
    m, x, E, g = 2, 1.7, complex(-0.4, 0.6), -0.9
    mp = DualityMap(1.0)
    u, W, lam = mp.forward(x, E, g)
    print(f"Pointwise solution identity, m = {m}, x = {x}, E = {E}, g = {g}:")
    for k in (1, 3, 4):
        c = coul_solution(f"C{k}", m, x, E, g)
        o = osc_solution(f"O{k}", m, u, W, lam)
        lhs, rhs = c, math.sqrt(u) * o
        print(f"  kind {k}:  C_{k} = {lhs:.12g}")
        print(f"          sqrt(u) O_{k} = {rhs:.12g}   |diff| = {abs(lhs - rhs):.3e}")
    print()


def show_batch_verification() -> None:
    import random

    rng = random.Random(2024)
    triples = [
        (
            rng.uniform(0.3, 2.0),
            complex(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 1.5)),
            rng.choice((-1.0, 0.8)) * rng.uniform(0.3, 1.5),
        )
        for _ in range(50)
    ]
    print("Batch verification over 50 random (x, E, g) samples:")
    for m, kinds in ((0, (1, 2, 3)), (1, (1, 3, 4)), (3, (1, 3, 4))):
        worst = max(verify_solution_identity(k, m, triples) for k in kinds)
        print(f"  m = {m}: worst relative deviation over kinds {kinds} = {worst:.3e}")
    pairs = [
        (complex(rng.uniform(-2, 2), rng.uniform(0.1, 1.5)), rng.uniform(-1.5, 1.5))
        for _ in range(40)
    ]
    out = verify_coefficient_identities(2, pairs)
    print(f"  connection coefficients, m = 2: {out['max_rel']}")
    print()


def show_spectrum_correspondence() -> None:
    print("Spectrum correspondence (bound levels map onto each other):")
    for m in (0, 1, 2):
        zeta = math.pi / 2 if m == 0 else None
        out = verify_spectrum_correspondence(m, 2.0, 6, zeta=zeta)
        tag = " (zeta = pi/2 on both sides)" if m == 0 else ""
        print(
            f"  m = {m}{tag}: pass = {out['pass']}, "
            f"max deviation = {out['max_abs_dev']:.3e}"
        )
    print()


def main() -> None:
    show_map()
    show_solution_identity()
    show_batch_verification()
    show_spectrum_correspondence()


if __name__ == "__main__":
    main()
