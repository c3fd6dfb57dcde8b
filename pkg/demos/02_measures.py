"""Gaussian-state measures on a free chain.

A block of sites in the ground state has a symplectic spectrum with every
value at or above 1/2.  Entropies, Renyi entropies, logarithmic negativity
and mutual information are all functions of such spectra.
"""
import numpy as np

from harmonic_entanglement import (
    BoundaryCondition,
    LatticeSpec,
    Partition,
    correlator_window,
    entanglement_entropy,
    log_negativity,
    mutual_information_partition,
    renyi_entropy,
    symplectic_spectrum,
)

spec = LatticeSpec(1, (201,), BoundaryCondition.FBC)
centre = 100

print(" l   S(A)     S_1/2(A)  S_2(A)   LN(A1:A2)  I_1/2(A1:A2)")
for l in (2, 4, 8, 16, 32):
    # A is a block of 2l sites, split into two halves A1 | A2
    A1 = [(s,) for s in range(centre - l, centre)]
    A2 = [(s,) for s in range(centre, centre + l)]
    corr = correlator_window(spec, A1 + A2)
    block = corr.restrict(A1)
    xi = symplectic_spectrum(block)
    part = Partition(A1, A2)
    print(
        f"{l:2d}  {entanglement_entropy(xi).value:.5f}  {renyi_entropy(xi, 0.5).value:.5f}  "
        f"{renyi_entropy(xi, 2).value:.5f}  {log_negativity(corr, part).value:.5f}    "
        f"{mutual_information_partition(corr, part, 0.5).value:.5f}"
    )

# The whole lattice is pure: every symplectic value sits at 1/2.
full = correlator_window(spec, [(s,) for s in range(1, 201)])
xi = symplectic_spectrum(full).values
print(f"\nwhole chain: max |xi - 1/2| = {np.abs(xi - 0.5).max():.1e}")
