"""
Classifying two-qubit gates by nonlocal content
===============================================

Every two-qubit gate reduces to a point in the Weyl chamber; the
chamber coordinates fix the local invariants, the entangling power,
and the perfect-entangler flags.  This walk-through prints the full
classification for the built-in gates.
"""

import numpy as np

from weylforge import (
    extract_coordinates,
    entangling_power_closed,
    is_perfect_entangler,
    is_spe,
)
from weylforge.invariants import local_invariants
from weylforge.gates import NAMED_GATES

# one line per gate: chamber point, invariants, derived properties
header = f"{'gate':10} {'c1':>8} {'c2':>8} {'c3':>8} {'G1':>16} {'G2':>8} {'e_p':>8}  flags"
print(header)
print("-" * len(header))

for name in ("identity", "cnot", "dcnot", "b", "swap", "sqrtswap"):
    gate = NAMED_GATES[name]
    c = extract_coordinates(gate)
    inv = local_invariants(gate)
    ep = entangling_power_closed(c)
    flags = []
    if is_perfect_entangler(gate):
        flags.append("PE")
    if is_spe(c):
        flags.append("SPE")
    g1 = f"{inv.g1.real + 0.0:+.3f}{inv.g1.imag + 0.0:+.3f}i"
    print(
        f"{name:10} {c.c1:8.5f} {c.c2:8.5f} {c.c3:8.5f} {g1:>16} "
        f"{inv.g2:8.3f} {ep:8.5f}  {' '.join(flags)}"
    )

# The special perfect entanglers fill the chamber edge from CNOT at
# (pi/4, 0, 0) to DCNOT at (pi/4, pi/4, 0); every point on it has
# entangling power 2/9, the most a two-qubit gate can deliver.
print()
print("family edge: coordinates (pi/4, phi, 0) for phi in [0, pi/4]")
for phi in np.linspace(0, np.pi / 4, 5):
    c = (np.pi / 4, phi, 0.0)
    print(
        f"  phi = {phi:7.5f}: e_p = {entangling_power_closed(c):.6f}, "
        f"spe = {is_spe(c)}"
    )

# A gate dressed with arbitrary single-qubit rotations keeps its class.
from weylforge import kron2
from weylforge.linalg import rot_x, rot_y

dressed = kron2(rot_y(0.7), rot_x(-0.2)) @ np.asarray(NAMED_GATES["b"]) @ kron2(
    rot_x(1.1), rot_y(0.4)
)
print()
print("b gate dressed with local rotations still extracts to", extract_coordinates(dressed))
