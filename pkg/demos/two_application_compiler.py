"""
Compiling any gate from two applications of one entangler
=========================================================

Two applications of the gate C[phi] = G(pi/4, phi, 0), padded with
single-qubit rotations, reach a phi-dependent slice of the chamber.
At phi = pi/8 the slice is the whole chamber: every two-qubit gate
comes out of exactly two applications.
"""

import numpy as np

from weylforge import (
    circuit_matrix,
    extract_coordinates,
    feasible_phi_profile,
    synthesize,
    verify_equivalence,
)
from weylforge.synth import LocalLayer, NonlocalLayer
from weylforge.gates import NAMED_GATES

EIGHTH = np.pi / 8

# --- a generic target class
target = (0.61, 0.24, -0.08)
circuit = synthesize(target, EIGHTH)
print(f"target class {target}")
print(f"layers ({circuit.nonlocal_count()} nonlocal):")
for layer in circuit.layers:
    if isinstance(layer, NonlocalLayer):
        print(f"   C[phi = {layer.phi:.6f}]")
    else:
        print("   local dressing")
recovered = extract_coordinates(circuit_matrix(circuit))
print("round trip:", tuple(round(float(v), 10) for v in recovered))
print("verified:", verify_equivalence(circuit, target))
print()

# --- an exact matrix target, global phase included
gate = np.asarray(NAMED_GATES["dcnot"], dtype=complex)
circuit = synthesize(gate, EIGHTH)
residual = np.abs(circuit_matrix(circuit).matrix - gate).max()
print(f"dcnot as a matrix target: reconstruction residual {residual:.2e}")
print()

# --- why pi/8 and not some other phi: SWAP is the stress case
profile = feasible_phi_profile((np.pi / 4, np.pi / 4, np.pi / 4), 31)
feasible = [phi for phi, ok in profile if ok]
print(f"swap target: {len(feasible)} of {len(profile)} grid values feasible")
print(f"the survivor is phi = {feasible[0]:.10f} (pi/8 = {EIGHTH:.10f})")
print()

# a milder target keeps more of the family usable
profile = feasible_phi_profile((0.61, 0.24, -0.08), 31)
feasible = [phi for phi, ok in profile if ok]
print(f"generic target: {len(feasible)} of {len(profile)} grid values feasible")
