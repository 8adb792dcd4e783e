"""
Witness bases: what makes a perfect entangler special
=====================================================

A special perfect entangler does more than map one product state to a
maximally entangled state: it does so for an entire orthonormal basis
of product states.  This script builds such a witness basis, carries
it to a dressed gate, and shows why sqrt-SWAP, an ordinary perfect
entangler, cannot have one.
"""

import numpy as np

from weylforge import (
    canonical_gate,
    check_basis_images,
    concurrence_pure,
    kron2,
    witness_basis,
    witness_basis_for_gate,
)
from weylforge.linalg import rot_x, rot_y
from weylforge.gates import SQRT_SWAP

QUARTER = np.pi / 4
phi = np.pi / 6

# --- the plain witness, for the representative the formulas address
rep = canonical_gate((0.0, QUARTER, phi))
basis = witness_basis(theta=0.8, p=phi)
print("witness basis rows (theta = 0.8):")
for row in basis.states:
    print("   ", np.round(row, 4), f"concurrence {concurrence_pure(row):.2e}")
print("image concurrences:", np.round(check_basis_images(rep, basis), 12))

# --- entanglement of an image is NOT a class property: the same rows
# fed to a different member of the same class lose the guarantee
other = canonical_gate((QUARTER, phi, 0.0))
print(
    "same rows, equivalent gate, different images:",
    np.round(check_basis_images(other, basis), 6),
)

# --- so for an arbitrary SPE matrix the basis is transported through
# the decomposition locals
dressed = kron2(rot_y(0.3), rot_x(0.9)) @ other.matrix @ kron2(rot_x(-0.5), rot_y(1.2))
carried = witness_basis_for_gate(dressed, theta=0.8)
print(
    "transported basis, dressed gate:   ",
    np.round(check_basis_images(dressed, carried), 12),
)

# --- sqrt-SWAP: images of any product basis pair up, C1 + C2 = 1
rng = np.random.default_rng(7)
v = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
a, b, c = (x / np.linalg.norm(x) for x in v)
perp = lambda x: np.array([-np.conj(x[1]), np.conj(x[0])])
rows = [np.kron(a, b), np.kron(a, perp(b)), np.kron(perp(a), c), np.kron(perp(a), perp(c))]
conc = [concurrence_pure(np.asarray(SQRT_SWAP) @ r) for r in rows]
print()
print("sqrt-swap images of a random product basis:", np.round(conc, 6))
print(f"pair sums: {conc[0] + conc[1]:.12f}, {conc[2] + conc[3]:.12f}")
print("all four can never reach 1 at once, so sqrt-swap is not special")
