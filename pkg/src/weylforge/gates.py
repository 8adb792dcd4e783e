"""Literal matrices of the named two-qubit gates used throughout.

All matrices act on the computational basis |00>, |01>, |10>, |11> with
qubit 0 as the first tensor factor.  These are deliberately written out
as literals, independent of the canonical-gate constructor, so that
tests comparing constructed gates against them are meaningful.
"""

import numpy as np

__all__ = [
    "IDENTITY",
    "CNOT",
    "DCNOT",
    "SWAP",
    "SQRT_SWAP",
    "B_GATE",
    "NAMED_GATES",
]

IDENTITY = np.eye(4, dtype=complex)

CNOT = np.array(
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ],
    dtype=complex,
)

# CNOT followed by a CNOT with the roles of the qubits exchanged
DCNOT = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 1, 0, 0],
    ],
    dtype=complex,
)

SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)

SQRT_SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
        [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)

_C8, _S8 = np.cos(np.pi / 8), np.sin(np.pi / 8)

# the class representative exp(-i(pi/4 XX + pi/8 YY)), written out
B_GATE = np.array(
    [
        [_C8, 0, 0, -1j * _S8],
        [0, _S8, -1j * _C8, 0],
        [0, -1j * _C8, _S8, 0],
        [-1j * _S8, 0, 0, _C8],
    ],
    dtype=complex,
)

NAMED_GATES = {
    "identity": IDENTITY,
    "cnot": CNOT,
    "dcnot": DCNOT,
    "swap": SWAP,
    "sqrtswap": SQRT_SWAP,
    "b": B_GATE,
}

for _g in NAMED_GATES.values():
    _g.setflags(write=False)
