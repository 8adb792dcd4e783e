"""Dense complex linear algebra for one- and two-qubit matrices.

Everything in this package works on plain numpy arrays: 2x2 blocks for
single-qubit operators and 4x4 blocks for two-qubit gates (row-major,
basis order |00>, |01>, |10>, |11>, qubit 0 = first tensor factor).
This module holds the shared kernel: the ``GateMatrix`` wrapper that
checks unitarity once at construction, Kronecker composition, SU(4)
normalization, the simultaneous diagonalizer for a commuting pair of
real symmetric matrices, and the Kronecker-factor splitter.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "ConsistencyError",
    "GateMatrix",
    "as_gate",
    "kron2",
    "su4_normalize",
    "eig_commuting_symmetric_pair",
    "split_local",
    "rot_x",
    "rot_y",
    "rot_z",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "PAULIS",
]

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

for _p in PAULIS:
    _p.setflags(write=False)


@dataclass(frozen=True)
class Tolerances:
    """Central numerical tolerances.

    unitarity    max |U+U - I| entry allowed when accepting a gate
    diagonality  max off-diagonal entry after simultaneous diagonalization
    comparison   general matrix/scalar comparison slack
    """

    unitarity: float = 1e-9
    diagonality: float = 1e-9
    comparison: float = 1e-8


DEFAULT_TOLERANCES = Tolerances()


class ConsistencyError(RuntimeError):
    """An internal numerical invariant failed.

    Raised when an algorithm's self-check fails on input that passed
    validation -- this signals a numerical breakdown (or a bug), never
    a problem with user input.
    """


class GateMatrix:
    """A 4x4 unitary, validated once at construction.

    The wrapped array is read-only; ``unitarity_residual`` records
    max |U+U - I| found at construction time.
    """

    __slots__ = ("matrix", "unitarity_residual")

    def __init__(self, matrix, tol: Tolerances = DEFAULT_TOLERANCES):
        m = np.array(matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix contains non-finite entries")
        residual = float(np.abs(m.conj().T @ m - np.eye(4)).max())
        if residual > tol.unitarity:
            raise ValueError(
                f"matrix is not unitary: residual {residual:.3e} exceeds "
                f"tolerance {tol.unitarity:.1e}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "unitarity_residual", residual)

    def __setattr__(self, name, value):
        raise AttributeError("GateMatrix is immutable")

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype or complex)

    def __repr__(self):
        return f"GateMatrix(residual={self.unitarity_residual:.2e})\n{self.matrix}"


def as_gate(g, tol: Tolerances = DEFAULT_TOLERANCES) -> GateMatrix:
    """Coerce a GateMatrix or any 4x4 array-like into a GateMatrix."""
    if isinstance(g, GateMatrix):
        return g
    return GateMatrix(g, tol=tol)


def kron2(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 operators, first factor on qubit 0."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def rot_x(angle: float) -> np.ndarray:
    """exp(-i * angle * sigma_x)."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -1j * s], [-1j * s, c]])


def rot_y(angle: float) -> np.ndarray:
    """exp(-i * angle * sigma_y)."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rot_z(angle: float) -> np.ndarray:
    """exp(-i * angle * sigma_z)."""
    return np.array([[np.exp(-1j * angle), 0], [0, np.exp(1j * angle)]])


def su4_normalize(g, tol: Tolerances = DEFAULT_TOLERANCES) -> GateMatrix:
    """Rescale a 4x4 unitary to unit determinant.

    The scale factor is the principal fourth root of 1/det(g), i.e. the
    root whose argument lies in (-pi/4, pi/4].  Idempotent up to
    floating-point noise.
    """
    gate = as_gate(g, tol=tol)
    det = np.linalg.det(gate.matrix)
    if abs(det) < 0.5:
        # cannot happen for a matrix that passed the unitarity check
        raise ValueError(f"determinant {det:.3e} is numerically degenerate")
    factor = (1.0 / det) ** 0.25
    return GateMatrix(factor * gate.matrix, tol=tol)


def eig_commuting_symmetric_pair(x, y, tol: Tolerances = DEFAULT_TOLERANCES):
    """Simultaneously diagonalize two commuting real symmetric 4x4 matrices.

    Parameters
    ----------
    x, y : (4, 4) array_like, real symmetric, with ||XY - YX||_max <= 1e-8.

    Returns
    -------
    pairs : (4, 2) ndarray
        Row k holds (x_k, y_k), the k-th diagonal values of the two
        transformed matrices.
    frame : (4, 4) ndarray
        Real orthogonal O with O.T @ X @ O and O.T @ Y @ O diagonal
        within ``tol.diagonality``.

    Notes
    -----
    Two-sided Jacobi sweeps applied to both matrices at once.  At each
    pivot the rotation angle is taken from whichever matrix carries the
    larger off-diagonal magnitude there; this also resolves degenerate
    eigenvalue clusters of one matrix, because inside such a cluster the
    other matrix supplies the rotation.
    """
    X = np.array(x, dtype=float)
    Y = np.array(y, dtype=float)
    if X.shape != (4, 4) or Y.shape != (4, 4):
        raise ValueError("inputs must be 4x4")
    sym = max(np.abs(X - X.T).max(), np.abs(Y - Y.T).max())
    if sym > tol.comparison:
        raise ValueError(f"inputs are not symmetric (residual {sym:.3e})")
    comm = np.abs(X @ Y - Y @ X).max()
    if comm > 1e-8:
        raise ValueError(
            f"matrices do not commute: ||XY - YX||_max = {comm:.3e} exceeds 1e-8"
        )

    O = np.eye(4)
    threshold = 1e-14 * max(1.0, np.abs(X).max(), np.abs(Y).max())
    for _ in range(60):
        off = 0.0
        for M in (X, Y):
            od = np.abs(M - np.diag(np.diag(M))).max()
            off = max(off, od)
        if off <= threshold:
            break
        for p in range(3):
            for q in range(p + 1, 4):
                M = X if abs(X[p, q]) >= abs(Y[p, q]) else Y
                if abs(M[p, q]) <= threshold:
                    continue
                theta = (M[q, q] - M[p, p]) / (2.0 * M[p, q])
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                R = np.eye(4)
                R[p, p] = R[q, q] = c
                R[p, q] = s
                R[q, p] = -s
                X = R.T @ X @ R
                Y = R.T @ Y @ R
                O = O @ R

    off = max(
        np.abs(X - np.diag(np.diag(X))).max(),
        np.abs(Y - np.diag(np.diag(Y))).max(),
    )
    if off > tol.diagonality:
        raise ConsistencyError(
            f"joint diagonalization stalled with off-diagonal residual {off:.3e}"
        )
    pairs = np.column_stack([np.diag(X), np.diag(Y)])
    return pairs, O


def split_local(m, tol: Tolerances = DEFAULT_TOLERANCES):
    """Factor a local 4x4 unitary into SU(2) tensor factors.

    Given m = a (x) b (up to the joint sign ambiguity), returns 2x2
    unitaries (a, b), both with determinant 1, whose Kronecker product
    reproduces m.  Uses the rank-one structure of the rearranged matrix:
    reshuffling m so that kron() becomes an outer product reduces the
    problem to the leading singular vector pair.

    Raises ConsistencyError if m is not a Kronecker product within
    ``tol.comparison``.
    """
    M = np.asarray(m, dtype=complex)
    R = M.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    u, s, vh = np.linalg.svd(R)
    a = (u[:, 0] * np.sqrt(s[0])).reshape(2, 2)
    b = (vh[0, :] * np.sqrt(s[0])).reshape(2, 2)
    # pull each factor onto SU(2); det(a)*det(b) = +1 for any local
    # unitary of determinant 1, so both renormalizations succeed together
    z = np.sqrt(np.linalg.det(a))
    if abs(z) < 1e-12:
        raise ConsistencyError("Kronecker factor has numerically zero determinant")
    a = a / z
    b = b * z
    residual = np.abs(np.kron(a, b) - M).max()
    if residual > tol.comparison:
        raise ConsistencyError(
            f"matrix is not a Kronecker product (residual {residual:.3e})"
        )
    return a, b
