import numpy as np
import pytest

from weylforge.linalg import (
    ConsistencyError,
    GateMatrix,
    Tolerances,
    as_gate,
    eig_commuting_symmetric_pair,
    kron2,
    rot_x,
    rot_y,
    rot_z,
    split_local,
    su4_normalize,
)
from weylforge.gates import CNOT

from conftest import haar_su2


def haar_u4(rng):
    z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_gate_matrix_accepts_unitary_and_is_immutable():
    g = GateMatrix(CNOT)
    assert g.unitarity_residual < 1e-15
    assert not g.matrix.flags.writeable
    with pytest.raises(ValueError):
        g.matrix[0, 0] = 2.0


def test_gate_matrix_rejects_nonunitary():
    with pytest.raises(ValueError):
        GateMatrix(np.eye(4) * 1.5)
    with pytest.raises(ValueError):
        GateMatrix(np.eye(3))


def test_gate_matrix_tolerance_is_adjustable():
    near = np.eye(4, dtype=complex)
    near[0, 0] = 1.0 + 1e-6
    with pytest.raises(ValueError):
        GateMatrix(near)
    g = GateMatrix(near, tol=Tolerances(unitarity=1e-4))
    assert g.unitarity_residual < 1e-4


def test_as_gate_passthrough_and_coercion():
    g = GateMatrix(CNOT)
    assert as_gate(g) is g
    assert np.array_equal(as_gate(CNOT).matrix, np.asarray(CNOT, dtype=complex))


def test_kron2_matches_numpy_kron():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    assert np.allclose(kron2(a, b), np.kron(a, b), atol=1e-15)


def test_kron2_is_multiplicative():
    rng = np.random.default_rng(4)
    a, b, c, d = (haar_su2(rng) for _ in range(4))
    lhs = kron2(a, b) @ kron2(c, d)
    assert np.abs(lhs - kron2(a @ c, b @ d)).max() < 1e-12


def test_rotation_closed_forms():
    # exp(-i t sigma) written out for each axis
    t = 0.37
    c, s = np.cos(t), np.sin(t)
    assert np.allclose(rot_x(t), [[c, -1j * s], [-1j * s, c]], atol=1e-15)
    assert np.allclose(rot_y(t), [[c, -s], [s, c]], atol=1e-15)
    assert np.allclose(rot_z(t), np.diag([np.exp(-1j * t), np.exp(1j * t)]), atol=1e-15)


@pytest.mark.parametrize("rot", [rot_x, rot_y, rot_z])
def test_rotations_form_one_parameter_groups(rot):
    a, b = 0.81, -1.43
    assert np.allclose(rot(a) @ rot(b), rot(a + b), atol=1e-14)
    assert np.allclose(rot(0.0), np.eye(2), atol=1e-15)
    assert abs(np.linalg.det(rot(a)) - 1) < 1e-14
    assert np.allclose(rot(a) @ rot(a).conj().T, np.eye(2), atol=1e-14)


def test_su4_normalize_fixes_determinant():
    rng = np.random.default_rng(7)
    for _ in range(10):
        u = haar_u4(rng)
        v = su4_normalize(u)
        assert abs(np.linalg.det(v.matrix) - 1) < 1e-12
        # proportional to the input
        ratio = v.matrix[np.abs(u) > 0.3] / u[np.abs(u) > 0.3]
        assert np.allclose(ratio, ratio.flat[0], atol=1e-12)


def test_su4_normalize_is_idempotent():
    rng = np.random.default_rng(8)
    for _ in range(5):
        v = su4_normalize(haar_u4(rng))
        w = su4_normalize(v)
        assert np.abs(w.matrix - v.matrix).max() < 1e-12


def test_su4_normalize_principal_branch():
    # a small overall phase is removed outright, not shifted by i
    v = su4_normalize(np.exp(0.2j) * np.eye(4))
    assert np.allclose(v.matrix, np.eye(4), atol=1e-14)


def _commuting_pair(rng, d1, d2):
    z = rng.normal(size=(4, 4))
    o, r = np.linalg.qr(z)
    o = o * np.sign(np.diag(r))
    return o @ np.diag(d1) @ o.T, o @ np.diag(d2) @ o.T, o


def test_jacobi_pair_diagonalizes_commuting_symmetric_matrices():
    rng = np.random.default_rng(21)
    # repeated eigenvalue in the first matrix forces the pair logic:
    # the second matrix must resolve the degenerate block
    d1 = np.array([2.0, 2.0, -1.0, 0.5])
    d2 = np.array([0.3, -0.7, 0.1, 0.9])
    x, y, _ = _commuting_pair(rng, d1, d2)
    pairs, frame = eig_commuting_symmetric_pair(x, y)
    assert np.allclose(frame.T @ frame, np.eye(4), atol=1e-12)
    dx = frame.T @ x @ frame
    dy = frame.T @ y @ frame
    assert np.abs(dx - np.diag(np.diag(dx))).max() < 1e-9
    assert np.abs(dy - np.diag(np.diag(dy))).max() < 1e-9
    got = sorted(map(tuple, np.round(pairs, 9)))
    want = sorted(zip(np.round(d1, 9), np.round(d2, 9)))
    assert np.allclose(got, want, atol=1e-9)


def test_jacobi_pair_rejects_asymmetric_input():
    rng = np.random.default_rng(22)
    x, y, _ = _commuting_pair(rng, np.arange(4.0), np.arange(4.0) ** 2)
    x[0, 1] += 0.1
    with pytest.raises(ValueError):
        eig_commuting_symmetric_pair(x, y)


def test_jacobi_pair_rejects_noncommuting_input():
    rng = np.random.default_rng(23)
    x, _, _ = _commuting_pair(rng, np.arange(4.0), np.arange(4.0))
    z = rng.normal(size=(4, 4))
    y = z + z.T
    with pytest.raises(ValueError):
        eig_commuting_symmetric_pair(x, y)


def test_split_local_recovers_tensor_factors():
    rng = np.random.default_rng(31)
    for _ in range(10):
        m = kron2(haar_su2(rng), haar_su2(rng))
        a, b = split_local(m)
        assert np.abs(kron2(a, b) - m).max() < 1e-12
        assert abs(np.linalg.det(a) - 1) < 1e-12


def test_split_local_absorbs_global_phase():
    rng = np.random.default_rng(32)
    m = np.exp(0.7j) * kron2(haar_su2(rng), haar_su2(rng))
    a, b = split_local(m)
    assert np.abs(kron2(a, b) - m).max() < 1e-12


def test_split_local_rejects_entangling_input():
    with pytest.raises(ConsistencyError):
        split_local(np.asarray(CNOT, dtype=complex))
