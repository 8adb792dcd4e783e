import numpy as np
import pytest

from weylforge import canonical_gate, kron2, spectral_phases
from weylforge.linalg import eig_commuting_symmetric_pair
from weylforge.invariants import (
    MAGIC_FRAME,
    invariants_from_coords,
    is_perfect_entangler,
    local_invariants,
    m_matrix,
)
from weylforge.entangle import MAGIC_STATES
from weylforge.gates import NAMED_GATES

from conftest import chamber_point, dressed, haar_su2

# invariant pairs for the built-in gates
KNOWN_INVARIANTS = {
    "identity": (1 + 0j, 3.0),
    "cnot": (0j, 1.0),
    "dcnot": (0j, -1.0),
    "b": (0j, 0.0),
    "swap": (-1 + 0j, -3.0),
    "sqrtswap": (-0.25j, 0.0),
}


@pytest.mark.parametrize("name,expected", sorted(KNOWN_INVARIANTS.items()))
def test_named_gate_invariants(name, expected):
    inv = local_invariants(NAMED_GATES[name])
    assert abs(inv.g1 - expected[0]) < 1e-12
    assert abs(inv.g2 - expected[1]) < 1e-12


def test_magic_frame_is_unitary():
    assert np.abs(MAGIC_FRAME @ MAGIC_FRAME.conj().T - np.eye(4)).max() < 1e-15


def test_magic_frame_columns_are_signed_permuted_magic_states():
    perm = MAGIC_STATES[:, [0, 3, 2, 1]] @ np.diag([1.0, -1.0, 1.0, -1.0])
    assert np.abs(MAGIC_FRAME - perm).max() < 1e-15


def test_m_matrix_is_symmetric_unitary():
    rng = np.random.default_rng(41)
    for _ in range(5):
        m = m_matrix(dressed(chamber_point(rng), rng))
        assert np.abs(m - m.T).max() < 1e-12
        assert np.abs(m @ m.conj().T - np.eye(4)).max() < 1e-12


def test_pair_solver_keeps_m_eigenvalues_on_the_unit_circle():
    rng = np.random.default_rng(45)
    for _ in range(5):
        m = m_matrix(dressed(chamber_point(rng), rng))
        pairs, _ = eig_commuting_symmetric_pair(m.real, m.imag)
        moduli = np.hypot(pairs[:, 0], pairs[:, 1])
        assert np.abs(moduli - 1.0).max() < 1e-9


def test_m_eigenvalue_phases_halve_to_the_spectral_phases():
    rng = np.random.default_rng(46)
    for _ in range(5):
        c = chamber_point(rng)
        ev = list(np.linalg.eigvals(m_matrix(canonical_gate(c))))
        for lam in spectral_phases(c):
            want = np.exp(-2j * lam)
            k = int(np.argmin([abs(e - want) for e in ev]))
            assert abs(ev[k] - want) < 1e-9
            del ev[k]


def test_invariants_unchanged_by_local_dressing():
    rng = np.random.default_rng(42)
    for _ in range(10):
        c = chamber_point(rng)
        base = local_invariants(canonical_gate(c))
        dress = local_invariants(dressed(c, rng))
        assert abs(base.g1 - dress.g1) < 1e-10
        assert abs(base.g2 - dress.g2) < 1e-10


def test_closed_form_matches_matrix_invariants():
    # the coordinate formulas hold for arbitrary triples, not just
    # chamber representatives
    rng = np.random.default_rng(43)
    for _ in range(30):
        c = rng.uniform(-np.pi, np.pi, size=3)
        inv_c = invariants_from_coords(c)
        inv_m = local_invariants(canonical_gate(c))
        assert abs(inv_c.g1 - inv_m.g1) < 1e-10
        assert abs(inv_c.g2 - inv_m.g2) < 1e-10


def test_perfect_entangler_named_gates():
    for name in ("cnot", "dcnot", "b", "sqrtswap"):
        assert is_perfect_entangler(NAMED_GATES[name]), name
    for name in ("swap", "identity"):
        assert not is_perfect_entangler(NAMED_GATES[name]), name


def test_perfect_entangler_rejects_local_gates():
    rng = np.random.default_rng(44)
    for _ in range(5):
        assert not is_perfect_entangler(kron2(haar_su2(rng), haar_su2(rng)))


def _controlled(theta):
    u = np.array(
        [
            [np.cos(theta), np.sin(theta) * np.exp(-0.4j)],
            [-np.sin(theta) * np.exp(0.4j), np.cos(theta)],
        ]
    )
    g = np.eye(4, dtype=complex)
    g[2:, 2:] = u
    return g


def test_perfect_entangler_boundary_of_controlled_family():
    # the controlled family [x, 0, 0] touches the perfect-entangler
    # region only at x = pi/4, i.e. theta = pi/2
    assert is_perfect_entangler(_controlled(np.pi / 2))
    assert not is_perfect_entangler(_controlled(np.pi / 2 - 0.02))
    assert not is_perfect_entangler(_controlled(np.pi / 2 + 0.02))


def test_invariants_of_controlled_family_relation():
    for theta in (0.3, 0.7, 1.1):
        inv = local_invariants(_controlled(theta))
        assert abs(inv.g1 - np.cos(theta) ** 2) < 1e-12
        assert abs(inv.g2 - (2 * np.cos(theta) ** 2 + 1)) < 1e-12
