import json

import numpy as np
import pytest

from weylforge import (
    Circuit,
    DegenerateTargetError,
    InfeasibleSynthesisError,
    LocalLayer,
    NonlocalLayer,
    SpeParams,
    UnsupportedPhiError,
    b_gate_params,
    circuit_from_dict,
    circuit_matrix,
    circuit_to_dict,
    extract_coordinates,
    feasible_phi_profile,
    kron2,
    reduce_to_weyl,
    spe_params,
    special_circuit,
    synthesize,
    verify_equivalence,
)
from weylforge.linalg import rot_x, rot_y
from weylforge.gates import NAMED_GATES

from conftest import chamber_point, dressed

QUARTER = np.pi / 4
EIGHTH = np.pi / 8


def test_b_gate_params_at_the_family_corners():
    a, b = b_gate_params(0.0, 0.0)  # cnot column
    assert abs(a - QUARTER) < 1e-12
    assert abs(b) < 1e-12
    a, b = b_gate_params(QUARTER, 0.0)  # dcnot column, 0/0 resolved to a = 0
    assert abs(a) < 1e-12
    # arccos near -1 amplifies rounding to sqrt(eps)
    assert abs(b - np.pi / 2) < 1e-7


def test_b_gate_params_rejects_degenerate_off_chamber_input():
    c2 = 0.9
    c3 = np.arccos(np.sqrt(0.5) / np.sin(c2))  # makes the denominator vanish
    with pytest.raises(DegenerateTargetError):
        b_gate_params(c2, c3)


def test_b_gate_params_agrees_with_general_branch_roots():
    # at phi = pi/8 the second branch reduces to the dedicated formulas
    rng = np.random.default_rng(91)
    for _ in range(25):
        c2 = rng.uniform(0.0, QUARTER)
        c3 = rng.uniform(0.0, c2)
        a_ref, b_ref = b_gate_params(c2, c3)
        sols = [
            s
            for s in spe_params(EIGHTH, (QUARTER, c2, c3))
            if s.branch == "sols2" and s.sign_choice == "a0,b0"
        ]
        assert sols
        assert abs(np.sin(2 * sols[0].a) - np.sin(2 * a_ref)) < 1e-10
        assert abs(np.cos(2 * sols[0].b) - np.cos(2 * b_ref)) < 1e-10


def test_solutions_satisfy_the_matching_equation():
    # |cos 2a sin 2b sin 4phi| must reproduce |sin 2c2 sin 2c3|
    rng = np.random.default_rng(92)
    for phi in (EIGHTH, 0.3):
        for _ in range(10):
            c = reduce_to_weyl(chamber_point(rng))
            for s in spe_params(phi, c):
                lhs = abs(np.cos(2 * s.a) * np.sin(2 * s.b) * np.sin(4 * phi))
                rhs = abs(np.sin(2 * c.c2) * np.sin(2 * c.c3))
                assert abs(lhs - rhs) < 1e-8


def test_phi_endpoints_are_rejected():
    for phi in (0.0, QUARTER):
        with pytest.raises(UnsupportedPhiError):
            spe_params(phi, (QUARTER, 0.1, 0.0))
        with pytest.raises(UnsupportedPhiError):
            synthesize((QUARTER, 0.1, 0.0), phi)


def test_synthesize_random_chamber_targets():
    rng = np.random.default_rng(93)
    for _ in range(25):
        c = chamber_point(rng)
        circ = synthesize(c, EIGHTH)
        assert circ.nonlocal_count() == 2
        assert verify_equivalence(circ, c)


def test_synthesize_accepts_params_object_and_identity_target():
    circ = synthesize((0.0, 0.0, 0.0), SpeParams(EIGHTH))
    assert circ.nonlocal_count() == 2
    assert verify_equivalence(circ, (0.0, 0.0, 0.0))


def test_synthesize_matrix_target_reproduces_the_matrix():
    rng = np.random.default_rng(94)
    for _ in range(10):
        g = dressed(chamber_point(rng), rng)
        circ = synthesize(g, EIGHTH)
        assert circ.nonlocal_count() == 2
        assert np.abs(circuit_matrix(circ).matrix - g).max() < 1e-7


def test_synthesize_rejects_malformed_targets():
    with pytest.raises(ValueError):
        synthesize(np.eye(2), EIGHTH)
    with pytest.raises(ValueError):
        synthesize("swap", EIGHTH)


def test_swap_is_out_of_reach_away_from_the_b_class():
    with pytest.raises(InfeasibleSynthesisError) as exc:
        synthesize((QUARTER, QUARTER, QUARTER), 0.05)
    assert isinstance(exc.value.candidates, list)
    # ... and reachable exactly at phi = pi/8
    circ = synthesize((QUARTER, QUARTER, QUARTER), EIGHTH)
    assert verify_equivalence(circ, (QUARTER, QUARTER, QUARTER))


def test_generic_targets_fail_near_the_phi_endpoints():
    # with both trailing coordinates nonzero, the required cos^2(2a)
    # blows up as phi approaches either end of the entangler family, so
    # near-endpoint gates cannot reach generic classes in two
    # applications
    target = (0.6, 0.45, 0.25)
    for phi in (1e-6, QUARTER - 1e-6):
        with pytest.raises(InfeasibleSynthesisError):
            synthesize(target, phi)


def test_feasible_phi_profile_for_swap_and_cnot():
    profile = feasible_phi_profile((QUARTER, QUARTER, QUARTER), 31)
    assert len(profile) == 31
    feasible = [phi for phi, ok in profile if ok]
    assert len(feasible) == 1
    assert abs(feasible[0] - EIGHTH) < 1e-15
    profile = feasible_phi_profile((QUARTER, 0.0, 0.0), 31)
    assert all(ok for _, ok in profile)


def test_feasible_phi_profile_validates_grid():
    with pytest.raises(ValueError):
        feasible_phi_profile((QUARTER, 0.0, 0.0), 1)


def test_special_circuit_cnot_family():
    for phi in np.linspace(0.03, QUARTER - 0.03, 10):
        circ = special_circuit("cnot", phi)
        assert circ.nonlocal_count() == 2
        assert verify_equivalence(circ, (QUARTER, 0.0, 0.0))


def test_special_circuit_dcnot_family():
    for phi in np.linspace(EIGHTH, QUARTER - 0.02, 10):
        circ = special_circuit("dcnot", phi)
        assert circ.nonlocal_count() == 2
        assert verify_equivalence(circ, (QUARTER, QUARTER, 0.0))


def test_special_circuit_range_checks():
    for phi in (0.0, QUARTER):
        with pytest.raises(ValueError):
            special_circuit("cnot", phi)
    for phi in (EIGHTH - 0.05, QUARTER):
        with pytest.raises(ValueError):
            special_circuit("dcnot", phi)
    with pytest.raises(ValueError):
        special_circuit("swap", EIGHTH)


def test_circuit_matrix_applies_layers_left_to_right():
    first = LocalLayer(rot_y(0.3), np.eye(2))
    second = LocalLayer(rot_x(0.4), np.eye(2))
    total = circuit_matrix(Circuit(layers=(first, second))).matrix
    assert np.abs(total - kron2(rot_x(0.4) @ rot_y(0.3), np.eye(2))).max() < 1e-14


def test_circuit_global_phase_enters_the_matrix():
    layer = LocalLayer(np.eye(2), np.eye(2))
    total = circuit_matrix(Circuit(layers=(layer,), global_phase=0.9)).matrix
    assert np.abs(total - np.exp(0.9j) * np.eye(4)).max() < 1e-14


def test_local_layer_matrices_are_read_only():
    layer = LocalLayer(rot_y(0.3), rot_x(0.1))
    with pytest.raises(ValueError):
        layer.top[0, 0] = 0.0


def test_nonlocal_layer_carries_phi():
    assert NonlocalLayer(0.2).phi == 0.2


def test_circuit_serialization_round_trip_is_exact():
    rng = np.random.default_rng(95)
    g = dressed(chamber_point(rng), rng)
    circ = synthesize(g, EIGHTH)
    data = json.loads(json.dumps(circuit_to_dict(circ)))
    back = circuit_from_dict(data)
    assert back.global_phase == circ.global_phase
    assert np.array_equal(
        circuit_matrix(back).matrix, circuit_matrix(circ).matrix
    )
    for lay_a, lay_b in zip(circ.layers, back.layers):
        assert type(lay_a) is type(lay_b)
