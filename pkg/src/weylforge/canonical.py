"""Canonical coordinates of two-qubit gates and the KAK-type decomposition.

Every two-qubit gate factors as

    g = e^{i phase} (a1 (x) b1) . G(c1, c2, c3) . (a2 (x) b2)

with single-qubit factors a_i, b_i and a core G(c) that carries all the
nonlocal content.  The triple (c1, c2, c3) is unique once folded into
the chamber pi/4 >= c1 >= c2 >= |c3|; folding uses the residual freedom
of the decomposition: shifting any coordinate by a multiple of pi/2,
permuting the coordinates, and flipping the signs of any two.

This module builds the core gate, reduces arbitrary triples to the
chamber, recovers coordinates from a matrix, and performs the full
decomposition.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    PAULIS,
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
from .invariants import MAGIC_FRAME, invariants_from_coords, local_invariants, m_matrix

__all__ = [
    "CanonicalCoords",
    "SpectralPhases",
    "KakFactors",
    "canonical_gate",
    "spectral_phases",
    "in_weyl_chamber",
    "reduce_to_weyl",
    "coords_equivalent",
    "extract_coordinates",
    "kak_decompose",
]

QUARTER = np.pi / 4
HALF = np.pi / 2


class CanonicalCoords(NamedTuple):
    """Coordinate triple of a local-equivalence class, radians."""

    c1: float
    c2: float
    c3: float


class SpectralPhases(NamedTuple):
    """The four magic-frame eigenphases of a canonical gate; they sum to 0."""

    lam1: float
    lam2: float
    lam3: float
    lam4: float


@dataclass(frozen=True)
class KakFactors:
    """Result of kak_decompose.

    (a1 (x) b1) . canonical_gate(core) . (a2 (x) b2) . e^{i global_phase}
    reproduces the input within 1e-8; all four locals have determinant 1.
    """

    a1: np.ndarray
    b1: np.ndarray
    a2: np.ndarray
    b2: np.ndarray
    core: CanonicalCoords
    global_phase: float


def _coords(c) -> CanonicalCoords:
    c1, c2, c3 = (float(v) for v in c)
    return CanonicalCoords(c1, c2, c3)


def canonical_gate(c) -> GateMatrix:
    """The core gate G(c1,c2,c3) = exp(-i sum_k c_k sigma_k (x) sigma_k).

    Written out in the computational basis:

        [ e^{-ic3} c-        .           .      -i e^{-ic3} s- ]
        [      .        e^{ic3} c+  -i e^{ic3} s+       .      ]
        [      .       -i e^{ic3} s+   e^{ic3} c+       .      ]
        [ -i e^{-ic3} s-     .           .        e^{-ic3} c-  ]

    with c± = cos(c1 ± c2), s± = sin(c1 ± c2).
    """
    c1, c2, c3 = _coords(c)
    cm, cp = np.cos(c1 - c2), np.cos(c1 + c2)
    sm, sp = np.sin(c1 - c2), np.sin(c1 + c2)
    em, ep = np.exp(-1j * c3), np.exp(1j * c3)
    return GateMatrix(
        [
            [em * cm, 0, 0, -1j * em * sm],
            [0, ep * cp, -1j * ep * sp, 0],
            [0, -1j * ep * sp, ep * cp, 0],
            [-1j * em * sm, 0, 0, em * cm],
        ]
    )


def spectral_phases(c) -> SpectralPhases:
    """Eigenphases of the canonical gate at c.

    In the magic frame G(c) is diagonal with entries e^{-i lam_k}; the
    frame of this package places them in slot order (lam1, lam4, lam3,
    lam2).  The four phases sum to zero.
    """
    c1, c2, c3 = _coords(c)
    return SpectralPhases(
        c1 - c2 + c3,
        -c1 + c2 + c3,
        -(c1 + c2 + c3),
        c1 + c2 - c3,
    )


def in_weyl_chamber(c, tol: float = 1e-12) -> bool:
    """Chamber predicate pi/4 >= c1 >= c2 >= |c3|, with slack tol."""
    c1, c2, c3 = _coords(c)
    return c1 <= QUARTER + tol and c1 >= c2 - tol and c2 >= abs(c3) - tol


# The folding group acting on coordinate triples, realized as a finite
# candidate enumeration: per-coordinate shifts into [0, pi/2) plus an
# optional extra -pi/2, the four even sign patterns, and all coordinate
# permutations.  192 candidates cover every chamber representative.

_SIGN_PATTERNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
_PERMUTATIONS = tuple(permutations(range(3)))


def _orbit_candidates(c):
    """Yield (candidate, (shift K, sign pattern, permutation)) pairs.

    The ops record reconstructs the group element: candidate[t] =
    (sign * (c + K*pi/2))[perm[t]].
    """
    c = np.asarray(c, dtype=float)
    base = np.mod(c, HALF)
    kmod = np.round((base - c) / HALF).astype(int)
    for bits in range(8):
        kd = np.array([(bits >> i) & 1 for i in range(3)])
        vals = base - kd * HALF
        K = kmod - kd
        for pat in _SIGN_PATTERNS:
            flipped = vals * np.array(pat)
            for perm in _PERMUTATIONS:
                yield tuple(flipped[list(perm)]), (tuple(K), pat, perm)


def _reduce_with_ops(c):
    """Chamber representative plus the group element that reaches it."""
    best = None
    for cand, ops in _orbit_candidates(c):
        if in_weyl_chamber(cand):
            if best is None or cand > best[0]:
                best = (cand, ops)
    if best is None:
        raise ConsistencyError(f"no chamber representative found for {tuple(c)}")
    return best


def _snap_to_chamber(cand) -> CanonicalCoords:
    """Clamp sub-1e-12 predicate overshoot so the ordering chain is strict."""
    c1, c2, c3 = cand
    c1 = min(c1, QUARTER)
    c2 = min(c2, c1)
    if abs(c3) > c2:
        c3 = np.sign(c3) * c2
    # adding 0.0 turns -0.0 into +0.0
    return CanonicalCoords(float(c1) + 0.0, float(c2) + 0.0, float(c3) + 0.0)


def reduce_to_weyl(c) -> CanonicalCoords:
    """Fold an arbitrary coordinate triple into the chamber.

    Brute-force over the finite candidate set; among the candidates that
    land inside the chamber, ties (boundary identifications of one class)
    are broken toward the lexicographically greatest triple.
    """
    cand, _ = _reduce_with_ops(_coords(c))
    return _snap_to_chamber(cand)


def coords_equivalent(a, b, tol: float = 1e-9) -> bool:
    """Do two coordinate triples name the same local-equivalence class?

    Compares chamber representatives, cross-checked against the closed
    form invariants of both triples.
    """
    ra = reduce_to_weyl(a)
    rb = reduce_to_weyl(b)
    same_rep = max(abs(x - y) for x, y in zip(ra, rb)) <= tol
    ia = invariants_from_coords(a)
    ib = invariants_from_coords(b)
    same_inv = abs(ia.g1 - ib.g1) <= 1e-7 and abs(ia.g2 - ib.g2) <= 1e-7
    if same_rep and not same_inv:
        raise ConsistencyError(
            f"chamber representatives of {tuple(a)} and {tuple(b)} coincide "
            "but their invariants disagree"
        )
    return same_rep and same_inv


# Single-qubit fix-ups for the three generator types of the folding
# group, used when the decomposition needs the chamber representative
# *and* matching local factors:
#
#   shift by k*pi/2 on axis i:
#       G(c) = e^{-ik pi/2} ((i sigma_i)^{-k} (x) (i sigma_i)^{-k}) G(c + k pi/2 e_i)
#   sign flip of the two axes != i:
#       G(c) = e^{i pi} ((i sigma_i) (x) I) G(flip c) ((i sigma_i) (x) I)
#   transposition of axes j,k (i fixed):
#       G(c) = (w+ (x) w+) G(swap c) (w (x) w),  w = exp(-i pi/4 sigma_i)

_AXIS_ROT = (rot_x, rot_y, rot_z)


def _chamber_locals(cprime, K, pat, perm):
    """Locals (La, Lb, Ra, Rb), phase, and final triple realizing

        G(cprime) = e^{i phase} (La (x) Lb) G(final) (Ra (x) Rb).
    """
    eye = np.eye(2, dtype=complex)
    La, Lb, Ra, Rb = eye, eye, eye, eye
    phase = 0.0
    cur = np.asarray(cprime, dtype=float).copy()
    for i in range(3):
        k = int(K[i])
        if k == 0:
            continue
        u = np.linalg.matrix_power(1j * PAULIS[i], (4 - (k % 4)) % 4)
        La = La @ u
        Lb = Lb @ u
        phase -= k * HALF
        cur[i] += k * HALF
    if pat != (1, 1, 1):
        i = pat.index(1)
        u = 1j * PAULIS[i]
        La = La @ u
        Ra = u @ Ra
        phase += np.pi
        cur = cur * np.array(pat)
    # realize the permutation as transpositions applied left to right
    target = list(perm)
    work = list(range(3))
    for t in range(3):
        if work[t] == target[t]:
            continue
        j = work.index(target[t])
        i = next(ax for ax in range(3) if ax not in (t, j))
        w = _AXIS_ROT[i](QUARTER)
        La = La @ w.conj().T
        Lb = Lb @ w.conj().T
        Ra = w @ Ra
        Rb = w @ Rb
        cur[[t, j]] = cur[[j, t]]
        work[t], work[j] = work[j], work[t]
    return (La, Lb, Ra, Rb), phase, cur


def extract_coordinates(g, tol: Tolerances = DEFAULT_TOLERANCES) -> CanonicalCoords:
    """Chamber coordinates of the class of an arbitrary two-qubit gate.

    The magic-frame Gram matrix of the determinant-normalized gate has
    eigenvalues e^{-2i lam_k}.  Halving the computed phases gives the
    lam's up to ordering and mod-pi branches; the linear inversion

        c1 = (lam1+lam4)/2,  c2 = (lam2+lam4)/2,  c3 = (lam1+lam2)/2

    is applied to every ordering, each result folded into the chamber,
    and the representative whose closed-form invariants match the gate's
    is returned.  Branch shifts need no extra enumeration: adding pi to
    any lam moves two coordinates by pi/2, which the folding absorbs.
    """
    gate = su4_normalize(g, tol=tol)
    target = local_invariants(gate)
    lam = -np.angle(np.linalg.eigvals(m_matrix(gate))) / 2.0

    seen = set()
    matches = []
    for order in permutations(range(4)):
        l1, l2, l3, l4 = lam[list(order)]
        cand = np.array([(l1 + l4) / 2, (l2 + l4) / 2, (l1 + l2) / 2])
        key = tuple(np.round(np.mod(cand, HALF) / 1e-9).astype(np.int64))
        if key in seen:
            continue
        seen.add(key)
        rep = reduce_to_weyl(cand)
        got = invariants_from_coords(rep)
        if abs(got.g1 - target.g1) <= 1e-7 and abs(got.g2 - target.g2) <= 1e-7:
            matches.append(rep)
    if not matches:
        raise ConsistencyError(
            "no candidate coordinate ordering reproduces the gate invariants"
        )
    first = matches[0]
    spread = max(abs(x - y) for m in matches for x, y in zip(first, m))
    if spread > 1e-7:
        raise ConsistencyError(
            f"coordinate candidates are ambiguous (spread {spread:.3e})"
        )
    return first


def kak_decompose(g, tol: Tolerances = DEFAULT_TOLERANCES) -> KakFactors:
    """Full canonical decomposition of a two-qubit gate.

    Steps: strip the determinant phase; move to the magic frame, where
    the Gram matrix m = Ub^T Ub is symmetric unitary and its real and
    imaginary parts commute; diagonalize both parts in one real
    orthogonal frame; read the eigenphases, giving the core, and the
    frame, giving the right local; recover the left local by division;
    fold the raw core into the chamber, compensating with single-qubit
    fix-ups; split both locals into SU(2) tensor factors.
    """
    gate = as_gate(g, tol=tol)
    det = np.linalg.det(gate.matrix)
    factor = (1.0 / det) ** 0.25
    u = factor * gate.matrix

    q = MAGIC_FRAME
    ub = q.conj().T @ u @ q
    m = ub.T @ ub
    pairs, frame = eig_commuting_symmetric_pair(m.real, m.imag, tol=tol)
    if np.linalg.det(frame) < 0:
        frame = frame.copy()
        frame[:, 0] = -frame[:, 0]

    lam = -np.arctan2(pairs[:, 1], pairs[:, 0]) / 2.0
    # det 1 forces sum(lam) to a multiple of pi; an odd multiple would put
    # the frame product in the wrong SO(4) component, so shift one branch
    if round(lam.sum() / np.pi) % 2 != 0:
        lam[0] -= np.sign(lam.sum()) * np.pi
    d = np.exp(-1j * lam)

    o2 = frame.T
    o1 = (ub @ frame) * d.conj()[None, :]
    imag_leak = np.abs(o1.imag).max()
    if imag_leak > 1e-7:
        raise ConsistencyError(
            f"left factor is not real orthogonal (imaginary part {imag_leak:.3e})"
        )
    o1 = o1.real

    # magic-frame diagonal slots carry (lam1, lam4, lam3, lam2)
    raw = np.array([(lam[0] + lam[1]) / 2, (lam[3] + lam[1]) / 2, (lam[0] + lam[3]) / 2])
    core_check = np.abs(q @ np.diag(d) @ q.conj().T - canonical_gate(raw).matrix).max()
    if core_check > 1e-9:
        raise ConsistencyError(
            f"eigenphases do not assemble into a canonical core ({core_check:.3e})"
        )

    a_left = q @ o1 @ q.conj().T
    a_right = q @ o2 @ q.conj().T

    cand, ops = _reduce_with_ops(raw)
    (la, lb, ra, rb), _, cur = _chamber_locals(raw, *ops)
    if np.abs(cur - np.asarray(cand)).max() > 1e-10:
        raise ConsistencyError("chamber fix-up bookkeeping mismatch")
    core = _snap_to_chamber(cand)

    a1, b1 = split_local(a_left @ kron2(la, lb), tol=tol)
    a2, b2 = split_local(kron2(ra, rb) @ a_right, tol=tol)

    # the SU(2) splits fix each factor only up to a joint sign, so read
    # the global phase off the overlap with the input instead of
    # accumulating it through the fix-ups
    recon = kron2(a1, b1) @ canonical_gate(core).matrix @ kron2(a2, b2)
    overlap = (gate.matrix * recon.conj()).sum()
    phase = float(np.angle(overlap))
    residual = np.abs(np.exp(1j * phase) * recon - gate.matrix).max()
    if residual > 1e-6:
        raise ConsistencyError(f"reassembly residual {residual:.3e} exceeds 1e-6")

    for arr in (a1, b1, a2, b2):
        arr.setflags(write=False)
    return KakFactors(a1=a1, b1=b1, a2=a2, b2=b2, core=core, global_phase=phase)
