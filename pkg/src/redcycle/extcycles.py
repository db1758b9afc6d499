"""Triangular extensions and mutation cycles built from reddening sequences.

A triangular extension ``T ->A H`` is the disjoint union of two quivers plus
``a[t][h]`` arrows from each vertex of T to each vertex of H, so its exchange
matrix is block triangular.  Concatenating reddening sequences of the two
factors (relabeled by powers of their associated permutations until both
return to the identity) mutates the extension back to itself on the nose,
which is how every cycle here is produced.

All ``build_*`` constructors verify their own output: a construction whose
cycle fails to close is raised as an error, never returned silently.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .classify import is_abundant
from .errors import (
    CycleConstructionError,
    LabelCollisionError,
    NegativeEntryError,
    NonIdentityPermutationError,
    NotReddeningError,
)
from .framing import c_matrix
from .permutation import Permutation
from .quiver import (
    MutationSequence,
    Quiver,
    find_isomorphism,
    inverse_sequence,
    is_reduced,
    reduce_sequence,
)
from .reddening import is_reddening, source_sequence

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in a)


@dataclass(frozen=True)
class ExtensionSpec:
    """Data of a triangular extension ``t ->a h``.

    Rows of ``a`` are indexed by the sorted mutable labels of ``t``, columns
    by those of ``h``; every entry counts arrows from the T-side vertex to
    the H-side vertex and must be non-negative.
    """

    t: Quiver
    h: Quiver
    a: Matrix

    def __init__(self, t: Quiver, h: Quiver, a: Sequence[Sequence[int]]):
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "a", _as_matrix(a))
        if t.is_framed or h.is_framed:
            raise ValueError("extension factors must be unframed")
        shared = set(t.labels) & set(h.labels)
        if shared:
            raise LabelCollisionError(f"label sets overlap: {sorted(shared)}")
        if len(self.a) != t.rank or any(len(row) != h.rank for row in self.a):
            raise ValueError(
                f"extension matrix must be {t.rank}x{h.rank}, got "
                f"{len(self.a)}x{len(self.a[0]) if self.a else 0}"
            )
        if any(x < 0 for row in self.a for x in row):
            raise NegativeEntryError("extension matrix entries must be >= 0")


def triangular_extension(spec: ExtensionSpec) -> Quiver:
    """Disjoint union of the factors plus ``a[t][h]`` arrows ``t -> h``."""
    vertices = list(spec.t.mutable_labels) + list(spec.h.mutable_labels)
    arrows = list(spec.t.arrows()) + list(spec.h.arrows())
    for i, src in enumerate(spec.t.mutable_labels):
        for j, dst in enumerate(spec.h.mutable_labels):
            if spec.a[i][j]:
                arrows.append((src, dst, spec.a[i][j]))
    return Quiver.from_arrows(vertices, arrows)


def cross_block(q: Quiver, t_labels: Sequence[int], h_labels: Sequence[int]) -> Matrix:
    """The T-by-H block of the exchange matrix of ``q``."""
    return tuple(tuple(q.b(t, h) for h in h_labels) for t in t_labels)


def predicted_cross_block(spec: ExtensionSpec, seq: Sequence[int]) -> Matrix:
    """The cross block after mutating the extension along a T-sequence.

    Equals ``C * a`` where C is the C-matrix of the sequence on the T factor
    alone; the actual mutated extension carries exactly this block, with each
    row's sign matching the red/green color of its T vertex.
    """
    c = c_matrix(spec.t, tuple(seq))
    rows_t = len(spec.a)
    cols_h = len(spec.a[0]) if spec.a else 0
    return tuple(
        tuple(
            sum(c.rows[i][k] * spec.a[k][j] for k in range(rows_t))
            for j in range(cols_h)
        )
        for i in range(rows_t)
    )


@dataclass(frozen=True)
class CycleReport:
    """Verdict record for a candidate mutation cycle.

    ``closes_equal`` asks for labeled equality at the endpoint (the defining
    property of a mutation cycle); ``closes_iso`` holds the relabeling when
    the endpoint is merely isomorphic.  ``simple`` additionally requires the
    sequence to be reduced and the trajectory to visit no quiver twice
    except at the endpoints.  Trajectory distinctness always means exact
    labeled equality, never isomorphism.
    """

    length: int
    is_reduced: bool
    closes_equal: bool
    closes_iso: Permutation | None
    simple: bool
    all_abundant: bool
    trajectory_hashes: tuple[str, ...]


def _hash(q: Quiver) -> str:
    return hashlib.blake2b(q.encode(), digest_size=16).hexdigest()


def verify_cycle(q: Quiver, seq: Sequence[int]) -> CycleReport:
    """Walk the trajectory of ``seq`` from ``q`` and report every cycle property."""
    seq = tuple(seq)
    traj = q.trajectory(seq)
    hashes = tuple(_hash(state) for state in traj)
    closes_equal = traj[-1] == q
    closes_iso = (
        Permutation.identity() if closes_equal else find_isomorphism(q, traj[-1])
    )
    reduced = is_reduced(seq)
    distinct = len(set(hashes[:-1])) == len(seq) if seq else True
    return CycleReport(
        length=len(seq),
        is_reduced=reduced,
        closes_equal=closes_equal,
        closes_iso=closes_iso,
        simple=reduced and closes_equal and distinct,
        all_abundant=all(is_abundant(state) for state in traj),
        trajectory_hashes=hashes,
    )


def _require_reddening(q: Quiver, seq: Sequence[int], side: str) -> Permutation:
    sigma = is_reddening(q, tuple(seq))
    if sigma is None:
        raise NotReddeningError(f"{side} sequence {tuple(seq)} is not reddening")
    return sigma


def _checked(q: Quiver, seq: MutationSequence) -> tuple[Quiver, MutationSequence]:
    report = verify_cycle(q, seq)
    if not report.closes_equal:
        raise CycleConstructionError(
            f"constructed sequence of length {len(seq)} does not close the cycle"
        )
    return q, seq


def build_cycle_equal(
    t: Quiver,
    m_t: Sequence[int],
    h: Quiver,
    m_h: Sequence[int],
    a: Sequence[Sequence[int]],
) -> tuple[Quiver, MutationSequence]:
    """Cycle from two identity-permutation reddening sequences.

    The concatenation ``m_t . m_h`` fixes ``t ->a h`` exactly.  Sequences
    whose permutations are not the identity are rejected; use
    :func:`build_cycle_general` for those.
    """
    rho = _require_reddening(t, m_t, "T")
    sigma = _require_reddening(h, m_h, "H")
    for side, perm in (("T", rho), ("H", sigma)):
        if not perm.is_identity:
            raise NonIdentityPermutationError(
                f"{side} sequence has associated permutation {perm}, not the identity"
            )
    q = triangular_extension(ExtensionSpec(t, h, a))
    return _checked(q, tuple(m_t) + tuple(m_h))


def build_cycle_general(
    t: Quiver,
    m_t: Sequence[int],
    h: Quiver,
    m_h: Sequence[int],
    a: Sequence[Sequence[int]],
) -> tuple[Quiver, MutationSequence]:
    """Cycle from arbitrary reddening sequences of the two factors.

    With associated permutations ``rho`` and ``sigma``, the sequence

        ``m_t . m_h . rho(m_t) . sigma(m_h) ... rho^(k-1)(m_t) . sigma^(k-1)(m_h)``

    closes the cycle, where k is the smallest exponent killing both
    permutations (their orders' lcm).
    """
    rho = _require_reddening(t, m_t, "T")
    sigma = _require_reddening(h, m_h, "H")
    k = lcm(rho.order, sigma.order)
    seq: tuple[int, ...] = ()
    for i in range(k):
        seq += (rho**i).map_sequence(m_t) + (sigma**i).map_sequence(m_h)
    q = triangular_extension(ExtensionSpec(t, h, a))
    return _checked(q, seq)


def build_acyclic_cycle(
    t: Quiver,
    m: Sequence[int],
    h: Quiver,
    n: Sequence[int],
    a: Sequence[Sequence[int]],
) -> tuple[Quiver, MutationSequence]:
    """Cycle through an extension of two mutated acyclic quivers.

    For acyclic factors with source sequences ``s_t``, ``s_h`` and arbitrary
    conjugating sequences ``m``, ``n``, the quiver
    ``mutate_seq(t, m) ->a mutate_seq(h, n)`` is fixed by the reduction of
    ``m^-1 . s_t . m . n^-1 . s_h . n``.
    """
    s_t = source_sequence(t)
    s_h = source_sequence(h)
    m = tuple(m)
    n = tuple(n)
    q = triangular_extension(ExtensionSpec(t.mutate_seq(m), h.mutate_seq(n), a))
    seq = reduce_sequence(
        inverse_sequence(m) + s_t + m + inverse_sequence(n) + s_h + n
    )
    return _checked(q, seq)


def is_distinguishing(
    t: Quiver, seq: Sequence[int], a: Sequence[Sequence[int]]
) -> bool:
    """Whether all quivers along ``seq`` on ``t ->a I_k`` are pairwise distinct.

    ``I_k`` is the arrowless quiver on k fresh consecutive labels placed
    above every label of ``t``.
    """
    mat = _as_matrix(a)
    k = len(mat[0]) if mat else 0
    base = max(t.labels)
    isolated = Quiver.from_arrows(range(base + 1, base + 1 + k), [])
    ext = triangular_extension(ExtensionSpec(t, isolated, mat))
    traj = ext.trajectory(tuple(seq))
    return len({state.encode() for state in traj}) == len(traj)
