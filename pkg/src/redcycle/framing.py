"""Framed and coframed extensions, C-matrices, and red/green vertex colors.

Framing adds one frozen partner per mutable vertex with an arrow into it;
coframing orients those arrows the other way.  The C-matrix of a mutation
sequence records, for each mutable vertex, its signed arrow counts to the
frozen vertices of the mutated framed quiver.  Row sign-coherence of every
C-matrix is a theorem, so a violation is always raised as a hard error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AlreadyFramedError,
    NotFramedError,
    SignCoherenceError,
    ZeroRowError,
)
from .permutation import Permutation
from .quiver import Quiver


class Color(enum.Enum):
    GREEN = "green"
    RED = "red"


def _frozen_offset(max_label: int) -> int:
    """Smallest power of ten at least ``10 * max_label``; keeps frozen labels
    visually recognizable (partner of i is i + offset) and collision-free."""
    p = 10
    while p < 10 * max_label:
        p *= 10
    return p


def framed(q: Quiver) -> Quiver:
    """The framed extension: new frozen partner ``i'`` and an arrow ``i -> i'``."""
    return _extend(q, down=False)


def coframed(q: Quiver) -> Quiver:
    """The coframed extension: new frozen partner ``i'`` and an arrow ``i' -> i``."""
    return _extend(q, down=True)


def _extend(q: Quiver, down: bool) -> Quiver:
    if q.is_framed:
        raise AlreadyFramedError("quiver already carries frozen vertices")
    offset = _frozen_offset(max(q.mutable_labels))
    pairs = [(v, v + offset) for v in q.mutable_labels]
    arrows = list(q.arrows())
    for m, f in pairs:
        arrows.append((f, m, 1) if down else (m, f, 1))
    vertices = list(q.mutable_labels) + [f for _, f in pairs]
    return Quiver.from_arrows(vertices, arrows, frozen_pairs=pairs)


@dataclass(frozen=True)
class CMatrix:
    """Square integer matrix of mutable-to-frozen arrow counts.

    Rows and columns are indexed by ``labels`` (the mutable labels of the
    base quiver, ascending); column ``j`` refers to the frozen partner of
    label ``j``.
    """

    labels: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[self.labels.index(i)][self.labels.index(j)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[self.labels.index(i)]

    @property
    def is_identity(self) -> bool:
        n = len(self.labels)
        return all(self.rows[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def row_color(self, i: int) -> Color:
        """Green for a non-negative row, red for a non-positive one."""
        row = self.row(i)
        has_pos = any(x > 0 for x in row)
        has_neg = any(x < 0 for x in row)
        if has_pos and has_neg:
            raise SignCoherenceError(f"row of vertex {i} mixes signs: {row}")
        if not has_pos and not has_neg:
            raise ZeroRowError(f"row of vertex {i} is zero")
        return Color.GREEN if has_pos else Color.RED

    def all_red(self) -> bool:
        return all(x <= 0 for row in self.rows for x in row)

    def as_neg_permutation(self) -> Permutation | None:
        """If the matrix equals minus a permutation matrix, the permutation.

        The convention matches the associated permutation of a reddening
        sequence: ``sigma(i) = j`` where column ``i`` has its ``-1`` in
        row ``j``.
        """
        n = len(self.labels)
        mapping: dict[int, int] = {}
        for col in range(n):
            hits = [r for r in range(n) if self.rows[r][col] != 0]
            if len(hits) != 1 or self.rows[hits[0]][col] != -1:
                return None
            mapping[self.labels[col]] = self.labels[hits[0]]
        return Permutation(mapping)

    def determinant(self) -> int:
        """Exact integer determinant (Bareiss fraction-free elimination)."""
        n = len(self.labels)
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for swap in range(k + 1, n):
                    if m[swap][k] != 0:
                        m[k], m[swap] = m[swap], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1


def read_c_matrix(framed_state: Quiver, base_labels: Iterable[int] | None = None) -> CMatrix:
    """Read the mutable-by-frozen block out of a framed (and mutated) quiver."""
    if not framed_state.is_framed:
        raise NotFramedError("quiver carries no frozen vertices")
    labels = tuple(sorted(base_labels)) if base_labels is not None else framed_state.mutable_labels
    partner = dict(framed_state.frozen_pairs)
    rows = tuple(
        tuple(framed_state.b(i, partner[j]) for j in labels) for i in labels
    )
    return CMatrix(labels, rows)


def _check_coherent(c: CMatrix) -> None:
    for v in c.labels:
        c.row_color(v)  # raises on a mixed-sign or zero row


def c_matrix(q: Quiver, seq: Iterable[int]) -> CMatrix:
    """Frame ``q``, mutate along ``seq``, and return the resulting C-matrix.

    Sign-coherence and the no-zero-row property are asserted at every
    intermediate step, not just at the end.
    """
    if q.is_framed:
        raise AlreadyFramedError("c_matrix expects an unframed base quiver")
    state = framed(q)
    _check_coherent(read_c_matrix(state))
    for v in seq:
        state = state.mutate(v)
        _check_coherent(read_c_matrix(state))
    return read_c_matrix(state)


def vertex_color(framed_state: Quiver, v: int) -> Color:
    """Green if all arrows from ``v`` point into the frame, red if all out of it."""
    if not framed_state.is_framed:
        raise NotFramedError("vertex_color needs a framed quiver")
    return read_c_matrix(framed_state).row_color(v)
