"""Reddening and maximal green sequences.

A mutation sequence is reddening when it turns every mutable vertex of the
framed quiver red; it then determines a unique relabeling of the base quiver
(its associated permutation), which is read directly off the C-matrix as
``C = -P_sigma``.  A maximal green sequence is a reddening sequence that
only ever mutates green vertices.
"""

from __future__ import annotations

from typing import Iterable

from .errors import CyclicQuiverError, InternalContradictionError
from .framing import Color, c_matrix, framed, read_c_matrix
from .permutation import Permutation
from .quiver import MutationSequence, Quiver, inverse_sequence, reduce_sequence


def is_reddening(q: Quiver, seq: Iterable[int]) -> Permutation | None:
    """The associated permutation if ``seq`` is a reddening sequence, else None.

    Every downstream construction consumes the permutation, so it is
    returned instead of a bare boolean; ``None`` encodes "not reddening".
    An all-red C-matrix is forced to be minus a permutation matrix, so any
    other all-red shape signals a bug rather than a valid state.
    """
    c = c_matrix(q, tuple(seq))
    if not c.all_red():
        return None
    sigma = c.as_neg_permutation()
    if sigma is None:
        raise InternalContradictionError(
            f"all-red C-matrix is not minus a permutation matrix: {c.rows}"
        )
    return sigma


def is_maximal_green(q: Quiver, seq: Iterable[int]) -> Permutation | None:
    """The associated permutation if ``seq`` is a maximal green sequence.

    Returns ``None`` as soon as a red vertex is mutated or if the final
    state is not all red.
    """
    state = framed(q)
    for v in seq:
        if read_c_matrix(state).row_color(v) is not Color.GREEN:
            return None
        state = state.mutate(v)
    c = read_c_matrix(state)
    if not c.all_red():
        return None
    sigma = c.as_neg_permutation()
    if sigma is None:
        raise InternalContradictionError(
            f"all-red C-matrix is not minus a permutation matrix: {c.rows}"
        )
    return sigma


def conjugate_reddening(
    seq: Iterable[int], sigma: Permutation, m: Iterable[int]
) -> MutationSequence:
    """Conjugate a reddening sequence by a mutation sequence ``m``.

    If ``seq`` is reddening for ``q`` with associated permutation ``sigma``,
    the reduction of ``m^-1 . seq . sigma(m)`` is reddening for
    ``q.mutate_seq(m)``.
    """
    m = tuple(m)
    return reduce_sequence(inverse_sequence(m) + tuple(seq) + sigma.map_sequence(m))


def source_sequence(q: Quiver) -> MutationSequence:
    """The reddening source sequence of an acyclic quiver.

    A full topological order of the mutable vertices, smallest label first
    among the current sources.  Mutating along it fixes the quiver and is a
    reddening sequence with identity permutation.
    """
    remaining = set(q.mutable_labels)
    order: list[int] = []
    while remaining:
        sources = [
            v for v in sorted(remaining)
            if all(q.b(u, v) <= 0 for u in remaining if u != v)
        ]
        if not sources:
            raise CyclicQuiverError("quiver has an oriented cycle")
        v = sources[0]
        order.append(v)
        remaining.remove(v)
    return tuple(order)
