"""Bounded exhaustive search for reddening sequences and mutation classes.

The reddening search walks framed states depth-first in ascending vertex
order, so results are deterministic and come out in lexicographic order.
Branches whose arrow weights pass a guardrail are aborted and counted
rather than silently dropped; a search is *complete* within its length
bound exactly when no branch was aborted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import canonical_form, default_budget
from .errors import AlreadyFramedError
from .framing import CMatrix, framed
from .permutation import Permutation
from .quiver import MutationSequence, Quiver, _mutated_rows

#: Abort a search branch once any arrow multiplicity passes this bound.
WEIGHT_GUARDRAIL = 2**40


@dataclass(frozen=True)
class SearchResult:
    """Reddening sequences found within a length bound.

    ``sequences`` pairs each sequence with its associated permutation,
    sorted lexicographically.  ``complete`` is False when some branch was
    aborted by the weight guardrail, in which case ``overflow_branches``
    counts them.
    """

    sequences: tuple[tuple[MutationSequence, Permutation], ...]
    overflow_branches: int

    @property
    def complete(self) -> bool:
        return self.overflow_branches == 0

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)


def search_reddening(
    q: Quiver,
    max_len: int,
    reduced_only: bool = False,
    green_only: bool = False,
    first_only: bool = False,
    prune_revisited: bool = False,
    weight_limit: int = WEIGHT_GUARDRAIL,
) -> SearchResult:
    """Enumerate all reddening sequences of length <= ``max_len``.

    Flags:
      * ``reduced_only``  - never mutate the same vertex twice in a row;
      * ``green_only``    - only mutate green vertices (maximal green search);
      * ``first_only``    - stop at the first sequence found;
      * ``prune_revisited`` - cut any branch that returns to a framed state
        already on the current path.  This restricts the enumeration to
        simple paths in the framed exchange graph, which is what the
        rank-2 classification counts (a sequence that revisits a state
        contains a removable loop).  Off by default, since it changes which
        sequences are reported, not just how fast.
    """
    if q.is_framed:
        raise AlreadyFramedError("search_reddening expects an unframed base quiver")
    start = framed(q)
    labels = start.labels
    r = q.rank
    mut_positions = list(range(r))
    partner_col = [labels.index(start.frozen_partner(labels[i])) for i in mut_positions]
    rows0 = [list(row) for row in start.rows()]
    fro_positions = list(range(r, len(labels)))

    found: list[tuple[MutationSequence, Permutation]] = []
    overflow = 0
    stop = False

    def frozen_block_rows(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(rows[i][c] for c in partner_col) for i in mut_positions)

    def all_red(rows: list[list[int]]) -> bool:
        return all(rows[i][c] <= 0 for i in mut_positions for c in partner_col)

    def is_green(rows: list[list[int]], i: int) -> bool:
        row = [rows[i][c] for c in partner_col]
        return all(x >= 0 for x in row) and any(x > 0 for x in row)

    def record(rows: list[list[int]], seq: tuple[int, ...]) -> None:
        c = CMatrix(q.mutable_labels, frozen_block_rows(rows))
        sigma = c.as_neg_permutation()
        assert sigma is not None, "all-red C-matrix is not minus a permutation matrix"
        found.append((seq, sigma))

    def dfs(rows: list[list[int]], seq: tuple[int, ...], path: set, depth: int) -> None:
        nonlocal overflow, stop
        if stop or depth == max_len:
            return
        last = seq[-1] if seq else None
        for i in mut_positions:
            v = labels[i]
            if reduced_only and v == last:
                continue
            if green_only and not is_green(rows, i):
                continue
            child = _mutated_rows(rows, i)
            for a in fro_positions:
                for b in fro_positions:
                    child[a][b] = 0
            if any(abs(x) > weight_limit for row in child for x in row):
                overflow += 1
                continue
            key = None
            if prune_revisited:
                key = tuple(tuple(row) for row in child)
                if key in path:
                    continue
            child_seq = seq + (v,)
            if all_red(child):
                record(child, child_seq)
                if first_only:
                    stop = True
                    return
            if prune_revisited:
                path.add(key)
            dfs(child, child_seq, path, depth + 1)
            if prune_revisited:
                path.discard(key)
            if stop:
                return

    path: set = set()
    if prune_revisited:
        path.add(tuple(tuple(row) for row in rows0))
    dfs(rows0, (), path, 0)
    found.sort(key=lambda item: item[0])
    return SearchResult(sequences=tuple(found), overflow_branches=overflow)


@dataclass(frozen=True)
class ClassEnumeration:
    """Mutation class up to isomorphism, within a node budget."""

    forms: dict[bytes, Quiver]
    exhausted: bool

    def __len__(self) -> int:
        return len(self.forms)


def enumerate_class(q: Quiver, node_budget: int | None = None) -> ClassEnumeration:
    """Breadth-first enumeration of the mutation class, deduplicated by
    canonical form, halting at the node budget."""
    budget = node_budget if node_budget is not None else default_budget()
    start = canonical_form(q)
    forms: dict[bytes, Quiver] = {start: q}
    level = {start: q}
    stop = len(forms) >= budget and bool(level)
    while level and not stop:
        next_level: dict[bytes, Quiver] = {}
        for _, rep in sorted(level.items()):
            if stop:
                break
            for v in rep.mutable_labels:
                neighbor = rep.mutate(v)
                form = canonical_form(neighbor)
                if form in forms:
                    continue
                forms[form] = neighbor
                next_level[form] = neighbor
                if len(forms) >= budget:
                    stop = True
                    break
        level = next_level
    return ClassEnumeration(forms=forms, exhausted=not stop)

