"""Structural predicates and bounded forkless exploration.

A fork is an abundant non-acyclic quiver that becomes acyclic after
deleting one vertex (the point of return), with the weight-growth condition
``b(j, i) > max(b(i, r), b(r, j))`` on every directed path ``i -> r -> j``.
Keys and pre-forks are quivers with a twin vertex pair whose single-vertex
deletions are abundant acyclic, respectively forks with a common return.

The twin condition is implemented as sign agreement only (``j -> k`` iff
``j -> k'`` as directions, multiplicities free): the catalog key has twin
arrows of unequal weight, so requiring equal multiplicities would reject it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import AlreadyFramedError, ForkStartError
from .quiver import Quiver

#: Default node budget for bounded explorations; REDCYCLE_BUDGET overrides.
DEFAULT_BUDGET = 100_000


def default_budget() -> int:
    env = os.environ.get("REDCYCLE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class ClassificationReport:
    """Every structural predicate of one quiver, evaluated exhaustively."""

    acyclic: bool
    abundant: bool
    fork_returns: frozenset[int]
    key_pairs: tuple[tuple[tuple[int, int], int], ...]
    prefork_pairs: tuple[tuple[tuple[int, int], int], ...]

    @property
    def is_fork(self) -> bool:
        return bool(self.fork_returns)

    @property
    def is_key(self) -> bool:
        return bool(self.key_pairs)

    @property
    def is_prefork(self) -> bool:
        return bool(self.prefork_pairs)


def is_acyclic(q: Quiver) -> bool:
    """True when the mutable part has no oriented cycle."""
    remaining = set(q.mutable_labels)
    while remaining:
        sources = [v for v in remaining if all(q.b(u, v) <= 0 for u in remaining)]
        if not sources:
            return False
        remaining.difference_update(sources)
    return True


def is_abundant(q: Quiver) -> bool:
    """True when every pair of mutable vertices is joined by >= 2 arrows."""
    mut = q.mutable_labels
    return all(
        abs(q.b(u, v)) >= 2 for i, u in enumerate(mut) for v in mut[i + 1 :]
    )


def _fork_returns(q: Quiver) -> frozenset[int]:
    """Points of return, empty unless the quiver is a fork.

    Acyclic quivers are never forks: a source would satisfy the path
    condition vacuously, and abundant acyclic quivers must stay on the
    forkless side for the closure properties to hold.
    """
    if not is_abundant(q) or is_acyclic(q) or q.rank < 3:
        return frozenset()
    mut = q.mutable_labels
    returns = []
    for r in mut:
        rest = [v for v in mut if v != r]
        if not is_acyclic(q.restrict(rest)):
            continue
        ok = True
        for i in rest:
            bir = q.b(i, r)
            if bir <= 0:
                continue
            for j in rest:
                brj = q.b(r, j)
                if brj <= 0:
                    continue
                if q.b(j, i) <= max(bir, brj):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            returns.append(r)
    return frozenset(returns)


def _twin_pairs(q: Quiver) -> list[tuple[int, int]]:
    """Pairs (k, k') whose arrows to every third vertex agree in direction."""
    mut = q.mutable_labels
    out = []
    for i, k in enumerate(mut):
        for kp in mut[i + 1 :]:
            others = [j for j in mut if j not in (k, kp)]
            if all(
                (q.b(j, k) > 0) == (q.b(j, kp) > 0)
                and (q.b(j, k) < 0) == (q.b(j, kp) < 0)
                for j in others
            ):
                out.append((k, kp))
    return out


def classify(q: Quiver) -> ClassificationReport:
    """Evaluate acyclicity, abundance, fork/key/pre-fork structure.

    All candidate return points and vertex pairs are tried exhaustively;
    target sizes (n <= 16) keep this immediate.
    """
    if q.is_framed:
        raise AlreadyFramedError("classify expects an unframed quiver")
    acyclic = is_acyclic(q)
    abundant = is_abundant(q)
    fork_returns = _fork_returns(q)

    key_pairs = []
    prefork_pairs = []
    # Below rank 3 the twin conditions hold vacuously (single-vertex
    # deletions are trivially abundant acyclic), which would make every
    # 2-vertex quiver a key; the key/pre-fork notions start at rank 3.
    pairs = _twin_pairs(q) if q.rank >= 3 else []
    for k, kp in pairs:
        rest_k = [v for v in q.mutable_labels if v != k]
        rest_kp = [v for v in q.mutable_labels if v != kp]
        del_k = q.restrict(rest_k)
        del_kp = q.restrict(rest_kp)
        if acyclic and is_abundant(del_k) and is_abundant(del_kp):
            key_pairs.append(((k, kp), q.b(k, kp)))
        common = _fork_returns(del_k) & _fork_returns(del_kp)
        for r in sorted(common):
            prefork_pairs.append(((k, kp), r))

    report = ClassificationReport(
        acyclic=acyclic,
        abundant=abundant,
        fork_returns=fork_returns,
        key_pairs=tuple(key_pairs),
        prefork_pairs=tuple(prefork_pairs),
    )
    assert not report.fork_returns or report.abundant
    assert not report.key_pairs or report.acyclic
    return report


def canonical_form(q: Quiver) -> bytes:
    """Lexicographically minimal row-major encoding of the exchange matrix
    over all vertex relabelings.

    Equal canonical forms exactly characterize isomorphic quivers.  The
    search is a branch-and-bound over orderings: candidates at each depth
    are sorted by their row-0 entry, and a branch is cut as soon as its
    row-0 prefix exceeds the best encoding found so far.
    """
    if q.is_framed:
        raise AlreadyFramedError("canonical_form expects an unframed quiver")
    mut = q.mutable_labels
    n = len(mut)
    if n == 0:
        return b"0|"
    rows = q.rows()
    best: list[int] | None = None

    def dfs(perm: list[int], used: set[int], tied: bool) -> None:
        nonlocal best
        d = len(perm)
        if d == n:
            flat = [rows[i][j] for i in perm for j in perm]
            if best is None or flat < best:
                best = flat
            return
        p0 = perm[0]
        for key, w in sorted((rows[p0][w], w) for w in range(n) if w not in used):
            child_tied = tied
            if tied and best is not None:
                if key > best[d]:
                    break
                child_tied = key == best[d]
            used.add(w)
            perm.append(w)
            dfs(perm, used, child_tied)
            perm.pop()
            used.remove(w)

    for v0 in range(n):
        dfs([v0], {v0}, best is not None)
    assert best is not None
    return f"{n}|".encode("ascii") + ",".join(map(str, best)).encode("ascii")


@dataclass(frozen=True)
class ForklessReport:
    """Deduplicated non-fork part of a mutation class, up to a node budget.

    ``forms`` maps each canonical form to the first labeled representative
    reached by breadth-first search; ``key_forms`` is the subset classified
    as keys.  ``exhausted`` is True when the frontier emptied before the
    budget was hit.
    """

    forms: dict[bytes, Quiver]
    key_forms: dict[bytes, Quiver]
    exhausted: bool


def forkless_explore(
    q: Quiver, node_budget: int | None = None, discard_preforks: bool = False
) -> ForklessReport:
    """Breadth-first search of the forkless part, deduplicating by canonical
    form and discarding forks as they appear.

    With ``discard_preforks`` the walk also drops pre-forks, exploring the
    pre-forkless part instead; some quivers (the weighted box, for one)
    have an infinite forkless part but a finite pre-forkless one, so only
    the latter exploration can exhaust.

    Deterministic: each BFS level is processed in canonical-form order.
    Raises ForkStartError when the starting quiver is itself a fork.
    """
    budget = node_budget if node_budget is not None else default_budget()
    if classify(q).is_fork:
        raise ForkStartError("starting quiver is a fork")
    start = canonical_form(q)
    forms: dict[bytes, Quiver] = {start: q}
    key_forms: dict[bytes, Quiver] = {}
    if classify(q).is_key:
        key_forms[start] = q
    level = {start: q}
    exhausted = True
    stop = len(forms) >= budget and bool(level)
    while level and not stop:
        next_level: dict[bytes, Quiver] = {}
        for _, rep in sorted(level.items()):
            if stop:
                break
            for v in rep.mutable_labels:
                neighbor = rep.mutate(v)
                report = classify(neighbor)
                if report.is_fork or (discard_preforks and report.is_prefork):
                    continue
                form = canonical_form(neighbor)
                if form in forms:
                    continue
                forms[form] = neighbor
                next_level[form] = neighbor
                if report.is_key:
                    key_forms[form] = neighbor
                if len(forms) >= budget:
                    stop = True
                    break
        level = next_level
    if stop:
        exhausted = False
    return ForklessReport(forms=forms, key_forms=key_forms, exhausted=exhausted)
