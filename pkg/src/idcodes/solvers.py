"""Exact and greedy minimum identifying-code search, plus a brute-force
set-splitting solver.

Both exact methods return the lexicographically least minimum code so that
independent runs (and independent methods) agree on the exact same set.
Timeouts are reported by raising :class:`SolverTimeout`, never by silently
returning "no code".
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from idcodes.graph import LabeledGraph, closed_twins


class SolverTimeout(Exception):
    """The time budget was exhausted before the search finished."""


class _Deadline:
    __slots__ = ("at",)

    def __init__(self, timeout_ms: Optional[int]):
        self.at = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000.0

    def check(self) -> None:
        if self.at is not None and time.monotonic() > self.at:
            raise SolverTimeout("time budget exhausted")


def _is_valid_mask(masks: tuple[int, ...], smask: int) -> bool:
    seen = set()
    for m in masks:
        sig = m & smask
        if sig == 0 or sig in seen:
            return False
        seen.add(sig)
    return True


def min_identifying_code(
    graph: LabeledGraph,
    method: str = "enumerate",
    limit: Optional[int] = None,
    timeout_ms: Optional[int] = None,
) -> Optional[frozenset[int]]:
    """A minimum-size identifying code, or None.

    None means no code exists within reach: the graph has closed twins, or
    ``limit`` is set and every code is larger.  The result is the
    lexicographically least among all minimum-size codes, for either
    method.  Raises :class:`SolverTimeout` when ``timeout_ms`` runs out.
    """
    if method not in ("enumerate", "bnb"):
        raise ValueError(f"unknown method {method!r}")
    if limit is not None and limit < 0:
        raise ValueError("limit must be >= 0")
    if closed_twins(graph):
        return None
    deadline = _Deadline(timeout_ms)
    if method == "enumerate":
        return _enumerate_minimum(graph, limit, deadline)
    return _branch_and_bound(graph, limit, deadline)


def ic_decision(
    graph: LabeledGraph,
    k: int,
    method: str = "enumerate",
    timeout_ms: Optional[int] = None,
) -> bool:
    """True iff some identifying code of size <= k exists."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return min_identifying_code(graph, method=method, limit=k, timeout_ms=timeout_ms) is not None


def _enumerate_minimum(graph, limit, deadline) -> Optional[frozenset[int]]:
    # Increasing size, lexicographic within each size: the first valid
    # subset found is the lexicographically least minimum code.
    masks = graph.closed_masks
    n = graph.n
    top = n if limit is None else min(limit, n)
    ticks = 0
    for size in range(top + 1):
        for combo in itertools.combinations(range(n), size):
            ticks += 1
            if ticks % 512 == 0:
                deadline.check()
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _is_valid_mask(masks, smask):
                return frozenset(combo)
    return None


def _violations(masks: tuple[int, ...], smask: int):
    """Yield current violations as id tuples: (v,) undominated, (u, v) conflict."""
    owner: dict[int, int] = {}
    for v, m in enumerate(masks):
        sig = m & smask
        if sig == 0:
            yield (v,)
        elif sig in owner:
            yield (owner[sig], v)
        else:
            owner[sig] = v


def _candidate_mask(masks, smask, violation) -> int:
    if len(violation) == 1:
        return masks[violation[0]] & ~smask
    u, v = violation
    return (masks[u] ^ masks[v]) & ~smask


def _branch_and_bound(graph, limit, deadline) -> Optional[frozenset[int]]:
    masks = graph.closed_masks
    n = graph.n
    info_floor = max(1, (n).bit_length() if n >= 1 else 0)
    # Any identifying code must induce n distinct non-empty signatures,
    # hence 2^|S| - 1 >= n.
    while (1 << info_floor) - 1 < n:
        info_floor += 1

    best: Optional[tuple[int, tuple[int, ...]]] = None
    hard_cap = limit if limit is not None else n

    def cap() -> int:
        return best[0] if best is not None else hard_cap

    def lower_bound(smask: int, size: int, forbidden: int) -> int:
        # Violations with pairwise-disjoint candidate sets each demand a
        # distinct new vertex.
        used = 0
        extra = 0
        cands = []
        for violation in _violations(masks, smask):
            cm = _candidate_mask(masks, smask, violation) & ~forbidden
            if cm == 0:
                return n + 1  # unfixable in this subtree
            cands.append(cm)
        cands.sort(key=lambda cm: cm.bit_count())
        for cm in cands:
            if cm & used == 0:
                extra += 1
                used |= cm
        return max(size + extra, info_floor)

    def record(smask: int, size: int) -> None:
        nonlocal best
        code = tuple(v for v in range(n) if smask >> v & 1)
        if best is None or size < best[0] or (size == best[0] and code < best[1]):
            best = (size, code)

    def dfs(smask: int, size: int, forbidden: int) -> None:
        deadline.check()
        branch_on = None
        for violation in _violations(masks, smask):
            if branch_on is None or violation < branch_on:
                branch_on = violation
        if branch_on is None:
            if size <= cap():
                record(smask, size)
            return
        if lower_bound(smask, size, forbidden) > cap():
            return
        cm = _candidate_mask(masks, smask, branch_on) & ~forbidden
        tried = 0
        c = cm
        while c:
            bit = c & -c
            c ^= bit
            dfs(smask | bit, size + 1, forbidden | tried)
            tried |= bit
        return

    dfs(0, 0, 0)
    if best is None:
        return None
    return frozenset(best[1])


def greedy_identifying_code(graph: LabeledGraph) -> Optional[frozenset[int]]:
    """Build a valid code by repeatedly adding the most useful vertex.

    Usefulness of a candidate = number of currently-confused vertex pairs
    it separates plus number of undominated vertices it dominates; ties go
    to the smallest id.  Returns None exactly when closed twins make every
    code impossible; otherwise the result always verifies.
    """
    if closed_twins(graph):
        return None
    masks = graph.closed_masks
    n = graph.n
    smask = 0
    chosen: list[int] = []
    while True:
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(masks[v] & smask, []).append(v)
        confused = [g for g in groups.values() if len(g) > 1]
        undominated = groups.get(0, [])
        if not confused and not undominated:
            return frozenset(chosen)
        best_gain = 0
        best_w = None
        for w in range(n):
            if smask >> w & 1:
                continue
            gain = 0
            for g in confused:
                inside = sum(1 for v in g if masks[v] >> w & 1)
                gain += inside * (len(g) - inside)
            for v in undominated:
                if masks[v] >> w & 1:
                    gain += 1
            if gain > best_gain:
                best_gain = gain
                best_w = w
        # Twin-freeness guarantees some candidate always helps.
        assert best_w is not None
        smask |= 1 << best_w
        chosen.append(best_w)


# ---------------------------------------------------------------------------
# Set splitting


@dataclass(frozen=True)
class SplitInstance:
    """A universe (ordered element names) and a family of its subsets."""

    universe: tuple[str, ...]
    family: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not self.universe:
            raise ValueError("universe must be non-empty")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe elements must be distinct")
        u = set(self.universe)
        for a in self.family:
            if not a:
                raise ValueError("family members must be non-empty")
            if not a <= u:
                raise ValueError(f"family member {sorted(a)} is not a subset of the universe")


@dataclass(frozen=True)
class Bipartition:
    """A two-sided partition of a universe (side0 ∪ side1 = U, disjoint)."""

    side0: frozenset[str]
    side1: frozenset[str]


def is_splitting(instance: SplitInstance, chosen: Iterable[str]) -> bool:
    """True iff every family member meets both ``chosen`` and its complement."""
    x = frozenset(chosen)
    if not x <= set(instance.universe):
        raise ValueError("chosen side is not a subset of the universe")
    return all(a & x and a - x for a in instance.family)


def solve_set_splitting(instance: SplitInstance) -> Optional[Bipartition]:
    """First splitting bipartition in a fixed enumeration order, or None.

    Enumerates the 2^(n-1) bipartitions with the first universe element
    pinned to side0; mask bit j governs whether element j+1 goes to side1.
    """
    universe = instance.universe
    n = len(universe)
    index = {name: i for i, name in enumerate(universe)}
    amasks = []
    for a in instance.family:
        am = 0
        for name in a:
            am |= 1 << index[name]
        amasks.append(am)
    full = (1 << n) - 1
    for mask in range(1 << (n - 1)):
        side1 = mask << 1
        side0 = full & ~side1
        if all(am & side0 and am & side1 for am in amasks):
            return Bipartition(
                frozenset(universe[i] for i in range(n) if side0 >> i & 1),
                frozenset(universe[i] for i in range(n) if side1 >> i & 1),
            )
    return None
