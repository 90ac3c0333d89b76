"""Signature computation and verdict-producing code verification.

The *signature* a vertex receives from a vertex set S is N[v] ∩ S.  A set
is an identifying code when every signature is non-empty and no two
vertices share one; a locating-dominating set relaxes both requirements to
vertices outside S.  Verification returns a :class:`Verdict` that either
confirms validity or carries a concrete, re-checkable counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from idcodes.graph import GraphFormatError, LabeledGraph


@dataclass(frozen=True)
class UndominatedVertex:
    """Witness: vertex whose signature is empty."""

    v: int


@dataclass(frozen=True)
class ConflictPair:
    """Witness: two vertices with identical signatures (u < v)."""

    u: int
    v: int


Witness = Union[UndominatedVertex, ConflictPair]


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.valid


def _as_vertex_set(graph: LabeledGraph, code: Iterable[int]) -> frozenset[int]:
    members = frozenset(code)
    for v in members:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < graph.n:
            raise GraphFormatError(f"code member {v!r} is not a vertex of the graph")
    return members


def signature(graph: LabeledGraph, code: Iterable[int], v: int) -> frozenset[int]:
    """N[v] ∩ S for the candidate code S."""
    members = _as_vertex_set(graph, code)
    return graph.closed_neighborhood(v) & members


def _verify(graph: LabeledGraph, code: Iterable[int], check_all: bool) -> Verdict:
    # When several violations exist the reported witness is the one with the
    # lexicographically smallest id tuple — (v,) for an undominated vertex,
    # (u, v) for a conflicting pair — so runs are deterministic.
    members = _as_vertex_set(graph, code)
    checked = graph.vertices() if check_all else [v for v in graph.vertices() if v not in members]
    best: tuple[int, ...] | None = None

    sig_owner: dict[frozenset[int], int] = {}
    for v in checked:
        sig = graph.closed_neighborhood(v) & members
        if not sig:
            key = (v,)
            if best is None or key < best:
                best = key
            continue
        prev = sig_owner.get(sig)
        if prev is None or prev > v:
            sig_owner[sig] = v

    # Second pass for conflicts so every colliding vertex is compared against
    # the smallest owner of its signature class.
    for v in checked:
        sig = graph.closed_neighborhood(v) & members
        if sig and sig_owner[sig] != v:
            key = (sig_owner[sig], v)
            if best is None or key < best:
                best = key

    if best is None:
        return Verdict(True)
    if len(best) == 1:
        return Verdict(False, UndominatedVertex(best[0]))
    return Verdict(False, ConflictPair(best[0], best[1]))


def is_identifying_code(graph: LabeledGraph, code: Iterable[int]) -> Verdict:
    """Check that every vertex gets a non-empty, unique signature from S.

    Valid codes stay valid under supersets, and the whole vertex set is a
    valid code exactly when the graph has no closed twins.
    """
    return _verify(graph, code, check_all=True)


def is_locating_dominating(graph: LabeledGraph, code: Iterable[int]) -> Verdict:
    """Like :func:`is_identifying_code` but only vertices outside S are
    required to receive non-empty, pairwise-distinct signatures."""
    return _verify(graph, code, check_all=False)
