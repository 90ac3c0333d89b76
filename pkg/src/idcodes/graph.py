"""Vertex-labeled simple undirected graphs with bit-exact serialization.

Vertices are numbered 0..|V|-1 and each carries a role label: a short
colon-separated string such as ``Uplus:3``, ``Fstar:1:2``, ``Delta:0:2:w``,
``Theta:4:p``, ``Gamma:a`` or ``Plain:left``.  Roles are unique per graph,
which makes golden files diffable and lets downstream tooling find any
structural vertex by name.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graphs, role strings, or graph documents."""


# Role grammar: tag -> (number of fields after the tag, validator).
_THETA_SLOTS = ("p", "l", "m", "h", "e", "g", "f")
_GAMMA_SLOTS = ("a", "b", "c", "a1", "b1", "pa", "pc")
_DELTA_SLOTS = ("w", "x", "y", "z")


def _nonneg(field: str) -> bool:
    return field.isdigit()


def _positive(field: str) -> bool:
    return field.isdigit() and int(field) >= 1


def _bit(field: str) -> bool:
    return field in ("0", "1")


_ROLE_GRAMMAR = {
    "Uplus": (_positive,),
    "Uminus": (_positive,),
    "Fstar": (_nonneg, _nonneg),
    "Fplus": (_nonneg, _nonneg),
    "Fminus": (_nonneg, _nonneg),
    "Lambda": (_nonneg,),
    "Plambda": (_nonneg,),
    "Omega": (_nonneg,),
    "Pomega": (_nonneg,),
    "Dhat": (_nonneg, _bit),
    "Dbar": (_nonneg, _bit),
    "Delta": (_nonneg, lambda f: f in ("1", "2", "3", "4"), lambda f: f in _DELTA_SLOTS),
    "Theta": (_positive, lambda f: f in _THETA_SLOTS),
    "Gamma": (lambda f: f in _GAMMA_SLOTS,),
    "Plain": (lambda f: bool(f),),
}


def validate_role(role: str) -> None:
    """Raise GraphFormatError unless ``role`` is a well-formed role string."""
    if not isinstance(role, str) or not role:
        raise GraphFormatError(f"role must be a non-empty string, got {role!r}")
    tag, _, rest = role.partition(":")
    if tag not in _ROLE_GRAMMAR:
        raise GraphFormatError(f"unknown role tag {tag!r} in {role!r}")
    validators = _ROLE_GRAMMAR[tag]
    fields = rest.split(":") if rest else []
    if len(fields) != len(validators):
        raise GraphFormatError(
            f"role {role!r}: expected {len(validators)} field(s) after {tag!r}"
        )
    for field, ok in zip(fields, validators):
        if not ok(field):
            raise GraphFormatError(f"role {role!r}: bad field {field!r}")


def role_tag(role: str) -> str:
    """The leading tag of a role string (``"Theta:4:p"`` -> ``"Theta"``)."""
    return role.partition(":")[0]


def role_fields(role: str) -> tuple[str, ...]:
    """The fields of a role string after the tag, as strings."""
    tag, _, rest = role.partition(":")
    return tuple(rest.split(":")) if rest else ()


class LabeledGraph:
    """An immutable simple undirected graph whose vertices carry roles.

    Construct through :func:`build_graph`, which validates input.  After
    construction the graph is read-only and safe to share across workers.
    """

    __slots__ = ("roles", "_adj", "__dict__")

    def __init__(self, roles: tuple[str, ...], adj: tuple[tuple[int, ...], ...]):
        self.roles = roles
        self._adj = adj

    @property
    def n(self) -> int:
        return len(self.roles)

    def vertices(self) -> range:
        return range(len(self.roles))

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Open neighborhood of ``v`` as a sorted tuple."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as sorted pairs, in lexicographic order."""
        for u in range(len(self.roles)):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    @cached_property
    def role_to_id(self) -> dict[str, int]:
        return {role: i for i, role in enumerate(self.roles)}

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods as bitmasks, for solver hot loops."""
        masks = []
        for v in range(len(self.roles)):
            m = 1 << v
            for u in self._adj[v]:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """N[v]: the vertex together with its neighbors."""
        self._check_vertex(v)
        return frozenset((v, *self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self._adj)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < len(self.roles):
            raise GraphFormatError(f"invalid vertex id {v!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.roles == other.roles and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.roles, self._adj))

    def __repr__(self) -> str:
        return f"LabeledGraph(|V|={self.n}, |E|={self.edge_count})"


def build_graph(roles: Sequence[str], edges: Iterable[tuple[int, int]]) -> LabeledGraph:
    """Build a validated :class:`LabeledGraph`.

    ``roles`` gives one role string per vertex (vertex ids follow list
    order); ``edges`` is any iterable of id pairs.  Duplicate edges are
    merged; self-loops, out-of-range endpoints and duplicate roles raise
    :class:`GraphFormatError`.
    """
    roles = tuple(roles)
    seen: set[str] = set()
    for role in roles:
        validate_role(role)
        if role in seen:
            raise GraphFormatError(f"duplicate role {role!r}")
        seen.add(role)
    n = len(roles)
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise GraphFormatError(f"edge {pair!r} is not an id pair") from None
        if not (isinstance(u, int) and isinstance(v, int)) or isinstance(u, bool) or isinstance(v, bool):
            raise GraphFormatError(f"edge {pair!r} has non-integer endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) endpoint out of range for {n} vertices")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
    return LabeledGraph(roles, adj)


def closed_neighborhood(graph: LabeledGraph, v: int) -> frozenset[int]:
    """N[v] = N(v) ∪ {v}."""
    return graph.closed_neighborhood(v)


def closed_twins(graph: LabeledGraph) -> list[tuple[int, int]]:
    """All unordered pairs {u,v} with N[u] = N[v], sorted.

    Such pairs can never receive distinct signatures, so the list is empty
    exactly when the graph admits an identifying code at all.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in graph.vertices():
        groups.setdefault(graph.closed_neighborhood(v), []).append(v)
    pairs = []
    for members in groups.values():
        if len(members) > 1:
            members.sort()
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    pairs.append((members[i], members[j]))
    return sorted(pairs)


def emit_graph(graph: LabeledGraph) -> str:
    """Serialize to the canonical graph document (UTF-8 JSON text).

    Canonical form: vertices in id order, edges as ``[u, v]`` with u < v
    sorted lexicographically, two-space indentation, trailing newline.
    """
    doc = {
        "vertices": [{"id": i, "role": role} for i, role in enumerate(graph.roles)],
        "edges": [[u, v] for u, v in graph.edges()],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_graph(text: str | bytes) -> LabeledGraph:
    """Parse a graph document produced by :func:`emit_graph` (or hand-written).

    Vertex ids must form exactly 0..n-1; records may appear in any order.
    Raises :class:`GraphFormatError` on malformed documents.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not a valid graph document: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphFormatError("graph document needs 'vertices' and 'edges' arrays")
    records = doc["vertices"]
    if not isinstance(records, list) or not records:
        raise GraphFormatError("'vertices' must be a non-empty array")
    n = len(records)
    roles: list[str | None] = [None] * n
    for rec in records:
        if not isinstance(rec, dict) or "id" not in rec or "role" not in rec:
            raise GraphFormatError(f"bad vertex record {rec!r}")
        vid = rec["id"]
        if not isinstance(vid, int) or isinstance(vid, bool) or not 0 <= vid < n:
            raise GraphFormatError(f"vertex id {vid!r} outside 0..{n - 1}")
        if roles[vid] is not None:
            raise GraphFormatError(f"vertex id {vid} appears twice")
        roles[vid] = rec["role"]
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be an array of id pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"bad edge record {e!r}")
        pairs.append((e[0], e[1]))
    return build_graph([r for r in roles if r is not None], pairs)
