"""Immutable simple graphs and the vertex/edge operations studied on them.

Vertices are always labeled ``0..n-1``.  Every operation that drops a vertex
compacts the survivors, keeping their relative order, so outputs are
deterministic and can be compared label-for-label in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidEdgeError, InvalidVertexError, TDColorError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as one neighbor set per vertex."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        validate(self)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise InvalidVertexError(f"edge ({u}, {w}) has an endpoint outside 0..{n - 1}")
            if u == w:
                raise InvalidEdgeError(f"self-loop at vertex {u}")
            nbrs[u].add(w)
            nbrs[w].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        return cls(len(masks), tuple(frozenset(_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set iff ``u`` is a neighbor)."""
        return tuple(sum(1 << u for u in s) for s in self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, w) for u in range(self.n) for w in sorted(self.adj[u]) if u < w)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def key(self) -> tuple[int, int]:
        """Labeled identity ``(n, upper-triangle bitmask)``; cheap to hash."""
        bits = 0
        for i, (u, w) in enumerate(combinations(range(self.n), 2)):
            if w in self.adj[u]:
                bits |= 1 << i
        return self.n, bits

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, w: int) -> bool:
        return 0 <= u < self.n and w in self.adj[u]

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.key == other.key

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate(g: Graph) -> None:
    """Raise unless ``g`` is a simple graph on exactly ``0..n-1``."""
    if g.n < 0 or len(g.adj) != g.n:
        raise TDColorError(f"adjacency has {len(g.adj)} entries for n={g.n}")
    for v, nbrs in enumerate(g.adj):
        if v in nbrs:
            raise InvalidEdgeError(f"self-loop at vertex {v}")
        for u in nbrs:
            if not 0 <= u < g.n:
                raise InvalidVertexError(f"vertex {v} lists neighbor {u} outside 0..{g.n - 1}")
            if v not in g.adj[u]:
                raise TDColorError(f"asymmetric adjacency between {v} and {u}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v} out of range for order {g.n}")


def _check_edge(g: Graph, u: int, w: int) -> None:
    _check_vertex(g, u)
    _check_vertex(g, w)
    if w not in g.adj[u]:
        raise InvalidEdgeError(f"({u}, {w}) is not an edge")


def _drop(g: Graph, v: int, extra: Iterable[Edge] = ()) -> Graph:
    """Delete ``v``, add ``extra`` edges (old labels), and compact labels."""
    relabel = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if v not in (a, b)]
    edges += [(relabel[a], relabel[b]) for a, b in extra]
    return Graph.from_edges(g.n - 1, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(u + g.n, w + g.n) for u, w in h.edges]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    edges = list(disjoint_union(g, h).edges)
    edges += [(u, g.n + w) for u in range(g.n) for w in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """Attach a private copy of ``h`` to every vertex of ``g``.

    Vertex ``i`` of ``g`` keeps label ``i``; its copy of ``h`` occupies
    ``g.n + i*h.n .. g.n + (i+1)*h.n - 1``.
    """
    edges = list(g.edges)
    for i in range(g.n):
        base = g.n + i * h.n
        edges += [(base + a, base + b) for a, b in h.edges]
        edges += [(i, base + a) for a in range(h.n)]
    return Graph.from_edges(g.n * (1 + h.n), edges)


def remove_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return _drop(g, v)


def remove_edge(g: Graph, u: int, w: int) -> Graph:
    _check_edge(g, u, w)
    e = (min(u, w), max(u, w))
    return Graph.from_edges(g.n, [x for x in g.edges if x != e])


def add_edge(g: Graph, u: int, w: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, w)
    return Graph.from_edges(g.n, list(g.edges) + [(u, w)])


def contract_edge(g: Graph, u: int, w: int) -> Graph:
    """Merge the endpoints of ``uw``; the merged vertex takes ``min(u, w)``'s slot."""
    _check_edge(g, u, w)
    keep, gone = min(u, w), max(u, w)
    extra = [(keep, x) for x in g.adj[gone] if x != keep]
    return _drop(g, gone, extra)


def contract_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v`` and make its open neighborhood a clique."""
    _check_vertex(g, v)
    return _drop(g, v, combinations(sorted(g.adj[v]), 2))


def odot(g: Graph, v: int) -> Graph:
    """Remove every edge joining two neighbors of ``v``; ``v`` itself stays."""
    _check_vertex(g, v)
    nv = g.adj[v]
    return Graph.from_edges(g.n, [(a, b) for a, b in g.edges if not (a in nv and b in nv)])


# structural predicates


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    masks = g.masks
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def has_isolated(g: Graph) -> bool:
    return any(not s for s in g.adj)


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion increases the number of components."""
    base = len(components(g))
    return frozenset(
        (u, w) for u, w in g.edges if len(components(remove_edge(g, u, w))) > base
    )


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose deletion increases the number of components."""
    base = len(components(g))
    return frozenset(v for v in range(g.n) if len(components(remove_vertex(g, v))) > base)


@dataclass(frozen=True)
class Structure:
    is_connected: bool
    bridges: frozenset[Edge]
    cut_vertices: frozenset[int]
    degrees: tuple[int, ...]
    has_isolated: bool


def structural_predicates(g: Graph) -> Structure:
    return Structure(
        is_connected=is_connected(g),
        bridges=bridges(g),
        cut_vertices=cut_vertices(g),
        degrees=tuple(g.degrees()),
        has_isolated=has_isolated(g),
    )
