"""Small-graph universes and an isomorphism test for graphs of order <= 12."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import ResourceGuardError
from .graph import Graph, _bits, is_connected

MAX_ENUM_ORDER = 8


def _signatures(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in g.adj[v]))) for v in range(g.n)]


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant: order, size, and the multiset of
    (degree, sorted neighbor degrees) pairs."""
    return g.n, g.m, tuple(sorted(_signatures(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an adjacency-preserving bijection.

    Candidates for each vertex are restricted to vertices of ``h`` with the
    same degree and neighbor-degree multiset.
    """
    if g.n != h.n or g.m != h.m:
        return False
    sg, sh = _signatures(g), _signatures(h)
    if sorted(sg) != sorted(sh):
        return False
    n = g.n
    if n == 0:
        return True
    cands = [[c for c in range(n) if sh[c] == sg[v]] for v in range(n)]

    # Prefer vertices with few candidates, then vertices tied to already-ordered ones.
    order: list[int] = []
    placed = 0
    gm, hm = g.masks, h.masks
    while len(order) < n:
        best = min(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: (-(gm[v] & placed).bit_count(), len(cands[v]), v),
        )
        order.append(best)
        placed |= 1 << best

    image = [0] * n

    def extend(i: int, done: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        want = 0
        for u in _bits(gm[v] & done):
            want |= 1 << image[u]
        for c in cands[v]:
            if used >> c & 1 or hm[c] & used != want:
                continue
            image[v] = c
            if extend(i + 1, done | 1 << v, used | 1 << c):
                return True
        return False

    return extend(0, 0, 0)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ResourceGuardError(f"enumeration order must be in 1..{MAX_ENUM_ORDER}, got {n}")


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, by ascending edge bitmask.

    Bit ``i`` of the mask stands for the ``i``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    _check_order(n)
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        masks = [0] * n
        for i, (u, w) in enumerate(pairs):
            if bits >> i & 1:
                masks[u] |= 1 << w
                masks[w] |= 1 << u
        yield Graph.from_masks(masks)


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Built by extending every class on ``n-1`` vertices with a new vertex
    joined to each possible neighbor subset; every graph arises this way.
    """
    _check_order(n)
    if n == 1:
        return (Graph.from_masks([0]),)
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    new = n - 1
    for base in graph_classes(n - 1):
        for nbrs in range(1 << new):
            masks = [m | ((nbrs >> u & 1) << new) for u, m in enumerate(base.masks)]
            masks.append(nbrs)
            g = Graph.from_masks(masks)
            bucket = buckets.setdefault(invariant(g), [])
            if not any(is_isomorphic(g, h) for h in bucket):
                bucket.append(g)
                reps.append(g)
    return tuple(reps)


def enumerate_connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices: every labeled one, or one per
    isomorphism class when ``dedup`` is set."""
    _check_order(n)
    source = graph_classes(n) if dedup else labeled_graphs(n)
    return (g for g in source if is_connected(g))


def random_connected_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    """Random spanning tree on shuffled labels plus each other pair with
    probability ``density`` (drawn from ``[0.1, 0.6]`` when omitted)."""
    if density is None:
        density = rng.uniform(0.1, 0.6)
    labels = list(range(n))
    rng.shuffle(labels)
    edges = {tuple(sorted((labels[i], labels[rng.randrange(i)]))) for i in range(1, n)}
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < density:
            edges.add(e)
    return Graph.from_edges(n, sorted(edges))
