"""Exact chromatic number, total domination number and TD-chromatic number.

All three searches work on integer bitmasks (``Graph.masks``).  The
TD-chromatic search tries ``k`` upward from ``max(chi, gamma_t)``; the first
``k`` admitting a TD-coloring is the answer because splitting a class of a
TD-coloring keeps it a TD-coloring, so feasibility is monotone in ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .coloring import Coloring, TDCertificate, is_td_coloring
from .errors import IsolatedVertexError, ResourceGuardError
from .graph import Graph, _bits

MAX_SOLVER_ORDER = 20
MAX_ORACLE_ORDER = 9


@dataclass(frozen=True)
class SolveResult:
    parameter: str
    value: int
    certificate: Any
    nodes_explored: int
    lower_bound_used: int
    upper_bound_used: int


def _guard(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise ResourceGuardError(f"{what} is capped at order {cap}; graph has order {g.n}")


def _require_no_isolated(g: Graph) -> None:
    if any(not s for s in g.adj):
        raise IsolatedVertexError(f"vertex {next(v for v in range(g.n) if not g.adj[v])} is isolated")


# chromatic number


def _max_clique(masks: tuple[int, ...]) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            grow(size + 1, cand & masks[v])

    grow(0, (1 << len(masks)) - 1)
    return best


def _dsatur_greedy(masks: tuple[int, ...]) -> list[int]:
    n = len(masks)
    color = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if not color[u]),
            key=lambda u: (len({color[w] for w in _bits(masks[u])} - {0}), masks[u].bit_count(), -u),
        )
        taken = {color[w] for w in _bits(masks[v])}
        color[v] = next(c for c in range(1, n + 2) if c not in taken)
    return color


def _k_colorable(masks: tuple[int, ...], k: int, stats: list[int]) -> list[int] | None:
    n = len(masks)
    color = [0] * n
    # cmask[c]: vertices currently colored c
    cmask = [0] * (k + 1)

    def forbidden(v: int) -> int:
        return sum(1 << c for c in range(1, k + 1) if cmask[c] & masks[v])

    def step(done: int, used: int) -> bool:
        stats[0] += 1
        if done == n:
            return True
        best, best_key, best_forb = -1, None, 0
        for u in range(n):
            if color[u]:
                continue
            f = forbidden(u)
            key = (f.bit_count(), masks[u].bit_count())
            if best_key is None or key > best_key:
                best, best_key, best_forb = u, key, f
        for c in range(1, min(used + 1, k) + 1):
            if best_forb >> c & 1:
                continue
            color[best] = c
            cmask[c] |= 1 << best
            if step(done + 1, max(used, c)):
                return True
            cmask[c] &= ~(1 << best)
            color[best] = 0
        return False

    return color if step(0, 0) else None


def chromatic_number(g: Graph, max_order: int = MAX_SOLVER_ORDER) -> SolveResult:
    """Exact chromatic number; the certificate is an optimal proper coloring."""
    _guard(g, max_order, "chromatic_number")
    if g.n == 0:
        return SolveResult("chi", 0, Coloring(()), 0, 0, 0)
    masks = g.masks
    low = max(1, _max_clique(masks))
    best = _dsatur_greedy(masks)
    high = max(best)
    stats = [0]
    for k in range(low, high):
        found = _k_colorable(masks, k, stats)
        if found is not None:
            return SolveResult("chi", k, Coloring(tuple(found)), stats[0], low, high)
    return SolveResult("chi", high, Coloring(tuple(best)), stats[0], low, high)


# total domination number


def total_domination_number(g: Graph, max_order: int = MAX_SOLVER_ORDER) -> SolveResult:
    """Exact total domination number by increasing-cardinality subset search.

    The certificate is a minimum total dominating set.
    """
    _guard(g, max_order, "total_domination_number")
    _require_no_isolated(g)
    masks = g.masks
    full = (1 << g.n) - 1
    maxdeg = max(m.bit_count() for m in masks)
    low = max(2, -(-g.n // maxdeg)) if g.n > 1 else 1
    nodes = 0
    for size in range(low, g.n + 1):
        for subset in combinations(range(g.n), size):
            nodes += 1
            cover = 0
            for v in subset:
                cover |= masks[v]
            if cover == full:
                return SolveResult("gamma_t", size, frozenset(subset), nodes, low, g.n)
    raise AssertionError("a graph without isolated vertices is totally dominated by V")


# TD-chromatic number


def _td_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _td_search(masks: tuple[int, ...], k: int, order: list[int], stats: list[int]) -> list[int] | None:
    """Find a TD-coloring with at most ``k`` classes, or prove none exists.

    A class is live for ``v`` while all its members are neighbors of ``v``.
    A branch is cut when some vertex has no non-empty live class and cannot
    gain one (no uncolored neighbor, or no room for a new class), or when an
    uncolored vertex has no admissible color left.
    """
    n = len(masks)
    color = [0] * n
    cmask = [0] * (k + 1)
    nonnbr = [~m for m in masks]
    full = (1 << n) - 1

    def viable(used: int, uncolored: int) -> bool:
        for v in range(n):
            nv = nonnbr[v]
            for c in range(1, used + 1):
                if not cmask[c] & nv:
                    break
            else:
                if used == k or not masks[v] & uncolored:
                    return False
        if used == k:
            for v in _bits(uncolored):
                mv = masks[v]
                for c in range(1, k + 1):
                    if not cmask[c] & mv:
                        break
                else:
                    return False
        return True

    def place(i: int, used: int, uncolored: int) -> bool:
        stats[0] += 1
        if i == n:
            return True
        v = order[i]
        mv = masks[v]
        rest = uncolored & ~(1 << v)
        for c in range(1, min(used + 1, k) + 1):
            if cmask[c] & mv:
                continue
            color[v] = c
            cmask[c] |= 1 << v
            nused = max(used, c)
            if viable(nused, rest) and place(i + 1, nused, rest):
                return True
            cmask[c] &= ~(1 << v)
            color[v] = 0
        return False

    return color if place(0, 0, full) else None


def td_chromatic_number(g: Graph, max_order: int = MAX_SOLVER_ORDER) -> SolveResult:
    """Exact TD-chromatic number with a :class:`TDCertificate`.

    Disconnected inputs are handled on the whole graph (classes are global);
    the only structural requirement is that no vertex is isolated.
    """
    _guard(g, max_order, "td_chromatic_number")
    _require_no_isolated(g)
    chi = chromatic_number(g, max_order).value
    gamma = total_domination_number(g, max_order).value
    low, high = max(chi, gamma), chi + gamma
    masks = g.masks
    order = _td_order(g)
    stats = [0]
    for k in range(low, high + 1):
        found = _td_search(masks, k, order, stats)
        if found is not None:
            cert = is_td_coloring(g, found)
            assert cert is not None and cert.k == k
            return SolveResult("chi_dt", k, cert, stats[0], low, high)
    raise AssertionError(f"no TD-coloring with at most {high} classes; the upper sandwich bound failed")


def td_chromatic_oracle(g: Graph) -> int:
    """Brute-force TD-chromatic number for small graphs.

    Walks every partition of the vertex set into independent classes (each
    surjective coloring up to renaming of colors), checks each with
    :func:`is_td_coloring`, and returns the fewest classes found.
    """
    _guard(g, MAX_ORACLE_ORDER, "td_chromatic_oracle")
    _require_no_isolated(g)
    n = g.n
    colors = [0] * n
    best = n + 1

    def assign(v: int, blocks: int) -> None:
        nonlocal best
        if v == n:
            if blocks < best and is_td_coloring(g, colors) is not None:
                best = blocks
            return
        for c in range(1, blocks + 2):
            if any(colors[u] == c for u in g.adj[v] if u < v):
                continue
            colors[v] = c
            assign(v + 1, max(blocks, c))
        colors[v] = 0

    assign(0, 0)
    return best
