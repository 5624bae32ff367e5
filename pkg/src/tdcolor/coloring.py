"""Colorings, TD-certificates, and the independent checker that re-validates them.

Nothing in here depends on the search code in :mod:`tdcolor.solver`; the
checker only reads a graph and a candidate object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CertificateError, IsolatedVertexError, TDColorError
from .graph import Graph


class DomainMismatchError(TDColorError, ValueError):
    """A coloring does not cover exactly the vertices of the graph."""


@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` is the color id (1-based) of vertex ``v``."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))

    @property
    def k(self) -> int:
        """Number of classes the coloring claims (its largest color id)."""
        return max(self.colors, default=0)

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, set()).add(v)
        return {c: frozenset(s) for c, s in sorted(out.items())}

    def is_surjective(self) -> bool:
        """Every id in ``1..k`` is used and no id lies outside that range."""
        return set(self.colors) == set(range(1, self.k + 1))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class TDCertificate:
    """A coloring plus, per vertex, a class id that the vertex totally dominates."""

    coloring: Coloring
    dominated_class: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.coloring.k


def _as_coloring(c: Coloring | Sequence[int]) -> Coloring:
    return c if isinstance(c, Coloring) else Coloring(tuple(c))


def _check_domain(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise DomainMismatchError(f"coloring covers {len(c)} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Coloring | Sequence[int]) -> bool:
    c = _as_coloring(c)
    _check_domain(g, c)
    return all(c.colors[u] != c.colors[w] for u, w in g.edges)


def _dominated(g: Graph, v: int, members: frozenset[int]) -> bool:
    return bool(members) and members <= g.adj[v]


def is_td_coloring(g: Graph, c: Coloring | Sequence[int]) -> TDCertificate | None:
    """Certificate for ``c`` if it is proper and every vertex is adjacent to
    all of some non-empty class; ``None`` otherwise.

    Each vertex is assigned the smallest qualifying class id.
    """
    c = _as_coloring(c)
    _check_domain(g, c)
    if any(not s for s in g.adj):
        raise IsolatedVertexError("TD-coloring is undefined for graphs with isolated vertices")
    if not is_proper(g, c):
        return None
    classes = c.classes()
    chosen = []
    for v in range(g.n):
        hit = next((cid for cid, mem in classes.items() if _dominated(g, v, mem)), None)
        if hit is None:
            return None
        chosen.append(hit)
    return TDCertificate(c, tuple(chosen))


def verify_certificate(g: Graph, cert: TDCertificate, value: int | None = None) -> None:
    """Raise :class:`CertificateError` naming the first defect found.

    Checks coverage, that the class ids are exactly ``1..k``, properness,
    and that each vertex is adjacent to every member of its listed class.
    When ``value`` is given the class count must equal it.
    """
    colors = cert.coloring.colors
    if len(colors) != g.n or len(cert.dominated_class) != g.n:
        raise CertificateError(
            f"certificate covers {len(colors)} colors and {len(cert.dominated_class)} "
            f"dominated classes for a graph of order {g.n}"
        )
    k = cert.k
    if not cert.coloring.is_surjective():
        raise CertificateError(f"color ids {sorted(set(colors))} are not exactly 1..{k}")
    if value is not None and k != value:
        raise CertificateError(f"certificate uses {k} classes but claims value {value}")
    for u, w in g.edges:
        if colors[u] == colors[w]:
            raise CertificateError(f"edge {u}-{w} is monochromatic (color {colors[u]})")
    classes = cert.coloring.classes()
    for v, cid in enumerate(cert.dominated_class):
        if _dominated(g, v, classes.get(cid, frozenset())):
            continue
        if not any(_dominated(g, v, mem) for mem in classes.values()):
            raise CertificateError(f"vertex {v} dominates no class")
        raise CertificateError(f"vertex {v} does not dominate its listed class {cid}")


def is_total_dominating_set(g: Graph, s: frozenset[int] | set[int]) -> bool:
    covered = set()
    for v in s:
        covered |= g.adj[v]
    return len(covered) == g.n
