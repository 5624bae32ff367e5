"""Named graph families and the ``kind:params`` strings used on the command line."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameterError
from .graph import Graph, corona

# kind -> (arity, minimum value of each parameter)
_MINIMA = {
    "path": (1, 1),
    "cycle": (1, 3),
    "complete": (1, 1),
    "cbip": (2, 1),
    "star": (1, 1),
    "pathk1": (1, 2),
    "cyclek1": (1, 3),
    "gadget": (1, 2),
}

_ALIASES = {
    "p": "path",
    "c": "cycle",
    "k": "complete",
    "kmn": "cbip",
    "completebipartite": "cbip",
    "s": "star",
    "coronapathk1": "pathk1",
    "corona-path": "pathk1",
    "coronacyclek1": "cyclek1",
    "corona-cycle": "cyclek1",
}


def canonical_kind(name: str) -> str:
    kind = _ALIASES.get(name.lower(), name.lower())
    if kind not in _MINIMA:
        raise InvalidParameterError(f"unknown family {name!r}")
    return kind


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        kind = canonical_kind(self.kind)
        object.__setattr__(self, "kind", kind)
        arity, low = _MINIMA[kind]
        if len(self.params) != arity:
            raise InvalidParameterError(f"{kind} takes {arity} parameter(s), got {len(self.params)}")
        for p in self.params:
            if p < low:
                raise InvalidParameterError(f"{kind} needs parameters >= {low}, got {p}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse strings such as ``path:9``, ``cbip:2,4`` or ``gadget:5``."""
        kind, sep, rest = text.partition(":")
        if not sep or not rest:
            raise InvalidParameterError(f"family spec {text!r} is not of the form kind:params")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise InvalidParameterError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """Center 0 with ``leaves`` pendant vertices."""
    return complete_bipartite(1, leaves)


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def gadget(n: int) -> Graph:
    """Path ``a_1..a_n`` with one pendant leaf per path vertex and an apex on all leaves.

    Labels: path vertex ``a_i`` is ``i-1``, its leaf is ``n+i-1`` and the apex is
    ``2n`` (see :func:`gadget_apex`).  Deleting the apex leaves ``P_n o K_1``.
    """
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def gadget_apex(n: int) -> int:
    return 2 * n


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    if spec.kind == "path":
        return path(p[0])
    if spec.kind == "cycle":
        return cycle(p[0])
    if spec.kind == "complete":
        return complete(p[0])
    if spec.kind == "cbip":
        return complete_bipartite(p[0], p[1])
    if spec.kind == "star":
        return star(p[0])
    if spec.kind == "pathk1":
        return corona(path(p[0]), complete(1))
    if spec.kind == "cyclek1":
        return corona(cycle(p[0]), complete(1))
    return gadget(p[0])
