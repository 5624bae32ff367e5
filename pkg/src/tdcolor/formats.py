"""Text formats: edge lists, DIMACS ``.col`` input, and TD-certificates.

Edge list::

    # comment
    n m
    u w        (m lines, 0-based ids)

DIMACS: ``p edge n m`` then ``e u v`` lines with 1-based ids; ``c`` lines are
comments.

Certificate::

    k=<classes>
    v color dominated_class      (one line per vertex)
"""

from __future__ import annotations

from pathlib import Path

from .coloring import Coloring, TDCertificate
from .errors import FormatError
from .graph import Graph


def _content_lines(text: str, comment: str = "#") -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split(comment, 1)[0].strip() if comment else raw.strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    lineno, head = lines[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    n, m = _ints(head, lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: edge lines hold exactly two ids")
        u, w = _ints(toks, lineno)
        edges.append((u, w))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise FormatError(f"edge list repeats an edge ({m} lines, {g.m} distinct edges)")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {w}" for u, w in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if len(toks) != 4:
                raise FormatError(f"line {lineno}: problem line must be 'p edge n m'")
            n = _ints(toks[2:3], lineno)[0]
        elif toks[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            u, w = _ints(toks[1:3], lineno)
            edges.append((u - 1, w - 1))
        else:
            raise FormatError(f"line {lineno}: unknown DIMACS record {toks[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge n m' line")
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Edge list or DIMACS, told apart by the first record."""
    for raw in text.splitlines():
        toks = raw.split()
        if not toks or toks[0].startswith("#"):
            continue
        if toks[0] in ("c", "p", "e"):
            return parse_dimacs(text)
        break
    return parse_edge_list(text)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))


def format_certificate(cert: TDCertificate) -> str:
    lines = [f"k={cert.k}"]
    lines += [f"{v} {c} {d}" for v, (c, d) in enumerate(zip(cert.coloring.colors, cert.dominated_class))]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> TDCertificate:
    """Read a certificate; its declared ``k`` must match the largest color.

    Structural checks against a graph are left to
    :func:`tdcolor.coloring.verify_certificate`.
    """
    lines = _content_lines(text)
    if not lines or not lines[0][1][0].startswith("k="):
        raise FormatError("certificate must start with 'k=<value>'")
    lineno, head = lines[0]
    try:
        k = int(head[0][2:])
    except ValueError:
        raise FormatError(f"line {lineno}: bad class count {head[0]!r}") from None
    rows: dict[int, tuple[int, int]] = {}
    for lineno, toks in lines[1:]:
        if len(toks) != 3:
            raise FormatError(f"line {lineno}: expected 'v color dominated_class'")
        v, c, d = _ints(toks, lineno)
        if v in rows:
            raise FormatError(f"line {lineno}: vertex {v} listed twice")
        rows[v] = (c, d)
    if sorted(rows) != list(range(len(rows))):
        raise FormatError("certificate vertices must be exactly 0..n-1")
    colors = tuple(rows[v][0] for v in range(len(rows)))
    if max(colors, default=0) != k:
        raise FormatError(f"declared k={k} but the largest color is {max(colors, default=0)}")
    return TDCertificate(Coloring(colors), tuple(rows[v][1] for v in range(len(rows))))
