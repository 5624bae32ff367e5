"""Machine checks of the operation bounds on the TD-chromatic number.

Each ``check_*`` function evaluates one inequality on one instance and
returns a :class:`BoundReport`.  An instance outside a bound's hypotheses
is *skipped* with a reason; when its values are still computable they are
kept as an observation, so a summary can say whether the bound happened to
hold anyway.  Observations never fail a run.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidParameterError, ResourceGuardError
from .families import complete, gadget, gadget_apex, star
from .formats import format_certificate, format_edge_list
from .formulas import chi_dt_corona, chi_dt_gadget, formula_for
from .enumeration import enumerate_connected_graphs, is_isomorphic, random_connected_graph
from .graph import (
    Edge,
    Graph,
    contract_edge,
    contract_vertex,
    has_isolated,
    odot,
    remove_edge,
    remove_vertex,
    structural_predicates,
)
from .solver import SolveResult, chromatic_number, td_chromatic_number, total_domination_number

MAX_VERIFY_ORDER = 7

# id, description, operand kind
THEOREMS: dict[str, tuple[str, str]] = {
    "edge-removal": ("chi_dt(G)-1 <= chi_dt(G-e) <= chi_dt(G)+2, e not a bridge", "edge"),
    "vertex-removal": ("chi_dt(G)-2 <= chi_dt(G-v) <= chi_dt(G)+deg(v)-1, v not a cut vertex", "vertex"),
    "edge-contraction": ("chi_dt(G)-2 <= chi_dt(G/e) <= chi_dt(G)+1", "edge"),
    "vertex-contraction": ("chi_dt(G)-2 <= chi_dt(G/v) <= chi_dt(G)+deg(v)-1", "vertex"),
    "odot": ("chi_dt(G)-deg(v)+1 <= chi_dt(G odot v) <= chi_dt(G)+1", "vertex"),
    "edge-corollary": ("(chi_dt(G-e)+chi_dt(G/e)-3)/2 <= chi_dt(G) <= (chi_dt(G-e)+chi_dt(G/e)+3)/2", "edge"),
    "vertex-corollary": ("(chi_dt(G-v)+chi_dt(G/v))/2-deg(v)+1 <= chi_dt(G) <= (chi_dt(G-v)+chi_dt(G/v))/2+2", "vertex"),
    "henning": ("gamma_t(G) <= chi_dt(G) <= gamma_t(G)+chi(G)", "none"),
}

# Short ids accepted on the command line.
ALIASES = {
    "T2.2": "edge-removal",
    "T2.3": "vertex-removal",
    "T3.1": "edge-contraction",
    "T3.3": "vertex-contraction",
    "T3.5": "odot",
    "C3.2": "edge-corollary",
    "C3.4": "vertex-corollary",
    "Henning": "henning",
}


def theorem_id(name: str) -> str:
    tid = ALIASES.get(name, name.lower())
    if tid not in THEOREMS:
        raise InvalidParameterError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}")
    return tid


# cached parameter values; graphs hash by their labeled edge set


@lru_cache(maxsize=None)
def _td(g: Graph) -> SolveResult:
    return td_chromatic_number(g)


def chi_dt(g: Graph) -> int:
    return _td(g).value


@lru_cache(maxsize=None)
def _chi(g: Graph) -> int:
    return chromatic_number(g).value


@lru_cache(maxsize=None)
def _gamma_t(g: Graph) -> int:
    return total_domination_number(g).value


_structure = lru_cache(maxsize=None)(structural_predicates)


@dataclass(frozen=True)
class BoundReport:
    """One inequality ``low <= middle <= high`` evaluated on one instance.

    ``values`` holds every parameter that entered the bounds, keyed by a
    readable name such as ``"G"`` or ``"G-e"``.
    """

    theorem: str
    graph: Graph
    operand: int | Edge | None
    values: dict[str, int] = field(default_factory=dict)
    low: Fraction | None = None
    middle: int | None = None
    high: Fraction | None = None
    skip_reason: str | None = None

    @property
    def computed(self) -> bool:
        return self.middle is not None

    @property
    def skipped(self) -> bool:
        return self.skip_reason is not None

    @property
    def observed_holds(self) -> bool | None:
        if not self.computed:
            return None
        return self.low <= self.middle <= self.high

    @property
    def holds(self) -> bool | None:
        """Verdict inside the hypotheses; ``None`` for skipped instances."""
        return None if self.skipped else self.observed_holds

    @property
    def tight_low(self) -> bool:
        return not self.skipped and self.computed and self.middle == self.low

    @property
    def tight_high(self) -> bool:
        return not self.skipped and self.computed and self.middle == self.high


def _skip(theorem: str, g: Graph, operand, reason: str) -> BoundReport:
    return BoundReport(theorem, g, operand, skip_reason=reason)


def _edge(e) -> Edge:
    u, w = e
    return (min(u, w), max(u, w))


def _connected_or_skip(theorem: str, g: Graph, operand, min_order: int) -> BoundReport | None:
    if g.n < min_order:
        return _skip(theorem, g, operand, f"order {g.n} < {min_order}")
    if not _structure(g).is_connected:
        return _skip(theorem, g, operand, "G is disconnected")
    return None


def _usable(*graphs: Graph) -> bool:
    return all(h.n >= 2 and not has_isolated(h) for h in graphs)


def check_edge_removal(g: Graph, e: Edge) -> BoundReport:
    tid = "edge-removal"
    e = _edge(e)
    minus = remove_edge(g, *e)
    early = _connected_or_skip(tid, g, e, 3)
    if early:
        return early
    reason = "e is a bridge" if e in _structure(g).bridges else None
    if reason and not _usable(minus):
        return _skip(tid, g, e, reason)
    base, val = chi_dt(g), chi_dt(minus)
    return BoundReport(tid, g, e, {"G": base, "G-e": val}, Fraction(base - 1), val, Fraction(base + 2), reason)


def check_vertex_removal(g: Graph, v: int) -> BoundReport:
    tid = "vertex-removal"
    minus = remove_vertex(g, v)
    early = _connected_or_skip(tid, g, v, 3)
    if early:
        return early
    reason = "v is a cut vertex" if v in _structure(g).cut_vertices else None
    if reason and not _usable(minus):
        return _skip(tid, g, v, reason)
    base, val, deg = chi_dt(g), chi_dt(minus), g.degree(v)
    return BoundReport(
        tid, g, v, {"G": base, "G-v": val, "deg": deg}, Fraction(base - 2), val, Fraction(base + deg - 1), reason
    )


def check_edge_contraction(g: Graph, e: Edge) -> BoundReport:
    tid = "edge-contraction"
    e = _edge(e)
    early = _connected_or_skip(tid, g, e, 3)
    if early:
        return early
    base, val = chi_dt(g), chi_dt(contract_edge(g, *e))
    return BoundReport(tid, g, e, {"G": base, "G/e": val}, Fraction(base - 2), val, Fraction(base + 1))


def check_vertex_contraction(g: Graph, v: int) -> BoundReport:
    tid = "vertex-contraction"
    early = _connected_or_skip(tid, g, v, 3)
    if early:
        return early
    base, val, deg = chi_dt(g), chi_dt(contract_vertex(g, v)), g.degree(v)
    return BoundReport(
        tid, g, v, {"G": base, "G/v": val, "deg": deg}, Fraction(base - 2), val, Fraction(base + deg - 1)
    )


def check_odot(g: Graph, v: int) -> BoundReport:
    tid = "odot"
    early = _connected_or_skip(tid, g, v, 2)
    if early:
        return early
    base, val, deg = chi_dt(g), chi_dt(odot(g, v)), g.degree(v)
    return BoundReport(
        tid, g, v, {"G": base, "G.v": val, "deg": deg}, Fraction(base - deg + 1), val, Fraction(base + 1)
    )


def check_edge_corollary(g: Graph, e: Edge) -> BoundReport:
    tid = "edge-corollary"
    e = _edge(e)
    early = _connected_or_skip(tid, g, e, 3)
    if early:
        return early
    minus = remove_edge(g, *e)
    reason = "e is a bridge" if e in _structure(g).bridges else None
    if reason and not _usable(minus):
        return _skip(tid, g, e, reason)
    a, b, base = chi_dt(minus), chi_dt(contract_edge(g, *e)), chi_dt(g)
    return BoundReport(
        tid, g, e, {"G": base, "G-e": a, "G/e": b}, Fraction(a + b - 3, 2), base, Fraction(a + b + 3, 2), reason
    )


def check_vertex_corollary(g: Graph, v: int) -> BoundReport:
    tid = "vertex-corollary"
    early = _connected_or_skip(tid, g, v, 3)
    if early:
        return early
    minus = remove_vertex(g, v)
    reason = "v is a cut vertex" if v in _structure(g).cut_vertices else None
    if reason and not _usable(minus):
        return _skip(tid, g, v, reason)
    a, b, base, deg = chi_dt(minus), chi_dt(contract_vertex(g, v)), chi_dt(g), g.degree(v)
    half = Fraction(a + b, 2)
    return BoundReport(
        tid, g, v, {"G": base, "G-v": a, "G/v": b, "deg": deg}, half - deg + 1, base, half + 2, reason
    )


def check_corollaries(g: Graph, operand) -> BoundReport:
    """Dispatch on the operand: an edge tuple or a vertex id."""
    if isinstance(operand, tuple):
        return check_edge_corollary(g, operand)
    return check_vertex_corollary(g, operand)


def check_henning(g: Graph) -> BoundReport:
    tid = "henning"
    if g.n < 2 or has_isolated(g):
        return _skip(tid, g, None, "G has an isolated vertex")
    gamma, chi, val = _gamma_t(g), _chi(g), chi_dt(g)
    return BoundReport(
        tid, g, None, {"G": val, "gamma_t": gamma, "chi": chi}, Fraction(gamma), val, Fraction(gamma + chi)
    )


CHECKS = {
    "edge-removal": check_edge_removal,
    "vertex-removal": check_vertex_removal,
    "edge-contraction": check_edge_contraction,
    "vertex-contraction": check_vertex_contraction,
    "odot": check_odot,
    "edge-corollary": check_edge_corollary,
    "vertex-corollary": check_vertex_corollary,
    "henning": lambda g, _operand: check_henning(g),
}


def operands(g: Graph, theorem: str) -> list:
    kind = THEOREMS[theorem][1]
    if kind == "edge":
        return list(g.edges)
    if kind == "vertex":
        return list(range(g.n))
    return [None]


def check(theorem: str, g: Graph, operand=None) -> BoundReport:
    return CHECKS[theorem_id(theorem)](g, operand)


def reports_for(g: Graph, theorems: Iterable[str]) -> Iterator[BoundReport]:
    for tid in theorems:
        for op in operands(g, tid):
            yield CHECKS[tid](g, op)


# exhaustive verification


@dataclass
class TheoremSummary:
    theorem: str
    n_max: int
    checked: int = 0
    held: int = 0
    skipped: int = 0
    tight_low: int = 0
    tight_high: int = 0
    observed: int = 0
    observed_held: int = 0
    witnesses: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.held == self.checked and not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "checked": self.checked,
            "held": self.held,
            "skipped": self.skipped,
            "tight_low": self.tight_low,
            "tight_high": self.tight_high,
            "observed_outside_hypotheses": self.observed,
            "observed_outside_held": self.observed_held,
            "witnesses": self.witnesses,
            "violations": self.violations,
        }


def _operand_json(op):
    return list(op) if isinstance(op, tuple) else op


def _bound_json(x: Fraction | None):
    if x is None:
        return None
    return x.numerator if x.denominator == 1 else str(x)


def report_record(r: BoundReport, endpoint: str | None = None) -> dict:
    rec = {
        "graph": format_edge_list(r.graph),
        "operand": _operand_json(r.operand),
        "values": dict(r.values),
        "low": _bound_json(r.low),
        "high": _bound_json(r.high),
    }
    if endpoint:
        rec["endpoint"] = endpoint
    return rec


def _violation_record(r: BoundReport) -> dict:
    rec = report_record(r)
    rec["certificates"] = {"G": format_certificate(_td(r.graph).certificate)}
    return rec


# Compact per-instance tuple shipped back from workers:
# (theorem, skipped, computed, holds, observed_holds, tight_low, tight_high, record|None)
def _evaluate(args: tuple[Graph, tuple[str, ...]]) -> list[tuple]:
    g, theorems = args
    out = []
    for r in reports_for(g, theorems):
        rec = None
        if r.holds is False:
            rec = ("violation", _violation_record(r))
        elif r.tight_low or r.tight_high:
            rec = ("tight", r)
        out.append((r.theorem, r.skipped, r.computed, r.holds, r.observed_holds, r.tight_low, r.tight_high, rec))
    return out


def universe(n_max: int, dedup: bool = False, n_min: int = 2) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n, dedup=dedup)


def verify_exhaustive(
    n_max: int = 6,
    theorems: Iterable[str] | None = None,
    workers: int | None = 1,
    dedup: bool = False,
) -> list[TheoremSummary]:
    """Run the selected checks on every connected graph of order ``2..n_max``.

    Results are reduced in enumeration order, so the summary does not depend
    on ``workers``.  The first tight instance at each endpoint is kept as a
    witness; every violation is kept in full.
    """
    if not 1 <= n_max <= MAX_VERIFY_ORDER:
        raise ResourceGuardError(f"verification order must be in 1..{MAX_VERIFY_ORDER}, got {n_max}")
    tids = tuple(theorem_id(t) for t in (theorems or THEOREMS))
    summaries = {t: TheoremSummary(t, n_max) for t in tids}
    work = ((g, tids) for g in universe(n_max, dedup))
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        results = map(_evaluate, work)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_evaluate, work, chunksize=64)
    try:
        for batch in results:
            for tid, skipped, computed, holds, obs, lo, hi, rec in batch:
                s = summaries[tid]
                if skipped:
                    s.skipped += 1
                    if computed:
                        s.observed += 1
                        s.observed_held += bool(obs)
                    continue
                s.checked += 1
                s.held += bool(holds)
                s.tight_low += lo
                s.tight_high += hi
                if rec and rec[0] == "violation":
                    s.violations.append(rec[1])
                elif rec:
                    have = {w["endpoint"] for w in s.witnesses}
                    for flag, name in ((lo, "low"), (hi, "high")):
                        if flag and name not in have:
                            s.witnesses.append(report_record(rec[1], name))
    finally:
        if pool is not None:
            pool.shutdown()
    return [summaries[t] for t in tids]


def search_witness(
    theorem: str,
    endpoint: str,
    n_max: int = 6,
    dedup: bool = False,
    graphs: Iterable[Graph] | None = None,
) -> BoundReport | None:
    """First instance (in enumeration order) attaining the given endpoint."""
    tid = theorem_id(theorem)
    if endpoint not in ("low", "high"):
        raise InvalidParameterError("endpoint must be 'low' or 'high'")
    source = graphs if graphs is not None else universe(n_max, dedup)
    for g in source:
        for r in reports_for(g, (tid,)):
            if (r.tight_low if endpoint == "low" else r.tight_high):
                return r
    return None


def random_universe(n: int, count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(n, rng) for _ in range(count)]


# named instances


@dataclass(frozen=True)
class SharpnessWitness:
    label: str
    theorem: str
    endpoint: str
    graph: Graph
    operand: int | Edge | None

    def report(self) -> BoundReport:
        return CHECKS[self.theorem](self.graph, self.operand)

    @property
    def reproduced(self) -> bool:
        r = self.report()
        return r.tight_low if self.endpoint == "low" else r.tight_high


def named_witnesses() -> list[SharpnessWitness]:
    """Small graphs claimed to attain an endpoint of one of the bounds."""
    from .families import complete_bipartite, cycle

    out = [
        SharpnessWitness("K3 minus an edge", "edge-removal", "low", complete(3), (0, 1)),
        SharpnessWitness("C10 minus a vertex", "vertex-removal", "low", cycle(10), 0),
        SharpnessWitness("C4 contract an edge", "edge-contraction", "high", cycle(4), (0, 1)),
        SharpnessWitness("C5 contract an edge", "edge-contraction", "low", cycle(5), (0, 1)),
        SharpnessWitness("C5 contract a vertex", "vertex-contraction", "low", cycle(5), 0),
        SharpnessWitness("K2,4 contract a degree-4 vertex", "vertex-contraction", "high", complete_bipartite(2, 4), 0),
    ]
    out += [SharpnessWitness(f"K{n} odot a vertex", "odot", "low", complete(n), 0) for n in range(3, 9)]
    return out


def formula_discrepancies(family: str, ns: Iterable[int]) -> list[dict]:
    """Orders where the closed form disagrees with the exact solver."""
    from .families import FamilySpec, build_family

    rows = []
    for n in ns:
        f = formula_for(family, n)
        solved = _td(build_family(FamilySpec(family, (n,))))
        if solved.value != f.value:
            rows.append(
                {"family": f.family.kind, "n": n, "branch": f.branch, "formula": f.value,
                 "solver": solved.value, "certificate": format_certificate(solved.certificate)}
            )
    return rows


# gap growth


GAP_KINDS = {"T2.5": "apex-gadget", "C3.6": "clique-odot"}


def gap_growth_experiment(kind: str, ns: Iterable[int], solve_upto: int = 5) -> list[dict]:
    """Tables showing the change under an operation growing without bound.

    ``apex-gadget``: the gadget versus the gadget minus its apex
    (``P_n o K_1``).  ``clique-odot``: ``K_n`` versus ``K_n odot v`` (a star).
    Rows with ``n <= solve_upto`` carry exact solver values as well.
    """
    kind = GAP_KINDS.get(kind, kind)
    rows = []
    if kind == "apex-gadget":
        for n in ns:
            g_val = chi_dt_gadget(n).value
            minus_val = chi_dt_corona("path", n).value
            row = {"n": n, "chi_dt_G": g_val, "chi_dt_G_minus_v": minus_val, "gap": abs(g_val - minus_val)}
            if n <= solve_upto:
                g = gadget(n)
                minus = remove_vertex(g, gadget_apex(n))
                row["solver_G"] = chi_dt(g)
                row["solver_G_minus_v"] = chi_dt(minus)
            rows.append(row)
    elif kind == "clique-odot":
        for n in ns:
            if n < 3:
                raise InvalidParameterError("clique-odot needs n >= 3")
            row = {"n": n, "chi_dt_G": n, "chi_dt_G_odot_v": 2, "ratio": Fraction(n, 2)}
            if n <= solve_upto:
                kn = complete(n)
                res = odot(kn, 0)
                row["solver_G"] = chi_dt(kn)
                row["solver_G_odot_v"] = chi_dt(res)
                row["odot_is_star"] = is_isomorphic(res, star(n - 1))
            rows.append(row)
    else:
        raise InvalidParameterError(f"unknown gap experiment {kind!r}; choose apex-gadget or clique-odot")
    return rows
