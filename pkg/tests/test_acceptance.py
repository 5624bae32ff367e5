"""Acceptance criteria, one test each, checked at their stated tolerances.

Every test prints a single ``PASS``/``FAIL`` line (shown even without ``-s``)
and then asserts.  Run ``python tests/test_acceptance.py`` for just the lines.
Criteria 1, 2, 4 and 6 are expected to fail; see README "Known discrepancies".
"""

import random
import sys
import time

import pytest

from tdcolor import harness
from tdcolor.coloring import TDCertificate, Coloring, verify_certificate
from tdcolor.enumeration import enumerate_connected_graphs, is_isomorphic, random_connected_graph
from tdcolor.errors import CertificateError
from tdcolor.families import build_family, complete, complete_bipartite, cycle, path, star
from tdcolor.formats import format_certificate, parse_certificate
from tdcolor.formulas import chi_dt_corona, chi_dt_cycle, chi_dt_gadget, chi_dt_path
from tdcolor.graph import contract_vertex, corona, odot, remove_vertex
from tdcolor.solver import td_chromatic_number, td_chromatic_oracle

# endpoints asserted sharp for each bound, keyed by harness theorem id
CLAIMED_SHARP = [
    ("edge-removal", "low"),
    ("edge-removal", "high"),
    ("vertex-removal", "low"),
    ("edge-contraction", "low"),
    ("edge-contraction", "high"),
    ("vertex-contraction", "low"),
    ("vertex-contraction", "high"),
    ("odot", "low"),
    ("odot", "high"),
]

_printer = print


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    _printer(line)
    assert ok, line


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _printer

    def show(line):
        with capsys.disabled():
            print(f"\n{line}")

    _printer = show
    yield
    _printer = print


@pytest.fixture(scope="module")
def exhaustive():
    start = time.perf_counter()
    summaries = harness.verify_exhaustive(6, workers=None)
    return summaries, time.perf_counter() - start


def _mismatches(graphs, formula):
    bad = []
    for n, g in graphs:
        got = td_chromatic_number(g).value
        want = formula(n).value
        if got != want:
            bad.append((n, want, got))
    return bad


def test_criterion_1_paths_match_closed_form():
    start = time.perf_counter()
    bad = _mismatches(((n, path(n)) for n in range(2, 17)), chi_dt_path)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(1, ok, f"paths n=2..16 in {elapsed:.1f}s; (n, formula, solver) mismatches {bad}")


def test_criterion_2_cycles_match_closed_form():
    bad = _mismatches(((n, cycle(n)) for n in range(3, 15)), chi_dt_cycle)
    c4 = td_chromatic_number(cycle(4)).value
    report(2, not bad and c4 == 2, f"cycles n=3..14, C4={c4}; (n, formula, solver) mismatches {bad}")


def test_criterion_3_corona_formulas():
    bad = []
    for kind, base, ns in (("path", path, range(2, 8)), ("cycle", cycle, range(3, 7))):
        for n in ns:
            g = corona(base(n), complete(1))
            got = td_chromatic_number(g).value
            if got != n + 1 or chi_dt_corona(kind, n).value != n + 1:
                bad.append((kind, n, got))
    report(3, not bad, f"P_n o K1 n=2..7 and C_n o K1 n=3..6 equal n+1; mismatches {bad}")


def test_criterion_4_named_witnesses():
    v = lambda g: td_chromatic_number(g).value  # noqa: E731
    k24 = complete_bipartite(2, 4)
    k24_v = contract_vertex(k24, 0)
    c5_v = contract_vertex(cycle(5), 0)
    checks = {
        "K3=3": v(complete(3)) == 3,
        "P3=2": v(path(3)) == 2,
        "C10=8": v(cycle(10)) == 8,
        "P9=6": v(path(9)) == 6,
        "C4=2": v(cycle(4)) == 2,
        "C3=3": v(cycle(3)) == 3,
        "C5=4": v(cycle(5)) == 4,
        "K2,4=2": v(k24) == 2,
        "K2,4/v~K5 with 5": is_isomorphic(k24_v, complete(5)) and v(k24_v) == 5,
        "C5/v~C4": is_isomorphic(c5_v, cycle(4)),
    }
    for n in range(3, 9):
        res = odot(complete(n), 0)
        checks[f"K{n}=n, K{n} odot v~star with 2"] = (
            v(complete(n)) == n and is_isomorphic(res, star(n - 1)) and v(res) == 2
        )
    failed = [name for name, ok in checks.items() if not ok]
    detail = f"{len(checks) - len(failed)}/{len(checks)} witnesses reproduced"
    if failed:
        detail += f"; failed {failed} (solver C10={v(cycle(10))})"
    report(4, not failed, detail)


def test_criterion_5_exhaustive_zero_violations(exhaustive):
    summaries, elapsed = exhaustive
    want = {harness.theorem_id(t) for t in ("T2.2", "T2.3", "T3.1", "T3.3", "T3.5", "C3.2", "C3.4", "Henning")}
    covered = {s.theorem for s in summaries}
    violations = {s.theorem: len(s.violations) for s in summaries if s.violations}
    checked = sum(s.checked for s in summaries)
    ok = want <= covered and not violations and checked > 0 and elapsed < 30 * 60
    report(5, ok, f"n<=6 labeled, {checked} checked instances, violations {violations or 0}, {elapsed:.0f}s")


def test_criterion_6_sharpness_in_exhaustive_run(exhaustive):
    summaries, _ = exhaustive
    by_id = {s.theorem: s for s in summaries}
    missing = []
    for theorem, endpoint in CLAIMED_SHARP:
        s = by_id[theorem]
        if (s.tight_low if endpoint == "low" else s.tight_high) == 0:
            missing.append(f"{theorem}/{endpoint}")
    # the +2 jump under edge removal, found beyond the exhaustive range
    extra = harness.search_witness("edge-removal", "high", graphs=harness.random_universe(9, 3000, seed=1))
    jump = "none"
    if extra is not None:
        jump = f"order {extra.graph.n}: {extra.values['G']} -> {extra.values['G-e']}"
    detail = f"endpoints without a tight instance at n<=6: {missing or 'none'}; seeded search +2 jump at {jump}"
    report(6, not missing, detail)


def test_criterion_7_oracle_equivalence():
    disagreements = []
    count = 0
    universes = [(n, enumerate_connected_graphs(n)) for n in range(2, 6)]
    universes += [(n, enumerate_connected_graphs(n, dedup=True)) for n in (6, 7)]
    rng = random.Random(20240607)
    for n in (8, 9):
        universes.append((n, [random_connected_graph(n, rng) for _ in range(200)]))
    for n, graphs in universes:
        for g in graphs:
            count += 1
            a, b = td_chromatic_number(g).value, td_chromatic_oracle(g)
            if a != b:
                disagreements.append((n, g.edges, a, b))
    report(7, not disagreements, f"{count} graphs (n<=5 labeled, n=6,7 up to isomorphism, 2x200 random), "
           f"{len(disagreements)} disagreements")


def test_criterion_8_gap_growth():
    rows = harness.gap_growth_experiment("apex-gadget", range(2, 31), solve_upto=5)
    signed = [r["chi_dt_G_minus_v"] - r["chi_dt_G"] for r in rows]
    gaps = [r["gap"] for r in rows]
    formula_gap = [abs(chi_dt_gadget(n).value - (n + 1)) for n in range(2, 31)]
    abs_from_3 = gaps[1:]
    confirmed = all(
        r["solver_G"] == r["chi_dt_G"] and r["solver_G_minus_v"] == r["chi_dt_G_minus_v"] for r in rows if r["n"] <= 5
    )
    cross = all(
        td_chromatic_number(remove_vertex(build_family(f"gadget:{n}"), 2 * n)).value == n + 1 for n in range(2, 6)
    )
    odot_rows = harness.gap_growth_experiment("clique-odot", range(3, 9), solve_upto=8)
    ratio_ok = all(r["ratio"] * 2 == r["n"] and r["solver_G"] == r["n"] and r["solver_G_odot_v"] == 2 for r in odot_rows)
    ok = (
        gaps == formula_gap
        and abs_from_3 == sorted(abs_from_3)
        and signed == sorted(signed)
        and gaps[-1] >= 9
        and confirmed
        and cross
        and ratio_ok
    )
    report(8, ok, f"|gap| n=2..30 {gaps}; solver rows n=2..5 confirmed={confirmed and cross}; "
           f"K_n odot v ratio n/2 for n=3..8 {ratio_ok}")


def _corpus():
    specs = [f"path:{n}" for n in range(2, 17)] + [f"cycle:{n}" for n in range(3, 15)]
    specs += [f"pathk1:{n}" for n in range(2, 8)] + [f"cyclek1:{n}" for n in range(3, 7)]
    specs += [f"gadget:{n}" for n in range(2, 7)] + [f"complete:{n}" for n in range(2, 9)]
    specs += ["cbip:2,4", "cbip:3,3", "star:5"]
    graphs = [build_family(s) for s in specs]
    graphs += enumerate_connected_graphs(6, dedup=True)
    rng = random.Random(99)
    graphs += [random_connected_graph(n, rng) for n in (8, 9, 10, 12) for _ in range(25)]
    return graphs


def _corrupt(g, cert, rng):
    """Break one entry so that the certificate is certainly invalid."""
    colors = list(cert.coloring.colors)
    dom = list(cert.dominated_class)
    v = rng.randrange(g.n)
    if rng.random() < 0.5:
        # copying a neighbor's color makes an edge monochromatic
        colors[v] = colors[rng.choice(sorted(g.adj[v]))]
    else:
        classes = Coloring(tuple(colors)).classes()
        wrong = [c for c, members in classes.items() if not members <= g.adj[v]]
        dom[v] = rng.choice(wrong)
    return TDCertificate(Coloring(tuple(colors)), tuple(dom))


def test_criterion_9_certificate_soundness():
    emitted = []
    invalid = 0
    for g in _corpus():
        r = td_chromatic_number(g)
        cert = parse_certificate(format_certificate(r.certificate))
        emitted.append((g, cert, r.value))
        try:
            verify_certificate(g, cert, r.value)
        except CertificateError:
            invalid += 1
    rng = random.Random(7)
    sample = rng.sample(emitted, 100)
    rejected = 0
    for g, cert, value in sample:
        try:
            verify_certificate(g, _corrupt(g, cert, rng), value)
        except CertificateError:
            rejected += 1
    ok = invalid == 0 and rejected == len(sample)
    report(9, ok, f"{len(emitted) - invalid}/{len(emitted)} emitted certificates re-validate; "
           f"{rejected}/{len(sample)} corrupted certificates rejected")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
