"""Published closed forms for the TD-chromatic number of a few families.

Integer arithmetic only, so branch selection is exact.  Every result names
the case of the piecewise formula it came from.

These are the formulas as published.  The exact solver shows that the path
and cycle formulas overstate the true value at some orders (for example
``P_11``, ``P_14``, ``P_16``, ``C_10`` and ``C_14``); see
:func:`tdcolor.harness.formula_discrepancies`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidParameterError
from .families import FamilySpec, canonical_kind


@dataclass(frozen=True)
class FormulaResult:
    family: FamilySpec
    value: int
    branch: str


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _need(n: int, low: int, what: str) -> None:
    if n < low:
        raise InvalidParameterError(f"{what} formula needs n >= {low}, got {n}")


def chi_dt_path(n: int) -> FormulaResult:
    _need(n, 2, "path")
    q = _ceil_div(n, 3)
    if n % 3 == 1:
        return FormulaResult(FamilySpec("path", (n,)), 2 * q - 1, "n%3=1")
    return FormulaResult(FamilySpec("path", (n,)), 2 * q, "otherwise")


def chi_dt_cycle(n: int) -> FormulaResult:
    _need(n, 3, "cycle")
    spec = FamilySpec("cycle", (n,))
    if n == 4:
        return FormulaResult(spec, 2, "n=4")
    r = n % 6
    value = 4 * (n // 6) + r - (1 if r in (3, 5) else 0)
    return FormulaResult(spec, value, f"r={r}")


def chi_dt_corona(kind: str, n: int) -> FormulaResult:
    """``P_n o K_1`` (``kind='path'``) or ``C_n o K_1`` (``kind='cycle'``): n + 1."""
    if kind == "path":
        _need(n, 2, "path corona")
        return FormulaResult(FamilySpec("pathk1", (n,)), n + 1, "n+1")
    if kind == "cycle":
        _need(n, 3, "cycle corona")
        return FormulaResult(FamilySpec("cyclek1", (n,)), n + 1, "n+1")
    raise InvalidParameterError(f"corona kind must be 'path' or 'cycle', got {kind!r}")


def chi_dt_gadget(n: int) -> FormulaResult:
    """Path formula plus two, for the apex gadget of :func:`tdcolor.families.gadget`."""
    _need(n, 2, "gadget")
    base = chi_dt_path(n)
    return FormulaResult(FamilySpec("gadget", (n,)), base.value + 2, base.branch)


FORMULAS = {
    "path": chi_dt_path,
    "cycle": chi_dt_cycle,
    "pathk1": lambda n: chi_dt_corona("path", n),
    "cyclek1": lambda n: chi_dt_corona("cycle", n),
    "gadget": chi_dt_gadget,
}


def formula_for(family: str, n: int) -> FormulaResult:
    kind = canonical_kind(family)
    if kind not in FORMULAS:
        raise InvalidParameterError(f"no closed form for family {family!r}")
    return FORMULAS[kind](n)


def table_csv(family: str, ns: Iterable[int]) -> str:
    """CSV with columns ``family,n,branch,value``."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["family", "n", "branch", "value"])
    for n in ns:
        r = formula_for(family, n)
        out.writerow([r.family.kind, n, r.branch, r.value])
    return buf.getvalue()
