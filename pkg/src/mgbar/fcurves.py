"""One-dimensional boundary strata (F-curves) of the moduli space and their intersection numbers.

Families, with canonical parameters:

    A            elliptic tails
    B            fixed 4-pointed genus g-3 curve attached to the moving 4-pointed P^1
    C(i)         1-pointed genus i and 3-pointed genus g-2-i
    D(i)         two 2-pointed curves, indexed as in the table row ``2 b_0 - b_i``
    E(i, j)      1-pointed genus i and j plus a 2-pointed genus g-1-i-j, i <= j
    F(i,j,k,l)   four 1-pointed curves, genera summing to g, sorted

Values are the table rows (family A is normalised as 12 times the elliptic
tail ray, see :mod:`mgbar.phase_analysis`).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .divisor_algebra import DivisorClass, Model, check_genus
from .rationals import format_q

__all__ = [
    "FCurve",
    "IntersectionReport",
    "Nef",
    "NotNef",
    "Inapplicable",
    "enumerate_fcurves",
    "gkm_nef_check",
    "intersect",
    "intersection_table",
    "table_to_json",
    "table_to_tsv",
]

FAMILIES = "ABCDEF"
_ARITY = {"A": 0, "B": 0, "C": 1, "D": 1, "E": 2, "F": 4}


@dataclass(frozen=True, order=True)
class FCurve:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in _ARITY:
            raise ValueError(f"unknown F-curve family {self.family!r}")
        params = tuple(int(p) for p in self.params)
        if len(params) != _ARITY[self.family]:
            raise ValueError(f"family {self.family} takes {_ARITY[self.family]} parameters")
        if self.family in "EF":
            params = tuple(sorted(params))
        object.__setattr__(self, "params", params)

    def check_genus(self, g: int) -> None:
        """Raise if the parameters are out of range for genus ``g``."""
        f, p = self.family, self.params
        ok = {
            "A": True,
            "B": True,
            "C": bool(p) and 1 <= p[0] <= g - 2,
            "D": bool(p) and 1 <= p[0] <= g - 3,
            "E": len(p) == 2 and p[0] >= 1 and p[0] + p[1] <= g - 1,
            "F": len(p) == 4 and p[0] >= 1 and sum(p) == g,
        }[f]
        if not ok:
            raise ValueError(f"{self} is out of range for genus {g}")

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params)}


@dataclass(frozen=True)
class IntersectionReport:
    curve: FCurve
    value: Fraction


def enumerate_fcurves(g: int) -> list[FCurve]:
    """Canonical, duplicate-free list of F-curves ordered by family then parameters."""
    check_genus(g)
    out = [FCurve("A"), FCurve("B")]
    out += [FCurve("C", (i,)) for i in range(1, g - 1)]
    out += [FCurve("D", (i,)) for i in range(1, g - 2) if i <= g - 2 - i]
    out += [FCurve("E", (i, j)) for i in range(1, g) for j in range(i, g) if i + j <= g - 1]
    out += [FCurve("F", p) for p in _sorted_partitions(g, 4)]
    return out


def _sorted_partitions(total: int, parts: int, least: int = 1):
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total // parts + 1):
        for rest in _sorted_partitions(total - first, parts - 1, first):
            yield (first,) + rest


def intersect(D: DivisorClass, F: FCurve) -> Fraction:
    """Intersection number of ``D = a*lambda - sum b_i delta_i`` with an F-curve."""
    if D.model is Model.COARSE_DAGGER:
        raise ValueError("intersections are only defined for stack-level classes")
    F.check_genus(D.genus)
    b = D.b
    p = F.params
    if F.family == "A":
        return D.lambda_coeff - 12 * b(0) + b(1)
    if F.family == "B":
        return b(0)
    if F.family == "C":
        return b(p[0])
    if F.family == "D":
        return 2 * b(0) - b(p[0])
    if F.family == "E":
        i, j = p
        return b(i) + b(j) - b(i + j)
    i, j, k, l = p
    return b(i) + b(j) + b(k) + b(l) - b(i + j) - b(i + k) - b(i + l)


def intersection_table(D: DivisorClass) -> list[IntersectionReport]:
    return [IntersectionReport(F, intersect(D, F)) for F in enumerate_fcurves(D.genus)]


@dataclass(frozen=True)
class Nef:
    certificate: tuple[IntersectionReport, ...]


@dataclass(frozen=True)
class NotNef:
    witness: FCurve
    value: Fraction


@dataclass(frozen=True)
class Inapplicable:
    reason: str
    index: int


NefVerdict = Union[Nef, NotNef, Inapplicable]


def gkm_nef_check(D: DivisorClass) -> NefVerdict:
    """Nefness via the F-curve criterion, valid when each b_i (i >= 1) is 0 or at least b_0."""
    b0 = D.b(0)
    for i in range(1, D.genus // 2 + 1):
        bi = D.b(i)
        if bi != 0 and bi < b0:
            return Inapplicable(f"b_{i} = {format_q(bi)} is neither 0 nor >= b_0 = {format_q(b0)}", i)
    table = intersection_table(D)
    for row in table:
        if row.value < 0:
            return NotNef(row.curve, row.value)
    return Nef(tuple(table))


def _rows(rows: Iterable[IntersectionReport]):
    for r in rows:
        yield r.curve.family, ",".join(map(str, r.curve.params)), format_q(r.value)


def table_to_tsv(rows: Iterable[IntersectionReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(["family", "params", "value"])
    w.writerows(_rows(rows))
    return buf.getvalue()


def table_to_json(rows: Iterable[IntersectionReport]) -> str:
    return json.dumps([
        {"family": r.curve.family, "params": list(r.curve.params), "value": format_q(r.value)}
        for r in rows
    ])
