"""Slow, independent reference computations.

Nothing here calls into the code it is compared against: the F-curve list
is rebuilt from raw ranges, pseudostability is decided through bridges
instead of subcurve enumeration, Riemann-Roch dimensions are recomputed
from first principles and floors use integer division on numerators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

__all__ = ["DEFAULT_BOUNDS", "LIMITS", "OracleReport", "run_oracles", "SCOPES"]


@dataclass(frozen=True)
class OracleReport:
    operation: str
    input: Any
    main: Any
    oracle: Any

    @property
    def agree(self) -> bool:
        return self.main == self.oracle

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "input": _jsonable(self.input),
            "main": _jsonable(self.main),
            "oracle": _jsonable(self.oracle),
            "agree": self.agree,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


DEFAULT_BOUNDS = {
    "fcurves": {"g_max": 30},
    "pseudostable": {"max_vertices": 5, "max_genus": 5},
    "riemann_roch": {"g_max": 30, "n_max": 6},
    "floor": {"m_max": 200, "e_max": 20, "q_max": 12},
}

LIMITS = {
    "fcurves": {"g_max": 80},
    "pseudostable": {"max_vertices": 6, "max_genus": 6},
    "riemann_roch": {"g_max": 100, "n_max": 12},
    "floor": {"m_max": 500, "e_max": 40, "q_max": 24},
}


# -- F-curves -------------------------------------------------------------------


def naive_fcurves(g: int) -> list[tuple[str, tuple[int, ...]]]:
    """Every F-curve parameter set, filtered from a box, canonicalised, sorted."""
    found = {("A", ()), ("B", ())}
    box = range(0, g + 1)
    for i in box:
        if 1 <= i and g - 2 - i >= 0:
            found.add(("C", (i,)))
        if 1 <= i <= g - 3:
            found.add(("D", (min(i, g - 2 - i),)))
    for i, j in itertools.product(box, box):
        if i >= 1 and j >= 1 and i + j <= g - 1:
            found.add(("E", tuple(sorted((i, j)))))
    for i, j, k in itertools.product(box, box, box):
        l = g - i - j - k
        if min(i, j, k, l) >= 1:
            found.add(("F", tuple(sorted((i, j, k, l)))))
    return sorted(found)


def _check_fcurves(bounds) -> list[OracleReport]:
    from .fcurves import enumerate_fcurves

    out = []
    for g in range(3, bounds["g_max"] + 1):
        main = [(F.family, F.params) for F in enumerate_fcurves(g)]
        out.append(OracleReport("enumerate_fcurves", {"g": g}, main, naive_fcurves(g)))
    return out


# -- pseudostability ----------------------------------------------------------


def rule_pseudostable(graph: dict) -> bool:
    """Pseudostability from the JSON form, via bridges and per-vertex counts.

    A connected subcurve meeting the rest in a single point is exactly one
    side of a bridge, so condition (2) only needs the bridge sides.
    """
    verts = {v["id"]: (v.get("h", 0), v.get("c", 0), v.get("m", 0)) for v in graph["vertices"]}
    edges = [tuple(e) for e in graph["edges"]]

    def reach(start, edge_list):
        seen, todo = {start}, [start]
        while todo:
            x = todo.pop()
            for u, v in edge_list:
                for a, b in ((u, v), (v, u)):
                    if a == x and b not in seen:
                        seen.add(b)
                        todo.append(b)
        return seen

    def genus(side, edge_list):
        inner = sum(1 for u, v in edge_list if u in side and v in side)
        return sum(verts[x][0] + verts[x][1] for x in side) + inner - len(side) + 1

    ids = list(verts)
    if len(reach(ids[0], edges)) != len(ids):
        return False
    if genus(set(ids), edges) < 2:
        return False
    for x, (h, c, m) in verts.items():
        val = sum((u == x) + (v == x) for u, v in edges)
        if h == 0 and c == 0 and val + m < 3:
            return False
    for k, (u, v) in enumerate(edges):
        if u == v:
            continue
        rest = edges[:k] + edges[k + 1:]
        side = reach(u, rest)
        if v in side:
            continue
        other = set(ids) - side
        if genus(side, rest) == 1 or genus(other, rest) == 1:
            return False
    return True


def pseudostability_domain(max_vertices: int, max_genus: int):
    """Stable graphs, all their partial cuspidalisations, and single-edge subdivisions."""
    from .curve_graphs import CurveGraph, Vertex, enumerate_stable_graphs

    for g in range(2, max_genus + 1):
        for G in enumerate_stable_graphs(g, max_vertices):
            hs = [v.h for v in G.vertices]
            for cusps in itertools.product(*(range(h + 1) for h in hs)):
                verts = tuple(Vertex(v.id, v.h - c, c) for v, c in zip(G.vertices, cusps))
                yield g, CurveGraph(verts, G.edges)
            if len(G.vertices) < max_vertices:
                new = max(G.ids) + 1
                for k, (u, v) in enumerate(G.edges):
                    edges = G.edges[:k] + G.edges[k + 1:] + ((u, new), (new, v))
                    yield g, CurveGraph(G.vertices + (Vertex(new),), edges)


def _check_pseudostable(bounds) -> list[OracleReport]:
    from .curve_graphs import is_pseudostable

    per_genus: dict[int, list] = {}
    failures = []
    for g, G in pseudostability_domain(bounds["max_vertices"], bounds["max_genus"]):
        main = bool(is_pseudostable(G))
        ref = rule_pseudostable(G.to_dict())
        per_genus.setdefault(g, []).append(main)
        if main != ref:
            failures.append(OracleReport("is_pseudostable", G.to_dict(), main, ref))
    if failures:
        failures.sort(key=lambda r: (len(r.input["vertices"]), len(r.input["edges"])))
        return failures[:1]
    return [
        OracleReport("is_pseudostable", {"genus": g, "graphs": len(v)}, sum(v), sum(v))
        for g, v in sorted(per_genus.items())
    ]


# -- Riemann-Roch ----------------------------------------------------------------


def naive_h0(gD: int, r: int, n: int, a: int):
    """h^0 of omega^n(2n sum p) twisted down by a sum p, or None outside the RR regime."""
    deg_omega = 2 * gD - 2
    degree = n * deg_omega + r * (2 * n) - r * a
    if degree < 0 or degree < 2 * gD - 1:
        return None
    return degree + 1 - gD


def _check_rr(bounds) -> list[OracleReport]:
    from .linear_series import RegimeError, h0_twisted

    out = []
    for g in range(3, bounds["g_max"] + 1):
        main_vals, ref_vals = [], []
        for r in range(0, g + 1):
            gD = g - r
            if gD == 0 and r < 3:
                continue
            for n in range(2, bounds["n_max"] + 1):
                for a in range(2, 2 * n):
                    try:
                        mv = h0_twisted(gD, r, n, a)
                    except RegimeError:
                        mv = None
                    main_vals.append(((r, n, a), mv))
                    ref_vals.append(((r, n, a), naive_h0(gD, r, n, a)))
        out.append(_first_diff("h0_twisted", {"g": g}, main_vals, ref_vals))
    return out


def _first_diff(name, group, main_vals, ref_vals) -> OracleReport:
    for (key, mv), (_, rv) in zip(main_vals, ref_vals):
        if mv != rv:
            return OracleReport(name, {**group, "case": key}, mv, rv)
    return OracleReport(name, {**group, "cases": len(main_vals)}, len(main_vals), len(ref_vals))


# -- floors -----------------------------------------------------------------------


def integer_floor_identity(m: int, e: int, p: int, q: int) -> tuple[int, int, int]:
    """(lhs, rhs, vanishing order) of the reduced identity using integer division only."""
    fma = (m * p) // q
    lhs = (m * p - m * q) // (q * e)
    rhs = (fma - m) // e
    return lhs, rhs, m + e * rhs


def _check_floor(bounds) -> list[OracleReport]:
    from .stack_descent import floor_identity_check, invariant_vanishing_order

    out = []
    for e in range(1, bounds["e_max"] + 1):
        main_vals, ref_vals = [], []
        for q in range(1, bounds["q_max"] + 1):
            for p in range(q + 1):
                a = Fraction(p, q)
                for m in range(1, bounds["m_max"] + 1):
                    lhs, rhs, order = integer_floor_identity(m, e, p, q)
                    main_vals.append(((m, p, q), (floor_identity_check(m, e, a),
                                                  invariant_vanishing_order(m, e, a))))
                    ref_vals.append(((m, p, q), (lhs == rhs, order)))
        out.append(_first_diff("floor_identity", {"e": e}, main_vals, ref_vals))
    return out


SCOPES: dict[str, Callable[[dict], list[OracleReport]]] = {
    "fcurves": _check_fcurves,
    "pseudostable": _check_pseudostable,
    "riemann_roch": _check_rr,
    "floor": _check_floor,
}


def run_oracles(scope: Iterable[str] | str = "all", bounds: dict | str = "default") -> list[OracleReport]:
    """Compare each selected implementation against its oracle within ``bounds``."""
    names = list(SCOPES) if scope == "all" else ([scope] if isinstance(scope, str) else list(scope))
    unknown = set(names) - set(SCOPES)
    if unknown:
        raise ValueError(f"unknown oracle scope(s): {sorted(unknown)}")
    chosen = {k: dict(v) for k, v in DEFAULT_BOUNDS.items()}
    if bounds != "default":
        for k, v in dict(bounds).items():
            chosen.setdefault(k, {}).update(v)
    for name in names:
        for key, value in chosen[name].items():
            if value > LIMITS[name][key]:
                raise ValueError(f"{name}.{key}={value} exceeds the cap {LIMITS[name][key]}")
    reports = []
    for name in names:
        reports += SCOPES[name](chosen[name])
    return reports
