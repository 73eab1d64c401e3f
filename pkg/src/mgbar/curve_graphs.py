"""Dual graphs of nodal-cuspidal curves.

A :class:`CurveGraph` records, for every irreducible component, its
geometric genus ``h``, the number of cusps ``c`` on it and the number of
marked points ``m``; edges are nodes (loops allowed).  The arithmetic genus
is ``sum(h + c) + b1(graph)``.

The elliptic-tail replacement :func:`t_transform` removes every maximal
connected genus-one subcurve meeting the rest in a single node and puts a
cusp at the attaching point.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_SUBCURVE_VERTICES",
    "CurveGraph",
    "GraphError",
    "SubcurveSpec",
    "Verdict",
    "Vertex",
    "arithmetic_genus",
    "canonical_form",
    "enumerate_stable_graphs",
    "find_elliptic_tails",
    "is_isomorphic",
    "is_pseudostable",
    "is_stable",
    "t_equivalent",
    "t_transform",
]

MAX_SUBCURVE_VERTICES = 20


class GraphError(ValueError):
    """Malformed graph or violated precondition."""


@dataclass(frozen=True)
class Vertex:
    id: int
    h: int = 0
    c: int = 0
    m: int = 0

    def __post_init__(self):
        if min(self.h, self.c, self.m) < 0:
            raise GraphError(f"vertex {self.id}: negative attribute")


@dataclass(frozen=True)
class CurveGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        verts = tuple(self.vertices)
        ids = [v.id for v in verts]
        if not verts:
            raise GraphError("graph has no vertices")
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate vertex ids")
        idset = set(ids)
        edges = []
        for e in self.edges:
            u, v = e
            if u not in idset or v not in idset:
                raise GraphError(f"edge {e} references an unknown vertex")
            edges.append((min(u, v), max(u, v)))
        object.__setattr__(self, "vertices", tuple(sorted(verts, key=lambda v: v.id)))
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def build(cls, attrs: Sequence[tuple[int, ...]], edges: Iterable[tuple[int, int]] = ()):
        """Build from ``(h,)``, ``(h, c)`` or ``(h, c, m)`` tuples; ids are 0..n-1."""
        verts = tuple(Vertex(i, *a) for i, a in enumerate(attrs))
        return cls(verts, tuple(edges))

    @classmethod
    def from_dict(cls, data: dict) -> "CurveGraph":
        try:
            verts = tuple(
                Vertex(int(v["id"]), int(v.get("h", 0)), int(v.get("c", 0)), int(v.get("m", 0)))
                for v in data["vertices"]
            )
            edges = tuple((int(u), int(v)) for u, v in data.get("edges", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"bad graph JSON: {exc}") from exc
        return cls(verts, edges)

    @classmethod
    def from_json(cls, text: str) -> "CurveGraph":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": v.id, "h": v.h, "c": v.c, "m": v.m} for v in self.vertices],
            "edges": [[u, v] for u, v in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- basic combinatorics --------------------------------------------------

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def valence(self, vid: int) -> int:
        """Number of half-edges at ``vid``; a loop contributes two."""
        return sum((u == vid) + (v == vid) for u, v in self.edges)

    def is_connected(self) -> bool:
        return len(_component(self.ids[0], self.edges, set(self.ids))) == len(self.vertices)

    def subgraph_genus(self, subset: Iterable[int]) -> int:
        s = set(subset)
        internal = sum(1 for u, v in self.edges if u in s and v in s)
        return sum(v.h + v.c for v in self.vertices if v.id in s) + internal - len(s) + 1

    def attaching_edges(self, subset: Iterable[int]) -> int:
        s = set(subset)
        return sum(1 for u, v in self.edges if (u in s) != (v in s))


@dataclass(frozen=True)
class SubcurveSpec:
    vertex_subset: frozenset[int]
    attaching_edges: int


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus the rules that failed (empty when ``ok``)."""

    ok: bool
    reasons: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _component(start: int, edges: Sequence[tuple[int, int]], allowed: set[int]) -> set[int]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        if u in allowed and v in allowed:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _require_connected(G: CurveGraph) -> None:
    if not G.is_connected():
        raise GraphError("graph is disconnected")


def arithmetic_genus(G: CurveGraph) -> int:
    _require_connected(G)
    return G.subgraph_genus(G.ids)


def is_stable(G: CurveGraph) -> Verdict:
    """Deligne-Mumford stability of a nodal curve of genus at least 3."""
    reasons = []
    if not G.is_connected():
        return Verdict(False, ("graph is disconnected",))
    for v in G.vertices:
        if v.c:
            reasons.append(f"vertex {v.id}: has {v.c} cusp(s); stable curves are nodal")
    g = arithmetic_genus(G)
    if g < 3:
        reasons.append(f"arithmetic genus {g} < 3")
    for v in G.vertices:
        special = G.valence(v.id) + v.m
        if v.h == 0 and special < 3:
            reasons.append(f"vertex {v.id}: genus 0 with {special} special points (< 3)")
        elif v.h == 1 and special < 1:
            reasons.append(f"vertex {v.id}: genus 1 with no special points")
    return Verdict(not reasons, tuple(reasons))


def _connected_proper_subsets(G: CurveGraph) -> Iterator[frozenset[int]]:
    n = len(G.vertices)
    if n > MAX_SUBCURVE_VERTICES:
        raise GraphError(f"{n} vertices exceeds the subcurve enumeration cap of {MAX_SUBCURVE_VERTICES}")
    ids = G.ids
    for size in range(1, n):
        for combo in itertools.combinations(ids, size):
            s = set(combo)
            if len(_component(combo[0], G.edges, s)) == size:
                yield frozenset(s)


def is_pseudostable(G: CurveGraph) -> Verdict:
    """Pseudostability checked by enumerating connected proper subcurves.

    Genus-one subcurves must meet the rest in at least two points, and
    smooth rational components need three special points (ampleness of the
    canonical sheaf).
    """
    if not G.is_connected():
        return Verdict(False, ("graph is disconnected",))
    reasons = []
    g = arithmetic_genus(G)
    if g < 2:
        reasons.append(f"arithmetic genus {g} < 2: canonical sheaf not ample")
    for s in _connected_proper_subsets(G):
        if G.subgraph_genus(s) == 1:
            k = G.attaching_edges(s)
            if k < 2:
                reasons.append(f"genus-one subcurve {sorted(s)} meets the rest in {k} point(s)")
    for v in G.vertices:
        if v.h == 0 and v.c == 0:
            special = G.valence(v.id) + v.m
            if special < 3:
                reasons.append(f"vertex {v.id}: smooth rational with {special} special points (< 3)")
    return Verdict(not reasons, tuple(reasons))


def find_elliptic_tails(G: CurveGraph) -> list[SubcurveSpec]:
    """Maximal connected genus-one subcurves attached by exactly one node.

    Stability is not required here; the only hard requirements are
    connectedness and arithmetic genus at least 3, which already force
    distinct maximal tails to be disjoint.
    """
    g = arithmetic_genus(G)
    if g < 3:
        raise GraphError(f"arithmetic genus {g} < 3")
    tails = [
        s for s in _connected_proper_subsets(G)
        if G.attaching_edges(s) == 1 and G.subgraph_genus(s) == 1
    ]
    maximal = [s for s in tails if not any(s < t for t in tails)]
    for a, b in itertools.combinations(maximal, 2):
        if a & b:
            raise GraphError(f"overlapping maximal elliptic tails {sorted(a)} and {sorted(b)}")
    maximal.sort(key=lambda s: sorted(s))
    return [SubcurveSpec(s, 1) for s in maximal]


def t_transform(G: CurveGraph) -> CurveGraph:
    """Replace each elliptic tail by a cusp on the component it meets.

    Pseudostable input has no elliptic tails and is returned unchanged, which
    makes the transform idempotent.
    """
    verdict = is_stable(G)
    if not verdict:
        if is_pseudostable(G) and arithmetic_genus(G) >= 3:
            return G
        raise GraphError("t_transform needs a stable graph: " + "; ".join(verdict.reasons))
    return _replace_tails(G, find_elliptic_tails(G))


def _replace_tails(G: CurveGraph, tails: Sequence[SubcurveSpec]) -> CurveGraph:
    removed: set[int] = set()
    extra_cusps: Counter[int] = Counter()
    dropped_edges = set()
    for tail in tails:
        s = tail.vertex_subset
        for vid in s:
            if G.vertex(vid).m:
                raise GraphError(f"elliptic tail vertex {vid} carries markings")
        (idx, (u, v)), = [(i, e) for i, e in enumerate(G.edges) if (e[0] in s) != (e[1] in s)]
        extra_cusps[v if u in s else u] += 1
        dropped_edges.add(idx)
        removed |= s
    verts = tuple(
        Vertex(v.id, v.h, v.c + extra_cusps[v.id], v.m) for v in G.vertices if v.id not in removed
    )
    edges = tuple(
        e for i, e in enumerate(G.edges)
        if i not in dropped_edges and e[0] not in removed and e[1] not in removed
    )
    return CurveGraph(verts, edges)


# -- isomorphism ----------------------------------------------------------------


def _dense(G: CurveGraph):
    index = {vid: i for i, vid in enumerate(G.ids)}
    n = len(index)
    attrs = [(v.h, v.c, v.m) for v in G.vertices]
    loops = [0] * n
    mult = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        a, b = index[u], index[v]
        if a == b:
            loops[a] += 1
        else:
            mult[a][b] += 1
            mult[b][a] += 1
    return attrs, loops, mult


def _canonical(attrs, loops, mult):
    """Canonical key of a vertex-labelled multigraph with loops.

    Vertices are colour-refined by an isomorphism-invariant signature, then
    every ordering compatible with the colour classes is tried and the
    lexicographically least encoding kept.
    """
    n = len(attrs)
    base = [(attrs[i], loops[i], sum(mult[i])) for i in range(n)]
    colour = _relabel(base)
    while True:
        sig = [
            (colour[i], tuple(sorted((colour[j], mult[i][j]) for j in range(n) if mult[i][j])))
            for i in range(n)
        ]
        new = _relabel(sig)
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for i, c in enumerate(colour):
        cells.setdefault(c, []).append(i)
    ordered = [cells[c] for c in sorted(cells)]
    head = tuple((attrs[i], loops[i]) for cell in ordered for i in cell)
    best = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in ordered)):
        order = [i for part in parts for i in part]
        key = tuple(mult[order[a]][order[b]] for a in range(n) for b in range(a + 1, n))
        if best is None or key < best:
            best = key
    return head, best


def _relabel(signatures):
    ranks = {s: r for r, s in enumerate(sorted(set(signatures)))}
    return [ranks[s] for s in signatures]


def canonical_form(G: CurveGraph):
    """Hashable key equal for two graphs iff they are isomorphic."""
    return _canonical(*_dense(G))


def is_isomorphic(G1: CurveGraph, G2: CurveGraph) -> bool:
    """Exact isomorphism of attribute-labelled multigraphs (loops included)."""
    if len(G1.vertices) != len(G2.vertices) or len(G1.edges) != len(G2.edges):
        return False
    if sorted((v.h, v.c, v.m, G1.valence(v.id)) for v in G1.vertices) != sorted(
        (v.h, v.c, v.m, G2.valence(v.id)) for v in G2.vertices
    ):
        return False
    return _find_bijection(G1, G2) is not None


def _find_bijection(G1: CurveGraph, G2: CurveGraph):
    a1, l1, m1 = _dense(G1)
    a2, l2, m2 = _dense(G2)
    n = len(a1)
    label1 = [(a1[i], l1[i], sum(m1[i])) for i in range(n)]
    label2 = [(a2[i], l2[i], sum(m2[i])) for i in range(n)]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or label2[j] != label1[i]:
                continue
            if any(m1[i][k] != m2[j][image[k]] for k in range(i)):
                continue
            image[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    return list(image) if extend(0) else None


def t_equivalent(G1: CurveGraph, G2: CurveGraph) -> bool:
    """Whether two stable curves have the same image under :func:`t_transform`."""
    g1, g2 = arithmetic_genus(G1), arithmetic_genus(G2)
    if g1 != g2:
        raise GraphError(f"genus mismatch: {g1} vs {g2}")
    return is_isomorphic(t_transform(G1), t_transform(G2))


# -- enumeration of stable graphs ---------------------------------------------


def enumerate_stable_graphs(genus: int, max_vertices: int) -> list[CurveGraph]:
    """All stable dual graphs of the given genus with at most ``max_vertices``.

    Starts from the smooth curve and closes under the two elementary
    degenerations (add a self-node; split a component along a new node).
    Every stable graph arises this way because contracting any edge of a
    stable graph keeps it stable and never increases the vertex count.
    """
    if genus < 2:
        raise GraphError("stable graphs are enumerated for genus >= 2")
    start = ((genus,), (0,), ((0,),))
    seen = {_gen_key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for child in _degenerations(state, max_vertices):
                key = _gen_key(child)
                if key not in seen:
                    seen[key] = child
                    nxt.append(child)
        frontier = nxt
    out = [_state_to_graph(s) for s in seen.values()]
    out.sort(key=lambda G: (len(G.vertices), len(G.edges), canonical_form(G)))
    return out


def _gen_key(state):
    hs, loops, mult = state
    return _canonical([(h, 0, 0) for h in hs], loops, mult)


def _state_to_graph(state) -> CurveGraph:
    hs, loops, mult = state
    n = len(hs)
    edges = []
    for i in range(n):
        edges += [(i, i)] * loops[i]
        for j in range(i + 1, n):
            edges += [(i, j)] * mult[i][j]
    return CurveGraph.build([(h,) for h in hs], edges)


def _stable_vertex(h: int, val: int) -> bool:
    return 2 * h - 2 + val > 0


def _degenerations(state, max_vertices):
    hs, loops, mult = state
    n = len(hs)
    for v in range(n):
        if hs[v] >= 1:
            h2 = list(hs)
            h2[v] -= 1
            l2 = list(loops)
            l2[v] += 1
            yield tuple(h2), tuple(l2), mult
    if n >= max_vertices:
        return
    for v in range(n):
        nbrs = [u for u in range(n) if u != v and mult[v][u]]
        L = loops[v]
        for h1 in range(hs[v] + 1):
            h2 = hs[v] - h1
            for l1 in range(L + 1):
                for l2 in range(L - l1 + 1):
                    l12 = L - l1 - l2
                    for split in itertools.product(*(range(mult[v][u] + 1) for u in nbrs)):
                        val1 = 2 * l1 + (1 + l12) + sum(split)
                        val2 = 2 * l2 + (1 + l12) + sum(mult[v][u] - k for u, k in zip(nbrs, split))
                        if not (_stable_vertex(h1, val1) and _stable_vertex(h2, val2)):
                            continue
                        yield _split(state, v, h1, h2, l1, l2, l12, dict(zip(nbrs, split)))


def _split(state, v, h1, h2, l1, l2, l12, to_first):
    hs, loops, mult = state
    n = len(hs)
    w = n
    new_h = list(hs) + [h2]
    new_h[v] = h1
    new_l = list(loops) + [l2]
    new_l[v] = l1
    m = [list(row) + [0] for row in mult] + [[0] * (n + 1)]
    for u, k in to_first.items():
        total = mult[v][u]
        m[v][u] = m[u][v] = k
        m[w][u] = m[u][w] = total - k
    m[v][w] = m[w][v] = 1 + l12
    return tuple(new_h), tuple(new_l), tuple(tuple(r) for r in m)
