"""Weighted series over walk families and anchored subgraph classes.

A series is the vector (a_0, ..., a_M) where a_m is the total weight of the
m-edge (or m-step) members of the family.  Walk families are computed by
convolution or depth-first search; subgraph classes by explicit enumeration
of edge subsets against the defining predicate, so each member is visited
exactly once and carries the product of its edge weights.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .graph import WeightedMultigraph, biconnected_components, components_of

DEFAULT_WORK_CAP = 50_000_000
WORK_CAP_ENV = "MAXMAXFLOW_WORKCAP"

WALK_KINDS = frozenset({"W", "FPW", "SAW", "FPSAW"})
EDGE_KINDS = frozenset({"T", "F", "H", "C", "BT", "BF", "BFSTAR", "B", "BLOCKPATH"})


class WorkCapExceeded(RuntimeError):
    pass


def work_cap() -> int:
    raw = os.environ.get(WORK_CAP_ENV)
    return int(raw) if raw else DEFAULT_WORK_CAP


@dataclass(frozen=True)
class SubgraphClassSpec:
    """Which family to enumerate, with its anchor sets and parameters."""

    kind: str
    X: Optional[frozenset[int]] = None
    Y: Optional[frozenset[int]] = None
    p: Optional[int] = None
    r: Optional[int] = None
    x: Optional[int] = None
    y: Optional[int] = None

    def __post_init__(self):
        k = self.kind
        if k in WALK_KINDS:
            if self.x is None:
                raise ValueError(f"{k} needs a start vertex x")
            if k in ("W", "SAW") and self.y is None:
                raise ValueError(f"{k} needs an end vertex y")
            if k in ("FPW", "FPSAW") and not self.Y:
                raise ValueError(f"{k} needs a nonempty target set Y")
        elif k == "BLOCKPATH":
            if self.x is None or self.y is None or self.x == self.y:
                raise ValueError("BLOCKPATH needs distinct anchors x, y")
        elif k in EDGE_KINDS:
            if k in ("T", "BT", "B", "C", "H") and not self.X:
                raise ValueError(f"{k} needs a nonempty anchor set X")
            if k in ("F", "BF", "BFSTAR"):
                if not self.Y:
                    raise ValueError(f"{k} needs a nonempty anchor set Y")
                if self.X is None:
                    object.__setattr__(self, "X", frozenset())
            if self.p is not None and self.p < 1:
                raise ValueError("p must be >= 1")
            if self.r is not None and self.r < 1:
                raise ValueError("r must be >= 1")
            if (self.p is not None or self.r is not None) and k != "H":
                raise ValueError("p, r apply to kind H only")
        else:
            raise ValueError(f"unknown kind {k!r}")


def class_spec(kind: str, **kw) -> SubgraphClassSpec:
    if "X" in kw and kw["X"] is not None:
        kw["X"] = frozenset(kw["X"])
    if "Y" in kw and kw["Y"] is not None:
        kw["Y"] = frozenset(kw["Y"])
    return SubgraphClassSpec(kind=kind, **kw)


@dataclass(frozen=True)
class CountSeries:
    spec: SubgraphClassSpec
    M: int
    values: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        return self.values[m]


# -- walk families --------------------------------------------------------


def _pair_weights(g: WeightedMultigraph) -> dict[int, dict[int, Fraction]]:
    A: dict[int, dict[int, Fraction]] = {v: {} for v in g.vertices}
    for e in g.edges:
        A[e.u][e.v] = A[e.u].get(e.v, Fraction(0)) + e.w
        A[e.v][e.u] = A[e.v].get(e.u, Fraction(0)) + e.w
    return A


def _require_vertices(g: WeightedMultigraph, vs: Iterable[int]):
    for v in vs:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")


def walk_counts(g: WeightedMultigraph, x: int, y: int, M: int) -> CountSeries:
    """Total weight of m-step walks from x to y, m = 0..M."""
    _require_vertices(g, [x, y])
    A = _pair_weights(g)
    cur = {v: Fraction(int(v == y)) for v in g.vertices}
    out = [cur[x]]
    for _ in range(M):
        cur = {u: sum((w * cur[v] for v, w in A[u].items()), Fraction(0)) for u in g.vertices}
        out.append(cur[x])
    return CountSeries(class_spec("W", x=x, y=y), M, tuple(out))


def walk_total_counts(g: WeightedMultigraph, x: int, M: int) -> CountSeries:
    """Row sums: total weight of m-step walks from x to anywhere."""
    _require_vertices(g, [x])
    A = _pair_weights(g)
    cur = {v: Fraction(1) for v in g.vertices}
    out = [Fraction(1)]
    for _ in range(M):
        cur = {u: sum((w * cur[v] for v, w in A[u].items()), Fraction(0)) for u in g.vertices}
        out.append(cur[x])
    return CountSeries(class_spec("W", x=x, y=x), M, tuple(out))


def fpw_counts(g: WeightedMultigraph, x: int, Y: Iterable[int], M: int) -> CountSeries:
    """First-passage walks from x to the set Y: interior steps avoid Y."""
    Ys = frozenset(Y)
    _require_vertices(g, [x, *Ys])
    if not Ys:
        raise ValueError("Y must be nonempty")
    A = _pair_weights(g)
    # f_m(v) = delta_{m,0} on Y; elsewhere the one-step convolution of f_{m-1}
    prev = {v: Fraction(int(v in Ys)) for v in g.vertices}
    out = [prev[x]]
    for _ in range(M):
        cur = {}
        for u in g.vertices:
            if u in Ys:
                cur[u] = Fraction(0)
            else:
                cur[u] = sum((w * prev[v] for v, w in A[u].items()), Fraction(0))
        out.append(cur[x])
        prev = cur
    return CountSeries(class_spec("FPW", x=x, Y=Ys), M, tuple(out))


def saw_counts(g: WeightedMultigraph, x: int, y: int, M: int) -> CountSeries:
    """Self-avoiding walks from x to y.  Parallel steps aggregate by weight."""
    _require_vertices(g, [x, y])
    out = [Fraction(0)] * (M + 1)
    if x == y:
        out[0] = Fraction(1)
        return CountSeries(class_spec("SAW", x=x, y=y), M, tuple(out))
    A = _pair_weights(g)
    visited = {x}

    def dfs(u: int, depth: int, prod: Fraction):
        for v, w in A[u].items():
            if depth + 1 > M:
                return
            if v == y:
                out[depth + 1] += prod * w
            elif v not in visited and depth + 1 < M:
                visited.add(v)
                dfs(v, depth + 1, prod * w)
                visited.remove(v)

    dfs(x, 0, Fraction(1))
    return CountSeries(class_spec("SAW", x=x, y=y), M, tuple(out))


def fpsaw_counts(g: WeightedMultigraph, x: int, Y: Iterable[int], M: int) -> CountSeries:
    """First-passage self-avoiding walks from x to the set Y."""
    Ys = frozenset(Y)
    _require_vertices(g, [x, *Ys])
    if not Ys:
        raise ValueError("Y must be nonempty")
    out = [Fraction(0)] * (M + 1)
    if x in Ys:
        out[0] = Fraction(1)
        return CountSeries(class_spec("FPSAW", x=x, Y=Ys), M, tuple(out))
    A = _pair_weights(g)
    visited = {x}

    def dfs(u: int, depth: int, prod: Fraction):
        for v, w in A[u].items():
            if depth + 1 > M:
                return
            if v in Ys:
                out[depth + 1] += prod * w
            elif v not in visited and depth + 1 < M:
                visited.add(v)
                dfs(v, depth + 1, prod * w)
                visited.remove(v)

    dfs(x, 0, Fraction(1))
    return CountSeries(class_spec("FPSAW", x=x, Y=Ys), M, tuple(out))


# -- subgraph-class predicates --------------------------------------------


def _degrees(vs: set[int], edges) -> dict[int, int]:
    deg = {v: 0 for v in vs}
    for e in edges:
        deg[e.u] += 1
        deg[e.v] += 1
    return deg


def _component_sets(vs: set[int], edges) -> list[frozenset[int]]:
    return components_of(vs, [(e.u, e.v) for e in edges])


def _is_forest(vs: set[int], edges) -> bool:
    return len(edges) == len(vs) - len(_component_sets(vs, edges))


def _sub_blocks(vs: set[int], edges):
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
    for e in edges:
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    return biconnected_components(sorted(vs), adj)


def is_in_class(g: WeightedMultigraph, edge_ids: Iterable[int], spec: SubgraphClassSpec) -> bool:
    """Does the subgraph on the canonical vertex set satisfy the class predicate?

    The canonical vertex set is the union of the edge endpoints with the
    anchor sets, so members correspond bijectively to edge subsets.
    """
    kind = spec.kind
    if kind in WALK_KINDS:
        raise ValueError(f"{kind} is a walk family, not an edge-subset class")
    eids = sorted(set(edge_ids))
    edges = [g.edges[i] for i in eids]
    X = spec.X or frozenset()
    Y = spec.Y or frozenset()
    anchors = {spec.x, spec.y} - {None} if kind == "BLOCKPATH" else set(X | Y)
    vs = set(anchors)
    for e in edges:
        vs.add(e.u)
        vs.add(e.v)
    m = len(edges)

    if kind == "T":
        comps = _component_sets(vs, edges)
        if len(comps) != 1 or m != len(vs) - 1:
            return False
        deg = _degrees(vs, edges)
        return all(v in X for v in vs if deg[v] <= 1)

    if kind == "F":
        comps = _component_sets(vs, edges)
        if m != len(vs) - len(comps):
            return False
        if any(len(c & Y) != 1 for c in comps):
            return False
        deg = _degrees(vs, edges)
        XY = X | Y
        return all(v in XY for v in vs if deg[v] <= 1)

    if kind == "H":
        comps = _component_sets(vs, edges)
        if m != len(vs) - len(comps):
            return False
        deg = _degrees(vs, edges)
        if not all(v in X for v in vs if deg[v] <= 1):
            return False
        if spec.p is not None and any(len(c & X) < spec.p for c in comps):
            return False
        if spec.r is not None and len(comps) != spec.r:
            return False
        return True

    if kind == "C":
        comps = _component_sets(vs, edges)
        return all(c & X for c in comps)

    if kind == "BT":
        comps = _component_sets(vs, edges)
        if len(comps) != 1:
            return False
        blocks, cuts = _sub_blocks(vs, edges)
        if len(blocks) == 1:
            bvs, _ = blocks[0]
            return len(bvs) == 1 or len(bvs & X) >= 2
        for bvs, _ in blocks:
            ncuts = len(bvs & cuts)
            if ncuts == 1 and not ((bvs - cuts) & X):
                return False
        return True

    if kind in ("BF", "BFSTAR"):
        comps = _component_sets(vs, edges)
        for c in comps:
            hits = len(c & Y)
            if kind == "BF":
                if hits != 1:
                    return False
            elif hits == 0:
                return False
        blocks, cuts = _sub_blocks(vs, edges)
        XY = X | Y
        for bvs, _ in blocks:
            ncuts = len(bvs & cuts)
            if ncuts == 1:
                if not ((bvs - cuts) & XY):
                    return False
            elif ncuts == 0:
                if len(bvs) == 1:
                    if not (bvs & Y):
                        return False
                elif len(bvs & XY) < 2:
                    return False
        return True

    if kind == "B":
        blocks, cuts = _sub_blocks(vs, edges)
        for bvs, _ in blocks:
            ncuts = len(bvs & cuts)
            if ncuts == 1:
                if not ((bvs - cuts) & X):
                    return False
            elif ncuts == 0:
                if len(bvs) == 1:
                    if not (bvs & X):
                        return False
                elif len(bvs & X) < 2:
                    return False
        return True

    if kind == "BLOCKPATH":
        comps = _component_sets(vs, edges)
        if len(comps) != 1:
            return False
        blocks, cuts = _sub_blocks(vs, edges)
        if len(blocks) == 1:
            return True
        ends = [(bvs - cuts) for bvs, _ in blocks if len(bvs & cuts) == 1]
        if len(ends) != 2:
            return False
        a, b = ends
        return (spec.x in a and spec.y in b) or (spec.x in b and spec.y in a)

    raise ValueError(f"unknown kind {spec.kind!r}")


def _forest_prefilter(kind: str) -> bool:
    return kind in ("T", "F", "H")


def class_count_series(
    g: WeightedMultigraph, spec: SubgraphClassSpec, M: int, cap: Optional[int] = None
) -> CountSeries:
    """Series (a_0..a_M) for the family; walk kinds dispatch to the walk code.

    Edge-subset kinds enumerate subsets of size m for each m; the estimated
    number of subsets is checked against the work cap before starting.
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    if spec.kind == "W":
        return walk_counts(g, spec.x, spec.y, M)
    if spec.kind == "FPW":
        return fpw_counts(g, spec.x, spec.Y, M)
    if spec.kind == "SAW":
        return saw_counts(g, spec.x, spec.y, M)
    if spec.kind == "FPSAW":
        return fpsaw_counts(g, spec.x, spec.Y, M)

    limit = cap if cap is not None else work_cap()
    total = sum(math.comb(g.m, m) for m in range(min(M, g.m) + 1))
    if total > limit:
        raise WorkCapExceeded(
            f"enumeration needs {total} subsets, above the cap {limit}"
        )

    anchors = (
        {spec.x, spec.y}
        if spec.kind == "BLOCKPATH"
        else set(spec.X or frozenset()) | set(spec.Y or frozenset())
    )
    _require_vertices(g, anchors)

    values = [Fraction(0)] * (M + 1)
    ids = range(g.m)
    forest_only = _forest_prefilter(spec.kind)
    for m in range(min(M, g.m) + 1):
        acc = Fraction(0)
        for combo in itertools.combinations(ids, m):
            if forest_only and not _is_forest(
                {v for i in combo for v in (g.edges[i].u, g.edges[i].v)} | anchors,
                [g.edges[i] for i in combo],
            ):
                continue
            if is_in_class(g, combo, spec):
                w = Fraction(1)
                for i in combo:
                    w *= g.edges[i].w
                acc += w
        values[m] = acc
    return CountSeries(spec, M, tuple(values))


def two_connected_through_edge_series(
    g: WeightedMultigraph, eid: int, M: int, cap: Optional[int] = None
) -> CountSeries:
    """Series of nonseparable subgraphs with >= 2 edges containing a given edge.

    Equivalently: with e = xy, the m-edge members are exactly e plus an
    (m-1)-edge xy-block path of G - e, so a_m = w_e * bp_{m-1}(G - e).
    A single edge does not count (a_1 = 0).
    """
    if not 0 <= eid < g.m:
        raise ValueError("edge id out of range")
    limit = cap if cap is not None else work_cap()
    total = sum(math.comb(g.m - 1, m) for m in range(min(M, g.m) + 1))
    if total > limit:
        raise WorkCapExceeded(f"enumeration needs {total} subsets, above the cap {limit}")
    e0 = g.edges[eid]
    others = [i for i in range(g.m) if i != eid]
    values = [Fraction(0)] * (M + 1)
    for m in range(2, min(M, g.m) + 1):
        acc = Fraction(0)
        for combo in itertools.combinations(others, m - 1):
            full = (eid, *combo)
            vs = {v for i in full for v in (g.edges[i].u, g.edges[i].v)}
            blocks, _ = _sub_blocks(vs, [g.edges[i] for i in full])
            if len(blocks) == 1 and len(blocks[0][1]) == m:
                w = Fraction(1)
                for i in full:
                    w *= g.edges[i].w
                acc += w
        values[m] = acc
    spec = SubgraphClassSpec(kind="BLOCKPATH", x=e0.u, y=e0.v)
    return CountSeries(spec, M, tuple(values))
