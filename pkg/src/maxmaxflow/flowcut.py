"""Exact max-flow / min-cut, cut trees, cocycle space and maxmaxflow.

All computations are exact over the rationals.  Flow queries clear
denominators so the augmenting-path search runs on integers.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import WeightedMultigraph, block_decomposition, components_of


@dataclass(frozen=True)
class MinCutCertificate:
    """Max-flow value with the canonical minimum cut certifying it.

    `side` is the set of vertices reachable from the source in the final
    residual network (so it contains the source and not the sink whenever the
    two are connected).  `cut_edges` are the ids of edges crossing the cut.
    """

    value: Fraction
    side: frozenset[int]
    cut_edges: frozenset[int]


def _scaled_capacities(edges) -> tuple[dict[tuple[int, int], int], int]:
    denom = 1
    for _, _, w in edges:
        denom = denom * w.denominator // math.gcd(denom, w.denominator)
    cap: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        c = w.numerator * (denom // w.denominator)
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap[(v, u)] = cap.get((v, u), 0) + c
    return cap, denom


def _min_cut_int(
    vertices: Iterable[int], cap: dict[tuple[int, int], int], s: int, t: int
) -> tuple[int, set[int]]:
    """Shortest-augmenting-path max flow on integer capacities."""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for (u, v) in cap:
        adj[u].append(v)
    residual = dict(cap)
    flow = 0
    while True:
        prev: dict[int, int] = {s: s}
        q = deque([s])
        while q and t not in prev:
            u = q.popleft()
            for v in adj[u]:
                if v not in prev and residual.get((u, v), 0) > 0:
                    prev[v] = u
                    q.append(v)
        if t not in prev:
            break
        # bottleneck along the path
        bott = None
        v = t
        while v != s:
            u = prev[v]
            r = residual[(u, v)]
            bott = r if bott is None else min(bott, r)
            v = u
        v = t
        while v != s:
            u = prev[v]
            residual[(u, v)] -= bott
            residual[(v, u)] = residual.get((v, u), 0) + bott
            v = u
        flow += bott
    reach = {s}
    q = deque([s])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in reach and residual.get((u, v), 0) > 0:
                reach.add(v)
                q.append(v)
    return flow, reach


def max_flow(g: WeightedMultigraph, x: int, y: int) -> MinCutCertificate:
    """Exact max flow between two distinct vertices, with min-cut certificate."""
    if x == y:
        raise ValueError("source and sink must differ")
    if x not in g._adj or y not in g._adj:
        raise ValueError("unknown vertex")
    cap, denom = _scaled_capacities([(e.u, e.v, e.w) for e in g.edges])
    flow, reach = _min_cut_int(g.vertices, cap, x, y)
    cut = frozenset(e.id for e in g.edges if (e.u in reach) != (e.v in reach))
    return MinCutCertificate(Fraction(flow, denom), frozenset(reach), cut)


def cut_weight(g: WeightedMultigraph, side: Iterable[int]) -> Fraction:
    s = set(side)
    return sum((e.w for e in g.edges if (e.u in s) != (e.v in s)), Fraction(0))


# -- cut trees ------------------------------------------------------------


@dataclass(frozen=True)
class CutTree:
    """A tree on V(G) whose edges carry min-cut values.

    For vertices in the same component of G, the minimum edge weight on the
    tree path equals their max-flow value, and removing any tree edge induces
    a minimum cut between its endpoints.  Components of G are stitched
    together with weight-0 edges so the tree spans V(G).
    """

    vertices: frozenset[int]
    edges: tuple[tuple[int, int, Fraction], ...]

    def adjacency(self) -> dict[int, list[tuple[int, Fraction]]]:
        adj: dict[int, list[tuple[int, Fraction]]] = {v: [] for v in self.vertices}
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj

    def path(self, x: int, y: int) -> list[tuple[int, int, Fraction]]:
        adj = self.adjacency()
        prev: dict[int, tuple[int, Fraction]] = {}
        seen = {x}
        q = deque([x])
        while q:
            u = q.popleft()
            if u == y:
                break
            for v, w in adj[u]:
                if v not in seen:
                    seen.add(v)
                    prev[v] = (u, w)
                    q.append(v)
        if y not in seen:
            raise ValueError("vertices not connected in tree")
        out = []
        v = y
        while v != x:
            u, w = prev[v]
            out.append((u, v, w))
            v = u
        out.reverse()
        return out

    def bottleneck(self, x: int, y: int) -> Fraction:
        return min(w for _, _, w in self.path(x, y))

    def split(self, u: int, v: int) -> frozenset[int]:
        """Vertex side containing u after removing tree edge (u, v)."""
        adj = self.adjacency()
        seen = {u}
        q = deque([u])
        while q:
            a = q.popleft()
            for b, _ in adj[a]:
                if a == u and b == v:
                    continue
                if b not in seen:
                    seen.add(b)
                    q.append(b)
        return frozenset(seen)


def _component_cut_tree(
    g: WeightedMultigraph, comp: frozenset[int]
) -> list[tuple[int, int, Fraction]]:
    """Classical cut-tree construction with contraction of hanging subtrees."""
    comp_edges = [e for e in g.edges if e.u in comp]
    # tree over "super nodes"; each node is a set of original vertices
    nodes: list[set[int]] = [set(comp)]
    tadj: dict[int, dict[int, Fraction]] = {0: {}}

    while True:
        idx = next((i for i, s in enumerate(nodes) if len(s) >= 2), None)
        if idx is None:
            break
        S = nodes[idx]
        it = iter(sorted(S))
        x, y = next(it), next(it)

        # contract each subtree hanging off idx into a single marker vertex
        marker_of: dict[int, int] = {}  # neighbor node -> marker vertex id
        vmap: dict[int, int] = {}
        nxt_marker = -1
        for nb in tadj[idx]:
            marker = nxt_marker
            nxt_marker -= 1
            marker_of[nb] = marker
            for node in _subtree_nodes(tadj, nb, idx):
                for v in nodes[node]:
                    vmap[v] = marker
        for v in S:
            vmap[v] = v

        triples = []
        for e in comp_edges:
            a, b = vmap[e.u], vmap[e.v]
            if a != b:
                triples.append((a, b, e.w))
        cap, denom = _scaled_capacities(triples)
        verts = set(vmap.values())
        flow, reach = _min_cut_int(verts, cap, x, y)
        value = Fraction(flow, denom)

        s1 = {v for v in S if v in reach}
        s2 = S - s1
        new_idx = len(nodes)
        nodes[idx] = s1
        nodes.append(s2)
        old_neighbors = dict(tadj[idx])
        tadj[idx] = {}
        tadj[new_idx] = {}
        for nb, w in old_neighbors.items():
            del tadj[nb][idx]
            target = idx if marker_of[nb] in reach else new_idx
            tadj[target][nb] = w
            tadj[nb][target] = w
        tadj[idx][new_idx] = value
        tadj[new_idx][idx] = value

    out = []
    for i, nbrs in tadj.items():
        for j, w in nbrs.items():
            if i < j:
                u = next(iter(nodes[i]))
                v = next(iter(nodes[j]))
                out.append((u, v, w))
    return out


def _subtree_nodes(tadj: dict[int, dict[int, Fraction]], start: int, banned: int) -> list[int]:
    seen = {banned, start}
    out = [start]
    stack = [start]
    while stack:
        u = stack.pop()
        for v in tadj[u]:
            if v not in seen:
                seen.add(v)
                out.append(v)
                stack.append(v)
    return out


def cut_tree(g: WeightedMultigraph) -> CutTree:
    """Cut tree of g, built per component and stitched with weight-0 edges."""
    comps = g.components()
    edges: list[tuple[int, int, Fraction]] = []
    for comp in comps:
        if len(comp) >= 2:
            edges.extend(_component_cut_tree(g, comp))
    reps = [min(c) for c in comps]
    for a, b in zip(reps, reps[1:]):
        edges.append((a, b, Fraction(0)))
    return CutTree(frozenset(g.vertices), tuple(edges))


# -- maxmaxflow -----------------------------------------------------------


def maxmaxflow(g: WeightedMultigraph) -> Fraction:
    """Maximum over vertex pairs of the max-flow value.

    Pairs in different components contribute 0.  Undefined on graphs with
    fewer than two vertices.
    """
    if g.n < 2:
        raise ValueError("maxmaxflow requires at least two vertices")
    best = Fraction(0)
    for comp in g.components():
        if len(comp) < 2:
            continue
        for _, _, w in _component_cut_tree(g, comp):
            if w > best:
                best = w
    return best


def maxmaxflow_blockwise(g: WeightedMultigraph) -> Fraction:
    """Alternative route: maxmaxflow is the max over blocks with >= 2 vertices."""
    if g.n < 2:
        raise ValueError("maxmaxflow requires at least two vertices")
    dec = block_decomposition(g)
    best = Fraction(0)
    for b in dec.blocks:
        if len(b.vertices) < 2:
            continue
        sub = WeightedMultigraph(
            len(b.vertices),
            [
                (ru, rv, g.edges[eid].w)
                for eid in sorted(b.edge_ids)
                for ru, rv in [_relabel(g.edges[eid], sorted(b.vertices))]
            ],
        )
        if sub.n >= 2:
            lam = maxmaxflow(sub)
            if lam > best:
                best = lam
    return best


def _relabel(e, ordering) -> tuple[int, int]:
    pos = {v: i + 1 for i, v in enumerate(ordering)}
    return pos[e.u], pos[e.v]


# -- cocycles -------------------------------------------------------------


@dataclass(frozen=True)
class Cocycle:
    """Edge set E(X, X^c) together with the side X that induced it."""

    side: frozenset[int]
    edge_ids: frozenset[int]
    weight: Fraction


def cocycle_of(g: WeightedMultigraph, side: Iterable[int]) -> Cocycle:
    s = frozenset(side)
    eids = frozenset(e.id for e in g.edges if (e.u in s) != (e.v in s))
    w = sum((g.edges[i].w for i in eids), Fraction(0))
    return Cocycle(s, eids, w)


def elementary_cocycle(g: WeightedMultigraph, tree_edges: Sequence[tuple[int, int]], k: int) -> Cocycle:
    """Cocycle induced in g by removing the k-th edge of a spanning tree of V(g).

    The side is the vertex set of the tree component containing the first
    endpoint of the removed edge.
    """
    if not (0 <= k < len(tree_edges)):
        raise ValueError("tree edge index out of range")
    remaining = [p for i, p in enumerate(tree_edges) if i != k]
    comps = components_of(g.vertices, remaining)
    a = tree_edges[k][0]
    side = next(c for c in comps if a in c)
    return cocycle_of(g, side)


def cocycle_basis_from_tree(
    g: WeightedMultigraph, tree_edges: Sequence[tuple[int, int]]
) -> list[Cocycle]:
    """Elementary cocycles of a spanning tree; a GF(2) basis of the cocycle space."""
    comps = components_of(g.vertices, list(tree_edges))
    if len(comps) != 1 or len(tree_edges) != g.n - 1:
        raise ValueError("expected a spanning tree of V(g)")
    basis = [elementary_cocycle(g, tree_edges, k) for k in range(len(tree_edges))]
    pivots: list[int] = []
    for c in basis:
        vec = 0
        for eid in c.edge_ids:
            vec |= 1 << eid
        for p in pivots:
            vec = min(vec, vec ^ p)
        if vec == 0:
            raise AssertionError("elementary cocycles not independent")
        pivots.append(vec)
    return basis


def _gf2_add(pivots: list[int], vec: int) -> bool:
    """Reduce vec against pivots; append and return True if independent."""
    for p in pivots:
        if (vec ^ p) < vec:
            vec ^= p
    if vec == 0:
        return False
    pivots.append(vec)
    pivots.sort(reverse=True)
    return True


def lambda_tilde_bruteforce(g: WeightedMultigraph, cap: int = 12) -> Fraction:
    """Min over cocycle-space bases of the max basis weight, by exhaustion.

    Greedy matroid argument: sorting all cocycles by weight and keeping a
    maximal GF(2)-independent prefix yields a basis minimizing the sorted
    weight vector lexicographically, hence the max.  Exponential in component
    size; refuses components above `cap` vertices.
    """
    if g.n < 2:
        raise ValueError("requires at least two vertices")
    best = Fraction(0)
    any_multi = False
    for comp in g.components():
        cn = len(comp)
        if cn < 2:
            continue
        any_multi = True
        if cn > cap:
            raise ValueError(f"component with {cn} vertices exceeds brute-force cap {cap}")
        order = sorted(comp)
        anchor, rest = order[0], order[1:]
        comp_edges = [e for e in g.edges if e.u in comp]
        entries = []
        for mask in range(2 ** (cn - 1) - 1):  # omit the full set: empty cocycle
            side = {anchor} | {rest[i] for i in range(cn - 1) if mask >> i & 1}
            vec = 0
            w = Fraction(0)
            for e in comp_edges:
                if (e.u in side) != (e.v in side):
                    vec |= 1 << e.id
                    w += e.w
            entries.append((w, mask, vec))
        entries.sort(key=lambda t: (t[0], t[1]))
        pivots: list[int] = []
        comp_max = Fraction(0)
        for w, _, vec in entries:
            if _gf2_add(pivots, vec):
                comp_max = w
                if len(pivots) == cn - 1:
                    break
        if len(pivots) != cn - 1:
            raise AssertionError("failed to reach full cocycle rank")
        if comp_max > best:
            best = comp_max
    return best if any_multi else Fraction(0)


# -- disjoint bounded cuts around a vertex set ----------------------------


@dataclass(frozen=True)
class CutPair:
    x1: int
    side1: frozenset[int]
    weight1: Fraction
    x2: int
    side2: frozenset[int]
    weight2: Fraction


def cut_pair(g: WeightedMultigraph, X: Iterable[int]) -> CutPair:
    """Two members x1, x2 of X with disjoint vertex sets X1, X2 such that
    X ∩ Xi = {xi} and both cut weights w(E(Xi, Xi^c)) are at most maxmaxflow.

    Construction: take the cut tree, restrict to the minimal subtree spanning
    X in a component holding at least two members, and peel off two of its
    end vertices; a pendant tree edge certifies a cut of weight at most the
    largest tree-edge weight.  If every component holds at most one member of
    X, two whole components work with cut weight 0.
    """
    Xs = sorted(set(X))
    if len(Xs) < 2:
        raise ValueError("need at least two vertices in X")
    if any(v not in g._adj for v in Xs):
        raise ValueError("X must be a subset of V(g)")
    comps = g.components()
    comp_of = {v: c for c in comps for v in c}
    by_comp: dict[frozenset[int], list[int]] = {}
    for v in Xs:
        by_comp.setdefault(comp_of[v], []).append(v)

    rich = [c for c, vs in by_comp.items() if len(vs) >= 2]
    if not rich:
        # members are spread over components; two components are the cuts
        (c1, (x1,)), (c2, (x2,)) = sorted(by_comp.items(), key=lambda kv: kv[1])[:2]
        return CutPair(x1, c1, Fraction(0), x2, c2, Fraction(0))

    comp = min(rich, key=min)
    members = by_comp[comp]
    tree = CutTree(
        frozenset(comp), tuple(_component_cut_tree(g, comp))
    )
    adj = tree.adjacency()
    keep = _tree_steiner(adj, set(members))
    degree = {v: sum(1 for u, _ in adj[v] if u in keep) for v in keep}
    ends = sorted(v for v in keep if degree[v] == 1)
    x1, x2 = ends[0], ends[1]

    def one(xi: int) -> tuple[frozenset[int], Fraction]:
        nb = next(u for u, _ in adj[xi] if u in keep)
        side = tree.split(xi, nb)
        return side, cut_weight(g, side)

    side1, w1 = one(x1)
    side2, w2 = one(x2)
    return CutPair(x1, side1, w1, x2, side2, w2)


def _tree_steiner(adj: dict[int, list[tuple[int, Fraction]]], terminals: set[int]) -> set[int]:
    keep = set(adj)
    degree = {v: len(adj[v]) for v in keep}
    leaves = [v for v in keep if degree[v] <= 1 and v not in terminals]
    while leaves:
        v = leaves.pop()
        keep.discard(v)
        for u, _ in adj[v]:
            if u in keep:
                degree[u] -= 1
                if degree[u] <= 1 and u not in terminals:
                    leaves.append(u)
    return keep
