"""Weighted loopless multigraphs with exact rational edge weights.

Parsing and serialization of the line-oriented text format, structural
decompositions (components, blocks, convex hulls) and generators for the
standard example families.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Malformed graph text or invalid graph construction."""


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    w: Fraction

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


def parse_weight(tok: str) -> Fraction:
    # accepts "3", "3/2" and decimal "0.5"; Fraction handles all exactly
    try:
        w = Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"bad weight {tok!r}") from exc
    return w


class WeightedMultigraph:
    """Loopless multigraph on vertices 1..n with nonnegative Fraction weights.

    Immutable after construction; parallel edges are kept distinct by edge id.
    """

    def __init__(self, n: int, edge_triples: Iterable[tuple[int, int, Fraction]]):
        if n < 0:
            raise GraphFormatError("negative vertex count")
        self.n = n
        self.vertices: tuple[int, ...] = tuple(range(1, n + 1))
        vset = set(self.vertices)
        edges = []
        for i, (u, v, w) in enumerate(edge_triples):
            w = Fraction(w)
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphFormatError(f"edge endpoint outside 1..{n}: ({u},{v})")
            if w < 0:
                raise GraphFormatError(f"negative weight on edge ({u},{v})")
            edges.append(Edge(i, u, v, w))
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.m = len(edges)
        adj: dict[int, list[tuple[int, int]]] = {x: [] for x in self.vertices}
        for e in edges:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        self._adj = adj

    # -- basic queries ----------------------------------------------------

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        return self._adj

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]

    def incident(self, x: int) -> list[Edge]:
        if x not in self._adj:
            raise GraphFormatError(f"unknown vertex {x}")
        return [self.edges[eid] for _, eid in self._adj[x]]

    def weighted_degree(self, x: int) -> Fraction:
        if x not in self._adj:
            raise GraphFormatError(f"unknown vertex {x}")
        return sum((self.edges[eid].w for _, eid in self._adj[x]), Fraction(0))

    def neighbor_weight(self, u: int, v: int) -> Fraction:
        """Total weight of all parallel edges between u and v."""
        return sum((self.edges[eid].w for x, eid in self._adj[u] if x == v), Fraction(0))

    def components(self) -> list[frozenset[int]]:
        return components_of(self.vertices, [(e.u, e.v) for e in self.edges])

    def total_weight(self) -> Fraction:
        return sum((e.w for e in self.edges), Fraction(0))

    # -- transforms -------------------------------------------------------

    def merge_parallel(self) -> "WeightedMultigraph":
        """Replace every parallel family by one edge carrying the summed weight.

        Never applied implicitly anywhere; the subgraph classes that allow
        multiple edges must see the original multigraph.
        """
        acc: dict[tuple[int, int], Fraction] = {}
        order: list[tuple[int, int]] = []
        for e in self.edges:
            key = (min(e.u, e.v), max(e.u, e.v))
            if key not in acc:
                acc[key] = Fraction(0)
                order.append(key)
            acc[key] += e.w
        return WeightedMultigraph(self.n, [(u, v, acc[(u, v)]) for u, v in order])

    def scaled(self, c: Fraction) -> "WeightedMultigraph":
        c = Fraction(c)
        return WeightedMultigraph(self.n, [(e.u, e.v, e.w * c) for e in self.edges])

    def subgraph(self, vertices: Iterable[int], edge_ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self, frozenset(vertices), frozenset(edge_ids))

    def induced(self, vertices: Iterable[int]) -> "Subgraph":
        vs = frozenset(vertices)
        eids = frozenset(e.id for e in self.edges if e.u in vs and e.v in vs)
        return Subgraph(self, vs, eids)

    # -- text format ------------------------------------------------------

    def serialize(self) -> str:
        lines = [f"v {self.n}"]
        for e in self.edges:
            w = e.w
            tok = str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"
            lines.append(f"e {e.u} {e.v} {tok}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "WeightedMultigraph":
        n = None
        triples: list[tuple[int, int, Fraction]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "v":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate vertex declaration")
                if len(parts) != 2:
                    raise GraphFormatError(f"line {lineno}: expected 'v <n>'")
                try:
                    n = int(parts[1])
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}")
                if n < 0:
                    raise GraphFormatError(f"line {lineno}: negative vertex count")
            elif parts[0] == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before vertex declaration")
                if len(parts) != 4:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v> <w>'")
                try:
                    u, v = int(parts[1]), int(parts[2])
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: bad endpoint")
                try:
                    w = parse_weight(parts[3])
                except GraphFormatError as exc:
                    raise GraphFormatError(f"line {lineno}: {exc}") from None
                if u == v:
                    raise GraphFormatError(f"line {lineno}: loop edge at vertex {u}")
                if w < 0:
                    raise GraphFormatError(f"line {lineno}: negative weight")
                if not (1 <= u <= n and 1 <= v <= n):
                    raise GraphFormatError(f"line {lineno}: endpoint outside 1..{n}")
                triples.append((u, v, w))
            else:
                raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
        if n is None:
            raise GraphFormatError("missing 'v <n>' header")
        return cls(n, triples)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedMultigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"WeightedMultigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Subgraph:
    """A subgraph given by a vertex set and a set of parent edge ids."""

    parent: WeightedMultigraph
    vertices: frozenset[int]
    edge_ids: frozenset[int]

    def __post_init__(self):
        for eid in self.edge_ids:
            e = self.parent.edges[eid]
            if e.u not in self.vertices or e.v not in self.vertices:
                raise GraphFormatError(f"edge {eid} endpoint outside subgraph vertex set")

    @property
    def edges(self) -> list[Edge]:
        return [self.parent.edges[eid] for eid in sorted(self.edge_ids)]

    def weight(self) -> Fraction:
        """Product of edge weights; 1 for the edgeless subgraph."""
        w = Fraction(1)
        for eid in self.edge_ids:
            w *= self.parent.edges[eid].w
        return w


# -- components -----------------------------------------------------------


def components_of(vertices: Iterable[int], pairs: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    parent = {v: v for v in vertices}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(g) for g in sorted(groups.values(), key=min)]


# -- blocks ---------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edge_ids: frozenset[int]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]

    def end_blocks(self) -> list[Block]:
        """Blocks containing exactly one cut vertex."""
        return [b for b in self.blocks if len(b.vertices & self.cut_vertices) == 1]

    def isolated_blocks(self) -> list[Block]:
        """Blocks containing no cut vertex."""
        return [b for b in self.blocks if not (b.vertices & self.cut_vertices)]

    def internal_vertices(self, block: Block) -> frozenset[int]:
        """Non-cut vertices of the ambient graph that lie in `block`."""
        return block.vertices - self.cut_vertices

    def block_cut_tree(self) -> dict[object, list[object]]:
        """Bipartite adjacency over ('B', i) block nodes and ('C', v) cut nodes."""
        adj: dict[object, list[object]] = {}
        for v in self.cut_vertices:
            adj[("C", v)] = []
        for i, b in enumerate(self.blocks):
            node = ("B", i)
            adj[node] = []
            for v in b.vertices & self.cut_vertices:
                adj[node].append(("C", v))
                adj[("C", v)].append(node)
        return adj


def biconnected_components(
    vertices: Sequence[int], adj: dict[int, list[tuple[int, int]]]
) -> tuple[list[tuple[set[int], set[int]]], set[int]]:
    """Blocks and cut vertices of the graph given by an incidence structure.

    `adj` maps vertex -> list of (neighbor, edge id); each edge id appears once
    per endpoint.  Returns ([(block vertex set, block edge-id set)], cuts).
    Isolated vertices come back as single-vertex blocks with no edges.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[tuple[set[int], set[int]]] = []
    cuts: set[int] = set()
    counter = 0

    for root in vertices:
        if root in disc:
            continue
        if not adj.get(root):
            disc[root] = -1
            blocks.append(({root}, set()))
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack: list[int] = []
        stack: list[tuple[int, int | None, Iterator[tuple[int, int]]]] = [
            (root, None, iter(adj[root]))
        ]
        root_blocks = 0
        while stack:
            v, peid, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        blk: set[int] = set()
                        while True:
                            eid = estack.pop()
                            blk.add(eid)
                            if eid == peid:
                                break
                        blocks.append((_block_vertices(adj, blk), blk))
                        if u == root:
                            root_blocks += 1
                        else:
                            cuts.add(u)
                continue
            w_, eid = nxt
            if eid == peid:
                continue
            if w_ not in disc:
                estack.append(eid)
                disc[w_] = low[w_] = counter
                counter += 1
                stack.append((w_, eid, iter(adj[w_])))
            elif disc[w_] < disc[v]:
                estack.append(eid)
                if disc[w_] < low[v]:
                    low[v] = disc[w_]
        if root_blocks >= 2:
            cuts.add(root)
    return blocks, cuts


def _block_vertices(adj: dict[int, list[tuple[int, int]]], eids: set[int]) -> set[int]:
    vs: set[int] = set()
    for v, nbrs in adj.items():
        for _, eid in nbrs:
            if eid in eids:
                vs.add(v)
                break
    return vs


def block_decomposition(g) -> BlockDecomposition:
    """Blocks, cut vertices and block-cut tree of a graph or subgraph."""
    vertices, edges = _graph_like(g)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
    for e in edges:
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    raw_blocks, cuts = biconnected_components(sorted(vertices), adj)
    blocks = tuple(
        Block(frozenset(vs), frozenset(eids))
        for vs, eids in sorted(raw_blocks, key=lambda b: (min(b[0]), sorted(b[1])))
    )
    return BlockDecomposition(blocks, frozenset(cuts))


def _graph_like(g) -> tuple[Sequence[int], list[Edge]]:
    if isinstance(g, WeightedMultigraph):
        return g.vertices, list(g.edges)
    if isinstance(g, Subgraph):
        return sorted(g.vertices), g.edges
    raise TypeError(f"expected graph or subgraph, got {type(g)!r}")


# -- convex hulls ---------------------------------------------------------


def convex_hull(h, X: Iterable[int]) -> Subgraph:
    """Union of all paths between members of X, length-0 paths included.

    Computed per component through the block-cut tree: the hull restricted to
    a component is the union of the blocks lying on the minimal subtree
    spanning the members of X in that component.
    """
    vertices, edges = _graph_like(h)
    parent = h.parent if isinstance(h, Subgraph) else h
    Xs = frozenset(X)
    if not Xs:
        raise ValueError("X must be nonempty")
    if not Xs <= set(vertices):
        raise ValueError("X must be contained in the vertex set")

    comps = components_of(vertices, [(e.u, e.v) for e in edges])
    dec = block_decomposition(h)
    tree = dec.block_cut_tree()
    node_of: dict[int, object] = {}
    for v in dec.cut_vertices:
        node_of[v] = ("C", v)
    for i, b in enumerate(dec.blocks):
        for v in b.vertices - dec.cut_vertices:
            node_of[v] = ("B", i)

    hull_vs: set[int] = set()
    hull_es: set[int] = set()
    for comp in comps:
        terms = Xs & comp
        if not terms:
            continue
        if len(terms) == 1:
            hull_vs |= terms
            continue
        term_nodes = {node_of[v] for v in terms}
        keep = _steiner_nodes(tree, term_nodes)
        for node in keep:
            if node[0] == "B":
                b = dec.blocks[node[1]]
                hull_vs |= b.vertices
                hull_es |= b.edge_ids
            else:
                hull_vs.add(node[1])
        hull_vs |= terms
    if isinstance(h, Subgraph):
        return Subgraph(parent, frozenset(hull_vs), frozenset(hull_es))
    return parent.subgraph(hull_vs, hull_es)


def _steiner_nodes(tree: dict[object, list[object]], terminals: set[object]) -> set[object]:
    """Minimal subtree (node set) of a forest spanning the terminal nodes."""
    # restrict to the tree component(s) containing terminals, then prune
    keep = set()
    seen: set[object] = set()
    for t in terminals:
        if t in seen:
            continue
        comp = set()
        stack = [t]
        seen.add(t)
        while stack:
            node = stack.pop()
            comp.add(node)
            for nb in tree.get(node, []):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        keep |= comp
    degree = {node: sum(1 for nb in tree.get(node, []) if nb in keep) for node in keep}
    leaves = [node for node in keep if degree[node] <= 1 and node not in terminals]
    while leaves:
        node = leaves.pop()
        keep.discard(node)
        for nb in tree.get(node, []):
            if nb in keep:
                degree[nb] -= 1
                if degree[nb] <= 1 and nb not in terminals:
                    leaves.append(nb)
    return keep


# -- generators -----------------------------------------------------------


def _weights(m: int, weights) -> list[Fraction]:
    if weights is None:
        return [Fraction(1)] * m
    if isinstance(weights, (int, Fraction)):
        return [Fraction(weights)] * m
    ws = [Fraction(w) for w in weights]
    if len(ws) != m:
        raise ValueError(f"expected {m} weights, got {len(ws)}")
    return ws


def path_graph(n: int, weights=None) -> WeightedMultigraph:
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    ws = _weights(n - 1, weights)
    return WeightedMultigraph(n, [(i, i + 1, ws[i - 1]) for i in range(1, n)])


def cycle_graph(n: int, weights=None) -> WeightedMultigraph:
    if n < 3:
        raise ValueError("n >= 3 required")
    ws = _weights(n, weights)
    triples = [(i, i + 1, ws[i - 1]) for i in range(1, n)] + [(n, 1, ws[n - 1])]
    return WeightedMultigraph(n, triples)


def star_graph(r: int, weights=None) -> WeightedMultigraph:
    """Star K_{1,r}; vertex 1 is the center."""
    if r < 1:
        raise ValueError("r >= 1 required")
    ws = _weights(r, weights)
    return WeightedMultigraph(r + 1, [(1, i + 1, ws[i - 1]) for i in range(1, r + 1)])


def wheel_graph(r: int, weights=None) -> WeightedMultigraph:
    """Wheel: hub (vertex 1) joined to every vertex of a rim cycle C_r."""
    if r < 3:
        raise ValueError("r >= 3 required")
    ws = _weights(2 * r, weights)
    triples = [(1, i, ws[i - 2]) for i in range(2, r + 2)]
    rim = list(range(2, r + 2))
    for k in range(r):
        triples.append((rim[k], rim[(k + 1) % r], ws[r + k]))
    return WeightedMultigraph(r + 1, triples)


def complete_graph(n: int, weight=1) -> WeightedMultigraph:
    if n < 1:
        raise ValueError("n >= 1 required")
    w = Fraction(weight)
    triples = [(i, j, w) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return WeightedMultigraph(n, triples)


def theta_graph(r: int, w=1) -> WeightedMultigraph:
    """Endvertices a=1, b=2 joined by internally disjoint paths of lengths 1..r.

    On each path one edge carries weight w, the remaining edges weight 1.
    """
    if r < 2:
        raise ValueError("r >= 2 required")
    w = Fraction(w)
    triples: list[tuple[int, int, Fraction]] = []
    nxt = 3
    for length in range(1, r + 1):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        chain = [1] + inner + [2]
        for k in range(length):
            triples.append((chain[k], chain[k + 1], w if k == 0 else Fraction(1)))
    return WeightedMultigraph(nxt - 1, triples)


def parallel_expand(g: WeightedMultigraph, s: int, divide: bool = False) -> WeightedMultigraph:
    """Replace every edge by s parallel copies (weight w_e, or w_e/s if divide)."""
    if s < 1:
        raise ValueError("s >= 1 required")
    triples = []
    for e in g.edges:
        w = e.w / s if divide else e.w
        triples.extend((e.u, e.v, w) for _ in range(s))
    return WeightedMultigraph(g.n, triples)


def k2_multi(s: int, total=None) -> WeightedMultigraph:
    """Two vertices joined by s parallel edges of weight total/s (default total=s)."""
    if s < 1:
        raise ValueError("s >= 1 required")
    total = Fraction(s) if total is None else Fraction(total)
    return WeightedMultigraph(2, [(1, 2, total / s) for _ in range(s)])


def star_multi(r: int, s: int, total=None) -> WeightedMultigraph:
    """Star K_{1,r} with each edge replaced by s parallels of weight total/s."""
    base = star_graph(r)
    total = Fraction(s) if total is None else Fraction(total)
    return WeightedMultigraph(
        base.n, [(e.u, e.v, total / s) for e in base.edges for _ in range(s)]
    )


def truncated_tree(r: int, depth: int, weight=1) -> WeightedMultigraph:
    """Ball of the given radius around a vertex of the infinite r-regular tree."""
    if r < 1 or depth < 0:
        raise ValueError("r >= 1 and depth >= 0 required")
    w = Fraction(weight)
    triples: list[tuple[int, int, Fraction]] = []
    frontier = [1]
    nxt = 2
    for d in range(depth):
        new_frontier = []
        for v in frontier:
            kids = r if d == 0 else r - 1
            for _ in range(kids):
                triples.append((v, nxt, w))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
        if not frontier:
            break
    return WeightedMultigraph(nxt - 1, triples)


def disjoint_union(graphs: Sequence[WeightedMultigraph]) -> WeightedMultigraph:
    triples: list[tuple[int, int, Fraction]] = []
    off = 0
    for g in graphs:
        triples.extend((e.u + off, e.v + off, e.w) for e in g.edges)
        off += g.n
    return WeightedMultigraph(off, triples)


_WEIGHT_CHOICES = [Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2),
                   Fraction(1, 3), Fraction(2, 3), Fraction(3, 2), Fraction(5, 2)]


def random_multigraph(
    rng: random.Random,
    n: int,
    p: float = 0.5,
    max_multiplicity: int = 1,
    weights: str = "rational",
) -> WeightedMultigraph:
    """Seeded random graph: each pair gets 0..max_multiplicity parallel edges."""
    triples: list[tuple[int, int, Fraction]] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                mult = 1 if max_multiplicity <= 1 else rng.randint(1, max_multiplicity)
                for _ in range(mult):
                    w = Fraction(1) if weights == "unit" else rng.choice(_WEIGHT_CHOICES)
                    triples.append((i, j, w))
    return WeightedMultigraph(n, triples)


def generate(family: str, **params) -> WeightedMultigraph:
    """Dispatcher used by the CLI `generate` subcommand."""
    fns = {
        "path": lambda: path_graph(params["n"], params.get("weights")),
        "cycle": lambda: cycle_graph(params["n"], params.get("weights")),
        "star": lambda: star_graph(params["r"], params.get("weights")),
        "wheel": lambda: wheel_graph(params["r"], params.get("weights")),
        "complete": lambda: complete_graph(params["n"], params.get("weight", 1)),
        "theta": lambda: theta_graph(params["r"], params.get("weight", 1)),
        "k2s": lambda: k2_multi(params["s"], params.get("total")),
        "stars": lambda: star_multi(params["r"], params["s"], params.get("total")),
        "pns": lambda: parallel_expand(path_graph(params["n"]), params["s"], divide=True),
        "tree": lambda: truncated_tree(params["r"], params["depth"], params.get("weight", 1)),
        "trees": lambda: parallel_expand(
            truncated_tree(params["r"], params["depth"]), params["s"], divide=True
        ),
        "random": lambda: random_multigraph(
            random.Random(params.get("seed", 0)),
            params["n"],
            params.get("p", 0.5),
            params.get("max_multiplicity", 1),
            params.get("weights", "rational"),
        ),
    }
    if family not in fns:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(fns)}")
    return fns[family]()
