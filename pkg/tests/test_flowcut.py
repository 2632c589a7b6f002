"""Exact max-flow, cut trees, maxmaxflow, cocycle machinery, cut pairs."""
import itertools
import random
from fractions import Fraction as F

import pytest

from maxmaxflow.graph import (
    WeightedMultigraph,
    cycle_graph,
    disjoint_union,
    k2_multi,
    path_graph,
    random_multigraph,
    star_graph,
    theta_graph,
)
from maxmaxflow.flowcut import (
    cocycle_of,
    cut_pair,
    cut_tree,
    cut_weight,
    cocycle_basis_from_tree,
    elementary_cocycle,
    lambda_tilde_bruteforce,
    max_flow,
    maxmaxflow,
    maxmaxflow_blockwise,
)


def _min_cut_brute(g, x, y):
    """Oracle: minimum over all vertex bipartitions separating x from y."""
    others = [v for v in g.vertices if v not in (x, y)]
    best = None
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            side = {x, *extra}
            w = sum((e.w for e in g.edges if (e.u in side) != (e.v in side)), F(0))
            if best is None or w < best:
                best = w
    return best


# -- max flow -------------------------------------------------------------


def test_max_flow_path():
    g = path_graph(4, weights=F(3, 2))
    cert = max_flow(g, 1, 4)
    assert cert.value == F(3, 2)


def test_max_flow_parallel():
    g = k2_multi(3, total=F(2))
    assert max_flow(g, 1, 2).value == F(2)


def test_max_flow_disconnected_zero():
    g = WeightedMultigraph(3, [(1, 2, F(1))])
    cert = max_flow(g, 1, 3)
    assert cert.value == 0 and not cert.cut_edges


def test_max_flow_certificate_is_cut():
    rng = random.Random(7)
    for _ in range(50):
        g = random_multigraph(rng, rng.randint(2, 7), 0.5, max_multiplicity=3)
        x, y = rng.sample(list(g.vertices), 2)
        cert = max_flow(g, x, y)
        assert x in cert.side and y not in cert.side
        assert cut_weight(g, cert.side) == cert.value
        assert cert.value == _min_cut_brute(g, x, y)


def test_max_flow_same_endpoints_rejected():
    with pytest.raises(ValueError):
        max_flow(path_graph(2), 1, 1)


# -- cut tree -------------------------------------------------------------


def _check_cut_tree(g, t):
    vs = sorted(g.vertices)
    # (a) bottleneck along the tree path equals the pairwise max-flow
    for x, y in itertools.combinations(vs, 2):
        assert t.bottleneck(x, y) == max_flow(g, x, y).value
    # (b) each tree edge induces a bipartition whose cut weight in g equals
    # the tree edge weight
    for u, v, w in t.edges:
        side = t.split(u, v)
        assert cut_weight(g, side) == w


def test_cut_tree_small_named():
    for g in [path_graph(4), cycle_graph(5), star_graph(4), k2_multi(3), theta_graph(4, F(1, 3))]:
        _check_cut_tree(g, cut_tree(g))


def test_cut_tree_random():
    rng = random.Random(13)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(2, 7), 0.5, max_multiplicity=3)
        _check_cut_tree(g, cut_tree(g))


def test_cut_tree_disconnected():
    g = disjoint_union([cycle_graph(3), path_graph(2)])
    t = cut_tree(g)
    assert t.bottleneck(1, 4) == 0
    _check_cut_tree(g, t)


# -- maxmaxflow -----------------------------------------------------------


def test_maxmaxflow_named():
    # cycle: max edge weight + min edge weight
    g = WeightedMultigraph(4, [(1, 2, F(3)), (2, 3, F(1)), (3, 4, F(2)), (4, 1, F(5))])
    assert maxmaxflow(g) == F(6)
    # star: heaviest spoke
    assert maxmaxflow(star_graph(5, weights=F(2))) == F(2)
    # parallel bundle: total weight
    assert maxmaxflow(k2_multi(4)) == F(4)


def _theta_lambda(r, w):
    """Closed form for the generalized theta graph with one weight-w edge and
    unit weights on each of r paths of lengths 1..r."""
    if w <= F(1, r - 1):
        return 1 + w
    if w <= 1:
        return r * w
    return r - 1 + w


def test_maxmaxflow_theta_piecewise():
    for r in range(2, 6):
        for w in [F(1, 10), F(1, r - 1), F(1, 2), F(1), F(3)]:
            assert maxmaxflow(theta_graph(r, w)) == _theta_lambda(r, w)


def test_maxmaxflow_undefined_below_two_vertices():
    with pytest.raises(ValueError):
        maxmaxflow(WeightedMultigraph(1, []))


def test_maxmaxflow_all_singletons():
    assert maxmaxflow(WeightedMultigraph(3, [])) == 0


def test_maxmaxflow_brute_agreement():
    rng = random.Random(17)
    for _ in range(60):
        g = random_multigraph(rng, rng.randint(2, 7), 0.5, max_multiplicity=3)
        lam = maxmaxflow(g)
        assert lam == maxmaxflow_blockwise(g)
        assert lam == max(
            max_flow(g, x, y).value for x, y in itertools.combinations(sorted(g.vertices), 2)
        )


# -- cocycles and the greedy cocycle invariant ----------------------------


def _spanning_tree_pairs(g):
    seen = {1}
    pairs = []
    stack = [1]
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                pairs.append((u, v))
                stack.append(v)
    return pairs


def test_elementary_cocycles_span_all_cocycles():
    rng = random.Random(19)
    done = 0
    while done < 30:
        g = random_multigraph(rng, rng.randint(2, 6), 0.6, max_multiplicity=3)
        if len(g.components()) != 1:
            continue
        done += 1
        pairs = _spanning_tree_pairs(g)
        basis = cocycle_basis_from_tree(g, pairs)  # independence checked inside
        assert len(basis) == g.n - 1
        pivots = []
        for c in basis:
            vec = sum(1 << i for i in c.edge_ids)
            for p in pivots:
                vec = min(vec, vec ^ p)
            assert vec
            pivots.append(vec)
        # every cocycle reduces to zero against the basis
        vs = sorted(g.vertices)
        for mask in range(1, 1 << (g.n - 1)):
            side = {vs[0]} | {vs[i + 1] for i in range(g.n - 1) if mask >> i & 1}
            vec = sum(1 << i for i in cocycle_of(g, side).edge_ids)
            for p in pivots:
                vec = min(vec, vec ^ p)
            assert vec == 0


def test_elementary_cocycle_weight_is_cut_weight():
    g = cycle_graph(4)
    pairs = [(1, 2), (2, 3), (3, 4)]
    c = elementary_cocycle(g, pairs, 1)
    assert c.weight == cut_weight(g, c.side)
    assert len(c.edge_ids) == 2


def _lambda_tilde_oracle(g):
    """Oracle: greedy scan of all cocycles in increasing (weight, mask) order,
    keeping GF(2)-independent ones; answer is the heaviest kept."""
    best = F(0)
    for comp in g.components():
        vs = sorted(comp)
        if len(vs) < 2:
            continue
        eids = [e.id for e in g.edges if e.u in comp]
        cocs = []
        # sides containing vs[0]; the full component (empty cocycle) excluded
        for mask in range((1 << (len(vs) - 1)) - 1):
            side = {vs[0]} | {vs[i + 1] for i in range(len(vs) - 1) if mask >> i & 1}
            em = 0
            w = F(0)
            for i in eids:
                e = g.edges[i]
                if (e.u in side) != (e.v in side):
                    em |= 1 << i
                    w += e.w
            cocs.append((w, em))
        cocs.sort()
        pivots = []
        comp_best = F(0)
        for w, em in cocs:
            v = em
            changed = True
            while changed:
                changed = False
                for p in pivots:
                    if v ^ p < v:
                        v ^= p
                        changed = True
            if v:
                pivots.append(v)
                comp_best = w
                if len(pivots) == len(vs) - 1:
                    break
        best = max(best, comp_best)
    return best


def test_lambda_tilde_matches_oracle_and_lambda():
    rng = random.Random(23)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(2, 6), 0.5, max_multiplicity=3)
        lt = lambda_tilde_bruteforce(g)
        assert lt == _lambda_tilde_oracle(g)
        assert lt == maxmaxflow(g)


# -- cut pairs ------------------------------------------------------------


def _check_cut_pair(g, X, cp):
    X = set(X)
    assert cp.x1 != cp.x2 and {cp.x1, cp.x2} <= X
    assert not (cp.side1 & cp.side2)
    lam = maxmaxflow(g)
    for xi, side, wi in [(cp.x1, cp.side1, cp.weight1), (cp.x2, cp.side2, cp.weight2)]:
        assert X & side == {xi}
        assert wi == cut_weight(g, side)
        assert wi <= lam


def test_cut_pair_basic():
    g = path_graph(5)
    cp = cut_pair(g, {1, 3, 5})
    _check_cut_pair(g, {1, 3, 5}, cp)


def test_cut_pair_cross_component():
    g = disjoint_union([cycle_graph(3), cycle_graph(3)])
    cp = cut_pair(g, {1, 4})
    assert cp.weight1 == cp.weight2 == 0
    _check_cut_pair(g, {1, 4}, cp)


def test_cut_pair_too_small_rejected():
    with pytest.raises(ValueError):
        cut_pair(path_graph(3), {2})


def test_cut_pair_random():
    rng = random.Random(29)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(3, 7), 0.5, max_multiplicity=2)
        X = set(rng.sample(list(g.vertices), rng.randint(2, 3)))
        cp = cut_pair(g, X)
        _check_cut_pair(g, X, cp)
        # each side is a cut separating its member from the other, so its
        # weight is at least the pairwise max-flow
        mf = max_flow(g, cp.x1, cp.x2).value
        assert cp.weight1 >= mf and cp.weight2 >= mf
