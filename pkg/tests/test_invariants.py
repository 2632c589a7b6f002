"""Degree statistics, degeneracy variants, and the invariant inequality chain."""
import itertools
import random
from fractions import Fraction as F

import pytest

from maxmaxflow.graph import (
    WeightedMultigraph,
    complete_graph,
    cycle_graph,
    k2_multi,
    path_graph,
    random_multigraph,
    star_graph,
)
from maxmaxflow.invariants import (
    degeneracy,
    degeneracy_k,
    delta_k,
    delta_min_k,
    inequality_chain,
    max_degree,
    second_max_degree,
)


def test_degree_order_statistics():
    g = WeightedMultigraph(4, [(1, 2, F(3)), (1, 3, F(1)), (2, 3, F(2)), (3, 4, F(1, 2))])
    # degrees: 1 -> 4, 2 -> 5, 3 -> 7/2, 4 -> 1/2
    assert max_degree(g) == F(5)
    assert second_max_degree(g) == F(4)
    assert delta_k(g, 1) == F(5)
    assert delta_k(g, 2) == F(4)
    assert delta_k(g, 4) == F(1, 2)
    with pytest.raises(ValueError):
        delta_k(g, 5)


def test_delta_min_k():
    g = star_graph(4)
    # k-th smallest weighted degree: leaves have degree 1, the center 4
    assert delta_min_k(g, 1) == 1
    assert delta_min_k(g, 4) == 1
    assert delta_min_k(g, 5) == max_degree(g)


def _degeneracy_oracle(g):
    """Max over induced subgraphs of the min weighted degree, by exhaustion."""
    best = F(0)
    vs = sorted(g.vertices)
    for r in range(1, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            degs = {v: F(0) for v in s}
            for e in g.edges:
                if e.u in s and e.v in s:
                    degs[e.u] += e.w
                    degs[e.v] += e.w
            best = max(best, min(degs.values()))
    return best


def test_degeneracy_named():
    assert degeneracy(complete_graph(4)) == 3
    assert degeneracy(path_graph(5)) == 1
    assert degeneracy(cycle_graph(5)) == 2
    assert degeneracy(k2_multi(3, total=F(5))) == F(5)
    assert degeneracy(WeightedMultigraph(2, [])) == 0


def test_degeneracy_matches_exhaustive_oracle():
    rng = random.Random(31)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(2, 7), 0.5, max_multiplicity=3)
        assert degeneracy(g) == _degeneracy_oracle(g)


def _degeneracy_k_oracle(g, k):
    """Max over induced subgraphs (>= k vertices) of the k-th smallest degree."""
    best = F(0)
    vs = sorted(g.vertices)
    for r in range(k, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            degs = {v: F(0) for v in s}
            for e in g.edges:
                if e.u in s and e.v in s:
                    degs[e.u] += e.w
                    degs[e.v] += e.w
            kth = sorted(degs.values())[k - 1]
            best = max(best, kth)
    return best


def test_degeneracy_k_oracle_and_reduction():
    rng = random.Random(37)
    for _ in range(25):
        g = random_multigraph(rng, rng.randint(2, 6), 0.5, max_multiplicity=2)
        for k in range(1, g.n + 1):
            assert degeneracy_k(g, k) == _degeneracy_k_oracle(g, k)
        # k = 1 is ordinary degeneracy: max over subgraphs of the min degree
        assert degeneracy_k(g, 1) == degeneracy(g)


def test_inequality_chain_holds_on_random_graphs():
    rng = random.Random(41)
    for _ in range(60):
        g = random_multigraph(rng, rng.randint(2, 7), 0.5, max_multiplicity=3)
        rep = inequality_chain(g)
        assert rep.all_hold, [c for c in rep.checks if not c.holds]
        names = {c.name for c in rep.checks}
        assert any("Lambda" in nm for nm in names)


def test_inequality_chain_small_graph_fields():
    rep = inequality_chain(path_graph(2))
    assert rep.Delta == 1 and rep.Lambda == 1 and rep.LambdaTilde == 1
    assert rep.Delta_n_minus_1 == rep.Delta
    assert rep.all_hold


def test_inequality_chain_singleton():
    rep = inequality_chain(WeightedMultigraph(1, []))
    assert rep.Lambda is None and rep.all_hold
