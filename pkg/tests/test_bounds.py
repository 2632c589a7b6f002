"""Tree-function coefficients, series identities, bound verifiers, and the hunt."""
import math
import random
from fractions import Fraction as F

import pytest

from maxmaxflow.graph import (
    complete_graph,
    cycle_graph,
    k2_multi,
    path_graph,
    random_multigraph,
    star_graph,
    theta_graph,
)
from maxmaxflow.bounds import (
    BOUNDS,
    CONJECTURES,
    CONSISTENT,
    EQUALITY,
    VIOLATION,
    B_mk,
    C_mk,
    hunt,
    run_suite,
    series_power_coefficients,
    tree_series,
    verify_bound,
    verify_identities,
)


# -- coefficient functions ------------------------------------------------


def test_C_small_values():
    # C(m, k) = k (m+k)^(m-1) / m!
    assert C_mk(0, 0) == 1
    assert C_mk(3, 0) == 0
    assert C_mk(0, 5) == 1
    assert C_mk(1, 1) == 1
    assert C_mk(2, 1) == F(3, 2)
    assert C_mk(3, 1) == F(8, 3)
    assert C_mk(2, 2) == 4
    assert C_mk(2, F(1, 2)) == F(5, 8)


def test_B_small_values():
    # B(m, k) = 2^m C(m, (k-1)/2)
    assert B_mk(0, 1) == 1
    assert B_mk(2, 1) == 0
    assert B_mk(1, 3) == 2
    assert B_mk(2, 3) == 4 * F(3, 2)
    assert B_mk(m=2, k=2) == 4 * C_mk(2, F(1, 2))


def test_C_is_rooted_forest_count():
    # k (m+k)^(m-1) counts forests of k rooted trees on m+k labeled vertices;
    # spot-check against the closed form for small integer cases
    assert C_mk(1, 2) * math.factorial(1) == 2 * 3 ** 0
    assert C_mk(4, 3) * math.factorial(4) == 3 * 7 ** 3


def test_tree_series_lagrange():
    # y(z) = e^{z y(z)} has coefficients (m+1)^(m-1)/m!
    s = tree_series(8)
    assert s[0] == 1
    for m in range(1, 9):
        assert s[m] == F((m + 1) ** (m - 1), math.factorial(m))
    # and y = e^{s} satisfies [z^m] y^k = C(m, k)
    for k in range(1, 5):
        coeffs = series_power_coefficients(k, 8)
        for m in range(9):
            assert coeffs[m] == C_mk(m, k)


def test_identities_all_hold():
    checks = verify_identities(M=10, kmax=6)
    assert checks
    assert all(c.ok for c in checks)
    names = {c.name for c in checks}
    assert len(names) >= 4


# -- individual bound verifiers -------------------------------------------


def test_saw_sum_bound_equality_on_star():
    # on a star, self-avoiding walks from the center saturate the sum bound
    g = star_graph(4)
    res = verify_bound(g, "prop4.2", M=6, x=1, Y={2, 3, 4, 5})
    assert res.verdict == EQUALITY


def test_saw_pair_bound_on_k4():
    res = verify_bound(complete_graph(4), "prop4.3", M=6, x=1, y=2)
    assert res.verdict == CONSISTENT
    assert res.lhs_hi == F(17, 27)
    assert res.rhs_lo == 1


def test_theta_graph_value_at_the_kink():
    # at w = 1/(r-1) the discounted pair sum is 1 - (1 - 1/r)^r, reached at M = r
    for r in range(2, 6):
        g = theta_graph(r, F(1, r - 1))
        res = verify_bound(g, "prop4.3", M=r, x=1, y=2)
        assert res.lhs_hi == 1 - (1 - F(1, r)) ** r
        assert res.verdict == CONSISTENT


def test_block_tree_bound_parallel_pair():
    g = k2_multi(2, total=2)
    res = verify_bound(g, "prop7.1", M=6, X={1}, Y={2})
    assert res.verdict == CONSISTENT
    assert res.lhs_hi < res.rhs_lo


def test_alpha_parameter_validated():
    g = k2_multi(2, total=2)
    ok = verify_bound(g, "prop7.2", M=4, X={1}, Y={2}, alpha=F(3, 2))
    assert ok.verdict in (CONSISTENT, EQUALITY)
    with pytest.raises(ValueError):
        verify_bound(g, "prop7.2", M=4, X={1}, Y={2}, alpha=F(5, 2))
    with pytest.raises(ValueError):
        verify_bound(g, "prop7.2", M=4, X={1}, Y={2}, alpha=1)


def test_unknown_bound_id_rejected():
    with pytest.raises(ValueError):
        verify_bound(path_graph(2), "nosuch", M=2, x=1, y=2)


def test_missing_anchor_rejected():
    with pytest.raises(ValueError):
        verify_bound(path_graph(2), "prop4.3", M=2, x=1)  # y missing


def test_through_edge_bounds_heavy_edge():
    # a heavy distinguished edge dominates both through-edge corollaries; the
    # rescaled forms must stay consistent even when the edge weight exceeds
    # the maxmaxflow of the rest
    g = cycle_graph(3, weights=[F(100), F(1), F(1)])
    for bid in ("cor7.5", "cor7.13"):
        res = verify_bound(g, bid, M=6, eid=0)
        assert res.verdict in (CONSISTENT, EQUALITY), (bid, res)


def test_degenerate_discount_base():
    # graphs with maxmaxflow zero keep only the constant term
    from maxmaxflow.graph import WeightedMultigraph
    g = WeightedMultigraph(3, [])
    res = verify_bound(g, "prop7.1", M=4, X={1}, Y={2})
    assert res.verdict in (CONSISTENT, EQUALITY)


def test_run_suite_covers_registry_and_is_consistent():
    rng = random.Random(73)
    for _ in range(10):
        g = random_multigraph(rng, rng.randint(3, 6), 0.5, max_multiplicity=2)
        vs = list(g.vertices)
        X = set(rng.sample(vs, 2))
        Y = {rng.choice([v for v in vs if v not in X])}
        results = run_suite(g, M=4, X=X, Y=Y, include_conjectures=True)
        assert results
        assert all(r.verdict != VIOLATION for r in results), [
            r for r in results if r.verdict == VIOLATION
        ]
    ids = {r.bound_id for r in results}
    assert ids <= set(BOUNDS)
    assert len(ids) > 10


# -- the conjecture hunt --------------------------------------------------


def test_hunt_deterministic():
    a = hunt("conj5.6", trials=40, M=4, seed=9)
    b = hunt("conj5.6", trials=40, M=4, seed=9)
    assert a == b
    c = hunt("conj5.6", trials=40, M=4, seed=10)
    assert a != c


def test_hunt_no_violations_and_planted_families():
    for conj in CONJECTURES:
        findings = hunt(conj, trials=60, M=4, seed=1)
        assert findings
        assert all(f.verdict != VIOLATION for f in findings)
        assert any(f.family != "random" for f in findings)


def test_hunt_star_families_reach_equality():
    # the planted star instances achieve ratio 1 for the first two conjectures
    for conj in ("conj5.6", "conj5.7"):
        findings = hunt(conj, trials=60, M=5, seed=2)
        assert max(f.ratio for f in findings) == 1
        assert findings[0].ratio == 1
        assert any(f.ratio == 1 and f.family != "random" for f in findings)


def test_hunt_rejects_unknown_conjecture():
    with pytest.raises(ValueError):
        hunt("prop4.1", trials=5)
