"""Degree order statistics, degeneracy-style invariants and their ordering.

The central comparison chain ties the peeling invariants to maxmaxflow:

    D <= Lambda = LambdaTilde <= Delta_2 <= Delta
    Lambda >= D_2 >= max(D, Delta_{n-1})
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .flowcut import lambda_tilde_bruteforce, maxmaxflow
from .graph import WeightedMultigraph


def degree_sequence(g: WeightedMultigraph) -> list[Fraction]:
    """Weighted degrees, descending."""
    return sorted((g.weighted_degree(x) for x in g.vertices), reverse=True)


def delta_k(g: WeightedMultigraph, k: int) -> Fraction:
    """k-th largest weighted degree over distinct vertices."""
    seq = degree_sequence(g)
    if not 1 <= k <= len(seq):
        raise ValueError(f"k must be in 1..{len(seq)}")
    return seq[k - 1]


def delta_min_k(g: WeightedMultigraph, k: int) -> Fraction:
    """k-th smallest weighted degree over distinct vertices."""
    seq = degree_sequence(g)
    if not 1 <= k <= len(seq):
        raise ValueError(f"k must be in 1..{len(seq)}")
    return seq[len(seq) - k]


def max_degree(g: WeightedMultigraph) -> Fraction:
    return delta_k(g, 1)


def second_max_degree(g: WeightedMultigraph) -> Fraction:
    return delta_k(g, 2)


def degeneracy(g: WeightedMultigraph) -> Fraction:
    """Max over subgraphs of the minimum weighted degree, by greedy peeling.

    Repeatedly delete a vertex of minimum weighted degree (ties: smallest id);
    the answer is the largest minimum seen.  The standard core argument goes
    through unchanged for nonnegative weights: when the first vertex of a
    maximizing subgraph H is peeled, its current degree is at least delta(H).
    """
    if g.n == 0:
        raise ValueError("empty graph")
    deg = {x: g.weighted_degree(x) for x in g.vertices}
    alive = set(g.vertices)
    adj = g.adjacency()
    best = Fraction(0)
    while alive:
        x = min(alive, key=lambda v: (deg[v], v))
        if deg[x] > best:
            best = deg[x]
        alive.remove(x)
        for v, eid in adj[x]:
            if v in alive:
                deg[v] -= g.edges[eid].w
    return best


def degeneracy_k(g: WeightedMultigraph, k: int, cap: int = 10) -> Fraction:
    """Max over induced subgraphs with >= k vertices of the k-th smallest degree.

    Exhaustive over vertex subsets.  Deleting edges only lowers degrees, so
    restricting to induced subgraphs loses nothing.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}")
    if g.n > cap:
        raise ValueError(f"{g.n} vertices exceeds brute-force cap {cap}")
    adj = g.adjacency()
    best = Fraction(0)
    for size in range(k, g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            vs = set(subset)
            degs = []
            for x in subset:
                degs.append(
                    sum((g.edges[eid].w for v, eid in adj[x] if v in vs), Fraction(0))
                )
            degs.sort()
            if degs[k - 1] > best:
                best = degs[k - 1]
    return best


@dataclass(frozen=True)
class ChainCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    Delta: Fraction
    Delta2: Optional[Fraction]
    Delta_n_minus_1: Optional[Fraction]
    D: Fraction
    D2: Optional[Fraction]
    Lambda: Optional[Fraction]
    LambdaTilde: Optional[Fraction]
    checks: tuple[ChainCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def inequality_chain(g: WeightedMultigraph, brute_cap: int = 10) -> InvariantReport:
    """Compute the invariants and evaluate every comparison in the chain.

    The exponential quantities (LambdaTilde by exhaustion, D_2) are skipped on
    graphs above `brute_cap` vertices; their comparisons are then omitted.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    Delta = max_degree(g)
    D = degeneracy(g)
    Delta2 = delta_k(g, 2) if g.n >= 2 else None
    Dn1 = delta_k(g, g.n - 1) if g.n >= 3 else (Delta if g.n == 2 else None)
    Lam = maxmaxflow(g) if g.n >= 2 else None
    small = g.n <= brute_cap
    LamT = lambda_tilde_bruteforce(g, cap=brute_cap) if (g.n >= 2 and small) else None
    D2 = degeneracy_k(g, 2, cap=brute_cap) if (g.n >= 2 and small) else None

    checks: list[ChainCheck] = []
    if Lam is not None:
        checks.append(ChainCheck("D<=Lambda", D, Lam))
        checks.append(ChainCheck("Lambda<=Delta2", Lam, Delta2))
        checks.append(ChainCheck("Delta2<=Delta", Delta2, Delta))
        if LamT is not None:
            checks.append(ChainCheck("Lambda<=LambdaTilde", Lam, LamT))
            checks.append(ChainCheck("LambdaTilde<=Lambda", LamT, Lam))
        if D2 is not None:
            checks.append(ChainCheck("D2<=Lambda", D2, Lam))
            checks.append(ChainCheck("D<=D2", D, D2))
            if Dn1 is not None:
                checks.append(ChainCheck("Delta_{n-1}<=D2", Dn1, D2))
    return InvariantReport(
        n=g.n, m=g.m, Delta=Delta, Delta2=Delta2, Delta_n_minus_1=Dn1,
        D=D, D2=D2, Lambda=Lam, LambdaTilde=LamT, checks=tuple(checks),
    )
