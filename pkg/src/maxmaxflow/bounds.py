"""Series bounds, combinatorial coefficient identities and conjecture hunts.

Every inequality is checked on truncated series.  All family weights are
nonnegative, so a truncated sum is a certified lower bound on the full
series: a truncation exceeding the claimed bound is a genuine violation,
while agreement only certifies consistency up to the truncation order.
Comparisons against irrational discounts go through certified rational
interval enclosures.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .counting import (
    CountSeries,
    class_count_series,
    class_spec,
    saw_counts,
    fpw_counts,
    two_connected_through_edge_series,
    walk_total_counts,
)
from .flowcut import max_flow, maxmaxflow
from .graph import WeightedMultigraph, k2_multi, random_multigraph, star_graph, star_multi
from .intervals import Interval, UndecidedComparison, log_interval
from .invariants import max_degree

VIOLATION = "VIOLATION"
CONSISTENT = "CONSISTENT_UP_TO_M"
EQUALITY = "EQUALITY_AT_M"

_LOG_TOL = Fraction(1, 2**300)


# -- the coefficient families ---------------------------------------------


def C_mk(m: int, k) -> Fraction:
    """Weighted count bound coefficient: k (m+k)^(m-1) / m!, with C(m,0)=[m=0]."""
    if m < 0:
        raise ValueError("m must be >= 0")
    k = Fraction(k)
    if k == 0:
        return Fraction(int(m == 0))
    return k * (m + k) ** (m - 1) / math.factorial(m)


def B_mk(m: int, k) -> Fraction:
    """Doubled variant: 2^m C(m, (k-1)/2) = (k-1)(2m+k-1)^(m-1)/m!."""
    if m < 0:
        raise ValueError("m must be >= 0")
    k = Fraction(k)
    return 2**m * C_mk(m, (k - 1) / 2)


def _series_mul(a: list[Fraction], b: list[Fraction], M: int) -> list[Fraction]:
    out = [Fraction(0)] * (M + 1)
    for i, ai in enumerate(a[: M + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: M + 1 - i]):
            out[i + j] += ai * bj
    return out


def _series_exp(a: list[Fraction], M: int) -> list[Fraction]:
    if a[0] != 0:
        raise ValueError("exp of a series needs zero constant term")
    out = [Fraction(1)] + [Fraction(0)] * M
    term = [Fraction(1)] + [Fraction(0)] * M
    for j in range(1, M + 1):
        term = [t / j for t in _series_mul(term, a, M)]
        out = [x + y for x, y in zip(out, term)]
    return out


def tree_series(M: int) -> list[Fraction]:
    """Coefficients of the power series y(z) solving y = exp(z*y).

    Solved by fixed-point iteration from the functional equation, so the
    coefficients come out independently of the closed form C(m,1).
    """
    s = [Fraction(0)] * (M + 2)  # s = z*y, satisfies s = z * exp(s)
    for _ in range(M + 2):
        e = _series_exp(s[: M + 2], M + 1)
        s = [Fraction(0)] + e[: M + 1]
    return s[1 : M + 2]  # y_m = coefficient of z^m in s/z


def series_power_coefficients(k: int, M: int) -> list[Fraction]:
    """Coefficients of y(z)^k where y = exp(z*y); these must equal C(m,k)."""
    if k < 1:
        raise ValueError("k >= 1 required")
    y = tree_series(M)
    out = [Fraction(1)] + [Fraction(0)] * M
    for _ in range(k):
        out = _series_mul(out, y, M)
    return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: tuple
    ok: bool


def verify_identities(M: int = 12, kmax: int = 8) -> list[IdentityCheck]:
    """Exercise the convolution and shift identities of C and B exactly."""
    out: list[IdentityCheck] = []
    zs = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    for m in range(M + 1):
        for k1 in range(0, kmax + 1):
            for k2 in range(0, kmax + 1):
                lhs = sum(C_mk(i, k1) * C_mk(m - i, k2) for i in range(m + 1))
                out.append(
                    IdentityCheck("C-convolution", (m, k1, k2), lhs == C_mk(m, k1 + k2))
                )
        for k in range(0, kmax + 1):
            for z in zs:
                rhs = sum(
                    z**f / math.factorial(f) * C_mk(m - f, Fraction(k) - z + f)
                    for f in range(m + 1)
                )
                out.append(IdentityCheck("C-shift", (m, k, z), C_mk(m, k) == rhs))
        for k1 in range(1, kmax + 1):
            for k2 in range(1, kmax + 1):
                lhs = sum(B_mk(i, k1) * B_mk(m - i, k2) for i in range(m + 1))
                out.append(
                    IdentityCheck("B-convolution", (m, k1, k2), lhs == B_mk(m, k1 + k2 - 1))
                )
        for k in range(1, kmax + 1):
            rhs = sum(
                Fraction(1, math.factorial(f)) * B_mk(m - f, k - 1 + 2 * f)
                for f in range(m + 1)
            )
            out.append(IdentityCheck("B-shift", (m, k), B_mk(m, k) == rhs))
        for k in range(1, kmax + 1):
            out.append(IdentityCheck("B-halving", (m, k), B_mk(m, k) == 2**m * C_mk(m, Fraction(k - 1, 2))))
    return out


# -- verdict machinery ----------------------------------------------------


@dataclass(frozen=True)
class BoundResult:
    bound_id: str
    verdict: str
    M: int
    lhs_lo: Fraction
    lhs_hi: Fraction
    rhs_lo: Fraction
    rhs_hi: Fraction
    exact: bool
    note: str = ""

    @property
    def ratio_upper(self) -> Optional[Fraction]:
        if self.rhs_lo <= 0:
            return None
        return self.lhs_hi / self.rhs_lo


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def _sum_result(bound_id: str, M: int, terms, rhs, note: str = "") -> BoundResult:
    exact = all(isinstance(t, Fraction) for t in terms) and isinstance(rhs, Fraction)
    if exact:
        s = sum(terms, Fraction(0))
        if s > rhs:
            verdict = VIOLATION
        elif s == rhs:
            verdict = EQUALITY
        else:
            verdict = CONSISTENT
        return BoundResult(bound_id, verdict, M, s, s, rhs, rhs, True, note)
    S = Interval.point(0)
    for t in terms:
        S = S + _as_interval(t)
    R = _as_interval(rhs)
    if S.definitely_gt(R):
        verdict = VIOLATION
    elif S.definitely_le(R):
        verdict = CONSISTENT
    else:
        raise UndecidedComparison(
            f"{bound_id}: sum enclosure [{S.lo},{S.hi}] straddles the bound"
        )
    return BoundResult(bound_id, verdict, M, S.lo, S.hi, R.lo, R.hi, False, note)


def _pointwise_result(bound_id: str, M: int, pairs, note: str = "") -> BoundResult:
    """pairs: (a_m, bound_m).  Violation if any term exceeds its bound."""
    worst_lhs = Fraction(0)
    worst_rhs = Fraction(0)
    hit_equality = False
    first = True
    for a, b in pairs:
        A, Bv = _as_interval(a), _as_interval(b)
        if A.definitely_gt(Bv):
            return BoundResult(bound_id, VIOLATION, M, A.lo, A.hi, Bv.lo, Bv.hi, False, note)
        if not A.definitely_le(Bv):
            raise UndecidedComparison(f"{bound_id}: pointwise term undecided")
        if isinstance(a, Fraction) and isinstance(b, Fraction) and a == b and b > 0:
            hit_equality = True
        # report the tightest pair seen
        if first or (Bv.lo - A.hi) < (worst_rhs - worst_lhs):
            worst_lhs, worst_rhs = A.hi, Bv.lo
            first = False
    verdict = EQUALITY if hit_equality else CONSISTENT
    return BoundResult(bound_id, verdict, M, worst_lhs, worst_lhs, worst_rhs, worst_rhs, True, note)


def _discounted(values, base) -> list:
    """Per-term base^-m * a_m; a zero or infinite base keeps only the m=0 term.

    `base` may be a Fraction or an Interval.  When the base is 0 the family
    can have no positive terms beyond m=0 (all edge weights vanish), so the
    remaining terms are dropped after checking they are zero.
    """
    if isinstance(base, Fraction) and base == 0:
        for a in values[1:]:
            if a != 0:
                raise AssertionError("zero discount base with a positive term")
        return [values[0]]
    if isinstance(base, Interval):
        inv = base.reciprocal()
        return [a * (inv**m) if a != 0 else Fraction(0) for m, a in enumerate(values)]
    inv = 1 / base
    return [a * inv**m for m, a in enumerate(values)]


# -- bound evaluation -----------------------------------------------------


class SeriesProvider:
    """Caches the per-family series for one graph and truncation order."""

    def __init__(self, g: WeightedMultigraph, M: int, cap: Optional[int] = None):
        self.g = g
        self.M = M
        self.cap = cap
        self._cache: dict = {}

    def edge_class(self, kind: str, **kw) -> CountSeries:
        spec = class_spec(kind, **kw)
        if spec not in self._cache:
            self._cache[spec] = class_count_series(self.g, spec, self.M, self.cap)
        return self._cache[spec]

    def walk_total(self, x: int) -> CountSeries:
        key = ("walk_total", x)
        if key not in self._cache:
            self._cache[key] = walk_total_counts(self.g, x, self.M)
        return self._cache[key]

    def saw(self, x: int, y: int) -> CountSeries:
        key = ("saw", x, y)
        if key not in self._cache:
            self._cache[key] = saw_counts(self.g, x, y, self.M)
        return self._cache[key]

    def fpw(self, x: int, Y: frozenset[int]) -> CountSeries:
        key = ("fpw", x, Y)
        if key not in self._cache:
            self._cache[key] = fpw_counts(self.g, x, Y, self.M)
        return self._cache[key]

    def through_edge(self, eid: int) -> CountSeries:
        key = ("b_e", eid)
        if key not in self._cache:
            self._cache[key] = two_connected_through_edge_series(self.g, eid, self.M, self.cap)
        return self._cache[key]


@dataclass
class BoundContext:
    g: WeightedMultigraph
    M: int
    X: Optional[frozenset[int]] = None
    Y: Optional[frozenset[int]] = None
    x: Optional[int] = None
    y: Optional[int] = None
    eid: Optional[int] = None
    p: int = 1
    r: int = 1
    alpha: Fraction = Fraction(2)
    provider: Optional[SeriesProvider] = None
    cap: Optional[int] = None

    def __post_init__(self):
        if self.provider is None:
            self.provider = SeriesProvider(self.g, self.M, self.cap)
        if not Fraction(1) < self.alpha <= 2:
            raise ValueError("alpha must lie in (1, 2]")
        self.alpha = Fraction(self.alpha)
        self._memo: dict = {}

    # cached invariants
    def Delta(self) -> Fraction:
        return self._get("Delta", lambda: max_degree(self.g))

    def Lambda(self) -> Fraction:
        return self._get("Lambda", lambda: maxmaxflow(self.g))

    def _get(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def flow_fraction(self) -> Fraction:
        """lambda(x,y)/Lambda for distinct x,y; 1 when x == y."""
        if self.x == self.y:
            return Fraction(1)
        lam = self.Lambda()
        if lam == 0:
            return Fraction(0)
        return max_flow(self.g, self.x, self.y).value / lam

    def hop_distance(self) -> Optional[int]:
        from collections import deque

        if self.x == self.y:
            return 0
        A = {v: set() for v in self.g.vertices}
        for e in self.g.edges:
            A[e.u].add(e.v)
            A[e.v].add(e.u)
        dist = {self.x: 0}
        q = deque([self.x])
        while q:
            u = q.popleft()
            for v in A[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    if v == self.y:
                        return dist[v]
                    q.append(v)
        return None

    def X_disjoint(self) -> frozenset[int]:
        """X with members of Y removed; the classes are unchanged by this."""
        return (self.X or frozenset()) - (self.Y or frozenset())


def _ln2_over(q: Fraction) -> Interval:
    """Enclosure of (ln 2)/q for positive rational q."""
    return log_interval(2, _LOG_TOL) / Interval.point(q)


def _ln_alpha_over(alpha: Fraction, q: Fraction) -> Interval:
    return log_interval(alpha, _LOG_TOL) / Interval.point(q)


def _discount_terms(values, base_kind: str, ctx: BoundContext):
    """Terms a_m * zeta^m for the discount schemes used by the bounds."""
    if base_kind == "Delta":
        return _discounted(values, ctx.Delta())
    if base_kind == "Lambda":
        return _discounted(values, ctx.Lambda())
    if base_kind == "2Lambda":
        return _discounted(values, 2 * ctx.Lambda())
    if base_kind == "Delta/ln2":
        d = ctx.Delta()
        if d == 0:
            return _discounted(values, Fraction(0))
        zeta = _ln2_over(d)
        return [a * zeta**m if a != 0 else Fraction(0) for m, a in enumerate(values)]
    if base_kind == "Lambda/ln2":
        lam = ctx.Lambda()
        if lam == 0:
            return _discounted(values, Fraction(0))
        zeta = _ln2_over(lam)
        return [a * zeta**m if a != 0 else Fraction(0) for m, a in enumerate(values)]
    if base_kind == "2Lambda/ln2":
        lam = ctx.Lambda()
        if lam == 0:
            return _discounted(values, Fraction(0))
        zeta = _ln2_over(2 * lam)
        return [a * zeta**m if a != 0 else Fraction(0) for m, a in enumerate(values)]
    if base_kind == "alphaLambda/lnalpha":
        lam = ctx.Lambda()
        if lam == 0:
            return _discounted(values, Fraction(0))
        zeta = _ln_alpha_over(ctx.alpha, ctx.alpha * lam)
        return [a * zeta**m if a != 0 else Fraction(0) for m, a in enumerate(values)]
    raise ValueError(base_kind)


def _family_series(ctx: BoundContext, which: str) -> tuple[Fraction, ...]:
    P = ctx.provider
    if which == "f":
        return P.edge_class("F", X=ctx.X_disjoint(), Y=ctx.Y).values
    if which == "t":
        return P.edge_class("T", X=ctx.X).values
    if which == "h":
        return P.edge_class("H", X=ctx.X, p=ctx.p, r=ctx.r).values
    if which == "hp":
        return P.edge_class("H", X=ctx.X, p=ctx.p).values
    if which == "h1":
        return P.edge_class("H", X=ctx.X).values
    if which == "c":
        return P.edge_class("C", X=ctx.X).values
    if which == "bt":
        return P.edge_class("BT", X=ctx.X).values
    if which == "bf":
        return P.edge_class("BF", X=ctx.X_disjoint(), Y=ctx.Y).values
    if which == "bfstar":
        return P.edge_class("BFSTAR", X=ctx.X_disjoint(), Y=ctx.Y).values
    if which == "b":
        return P.edge_class("B", X=ctx.X).values
    raise ValueError(which)


def _eval_prop4_1(ctx: BoundContext) -> BoundResult:
    vals = ctx.provider.walk_total(ctx.x).values
    d = ctx.Delta()
    return _pointwise_result("prop4.1", ctx.M, [(a, d**m) for m, a in enumerate(vals)])


def _eval_prop4_2(ctx: BoundContext) -> BoundResult:
    vals = ctx.provider.fpw(ctx.x, ctx.Y).values
    return _sum_result("prop4.2", ctx.M, _discount_terms(vals, "Delta", ctx), Fraction(1))


def _eval_prop4_3(ctx: BoundContext) -> BoundResult:
    vals = ctx.provider.saw(ctx.x, ctx.y).values
    return _sum_result(
        "prop4.3", ctx.M, _discount_terms(vals, "Lambda", ctx), ctx.flow_fraction()
    )


def _eval_cor4_4(ctx: BoundContext) -> BoundResult:
    vals = ctx.provider.saw(ctx.x, ctx.y).values
    lam, F = ctx.Lambda(), ctx.flow_fraction()
    return _pointwise_result(
        "cor4.4", ctx.M, [(a, lam**m * F) for m, a in enumerate(vals)]
    )


def _eval_cor4_5(ctx: BoundContext) -> BoundResult:
    # evaluated at the admissible discount zeta = 1/(2*Lambda)
    vals = ctx.provider.saw(ctx.x, ctx.y).values
    dist = ctx.hop_distance()
    terms = _discount_terms(vals, "2Lambda", ctx)
    if dist is None:
        rhs = Fraction(0)  # unreachable: the whole series vanishes
    else:
        rhs = Fraction(1, 2**dist) * ctx.flow_fraction()
    return _sum_result("cor4.5", ctx.M, terms, rhs, note=f"dist={dist}")


def _eval_prop5_1(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "f")
    return _sum_result("prop5.1", ctx.M, _discount_terms(vals, "Delta", ctx), Fraction(1))


def _eval_prop5_2(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "f")
    k, ysz = len(ctx.X_disjoint()), len(ctx.Y)
    lam = ctx.Lambda()
    base_terms = _discounted(vals, lam)
    terms = [
        t * Fraction(m + ysz) ** (-(k - 1)) for m, t in enumerate(base_terms)
    ]
    return _sum_result("prop5.2", ctx.M, terms, Fraction(ysz))


def _eval_cor5_3(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "t")
    return _sum_result("cor5.3", ctx.M, _discount_terms(vals, "Delta", ctx), Fraction(1))


def _eval_cor5_4(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "t")
    k = len(ctx.X)
    terms = [
        t * Fraction(m + 1) ** (-(k - 2))
        for m, t in enumerate(_discounted(vals, ctx.Lambda()))
    ]
    return _sum_result("cor5.4", ctx.M, terms, Fraction(1))


def _h_bound(k: int, p: int, r: int) -> Fraction:
    return Fraction(1, p ** (r - 1)) * Fraction(1, k - r * p + p) * math.comb(k, r)


def _eval_prop5_8(ctx: BoundContext) -> BoundResult:
    k = len(ctx.X)
    if k < ctx.r * ctx.p:
        raise ValueError("prop5.8 needs |X| >= r*p")
    vals = _family_series(ctx, "h")
    rhs = _h_bound(k, ctx.p, ctx.r)
    return _sum_result("prop5.8", ctx.M, _discount_terms(vals, "Delta", ctx), rhs)


def _eval_cor5_9(ctx: BoundContext) -> BoundResult:
    k = len(ctx.X)
    vals = _family_series(ctx, "hp")
    rhs = sum(
        (_h_bound(k, ctx.p, r) for r in range(1, k // ctx.p + 1)), Fraction(0)
    )
    crude = (1 + Fraction(1, ctx.p)) ** k - 1
    note = f"crude={crude}"
    return _sum_result("cor5.9", ctx.M, _discount_terms(vals, "Delta", ctx), rhs, note)


def _eval_cor5_10(ctx: BoundContext) -> BoundResult:
    k = len(ctx.X)
    vals = _family_series(ctx, "h1")
    rhs = Fraction(2 * (2**k - 1), k + 1)
    return _sum_result("cor5.10", ctx.M, _discount_terms(vals, "Delta", ctx), rhs)


def _eval_prop5_11(ctx: BoundContext) -> BoundResult:
    k = len(ctx.X)
    if k < ctx.r * ctx.p:
        raise ValueError("prop5.11 needs |X| >= r*p")
    vals = _family_series(ctx, "h")
    terms = [
        t * Fraction(m + ctx.r) ** (-(k - 1))
        for m, t in enumerate(_discounted(vals, ctx.Lambda()))
    ]
    rhs = ctx.r * _h_bound(k, ctx.p, ctx.r)
    return _sum_result("prop5.11", ctx.M, terms, rhs)


def _eval_prop6_1(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "c")
    k, d = len(ctx.X), ctx.Delta()
    return _pointwise_result(
        "prop6.1", ctx.M, [(a, C_mk(m, k) * d**m) for m, a in enumerate(vals)]
    )


def _eval_prop7_1(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bf")
    return _sum_result(
        "prop7.1", ctx.M, _discount_terms(vals, "Delta/ln2", ctx), Fraction(1)
    )


def _eval_prop7_2(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bf")
    rhs = ctx.alpha ** (len(ctx.Y) - 1)
    return _sum_result(
        "prop7.2", ctx.M, _discount_terms(vals, "alphaLambda/lnalpha", ctx), rhs
    )


def _eval_cor7_3(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bt")
    return _sum_result(
        "cor7.3", ctx.M, _discount_terms(vals, "Delta/ln2", ctx), Fraction(1)
    )


def _eval_cor7_4(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bt")
    return _sum_result(
        "cor7.4", ctx.M, _discount_terms(vals, "2Lambda/ln2", ctx), Fraction(1)
    )


def _lambda_minus_edge(ctx: BoundContext) -> Fraction:
    g = ctx.g
    rest = [(e.u, e.v, e.w) for e in g.edges if e.id != ctx.eid]
    return maxmaxflow(WeightedMultigraph(g.n, rest))


def _eval_cor7_5(ctx: BoundContext) -> BoundResult:
    """Nonseparable subgraphs through a fixed edge, with the 2*Lambda(G-e)/ln2
    discount.  For edge weights above 2*Lambda(G-e)/ln2 the right side grows
    to w_e*ln2/(2*Lambda(G-e)): that is what the underlying reduction to the
    block-tree bound on G-e actually yields, and the unit bound is provably
    false for such weights."""
    vals = ctx.provider.through_edge(ctx.eid).values
    lam_e = _lambda_minus_edge(ctx)
    w_e = ctx.g.edges[ctx.eid].w
    if lam_e == 0:
        terms = _discounted(vals, Fraction(0))
        return _sum_result("cor7.5", ctx.M, terms, Fraction(1), note="Lambda(G-e)=0")
    zeta = _ln2_over(2 * lam_e)
    terms = [a * zeta**m if a != 0 else Fraction(0) for m, a in enumerate(vals)]
    wz = Interval.point(w_e) * zeta
    rhs = Fraction(1) if wz.definitely_le(Fraction(1)) else wz
    note = "" if isinstance(rhs, Fraction) else "heavy-edge form"
    return _sum_result("cor7.5", ctx.M, terms, rhs, note)


def _eval_prop7_8(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bfstar")
    rhs = ctx.alpha ** (len(ctx.Y) - 1)
    return _sum_result(
        "prop7.8", ctx.M, _discount_terms(vals, "alphaLambda/lnalpha", ctx), rhs
    )


def _eval_prop7_12(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "b")
    k, lam = len(ctx.X), ctx.Lambda()
    return _pointwise_result(
        "prop7.12", ctx.M, [(a, B_mk(m, k) * lam**m) for m, a in enumerate(vals)]
    )


def _eval_cor7_13(ctx: BoundContext) -> BoundResult:
    """Pointwise form of the through-edge bound; same heavy-edge caveat as
    cor7.5, handled by the max(Lambda(G-e), w_e) factor the proof supports."""
    vals = ctx.provider.through_edge(ctx.eid).values
    lam_e = _lambda_minus_edge(ctx)
    w_e = ctx.g.edges[ctx.eid].w
    pairs = []
    for m, a in enumerate(vals):
        if m == 0:
            pairs.append((a, Fraction(0)))
        else:
            pairs.append((a, B_mk(m - 1, 2) * lam_e ** (m - 1) * max(lam_e, w_e)))
    return _pointwise_result("cor7.13", ctx.M, pairs)


def _eval_conj5_6(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "f")
    rhs = Fraction(len(ctx.Y)) ** len(ctx.X_disjoint())
    return _sum_result("conj5.6", ctx.M, _discount_terms(vals, "Lambda", ctx), rhs)


def _eval_conj5_7(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "t")
    return _sum_result("conj5.7", ctx.M, _discount_terms(vals, "Lambda", ctx), Fraction(1))


def _eval_conj7_9(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bf")
    rhs = Fraction(len(ctx.Y)) ** len(ctx.X_disjoint())
    return _sum_result("conj7.9", ctx.M, _discount_terms(vals, "Lambda/ln2", ctx), rhs)


def _eval_conj7_10(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bfstar")
    rhs = Fraction(2) ** len(ctx.Y) - 1
    return _sum_result("conj7.10", ctx.M, _discount_terms(vals, "Lambda/ln2", ctx), rhs)


def _eval_conj7_11(ctx: BoundContext) -> BoundResult:
    vals = _family_series(ctx, "bt")
    return _sum_result("conj7.11", ctx.M, _discount_terms(vals, "Lambda/ln2", ctx), Fraction(1))


# id -> (anchor requirement, evaluator); requirements: subsets of {x,y,X,Y,e}
BOUNDS: dict[str, tuple[frozenset[str], Callable[[BoundContext], BoundResult]]] = {
    "prop4.1": (frozenset({"x"}), _eval_prop4_1),
    "prop4.2": (frozenset({"x", "Y"}), _eval_prop4_2),
    "prop4.3": (frozenset({"x", "y"}), _eval_prop4_3),
    "cor4.4": (frozenset({"x", "y"}), _eval_cor4_4),
    "cor4.5": (frozenset({"x", "y"}), _eval_cor4_5),
    "prop5.1": (frozenset({"Y"}), _eval_prop5_1),
    "prop5.2": (frozenset({"Y"}), _eval_prop5_2),
    "cor5.3": (frozenset({"X"}), _eval_cor5_3),
    "cor5.4": (frozenset({"X"}), _eval_cor5_4),
    "prop5.8": (frozenset({"X"}), _eval_prop5_8),
    "cor5.9": (frozenset({"X"}), _eval_cor5_9),
    "cor5.10": (frozenset({"X"}), _eval_cor5_10),
    "prop5.11": (frozenset({"X"}), _eval_prop5_11),
    "prop6.1": (frozenset({"X"}), _eval_prop6_1),
    "prop7.1": (frozenset({"Y"}), _eval_prop7_1),
    "prop7.2": (frozenset({"Y"}), _eval_prop7_2),
    "cor7.3": (frozenset({"X"}), _eval_cor7_3),
    "cor7.4": (frozenset({"X"}), _eval_cor7_4),
    "cor7.5": (frozenset({"e"}), _eval_cor7_5),
    "prop7.8": (frozenset({"Y"}), _eval_prop7_8),
    "prop7.12": (frozenset({"X"}), _eval_prop7_12),
    "cor7.13": (frozenset({"e"}), _eval_cor7_13),
    "conj5.6": (frozenset({"Y"}), _eval_conj5_6),
    "conj5.7": (frozenset({"X"}), _eval_conj5_7),
    "conj7.9": (frozenset({"Y"}), _eval_conj7_9),
    "conj7.10": (frozenset({"Y"}), _eval_conj7_10),
    "conj7.11": (frozenset({"X"}), _eval_conj7_11),
}


def verify_bound(
    g: WeightedMultigraph,
    bound_id: str,
    M: int,
    X: Optional[Iterable[int]] = None,
    Y: Optional[Iterable[int]] = None,
    x: Optional[int] = None,
    y: Optional[int] = None,
    eid: Optional[int] = None,
    p: int = 1,
    r: int = 1,
    alpha=Fraction(2),
    provider: Optional[SeriesProvider] = None,
    cap: Optional[int] = None,
) -> BoundResult:
    if bound_id not in BOUNDS:
        raise ValueError(f"unknown bound {bound_id!r}; known: {sorted(BOUNDS)}")
    requires, fn = BOUNDS[bound_id]
    ctx = BoundContext(
        g=g, M=M,
        X=frozenset(X) if X is not None else None,
        Y=frozenset(Y) if Y is not None else None,
        x=x, y=y, eid=eid, p=p, r=r, alpha=Fraction(alpha),
        provider=provider, cap=cap,
    )
    have = set()
    if ctx.x is not None:
        have.add("x")
    if ctx.y is not None:
        have.add("y")
    if ctx.X:
        have.add("X")
    if ctx.Y:
        have.add("Y")
    if ctx.eid is not None:
        have.add("e")
    missing = requires - have
    if missing:
        raise ValueError(f"{bound_id} needs anchors {sorted(missing)}")
    return fn(ctx)


def run_suite(
    g: WeightedMultigraph,
    M: int,
    X: Optional[Iterable[int]] = None,
    Y: Optional[Iterable[int]] = None,
    x: Optional[int] = None,
    y: Optional[int] = None,
    eid: Optional[int] = None,
    p: int = 1,
    r: int = 1,
    alpha=Fraction(2),
    cap: Optional[int] = None,
    include_conjectures: bool = False,
) -> list[BoundResult]:
    """Evaluate every applicable bound, sharing the series cache.

    Anchors that were not supplied are filled in from the others where the
    meaning is unambiguous (x from X, y from Y); bounds whose anchors are
    still missing, or which need the graph invariants to exist (Lambda needs
    two vertices), are skipped.
    """
    Xs = frozenset(X) if X is not None else None
    Ys = frozenset(Y) if Y is not None else None
    if x is None and Xs:
        x = min(Xs)
    if y is None and Ys:
        y = min(Ys)
    if y is not None and x == y and Xs and len(Xs) > 1:
        y = min(v for v in Xs if v != x)
    provider = SeriesProvider(g, M, cap)
    out: list[BoundResult] = []
    for bound_id in sorted(BOUNDS):
        if bound_id.startswith("conj") and not include_conjectures:
            continue
        try:
            out.append(
                verify_bound(
                    g, bound_id, M, X=Xs, Y=Ys, x=x, y=y, eid=eid,
                    p=p, r=r, alpha=alpha, provider=provider, cap=cap,
                )
            )
        except ValueError:
            continue
    return out


# -- conjecture hunting ---------------------------------------------------

CONJECTURES = ("conj5.6", "conj5.7", "conj7.9", "conj7.10", "conj7.11")


@dataclass(frozen=True)
class Finding:
    conjecture: str
    trial: int
    family: str
    graph_text: str
    X: tuple[int, ...]
    Y: tuple[int, ...]
    M: int
    verdict: str
    lhs_hi: Fraction
    rhs_lo: Fraction
    ratio: Fraction


def _tight_instance(conjecture: str, rng: random.Random, M: int):
    """A planted member of the families known to approach the bound."""
    if conjecture == "conj5.6":
        rr = rng.randint(2, 5)
        g = star_graph(rr)
        return g, frozenset({1}), frozenset(range(2, rr + 2)), "star"
    if conjecture == "conj5.7":
        # the whole star is the only member, so its size must fit below M
        rr = rng.randint(2, max(2, min(5, M)))
        g = star_graph(rr)
        return g, frozenset(range(2, rr + 2)), None, "star"
    if conjecture in ("conj7.9", "conj7.10"):
        rr = rng.randint(1, 2)
        s = rng.choice([5, 6])
        g = star_multi(rr, s, total=1)
        return g, frozenset({1}), frozenset(range(2, rr + 2)), "star-multi"
    if conjecture == "conj7.11":
        s = rng.choice([5, 6])
        g = k2_multi(s, total=1)
        return g, frozenset({1, 2}), None, "k2-multi"
    raise ValueError(conjecture)


def _random_instance(conjecture: str, rng: random.Random):
    n = rng.randint(3, 6)
    block_kind = conjecture.startswith("conj7")
    g = random_multigraph(
        rng, n,
        p=rng.uniform(0.3, 0.6),
        max_multiplicity=3 if block_kind else 1,
        weights="rational",
    )
    if g.m == 0 or g.m > 8:
        return None
    vs = list(g.vertices)
    needs_Y = conjecture in ("conj5.6", "conj7.9", "conj7.10")
    if needs_Y:
        kx = rng.randint(1, 2)
        ky = rng.randint(1, 2)
        picked = rng.sample(vs, min(kx + ky, len(vs)))
        X = frozenset(picked[:kx])
        Y = frozenset(picked[kx:])
        if not Y:
            return None
        return g, X, Y, "random"
    # singletons give the trivial point mass a_0 = 1 and clutter the
    # leaderboard with exact ties at the bound, so anchor at least two
    kx = rng.randint(2, min(3, len(vs)))
    return g, frozenset(rng.sample(vs, kx)), None, "random"


def hunt(
    conjecture: str,
    trials: int,
    M: int = 4,
    seed: int = 0,
    leaderboard: int = 20,
    cap: Optional[int] = None,
) -> list[Finding]:
    """Seeded random search for violations; returns the near-violation
    leaderboard sorted by descending ratio (ties: fewer edges, then fewer
    vertices).  A planted tightness-family instance is mixed in every tenth
    trial so the known near-extremal graphs compete with the random pool."""
    if conjecture not in CONJECTURES:
        raise ValueError(f"unknown conjecture {conjecture!r}; known: {CONJECTURES}")
    findings: list[Finding] = []
    for trial in range(trials):
        rng = random.Random(f"{seed}:{conjecture}:{trial}")
        if trial % 10 == 0:
            inst = _tight_instance(conjecture, rng, M)
        else:
            inst = _random_instance(conjecture, rng)
        if inst is None:
            continue
        g, X, Y, family = inst
        try:
            res = verify_bound(g, conjecture, M, X=X, Y=Y, cap=cap)
        except ValueError:
            continue
        ratio = res.ratio_upper
        if ratio is None:
            continue
        findings.append(
            Finding(
                conjecture, trial, family, g.serialize(),
                tuple(sorted(X or ())), tuple(sorted(Y or ())),
                M, res.verdict, res.lhs_hi, res.rhs_lo, ratio,
            )
        )
    findings.sort(
        key=lambda f: (-f.ratio, f.graph_text.count("\ne"), len(f.graph_text), f.trial)
    )
    # every violation survives; the rest fill the leaderboard in ratio order
    violations = [f for f in findings if f.verdict == VIOLATION]
    rest = [f for f in findings if f.verdict != VIOLATION][:leaderboard]
    return violations + rest
