"""Minimum s-t cut solvers: exhaustive search, gadget reduction to max flow,
and project-then-solve for non-submodular penalties.

Ties between optimal cuts are broken towards the lexicographically smallest
membership vector (nodes in index order, s side = True).  The flow solver
gets this for free: the residual-reachable side is contained in every
minimum cut's source side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import CutSolution, Hypergraph, SplittingVector, evaluate_cut, solution_from_set
from .errors import RegimeError, SizeLimitError
from .flow import max_flow_min_cut
from .numbers import RatioValue, format_rational
from .projection import plc_project
from .regime import Regime, RegimeTag, classify, is_submodular

BRUTE_FORCE_LIMIT = 24
MODES = ("auto", "brute", "flow", "approx")
_CHUNK = 1 << 15


def _check(h: Hypergraph, w: SplittingVector) -> None:
    if w.q != h.r // 2:
        raise ValueError(f"splitting vector has q={w.q} but hyperedges have r={h.r}")


# ---------------------------------------------------------------------------
# exhaustive oracle


def brute_force_min_cut(h: Hypergraph, w: SplittingVector, limit: int = BRUTE_FORCE_LIMIT) -> CutSolution:
    """Exact minimum by enumeration, returning the lexicographically smallest minimiser.

    Costs are scaled to integers and evaluated with numpy in chunks.  Free
    nodes that share no hyperedge or edge with each other ("private" nodes,
    such as padding added by reductions) are minimised out in closed form, so
    only the remaining nodes are enumerated and ``limit`` applies to those.
    """
    _check(h, w)
    free = h.free_nodes
    nf = len(free)
    pos = {v: k for k, v in enumerate(free)}

    # every term: (free positions, number of s among its nodes, cost by s-side count)
    raw = [(e.nodes, [e.weight * w.penalty(k, h.r) for k in range(h.r + 1)]) for e in h.hyperedges]
    raw += [((e.u, e.v), [Fraction(0), e.weight, Fraction(0)]) for e in h.edges]
    values = [x for _, tbl in raw for x in tbl]
    scale = math.lcm(*(x.denominator for x in values)) if values else 1
    total = sum((max(tbl) for _, tbl in raw), Fraction(0))
    dtype = np.int64 if total * scale < 2 ** 62 else object
    terms = []
    for nodes, tbl in raw:
        idx = tuple(pos[v] for v in nodes if v in pos)
        terms.append((idx, int(h.s in nodes), np.array([int(x * scale) for x in tbl], dtype=dtype)))

    private = _private_nodes(nf, terms)
    if nf - len(private) > limit:
        raise SizeLimitError(
            f"{nf - len(private)} free nodes to enumerate exceed the brute-force limit of {limit}")
    best, assignment = _enumerate(nf, terms, private, {}, dtype)
    if private:
        # the closed-form minimisation does not respect lexicographic order
        # (``assignment`` always satisfies the fixes made so far)
        fixed: dict[int, int] = {}
        for k in range(nf):
            fixed[k] = 0
            if assignment[k]:
                value, cand = _enumerate(nf, terms, private - set(fixed), fixed, dtype)
                if value == best:
                    assignment = cand
                else:
                    fixed[k] = 1
    S = {h.s} | {free[k] for k in range(nf) if assignment[k]}
    sol = solution_from_set(h, w, S, method="brute")
    if sol.value * scale != best:  # pragma: no cover - internal consistency
        raise AssertionError("brute-force bookkeeping mismatch")
    return sol


def _private_nodes(nf: int, terms) -> set[int]:
    """Greedy set of free positions no two of which share a term."""
    touching: list[list[int]] = [[] for _ in range(nf)]
    for ti, (idx, _, _) in enumerate(terms):
        for k in idx:
            touching[k].append(ti)
    chosen: set[int] = set()
    used_terms: set[int] = set()
    for k in sorted(range(nf), key=lambda k: (len(touching[k]), -k)):
        if not used_terms.intersection(touching[k]):
            chosen.add(k)
            used_terms.update(touching[k])
    return chosen if nf > 12 else set()


def _enumerate(nf: int, terms, private: set[int], fixed: dict[int, int], dtype):
    """Minimum integer cost and first minimiser over the enumerated positions."""
    enum = [k for k in range(nf) if k not in private and k not in fixed]
    priv = sorted(private)
    own = {k: [] for k in priv}
    shared = []
    for term in terms:
        hit = [k for k in term[0] if k in own]
        if hit:
            own[hit[0]].append(term)
        else:
            shared.append(term)
    ne = len(enum)
    shifts = np.arange(ne - 1, -1, -1, dtype=np.int64)
    best_cost, best_bits = None, None
    count = 1 << ne
    for lo in range(0, count, _CHUNK):
        masks = np.arange(lo, min(count, lo + _CHUNK), dtype=np.int64)
        bits = np.zeros((masks.size, nf), dtype=np.int64)
        for k, b in fixed.items():
            bits[:, k] = b
        if ne:
            bits[:, enum] = (masks[:, None] >> shifts[None, :]) & 1
        cost = np.zeros(masks.size, dtype=dtype)
        for idx, s_count, table in shared:
            cost = cost + table[bits[:, list(idx)].sum(axis=1) + s_count]
        for k in priv:
            side = []
            for b in (0, 1):
                bits[:, k] = b
                c = np.zeros(masks.size, dtype=dtype)
                for idx, s_count, table in own[k]:
                    c = c + table[bits[:, list(idx)].sum(axis=1) + s_count]
                side.append(c)
            take_one = side[1] < side[0]
            bits[:, k] = take_one
            cost = cost + np.where(take_one, side[1], side[0])
        j = int(np.argmin(cost))
        if best_cost is None or cost[j] < best_cost:
            best_cost, best_bits = cost[j], bits[j].tolist()
    return int(best_cost), best_bits


# ---------------------------------------------------------------------------
# gadget reduction


def concave_decomposition(w: SplittingVector) -> list[Fraction]:
    """Coefficients ``lam_1..lam_q >= 0`` with ``w_i = sum_b lam_b min(i, b)``."""
    if not is_submodular(w):
        raise RegimeError(f"{classify(w)}: gadget reduction needs submodular penalties")
    q = w.q
    lam = []
    for b in range(1, q):
        lam.append((w[b] - w[b - 1]) - (w[b + 1] - w[b]))
    if q >= 1:
        lam.append(w[q] - w[q - 1])
    return lam


@dataclass
class ReductionGraph:
    """Directed graph whose minimum s-t cut solves the hypergraph cut problem.

    Nodes ``0..original_count-1`` are the hypergraph's nodes; each gadget
    ``(hyperedge index, b)`` owns two further nodes listed in ``gadgets``.
    """

    node_count: int
    original_count: int
    s: int
    t: int
    arcs: list[tuple[int, int, Fraction]] = field(default_factory=list)
    gadgets: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)


def build_reduction_graph(h: Hypergraph, w: SplittingVector) -> ReductionGraph:
    """Per hyperedge and positive ``lam_b``, a gadget with penalty ``a min(k, r-k, b)``.

    With ``a = weight * lam_b``: arcs ``v -> e1`` and ``e2 -> v`` of capacity
    ``a`` for each node v of the hyperedge, and ``e1 -> e2`` of capacity ``a b``.
    """
    _check(h, w)
    lam = concave_decomposition(w)
    g = ReductionGraph(h.node_count, h.node_count, h.s, h.t)
    n = h.node_count
    for idx, e in enumerate(h.hyperedges):
        if e.weight == 0:
            continue
        for b, lb in enumerate(lam, start=1):
            if lb == 0:
                continue
            a = e.weight * lb
            e1, e2 = n, n + 1
            n += 2
            g.gadgets[idx, b] = (e1, e2)
            for v in e.nodes:
                g.arcs.append((v, e1, a))
                g.arcs.append((e2, v, a))
            g.arcs.append((e1, e2, a * b))
    for e in h.edges:
        g.arcs.append((e.u, e.v, e.weight))
        g.arcs.append((e.v, e.u, e.weight))
    g.node_count = n
    return g


def min_cut_via_flow(g: ReductionGraph) -> tuple[Fraction, frozenset[int]]:
    """Max-flow value and the minimal source side restricted to original nodes."""
    value, side = max_flow_min_cut(g.node_count, g.arcs, g.s, g.t)
    return value, frozenset(v for v in side if v < g.original_count)


def flow_min_cut(h: Hypergraph, w: SplittingVector) -> CutSolution:
    g = build_reduction_graph(h, w)
    value, S = min_cut_via_flow(g)
    sol = solution_from_set(h, w, S, method="flow", flow_value=value)
    if sol.value != value:  # pragma: no cover - would indicate a reduction bug
        raise AssertionError(f"flow value {value} != cut value {sol.value}")
    return sol


# ---------------------------------------------------------------------------
# dispatch


@dataclass(frozen=True)
class Certificate:
    regime: Regime
    method: str
    rho: RatioValue = Fraction(1)
    w_hat: SplittingVector | None = None
    projected_value: Fraction | None = None

    @property
    def opt_lower_bound(self) -> Fraction | None:
        if self.projected_value is None:
            return None
        return self.projected_value / self.rho

    def bound_line(self, value: Fraction) -> str:
        return f"{format_rational(value)} ≤ {format_rational(self.rho)} · OPT"


def solve(h: Hypergraph, w: SplittingVector, mode: str = "auto") -> tuple[CutSolution, Certificate]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    _check(h, w)
    regime = classify(w)
    if mode == "brute":
        return brute_force_min_cut(h, w), Certificate(regime, "brute")
    if mode == "flow":
        if regime.tag is not RegimeTag.SUBMODULAR:
            raise RegimeError(f"{regime}: exact flow solving needs submodular penalties")
        return flow_min_cut(h, w), Certificate(regime, "flow")
    if mode == "approx":
        return _approx(h, w, regime)
    if regime.tag is RegimeTag.DEGENERATE:
        return _degenerate(h, w, regime)
    if regime.tag is RegimeTag.SUBMODULAR:
        return flow_min_cut(h, w), Certificate(regime, "flow")
    return _approx(h, w, regime)


def _degenerate(h: Hypergraph, w: SplittingVector, regime: Regime):
    sol = solution_from_set(h, w, {h.s}, method="trivial")
    if sol.value == 0:
        return sol, Certificate(regime, "trivial")
    # pairwise edges at s still cost something; fall back to exhaustive search
    if len(h.free_nodes) <= BRUTE_FORCE_LIMIT:
        return brute_force_min_cut(h, w), Certificate(regime, "brute")
    raise RegimeError(f"{regime}: S = {{s}} cuts pairwise edges and the instance is too large to enumerate")


def _approx(h: Hypergraph, w: SplittingVector, regime: Regime):
    proj = plc_project(w)
    g = build_reduction_graph(h, proj.w_hat)
    projected, S = min_cut_via_flow(g)
    sol = solution_from_set(h, w, S, method="approx", projected_value=projected)
    cert = Certificate(regime, "approx", proj.rho, proj.w_hat, projected)
    return sol, cert
