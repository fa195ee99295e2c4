"""Basic LP relaxation of generalized hypergraph s-t cut and its integrality gaps.

Every hyperedge ``e`` carries a table ``cost[A]`` over all subsets ``A`` of its
nodes (the part on the s side), encoded as a bitmask over the hyperedge's
sorted node list: bit ``k`` set means the k-th node is in ``A``.  Pairwise
edges become size-2 terms with the not-all-equal table.

Variables are ``x_v_s``, ``x_v_t`` for every node and ``y_e_mask`` for every
term and subset.  Rows:

* ``x_v_s = sum of y_e_A over A containing v`` (every term e, every v in e)
* ``x_v_t = sum of y_e_A over A not containing v``
* ``y_e_A <= 1``
* ``x_v_s + x_v_t = 1``
* ``x_v_s <= 1`` and ``x_v_t <= 1``
* ``x_s_s = 1`` and ``x_t_t = 1``
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import simplex
from .core import Hypergraph, SplittingVector, evaluate_cut
from .errors import InvalidInstanceError, ParameterError, SizeLimitError
from .numbers import INF, RatioValue
from .solvers import brute_force_min_cut

MAX_TERM_SIZE = 6


@dataclass(frozen=True)
class LpTerm:
    nodes: tuple[int, ...]        # sorted
    table: tuple[Fraction, ...]   # cost per subset bitmask
    delta: Fraction


@dataclass
class BasicLpModel:
    node_count: int
    s: int
    t: int
    terms: list[LpTerm]
    names: list[str]
    index: dict[str, int]
    lp: simplex.LinearProgram

    def objective_of(self, values: Mapping[str, Fraction]) -> Fraction:
        return self.lp.value(self.vector(values))

    def vector(self, values: Mapping[str, Fraction]) -> list[Fraction]:
        unknown = set(values) - set(self.index)
        if unknown:
            raise KeyError(f"unknown LP variables: {sorted(unknown)}")
        x = [Fraction(0)] * len(self.names)
        for name, v in values.items():
            x[self.index[name]] = Fraction(v)
        return x


@dataclass
class LpSolution:
    values: dict[str, Fraction]
    objective: Fraction
    pivots: int = 0

    def nonzero(self) -> dict[str, Fraction]:
        return {k: v for k, v in self.values.items() if v}


def subset_mask(nodes: Sequence[int], subset: Iterable[int]) -> int:
    """Bitmask of ``subset`` relative to the sorted node list of a term."""
    pos = {v: k for k, v in enumerate(nodes)}
    mask = 0
    for v in subset:
        if v not in pos:
            raise ValueError(f"node {v} is not in {tuple(nodes)}")
        mask |= 1 << pos[v]
    return mask


def cardinality_table(size: int, w: SplittingVector) -> tuple[Fraction, ...]:
    return tuple(w.penalty(bin(mask).count("1"), size) for mask in range(1 << size))


NAE2_TABLE = (Fraction(0), Fraction(1), Fraction(1), Fraction(0))


def terms_from_hypergraph(h: Hypergraph, w: SplittingVector) -> list[LpTerm]:
    table = cardinality_table(h.r, w)
    terms = [LpTerm(e.nodes, table, e.weight) for e in h.hyperedges]
    terms += [LpTerm((e.u, e.v), NAE2_TABLE, e.weight) for e in h.edges]
    return terms


def x_name(v: int, side: str) -> str:
    return f"x_{v}_{side}"


def y_name(e: int, mask: int) -> str:
    return f"y_{e}_{mask}"


def build_basic_lp(node_count: int, s: int, t: int, terms: Sequence[LpTerm]) -> BasicLpModel:
    """Basic LP for arbitrary per-term subset cost tables."""
    names: list[str] = []
    for v in range(node_count):
        names += [x_name(v, "s"), x_name(v, "t")]
    for ei, term in enumerate(terms):
        k = len(term.nodes)
        if k > MAX_TERM_SIZE:
            raise SizeLimitError(f"term of size {k} exceeds {MAX_TERM_SIZE}")
        if len(term.table) != 1 << k:
            raise InvalidInstanceError(f"term {ei} needs a table of {1 << k} entries")
        if list(term.nodes) != sorted(set(term.nodes)):
            raise InvalidInstanceError(f"term {ei} nodes must be sorted and distinct")
        names += [y_name(ei, m) for m in range(1 << k)]
    index = {n: i for i, n in enumerate(names)}
    objective: dict[int, Fraction] = {}
    for ei, term in enumerate(terms):
        for m, c in enumerate(term.table):
            if c and term.delta:
                objective[index[y_name(ei, m)]] = term.delta * c
    lp = simplex.LinearProgram(len(names), objective, names=names)
    for ei, term in enumerate(terms):
        full = 1 << len(term.nodes)
        for k, v in enumerate(term.nodes):
            row = {index[x_name(v, "s")]: 1}
            row.update({index[y_name(ei, m)]: -1 for m in range(full) if m >> k & 1})
            lp.add(row, simplex.EQ, 0, f"s_marginal_{ei}_{v}")
        for k, v in enumerate(term.nodes):
            row = {index[x_name(v, "t")]: 1}
            row.update({index[y_name(ei, m)]: -1 for m in range(full) if not m >> k & 1})
            lp.add(row, simplex.EQ, 0, f"t_marginal_{ei}_{v}")
    for ei, term in enumerate(terms):
        for m in range(1 << len(term.nodes)):
            lp.add({index[y_name(ei, m)]: 1}, simplex.LE, 1, f"ybox_{ei}_{m}")
    for v in range(node_count):
        lp.add({index[x_name(v, "s")]: 1, index[x_name(v, "t")]: 1}, simplex.EQ, 1, f"sum_{v}")
    for v in range(node_count):
        for side in "st":
            lp.add({index[x_name(v, side)]: 1}, simplex.LE, 1, f"xbox_{v}_{side}")
    lp.add({index[x_name(s, "s")]: 1}, simplex.EQ, 1, "pin_s")
    lp.add({index[x_name(t, "t")]: 1}, simplex.EQ, 1, "pin_t")
    return BasicLpModel(node_count, s, t, list(terms), names, index, lp)


def build_for_hypergraph(h: Hypergraph, w: SplittingVector) -> BasicLpModel:
    return build_basic_lp(h.node_count, h.s, h.t, terms_from_hypergraph(h, w))


def solve_lp(model: BasicLpModel) -> LpSolution:
    res = simplex.solve(model.lp)
    values = dict(zip(model.names, res.x))
    return LpSolution(values, res.objective, res.pivots)


def verify_feasible(model: BasicLpModel, values: Mapping[str, Fraction]) -> list[str]:
    """Names of the rows (and sign conditions) a point violates; empty if feasible."""
    x = model.vector(values)
    bad = [model.names[j] + ">=0" for j, v in enumerate(x) if v < 0]
    bad += [c.name for c in model.lp.constraints if not c.satisfied(x)]
    return bad


def integral_point(model: BasicLpModel, S: Iterable[int]) -> dict[str, Fraction]:
    """The 0/1 LP point induced by the cut with s side ``S``."""
    S = set(S)
    values: dict[str, Fraction] = {}
    for v in range(model.node_count):
        values[x_name(v, "s")] = Fraction(int(v in S))
        values[x_name(v, "t")] = Fraction(int(v not in S))
    for ei, term in enumerate(model.terms):
        values[y_name(ei, subset_mask(term.nodes, [v for v in term.nodes if v in S]))] = Fraction(1)
    return values


# ---------------------------------------------------------------------------
# integrality-gap instances (nodes: 0 = s, 1..4, 5 = t)

S_NODE, T_NODE = 0, 5


@dataclass
class GapInstance:
    kind: str
    w2: Fraction
    hypergraph: Hypergraph
    w: SplittingVector
    point: dict[str, Fraction]
    expected_opt: Fraction
    expected_lp: Fraction
    model: BasicLpModel = field(repr=False, default=None)


def gap_instance(kind: str, w2) -> GapInstance:
    """The two six-node instances whose Basic LP gap equals the projection ratio.

    ``w2_small`` (0 < w_2 < 1): hyperedges {s,t,1,2} of weight 1 and {1,2,3,4}
    of weight 1/w_2 - 1; OPT = 1, LP = w_2.

    ``w2_large`` (w_2 > 2): hyperedges {s,1,2,3} and {t,1,2,4} of weight 1
    plus edges {s,3}, {t,4}, {1,2} of weight 2 w_2; OPT = w_2, LP = 2.

    ``point`` is the fractional LP solution built by hand for the instance.
    """
    w2 = Fraction(w2)
    half = Fraction(1, 2)
    s, t = S_NODE, T_NODE
    w = SplittingVector([0, 1, w2], 4)
    if kind == "w2_small":
        if not 0 < w2 < 1:
            raise ParameterError("w2_small needs 0 < w_2 < 1")
        g, f = (s, t, 1, 2), (1, 2, 3, 4)
        h = Hypergraph(6, s, t, 4, [(g, 1), (f, 1 / w2 - 1)])
        model = build_for_hypergraph(h, w)
        G, F = model.terms[0].nodes, model.terms[1].nodes
        point = {x_name(s, "s"): Fraction(1), x_name(t, "t"): Fraction(1)}
        for v in (1, 2, 3, 4):
            point[x_name(v, "s")] = point[x_name(v, "t")] = half
        point[y_name(1, subset_mask(F, []))] = half
        point[y_name(1, subset_mask(F, F))] = half
        point[y_name(0, subset_mask(G, [s, 1]))] = half
        point[y_name(0, subset_mask(G, [s, 2]))] = half
        return GapInstance(kind, w2, h, w, point, Fraction(1), w2, model)
    if kind == "w2_large":
        if not w2 > 2:
            raise ParameterError("w2_large needs w_2 > 2")
        g, f = (s, 1, 2, 3), (t, 1, 2, 4)
        h = Hypergraph(6, s, t, 4, [(g, 1), (f, 1)],
                       [(s, 3, 2 * w2), (t, 4, 2 * w2), (1, 2, 2 * w2)])
        model = build_for_hypergraph(h, w)
        G, F = model.terms[0].nodes, model.terms[1].nodes
        point = {x_name(s, "s"): Fraction(1), x_name(t, "t"): Fraction(1),
                 x_name(3, "s"): Fraction(1), x_name(4, "t"): Fraction(1)}
        for v in (1, 2):
            point[x_name(v, "s")] = point[x_name(v, "t")] = half
        point[y_name(0, subset_mask(G, [s, 1, 3]))] = half
        point[y_name(0, subset_mask(G, [s, 2, 3]))] = half
        point[y_name(1, subset_mask(F, [1]))] = half
        point[y_name(1, subset_mask(F, [2]))] = half
        # edges {s,3}, {t,4}, {1,2} are terms 2, 3, 4
        point[y_name(2, subset_mask((s, 3), [s, 3]))] = Fraction(1)
        point[y_name(3, subset_mask((4, t), []))] = Fraction(1)
        point[y_name(4, subset_mask((1, 2), [1, 2]))] = half
        point[y_name(4, subset_mask((1, 2), []))] = half
        return GapInstance(kind, w2, h, w, point, w2, Fraction(2), model)
    raise ParameterError(f"unknown gap instance kind {kind!r}")


@dataclass(frozen=True)
class GapReport:
    opt: Fraction
    lp: Fraction
    gap: RatioValue
    anomaly: bool = False


def integrality_gap(h: Hypergraph, w: SplittingVector) -> GapReport:
    """Exhaustive integral optimum over the exact Basic LP optimum."""
    opt = brute_force_min_cut(h, w).value
    lp = solve_lp(build_for_hypergraph(h, w)).objective
    if opt == 0:
        return GapReport(opt, lp, Fraction(1))
    if lp == 0:
        return GapReport(opt, lp, INF, anomaly=True)
    return GapReport(opt, lp, opt / lp)


# ---------------------------------------------------------------------------
# export


def _integer_row(coeffs: Mapping[int, Fraction], rhs: Fraction = Fraction(0)) -> tuple[dict[int, int], int, int]:
    scale = math.lcm(rhs.denominator, *(c.denominator for c in coeffs.values()))
    return {j: int(c * scale) for j, c in coeffs.items()}, int(rhs * scale), scale


def _expr(coeffs: Mapping[int, int], names: Sequence[str]) -> str:
    parts = []
    for j in sorted(coeffs):
        c = coeffs[j]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = names[j] if mag == 1 else f"{mag} {names[j]}"
        parts.append(f"{sign} {term}")
    if not parts:
        return "0 " + names[0]
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def export_lp_format(model: BasicLpModel) -> str:
    """CPLEX LP text.  Rows are scaled to integer coefficients; the objective
    scale factor is given in a comment so optima can be mapped back."""
    names = model.names
    obj, _, obj_scale = _integer_row(model.lp.objective)
    lines = [f"\\ Basic LP relaxation: {len(names)} variables, {len(model.lp.constraints)} rows",
             f"\\ objective multiplied by {obj_scale}",
             "Minimize", f" obj: {_expr(obj, names)}", "Subject To"]
    ops = {simplex.LE: "<=", simplex.GE: ">=", simplex.EQ: "="}
    for c in model.lp.constraints:
        coeffs, rhs, _ = _integer_row(c.coeffs, c.rhs)
        lines.append(f" {c.name}: {_expr(coeffs, names)} {ops[c.sense]} {rhs}")
    lines.append("End")
    return "\n".join(lines) + "\n"
