"""Hardness-side constructions for 4-uniform cardinality-based cuts.

* MaxCut gadgets for w = (1, w_2) with w_2 < 1 and with w_2 > 2.
* Instances on which projecting the penalties loses exactly the ratio.
* Closed-form inapproximability constants inherited from MaxCut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Hypergraph, SplittingVector
from .errors import InvalidInstanceError, ParameterError, SizeLimitError

REGIMES = ("w2_lt_1", "w2_gt_2")
MAXCUT_LIMIT = 24


@dataclass(frozen=True)
class MaxCutInstance:
    node_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, node_count: int, edges):
        clean = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidInstanceError(f"self-loop at {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InvalidInstanceError(f"edge ({u}, {v}) out of range")
            clean.append((min(u, v), max(u, v)))
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "edges", tuple(clean))

    @property
    def m(self) -> int:
        return len(self.edges)

    def cut_size(self, side) -> int:
        return sum(1 for u, v in self.edges if side[u] != side[v])


def max_cut(g: MaxCutInstance) -> tuple[int, tuple[int, ...]]:
    """Exhaustive maximum cut (node 0 fixed on side 0); returns (k*, sides)."""
    if g.node_count > MAXCUT_LIMIT:
        raise SizeLimitError(f"MaxCut enumeration limited to {MAXCUT_LIMIT} nodes")
    if g.node_count == 0:
        return 0, ()
    best = (-1, ())
    for rest in itertools.product((0, 1), repeat=g.node_count - 1):
        side = (0, *rest)
        k = g.cut_size(side)
        if k > best[0]:
            best = (k, side)
    return best


def _check_regime(regime: str, w2: Fraction) -> None:
    if regime == "w2_lt_1":
        if not 0 < w2 < 1:
            raise ParameterError("regime w2_lt_1 needs 0 < w_2 < 1")
    elif regime == "w2_gt_2":
        if not w2 > 2:
            raise ParameterError("regime w2_gt_2 needs w_2 > 2")
    else:
        raise ParameterError(f"unknown regime {regime!r}")


def reduce_maxcut(g: MaxCutInstance, regime: str, w2) -> tuple[Hypergraph, SplittingVector]:
    """Hypergraph whose minimum cut encodes the maximum cut of ``g``.

    Layout: node 0 is s, graph node v becomes v + 1, then t, then (for
    ``w2_gt_2``) two fresh nodes per edge.  With ``k`` edges cut the cut
    value is ``k w_2 + (m - k)`` for ``w2_lt_1`` and ``2k + (m - k) w_2`` for
    ``w2_gt_2``.
    """
    w2 = Fraction(w2)
    _check_regime(regime, w2)
    n = g.node_count
    s, t = 0, n + 1
    hyperedges, edges = [], []
    nxt = n + 2
    for u, v in g.edges:
        a, b = u + 1, v + 1
        if regime == "w2_lt_1":
            hyperedges.append(((a, b, s, t), 1))
        else:
            x, y = nxt, nxt + 1
            nxt += 2
            hyperedges.append(((a, b, s, x), 1))
            hyperedges.append(((a, b, t, y), 1))
            edges.append((s, x, 2 * w2))
            edges.append((t, y, 2 * w2))
    return Hypergraph(nxt, s, t, 4, hyperedges, edges), SplittingVector([0, 1, w2], 4)


def maxcut_cut_value(regime: str, w2, m: int, k: int) -> Fraction:
    w2 = Fraction(w2)
    if regime == "w2_lt_1":
        return k * w2 + (m - k)
    return 2 * k + (m - k) * w2


def tight_instance(r: int, i: int, w: SplittingVector, pin_weight=None) -> tuple[Hypergraph, frozenset[int]]:
    """One hyperedge ``(s, u_1..u_{r-1})`` split exactly ``(i, r - i)`` by heavy pins.

    Pairwise edges of weight ``10 r max_j w_j`` tie ``u_1..u_{i-1}`` to s and
    the remaining ``u`` to t, so the forced side ``{s, u_1..u_{i-1}}`` is the
    only cheap cut.  Nodes: s = 0, ``u_j = j``, t = r.
    """
    q = r // 2
    if w.r != r:
        raise ParameterError(f"splitting vector is for r={w.r}, not r={r}")
    if not 1 <= i <= q:
        raise ParameterError(f"i must lie in 1..{q}")
    s, t = 0, r
    pin = Fraction(pin_weight) if pin_weight is not None else 10 * r * max(w.w)
    if pin <= 0:
        pin = Fraction(1)
    edges = [(s, j, pin) for j in range(1, i)] + [(j, t, pin) for j in range(i, r)]
    h = Hypergraph(r + 1, s, t, r, [(tuple(range(r)), 1)], edges)
    return h, frozenset(range(i))


def apx_lower_bound(w2) -> Fraction | None:
    """MaxCut-derived inapproximability factor for w = (1, w_2); None on the submodular range."""
    w2 = Fraction(w2)
    if w2 <= 0:
        raise ParameterError("w_2 must be positive")
    if w2 > 2:
        return 1 + (w2 - 2) / (17 * w2 + 34)
    if w2 < 1:
        return 1 + (1 - w2) / (17 * (1 + w2))
    return None
