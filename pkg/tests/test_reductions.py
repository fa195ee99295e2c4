import itertools
from fractions import Fraction as F

import networkx as nx
import pytest

from hypercut.core import SplittingVector, evaluate_cut
from hypercut.errors import ParameterError
from hypercut.projection import plc_project
from hypercut.reductions import (MaxCutInstance, apx_lower_bound, max_cut, maxcut_cut_value, reduce_maxcut,
                                 tight_instance)
from hypercut.solvers import brute_force_min_cut

from oracles import naive_max_cut


def test_triangle_small_w2():
    g = MaxCutInstance(3, [(0, 1), (1, 2), (0, 2)])
    assert max_cut(g)[0] == naive_max_cut(3, g.edges) == 2
    h, w = reduce_maxcut(g, "w2_lt_1", F(1, 2))
    assert brute_force_min_cut(h, w).value == 2


def test_single_edge_large_w2():
    h, w = reduce_maxcut(MaxCutInstance(2, [(0, 1)]), "w2_gt_2", 3)
    assert brute_force_min_cut(h, w).value == 2


def test_empty_graph():
    for regime, w2 in [("w2_lt_1", F(1, 2)), ("w2_gt_2", 3)]:
        h, w = reduce_maxcut(MaxCutInstance(3, []), regime, w2)
        assert brute_force_min_cut(h, w).value == 0


def test_regime_mismatch():
    g = MaxCutInstance(2, [(0, 1)])
    with pytest.raises(ParameterError):
        reduce_maxcut(g, "w2_lt_1", 3)
    with pytest.raises(ParameterError):
        reduce_maxcut(g, "w2_gt_2", F(3, 2))


def test_every_bipartition_has_the_gadget_value():
    g = MaxCutInstance(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    for regime, w2 in [("w2_lt_1", F(1, 3)), ("w2_gt_2", F(7, 2))]:
        h, w = reduce_maxcut(g, regime, w2)
        for side in itertools.product((0, 1), repeat=4):
            S = {h.s} | {v + 1 for v in range(4) if side[v]}
            k = g.cut_size(side)
            if regime == "w2_gt_2":
                # fresh nodes follow their pinned terminal
                S |= {x for x in range(h.node_count) if x > 5 and (x - 6) % 2 == 0}
            assert evaluate_cut(h, w, S) == maxcut_cut_value(regime, w2, g.m, k)


def test_all_graphs_up_to_six_nodes():
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > 6:
            break
        g = MaxCutInstance(G.number_of_nodes(), G.edges())
        k = naive_max_cut(g.node_count, g.edges)
        for regime, w2 in [("w2_lt_1", F(1, 4)), ("w2_gt_2", F(5, 2))]:
            h, w = reduce_maxcut(g, regime, w2)
            sol = brute_force_min_cut(h, w)
            assert sol.value == maxcut_cut_value(regime, w2, g.m, k)
            if regime == "w2_gt_2":
                for e in h.edges:
                    assert sol.membership[e.u] == sol.membership[e.v]


def test_tight_instance_examples():
    w = SplittingVector([0, 1, F(1, 2)])
    h, S = tight_instance(4, 2, w)
    w_hat = plc_project(w).w_hat
    a, b = brute_force_min_cut(h, w), brute_force_min_cut(h, w_hat)
    assert a.source_side == S == b.source_side
    assert b.value / a.value == 2
    h, S = tight_instance(4, 1, w)
    assert S == {0} and brute_force_min_cut(h, w).value == 1


def test_tight_instance_r6():
    w = SplittingVector([0, 1, 2, 5])
    proj = plc_project(w)
    i = max(range(1, 4), key=lambda j: proj.w_hat[j] / w[j])
    h, S = tight_instance(6, i, w)
    a, b = brute_force_min_cut(h, w), brute_force_min_cut(h, proj.w_hat)
    assert a.value * proj.rho == b.value


def test_apx_bound_examples():
    assert apx_lower_bound(3) == 1 + F(1, 85) == F(86, 85)
    assert apx_lower_bound(F(1, 2)) == F(52, 51)
    assert apx_lower_bound(2) is None and apx_lower_bound(1) is None
    with pytest.raises(ParameterError):
        apx_lower_bound(0)


@pytest.mark.parametrize("w2", [F(1, 10), F(1, 2), F(9, 10), F(21, 10), F(3), F(10), F(1000)])
def test_apx_bound_below_projection_ratio(w2):
    assert apx_lower_bound(w2) < plc_project(SplittingVector([0, 1, w2])).rho
    assert apx_lower_bound(w2) < F(18, 17)
