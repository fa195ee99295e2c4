from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hypercut.core import (Hypergraph, SplittingVector, all_or_nothing, embed_edges_as_hyperedges,
                           evaluate_cut, membership_of)
from hypercut.errors import EmbeddingError, InvalidInstanceError, TerminalPlacementError
from hypercut.generate import random_hypergraph, random_vector
from hypercut.solvers import brute_force_min_cut

from oracles import naive_cut, naive_min_cut


def fig6(w2):
    # s = 0, nodes 1..4, t = 5
    return Hypergraph(6, 0, 5, 4, [((0, 5, 1, 2), 1), ((1, 2, 3, 4), 1 / F(w2) - 1)])


def test_fig6_singleton_cut():
    w2 = F(1, 2)
    assert evaluate_cut(fig6(w2), SplittingVector([0, 1, w2]), {0}) == 1


def test_nothing_cut_when_s_is_isolated(rng):
    h = Hypergraph(6, 0, 5, 4, [((1, 2, 3, 5), 2), ((1, 2, 4, 5), 3)], [(1, 5, 1)])
    assert evaluate_cut(h, SplittingVector([0, 1, 3]), {0}) == 0


def test_matches_independent_evaluator(rng):
    w = SplittingVector([0, 1, 3])
    for _ in range(30):
        h = random_hypergraph(rng, 8, 4, 6, 3)
        free = h.free_nodes
        S = {h.s} | {v for v in free if rng.random() < 0.5}
        assert evaluate_cut(h, w, S) == naive_cut(h, w, S)


def test_terminal_placement():
    h = fig6(F(1, 2))
    w = SplittingVector([0, 1, F(1, 2)])
    with pytest.raises(TerminalPlacementError):
        evaluate_cut(h, w, {1, 2})
    with pytest.raises(TerminalPlacementError):
        evaluate_cut(h, w, {0, 5})


def test_invariants_rejected():
    with pytest.raises(InvalidInstanceError):
        SplittingVector([1, 1, 2])
    with pytest.raises(InvalidInstanceError):
        SplittingVector([0, -1, 2])
    with pytest.raises(InvalidInstanceError):
        SplittingVector([0, 1, 2], 6)
    with pytest.raises(InvalidInstanceError):
        Hypergraph(4, 0, 0, 2)
    with pytest.raises(InvalidInstanceError):
        Hypergraph(4, 0, 3, 3, [((0, 1, 1), 1)])
    with pytest.raises(InvalidInstanceError):
        Hypergraph(4, 0, 3, 3, [((0, 1, 4), 1)])
    with pytest.raises(InvalidInstanceError):
        Hypergraph(4, 0, 3, 2, [((0, 1), -1)])


def test_hyperedges_sorted_duplicates_kept():
    h = Hypergraph(5, 0, 4, 3, [((3, 1, 2), 1), ((2, 3, 1), 2)])
    assert [e.nodes for e in h.hyperedges] == [(1, 2, 3), (1, 2, 3)]


def test_odd_r_uses_floor():
    w = SplittingVector([0, 1, 2], 5)
    assert w.q == 2 and w.penalty(3, 5) == 2 and w.penalty(4, 5) == 1


def test_embedding_example():
    h = Hypergraph(4, 0, 3, 4, [((0, 1, 2, 3), 1)], [(1, 2, 2)])
    w = SplittingVector([0, 2, 3])
    h2 = embed_edges_as_hyperedges(h, w)
    assert not h2.edges and h2.node_count == 6
    assert h2.hyperedges[-1] == ((1, 2, 4, 5), F(1))


def test_embedding_identity_without_edges():
    h = fig6(F(1, 2))
    assert embed_edges_as_hyperedges(h, SplittingVector([0, 1, F(1, 2)])) is h


def test_embedding_needs_positive_penalties():
    h = Hypergraph(4, 0, 3, 4, [], [(1, 2, 2)])
    with pytest.raises(EmbeddingError):
        embed_edges_as_hyperedges(h, SplittingVector([0, 0, 1]))


def test_embedding_preserves_min_cut(rng):
    # w = (1, 1/2): the scale uses the smallest penalty
    w = SplittingVector([0, 1, F(1, 2)])
    for _ in range(10):
        h = random_hypergraph(rng, 6, 4, 2, 3)
        h2 = embed_edges_as_hyperedges(h, w)
        assert naive_min_cut(h, w)[0] == brute_force_min_cut(h2, w).value


def test_embedding_agrees_on_every_original_set(rng):
    # with padding placed optimally, each set keeps its value
    w = SplittingVector([0, 1, 2])
    h = random_hypergraph(rng, 6, 4, 2, 3)
    h2 = embed_edges_as_hyperedges(h, w)
    free = h.free_nodes
    for mask in range(1 << len(free)):
        S = {h.s} | {v for k, v in enumerate(free) if mask >> k & 1}
        pad = [v for v in range(h.node_count, h2.node_count)]
        best = min(naive_cut(h2, w, S | {p for j, p in enumerate(pad) if pm >> j & 1})
                   for pm in range(1 << len(pad)))
        assert best == evaluate_cut(h, w, S)


def test_all_equal_penalties_count_crossing_hyperedges(rng):
    h = random_hypergraph(rng, 8, 4, 10)
    S = {0, 1, 2, 3}
    crossing = sum(e.weight for e in h.hyperedges if 0 < len(set(e.nodes) & S) < 4)
    assert evaluate_cut(h, all_or_nothing(4), S) == crossing


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10 ** 6), c=st.fractions(min_value=0, max_value=10))
def test_symmetry_and_scaling(seed, c):
    import random
    rng = random.Random(seed)
    r = rng.choice([3, 4, 5, 6])
    h = random_hypergraph(rng, 9, r, 5, 3)
    w = random_vector(rng, r)
    S = {h.s} | {v for v in h.free_nodes if rng.random() < 0.5}
    comp = set(range(h.node_count)) - S
    assert evaluate_cut(h, w, S) == evaluate_cut(h.with_terminals_swapped(), w, comp)
    assert evaluate_cut(h.scaled(c), w, S) == c * evaluate_cut(h, w, S)


def test_membership_vector():
    h = fig6(F(1, 2))
    assert membership_of(h, {0, 2}) == (True, False, True, False, False, False)
