"""Seeded random instances and splitting vectors."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Hypergraph, SplittingVector
from .regime import is_submodular


def random_rational(rng: random.Random, max_num: int = 8, max_den: int = 4, positive: bool = False) -> Fraction:
    lo = 1 if positive else 0
    return Fraction(rng.randint(lo, max_num), rng.randint(1, max_den))


def random_vector(rng: random.Random, r: int, max_num: int = 12, max_den: int = 5) -> SplittingVector:
    """Arbitrary vector with every penalty positive."""
    return SplittingVector([0] + [random_rational(rng, max_num, max_den, True) for _ in range(r // 2)], r)


def random_submodular_vector(rng: random.Random, r: int) -> SplittingVector:
    """Nondecreasing concave: positive first increment, then shrinking increments."""
    q = r // 2
    incs = sorted((random_rational(rng, 6, 3) for _ in range(q)), reverse=True)
    incs[0] += 1
    total, w = Fraction(0), [Fraction(0)]
    for d in incs:
        total += d
        w.append(total)
    return SplittingVector(w, r)


def random_nonsubmodular_vector(rng: random.Random, r: int) -> SplittingVector:
    if r < 4:
        raise ValueError("every vector with r < 4 is submodular or degenerate")
    while True:
        w = random_vector(rng, r)
        if not is_submodular(w):
            return w


def random_hypergraph(rng: random.Random, n: int, r: int, hyperedges: int, edges: int = 0,
                      max_num: int = 5, max_den: int = 4) -> Hypergraph:
    """Terminals are node 0 (s) and node n - 1 (t)."""
    if n < max(r, 2):
        raise ValueError(f"need at least {max(r, 2)} nodes")
    hes = [(rng.sample(range(n), r), random_rational(rng, max_num, max_den)) for _ in range(hyperedges)]
    es = [(*rng.sample(range(n), 2), random_rational(rng, max_num, max_den)) for _ in range(edges)]
    return Hypergraph(n, 0, n - 1, r, hes, es)
