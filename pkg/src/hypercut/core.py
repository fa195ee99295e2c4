"""Hypergraphs with cardinality-based splitting penalties and their cut objective.

A :class:`Hypergraph` is r-uniform, optionally carries weighted pairwise
edges, and names two terminals ``s`` and ``t``.  A :class:`SplittingVector`
holds the penalties ``w_0 = 0, w_1, ..., w_q`` with ``q = r // 2``; a hyperedge
with ``i`` nodes on the smaller side of a bipartition costs ``weight * w_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import EmbeddingError, InvalidInstanceError, TerminalPlacementError
from .numbers import to_fraction


class Hyperedge(NamedTuple):
    nodes: tuple[int, ...]
    weight: Fraction


class Edge(NamedTuple):
    u: int
    v: int
    weight: Fraction


@dataclass(frozen=True)
class SplittingVector:
    """Penalties ``w[0..q]`` for r-node hyperedges, ``w[0] == 0``.

    ``r`` defaults to ``2 * q`` when omitted.
    """

    w: tuple[Fraction, ...]
    r: int = 0

    def __init__(self, w: Iterable, r: int | None = None):
        values = tuple(to_fraction(x) for x in w)
        if not values:
            raise InvalidInstanceError("splitting vector needs at least w_0")
        q = len(values) - 1
        if r is None or r == 0:
            r = max(2 * q, 2)
        if r < 2:
            raise InvalidInstanceError(f"hyperedge size must be >= 2, got {r}")
        if r // 2 != q:
            raise InvalidInstanceError(
                f"r={r} needs {r // 2 + 1} penalties w_0..w_{r // 2}, got {len(values)}")
        if values[0] != 0:
            raise InvalidInstanceError("w_0 must be 0")
        if any(x < 0 for x in values):
            raise InvalidInstanceError("splitting penalties must be nonnegative")
        object.__setattr__(self, "w", values)
        object.__setattr__(self, "r", r)

    @classmethod
    def from_penalties(cls, penalties: Iterable, r: int | None = None) -> "SplittingVector":
        """Build from ``w_1..w_q`` (``w_0 = 0`` is prepended)."""
        return cls([0, *penalties], r)

    @property
    def q(self) -> int:
        return len(self.w) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.w[i]

    def __len__(self) -> int:
        return len(self.w)

    def penalty(self, k: int, size: int | None = None) -> Fraction:
        """Penalty of an edge of ``size`` nodes with ``k`` of them on one side."""
        size = self.r if size is None else size
        return self.w[min(k, size - k)]

    def scaled(self, c) -> "SplittingVector":
        c = to_fraction(c)
        return SplittingVector([c * x for x in self.w], self.r)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.w)


@dataclass(frozen=True)
class Hypergraph:
    node_count: int
    s: int
    t: int
    r: int
    hyperedges: tuple[Hyperedge, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __init__(self, node_count: int, s: int, t: int, r: int,
                 hyperedges: Iterable = (), edges: Iterable = ()):
        if node_count < 2:
            raise InvalidInstanceError("a hypergraph needs at least the two terminals")
        if not (0 <= s < node_count and 0 <= t < node_count):
            raise InvalidInstanceError("terminal index out of range")
        if s == t:
            raise InvalidInstanceError("s and t must be distinct")
        if r < 2:
            raise InvalidInstanceError(f"hyperedge size must be >= 2, got {r}")
        hes = []
        for item in hyperedges:
            nodes, weight = item
            nodes = tuple(sorted(int(v) for v in nodes))
            weight = to_fraction(weight)
            if len(nodes) != r or len(set(nodes)) != r:
                raise InvalidInstanceError(f"hyperedge {nodes} must have {r} distinct nodes")
            if nodes[0] < 0 or nodes[-1] >= node_count:
                raise InvalidInstanceError(f"hyperedge {nodes} has a node out of range")
            if weight < 0:
                raise InvalidInstanceError("hyperedge weights must be nonnegative")
            hes.append(Hyperedge(nodes, weight))
        es = []
        for item in edges:
            u, v, weight = item
            u, v = sorted((int(u), int(v)))
            weight = to_fraction(weight)
            if u == v:
                raise InvalidInstanceError(f"edge ({u}, {v}) is a self-loop")
            if u < 0 or v >= node_count:
                raise InvalidInstanceError(f"edge ({u}, {v}) has a node out of range")
            if weight < 0:
                raise InvalidInstanceError("edge weights must be nonnegative")
            es.append(Edge(u, v, weight))
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "hyperedges", tuple(hes))
        object.__setattr__(self, "edges", tuple(es))

    @property
    def free_nodes(self) -> list[int]:
        return [v for v in range(self.node_count) if v not in (self.s, self.t)]

    def with_terminals_swapped(self) -> "Hypergraph":
        return Hypergraph(self.node_count, self.t, self.s, self.r, self.hyperedges, self.edges)

    def scaled(self, c) -> "Hypergraph":
        c = to_fraction(c)
        return Hypergraph(self.node_count, self.s, self.t, self.r,
                          [(e.nodes, c * e.weight) for e in self.hyperedges],
                          [(e.u, e.v, c * e.weight) for e in self.edges])


@dataclass(frozen=True)
class CutSolution:
    """A bipartition given by ``membership[v]`` (True means v is on the s side)."""

    membership: tuple[bool, ...]
    value: Fraction
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def source_side(self) -> frozenset[int]:
        return frozenset(v for v, m in enumerate(self.membership) if m)

    def bitstring(self) -> str:
        return "".join("1" if m else "0" for m in self.membership)


def membership_of(h: Hypergraph, S: Iterable[int]) -> tuple[bool, ...]:
    S = set(S)
    if h.s not in S or h.t in S:
        raise TerminalPlacementError("S must contain s and exclude t")
    if any(v < 0 or v >= h.node_count for v in S):
        raise InvalidInstanceError("S contains a node outside the hypergraph")
    return tuple(v in S for v in range(h.node_count))


def _check_compatible(h: Hypergraph, w: SplittingVector) -> None:
    if w.q != h.r // 2:
        raise InvalidInstanceError(
            f"splitting vector has q={w.q} but hyperedges have r={h.r}")


def evaluate_cut(h: Hypergraph, w: SplittingVector, S: Iterable[int]) -> Fraction:
    """Exact objective ``sum_i w_i W(dS_i) + cut_E(S)`` for the set S."""
    _check_compatible(h, w)
    side = membership_of(h, S)
    total = Fraction(0)
    for e in h.hyperedges:
        k = sum(side[v] for v in e.nodes)
        total += e.weight * w.penalty(k, h.r)
    for e in h.edges:
        if side[e.u] != side[e.v]:
            total += e.weight
    return total


def solution_from_set(h: Hypergraph, w: SplittingVector, S: Iterable[int], **extras) -> CutSolution:
    S = set(S)
    return CutSolution(membership_of(h, S), evaluate_cut(h, w, S), dict(extras))


def embed_edges_as_hyperedges(h: Hypergraph, w: SplittingVector) -> Hypergraph:
    """Replace every pairwise edge by an r-node hyperedge on fresh padding nodes.

    An edge ``(x, y)`` of weight ``c`` becomes ``(x, y, a_1, ..., a_{r-2})``
    where the ``a_j`` are new nodes appended after the existing ones.  The
    weight is ``c / m`` with ``m = min(w_1..w_q)``: with the padding placed
    optimally a split edge then costs exactly ``c`` and an unsplit one costs
    nothing, so minimum cuts coincide.  When ``w_1`` is the smallest penalty
    this is the familiar ``c / w_1`` scaling.
    """
    if not h.edges:
        return h
    _check_compatible(h, w)
    smallest = min(w.w[1:])
    if smallest == 0:
        raise EmbeddingError("a zero penalty makes pairwise edges free after embedding")
    hyperedges = list(h.hyperedges)
    n = h.node_count
    for e in h.edges:
        pad = list(range(n, n + h.r - 2))
        n += h.r - 2
        hyperedges.append(((e.u, e.v, *pad), e.weight / smallest))
    return Hypergraph(n, h.s, h.t, h.r, hyperedges)


def all_or_nothing(r: int) -> SplittingVector:
    """Unit penalty for every cut split (the classic hypergraph cut)."""
    return SplittingVector([0] + [1] * (r // 2), r)
