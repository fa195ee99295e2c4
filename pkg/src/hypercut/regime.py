"""Tractability regimes and the Boolean VCSP view of hypergraph s-t cuts.

Variables of the VCSP are the non-terminal nodes; value 1 puts a node on the
s side.  A hyperedge becomes a constraint whose cost function is ``phi_r``
(no terminal), ``phi_s`` (contains s), ``phi_t`` (contains t) or ``phi_st``
(contains both); pairwise edges become not-all-equal constraints.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import Hypergraph, SplittingVector
from .errors import (ArityError, InvalidInstanceError, SizeLimitError,
                     UnsupportedLanguageError)
from .numbers import to_fraction


class RegimeTag(str, enum.Enum):
    SUBMODULAR = "Submodular"
    DEGENERATE = "Degenerate"
    NON_SUBMODULAR_HARD = "NonSubmodularHard"


@dataclass(frozen=True)
class Regime:
    tag: RegimeTag
    witness: str | None = None

    def __str__(self) -> str:
        if self.witness:
            return f"{self.tag.value} ({self.witness})"
        return self.tag.value


def submodularity_violation(w: SplittingVector) -> str | None:
    """First violated submodularity inequality, or None if all hold.

    Checked in order: ``2w_1 >= w_2``, then ``2w_j >= w_{j-1} + w_{j+1}`` for
    ``j = 2..q-1``, then the monotone chain ``w_2 >= w_1``, ..., ``w_q >= w_{q-1}``
    (``w_1 >= 0`` holds by construction).
    """
    q = w.q
    if q >= 2 and 2 * w[1] < w[2]:
        return "2w_1 < w_2"
    for j in range(2, q):
        if 2 * w[j] < w[j - 1] + w[j + 1]:
            return f"2w_{j} < w_{j - 1} + w_{j + 1}"
    for j in range(1, q):
        if w[j + 1] < w[j]:
            return f"w_{j + 1} < w_{j}"
    return None


def is_submodular(w: SplittingVector) -> bool:
    return submodularity_violation(w) is None


def classify(w: SplittingVector) -> Regime:
    if w.q >= 1 and w[1] == 0:
        return Regime(RegimeTag.DEGENERATE)
    witness = submodularity_violation(w)
    if witness is None:
        return Regime(RegimeTag.SUBMODULAR)
    return Regime(RegimeTag.NON_SUBMODULAR_HARD, witness)


# ---------------------------------------------------------------------------
# cost functions

PHI_KINDS = ("r", "s", "t", "st")
NAE_KINDS = ("nae2", "nae2_s", "nae2_t", "nae2_st")
ALL_KINDS = PHI_KINDS + NAE_KINDS

# number of constant 1s / 0s each kind prepends / appends
_FIXED = {"r": (0, 0), "s": (1, 0), "t": (0, 1), "st": (1, 1)}
_NAE_FIXED = {"nae2": (0, 0), "nae2_s": (1, 0), "nae2_t": (0, 1), "nae2_st": (1, 1)}


def arity(kind: str, r: int) -> int:
    if kind in _FIXED:
        ones, zeros = _FIXED[kind]
        return r - ones - zeros
    if kind in _NAE_FIXED:
        ones, zeros = _NAE_FIXED[kind]
        return 2 - ones - zeros
    raise UnsupportedLanguageError(f"unsupported cost function {kind!r}")


def cost_phi(kind: str, w: SplittingVector, bits: Sequence[int]) -> Fraction:
    """Evaluate ``phi_kind`` on a Boolean tuple.

    ``phi_s``, ``phi_t`` and ``phi_st`` are ``phi_r`` with a leading 1, a
    trailing 0, or both fixed.  The ``nae2*`` kinds are the unit edge cut with
    the same fixing convention.
    """
    n = arity(kind, w.r)
    if len(bits) != n:
        raise ArityError(f"phi_{kind} takes {n} inputs, got {len(bits)}")
    if kind in _FIXED:
        ones = _FIXED[kind][0] + sum(1 for b in bits if b)
        return w.penalty(ones, w.r)
    ones, zeros = _NAE_FIXED[kind]
    full = [1] * ones + [1 if b else 0 for b in bits] + [0] * zeros
    return Fraction(1) if full[0] != full[1] else Fraction(0)


# ---------------------------------------------------------------------------
# VCSP instances


@dataclass(frozen=True)
class VcspConstraint:
    scope: tuple[int, ...]
    kind: str
    weight: Fraction


@dataclass(frozen=True)
class VcspInstance:
    variable_count: int
    r: int
    constraints: tuple[VcspConstraint, ...]

    def __init__(self, variable_count: int, r: int, constraints: Iterable):
        cons = []
        for item in constraints:
            scope, kind, weight = item
            if kind not in ALL_KINDS:
                raise UnsupportedLanguageError(f"unsupported cost function {kind!r}")
            scope = tuple(sorted(int(v) for v in scope))
            if len(scope) != arity(kind, r):
                raise InvalidInstanceError(
                    f"scope {scope} does not match arity {arity(kind, r)} of {kind}")
            if len(set(scope)) != len(scope):
                raise InvalidInstanceError(f"scope {scope} repeats a variable")
            if scope and (scope[0] < 0 or scope[-1] >= variable_count):
                raise InvalidInstanceError(f"scope {scope} out of range")
            weight = to_fraction(weight)
            if weight < 0:
                raise InvalidInstanceError("constraint weights must be nonnegative")
            cons.append(VcspConstraint(scope, kind, weight))
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "constraints", tuple(cons))

    def multiset(self) -> list[tuple]:
        return sorted((c.scope, c.kind, c.weight) for c in self.constraints)


def vcsp_cost(p: VcspInstance, w: SplittingVector, assignment: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for c in p.constraints:
        bits = [assignment[v] for v in c.scope]
        total += c.weight * cost_phi(c.kind, w, bits)
    return total


def vcsp_minimum(p: VcspInstance, w: SplittingVector, limit: int = 20) -> tuple[Fraction, tuple[int, ...]]:
    """Exhaustive minimum of the VCSP objective (first minimiser in product order)."""
    if p.variable_count > limit:
        raise SizeLimitError(f"{p.variable_count} variables exceed the limit of {limit}")
    best = None
    for a in itertools.product((0, 1), repeat=p.variable_count):
        value = vcsp_cost(p, w, a)
        if best is None or value < best[0]:
            best = (value, a)
    return best


def variable_map(h: Hypergraph) -> dict[int, int]:
    """Non-terminal node -> VCSP variable index, in increasing node order."""
    return {v: i for i, v in enumerate(h.free_nodes)}


def to_vcsp(h: Hypergraph, w: SplittingVector) -> VcspInstance:
    if w.q != h.r // 2:
        raise InvalidInstanceError("splitting vector does not match hyperedge size")
    var = variable_map(h)
    cons = []
    for e in h.hyperedges:
        has_s, has_t = h.s in e.nodes, h.t in e.nodes
        kind = {(False, False): "r", (True, False): "s",
                (False, True): "t", (True, True): "st"}[has_s, has_t]
        scope = tuple(var[v] for v in e.nodes if v in var)
        cons.append((scope, kind, e.weight))
    for e in h.edges:
        ends = (e.u, e.v)
        has_s, has_t = h.s in ends, h.t in ends
        kind = {(False, False): "nae2", (True, False): "nae2_s",
                (False, True): "nae2_t", (True, True): "nae2_st"}[has_s, has_t]
        scope = tuple(var[v] for v in ends if v in var)
        cons.append((scope, kind, e.weight))
    return VcspInstance(len(var), h.r, cons)


def from_vcsp(p: VcspInstance, r: int | None = None) -> Hypergraph:
    """Hypergraph with s = 0, variables as nodes 1..n and t = n + 1."""
    r = p.r if r is None else r
    if r != p.r:
        raise InvalidInstanceError(f"instance was built for r={p.r}, not r={r}")
    n = p.variable_count
    s, t = 0, n + 1
    hyperedges, edges = [], []
    for c in p.constraints:
        nodes = [v + 1 for v in c.scope]
        if c.kind in _FIXED:
            ones, zeros = _FIXED[c.kind]
            hyperedges.append(([s] * ones + nodes + [t] * zeros, c.weight))
        elif c.kind in _NAE_FIXED:
            ones, zeros = _NAE_FIXED[c.kind]
            u, v = ([s] * ones + nodes + [t] * zeros)
            edges.append((u, v, c.weight))
        else:  # pragma: no cover - VcspInstance already rejects these
            raise UnsupportedLanguageError(f"unsupported cost function {c.kind!r}")
    return Hypergraph(n + 2, s, t, r, hyperedges, edges)


def assignment_to_set(h: Hypergraph, assignment: Sequence[int]) -> set[int]:
    S = {h.s}
    for v, i in variable_map(h).items():
        if assignment[i]:
            S.add(v)
    return S


# ---------------------------------------------------------------------------
# multimorphisms

TupleMap = Callable[[tuple[int, ...]], tuple[int, ...]]

MULTIMORPHISMS: dict[str, tuple[TupleMap, int]] = {
    # name -> (F on k-tuples, default tuple width k)
    "zero": (lambda x: tuple(0 for _ in x), 1),
    "one": (lambda x: tuple(1 for _ in x), 1),
    "minmax": (lambda x: (min(x), max(x)), 2),
}


@dataclass(frozen=True)
class MultimorphismCheck:
    holds: bool
    counterexample: tuple[tuple[int, ...], ...] | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None


def check_multimorphism(F: str, kind: str, w: SplittingVector, width: int | None = None,
                        max_r: int = 8) -> MultimorphismCheck:
    """Exhaustively test ``phi(F(t_1), ..., F(t_m)) <= phi(t_1, ..., t_m)``.

    The ``t_j`` range over all k-tuples (k = ``width``); a counterexample is
    reported as the m input tuples, the first violation in lexicographic
    order.  Width 2 suffices for ``minmax`` and width 1 for the constant maps.
    """
    if F not in MULTIMORPHISMS:
        raise ValueError(f"unknown multimorphism {F!r}")
    if w.r > max_r:
        raise SizeLimitError(f"r={w.r} is too large for exhaustive checking (max {max_r})")
    fn, default_k = MULTIMORPHISMS[F]
    k = default_k if width is None else width
    m = arity(kind, w.r)
    cache: dict[tuple[int, ...], Fraction] = {}

    def phi(bits: tuple[int, ...]) -> Fraction:
        if bits not in cache:
            cache[bits] = cost_phi(kind, w, bits)
        return cache[bits]

    def stacked(tuples) -> Fraction:
        return sum((phi(tuple(t[i] for t in tuples)) for i in range(k)), Fraction(0))

    for tuples in itertools.product(itertools.product((0, 1), repeat=k), repeat=m):
        image = tuple(fn(t) for t in tuples)
        lhs, rhs = stacked(image), stacked(tuples)
        if lhs > rhs:
            return MultimorphismCheck(False, tuples, lhs, rhs)
    return MultimorphismCheck(True)


def language_has_multimorphism(F: str, w: SplittingVector) -> bool:
    """Whether F is a multimorphism of every function in {phi_r, phi_s, phi_t, phi_st}."""
    return all(check_multimorphism(F, kind, w).holds for kind in PHI_KINDS
               if arity(kind, w.r) >= 0)
