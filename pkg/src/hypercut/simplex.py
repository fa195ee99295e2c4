"""Dense two-phase simplex over exact rationals.

Only meant for the small programs this package produces (projection LPs
with a handful of variables, Basic LP relaxations with a few hundred).
Every variable is nonnegative; pivoting follows Bland's rule, so the method
terminates on degenerate programs and is fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import LPError

LE, GE, EQ = "<=", ">=", "=="

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class Constraint:
    coeffs: dict[int, Fraction]
    sense: str
    rhs: Fraction
    name: str = ""

    def __post_init__(self):
        if self.sense not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {self.sense!r}")
        self.coeffs = {j: Fraction(v) for j, v in self.coeffs.items() if v != 0}
        self.rhs = Fraction(self.rhs)

    def activity(self, x: Sequence[Fraction]) -> Fraction:
        return sum((v * x[j] for j, v in self.coeffs.items()), _ZERO)

    def satisfied(self, x: Sequence[Fraction]) -> bool:
        lhs = self.activity(x)
        if self.sense == LE:
            return lhs <= self.rhs
        if self.sense == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class LinearProgram:
    """``minimize c.x`` subject to ``constraints`` and ``x >= 0``."""

    num_vars: int
    objective: dict[int, Fraction] = field(default_factory=dict)
    constraints: list[Constraint] = field(default_factory=list)
    names: list[str] | None = None

    def add(self, coeffs: Mapping[int, object], sense: str, rhs, name: str = "") -> None:
        self.constraints.append(Constraint(dict(coeffs), sense, Fraction(rhs), name))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((Fraction(c) * x[j] for j, c in self.objective.items()), _ZERO)

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        return all(v >= 0 for v in x) and all(c.satisfied(x) for c in self.constraints)


@dataclass
class LPResult:
    x: list[Fraction]
    objective: Fraction
    pivots: int


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    inv = _ONE / prow[c]
    if inv != 1:
        prow[:] = [v * inv if v else v for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]


def _run(rows, obj, basis, allowed: int) -> int:
    """Bland-rule iterations on a tableau in canonical form; returns pivot count.

    ``obj`` holds reduced costs with ``-z`` in its last slot; only columns
    ``< allowed`` may enter.
    """
    pivots = 0
    while True:
        col = -1
        for j in range(allowed):
            if obj[j] < 0:
                col = j
                break
        if col < 0:
            return pivots
        best = None
        best_row = -1
        for i, row in enumerate(rows):
            a = row[col]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[best_row]):
                    best, best_row = ratio, i
        if best_row < 0:
            raise LPError("linear program is unbounded")
        _pivot(rows, obj, best_row, col)
        basis[best_row] = col
        pivots += 1


def solve(lp: LinearProgram) -> LPResult:
    """Exact optimum of ``lp``; raises :class:`LPError` if infeasible or unbounded."""
    n = lp.num_vars
    cons = lp.constraints
    m = len(cons)
    n_slack = sum(1 for c in cons if c.sense != EQ)
    width = n + n_slack + m  # structural | slack | artificial, then rhs
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    slack = n
    for i, con in enumerate(cons):
        row = [_ZERO] * (width + 1)
        sign = -1 if con.rhs < 0 else 1
        for j, v in con.coeffs.items():
            row[j] = v * sign
        row[-1] = con.rhs * sign
        sense = con.sense
        if sign < 0 and sense != EQ:
            sense = GE if sense == LE else LE
        basic = -1
        if con.sense != EQ:
            row[slack] = _ONE if sense == LE else -_ONE
            if sense == LE:
                basic = slack
            slack += 1
        if basic < 0:
            basic = n + n_slack + i
            row[basic] = _ONE
            art_cols.append(basic)
        rows.append(row)
        basis.append(basic)

    pivots = 0
    if art_cols:
        # phase one: minimise the sum of artificials
        art = set(art_cols)
        obj = [_ZERO] * (width + 1)
        for i, row in enumerate(rows):
            if basis[i] in art:
                for j in range(width + 1):
                    if j not in art and row[j]:
                        obj[j] -= row[j]
        pivots += _run(rows, obj, basis, n + n_slack)
        if obj[-1] != 0:
            raise LPError("linear program is infeasible")
        # drive remaining (zero-valued) artificials out of the basis
        keep = []
        for i in range(len(rows)):
            if basis[i] in art:
                col = next((j for j in range(n + n_slack) if rows[i][j] != 0), -1)
                if col < 0:
                    continue  # redundant row
                _pivot(rows, obj, i, col)
                basis[i] = col
                pivots += 1
            keep.append(i)
        rows = [rows[i] for i in keep]
        basis = [basis[i] for i in keep]

    obj = [_ZERO] * (width + 1)
    for j, c in lp.objective.items():
        obj[j] = Fraction(c)
    for i, b in enumerate(basis):
        f = obj[b]
        if f:
            row = rows[i]
            for j, v in enumerate(row):
                if v:
                    obj[j] -= f * v
    pivots += _run(rows, obj, basis, n + n_slack)

    x = [_ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][-1]
    return LPResult(x, lp.value(x), pivots)
