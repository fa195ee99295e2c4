"""Projecting non-submodular splitting vectors onto the submodular region.

Replacing ``w`` by a submodular ``w_hat >= w`` and solving the easier problem
loses at most a factor ``max_i w_hat_i / w_i``.  :func:`plc_project` finds the
``w_hat`` that minimises this factor by building the tightest nondecreasing
piecewise-linear concave cover of the points ``(i, w_i)``.
:func:`minmax_lp_oracle` solves the same min-max problem as a linear program
and serves as an independent check.  :func:`norm_project` implements the
nearest-point baselines under the l1, l2 and l-infinity norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import simplex
from .core import SplittingVector
from .errors import DominationError, InfiniteRatioError, RegimeError
from .numbers import INF, RatioValue
from .regime import RegimeTag, classify, is_submodular

METHODS = ("plc", "l1", "l2", "linf")
NORMS = ("l1", "l2", "linf")


@dataclass(frozen=True)
class PlcCover:
    """Breakpoint ordinates ``f(0..q)`` and segment slopes ``m_1..m_q``."""

    ordinates: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]

    @classmethod
    def interpolate(cls, values: Sequence[Fraction]) -> "PlcCover":
        values = tuple(Fraction(v) for v in values)
        slopes = tuple(values[i] - values[i - 1] for i in range(1, len(values)))
        return cls(values, slopes)

    def intercepts(self) -> tuple[Fraction, ...]:
        # segment l covers [l-1, l]:  f(x) = m_l * x + c_l
        return tuple(self.ordinates[l] - m * l for l, m in enumerate(self.slopes, start=1))

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= len(self.slopes):
            raise ValueError("x outside [0, q]")
        l = max(1, math.ceil(x)) if self.slopes else 0
        if l == 0:
            return self.ordinates[0]
        return self.ordinates[l - 1] + self.slopes[l - 1] * (x - (l - 1))

    def violations(self) -> list[str]:
        out = []
        if self.ordinates[0] != 0:
            out.append("f(0) != 0")
        for l, m in enumerate(self.slopes, start=1):
            if m < 0:
                out.append(f"m_{l} < 0")
            if self.ordinates[l] != self.ordinates[l - 1] + m:
                out.append(f"segment {l} inconsistent")
        for l in range(1, len(self.slopes)):
            if self.slopes[l - 1] < self.slopes[l]:
                out.append(f"m_{l} < m_{l + 1}")
        return out

    def covers(self, w: SplittingVector) -> bool:
        return all(f >= x for f, x in zip(self.ordinates, w.w))


@dataclass(frozen=True)
class ProjectionResult:
    w_hat: SplittingVector
    rho: RatioValue
    method: str
    scale_factor: Fraction = Fraction(1)
    w_prime: SplittingVector | None = None
    exact: bool = True
    extras: dict = field(default_factory=dict, compare=False)


def approx_ratio(w: SplittingVector, w_hat: SplittingVector) -> RatioValue:
    """``max_i w_hat_i / w_i`` over ``i >= 1`` (0/0 counts as 1, x/0 as +inf)."""
    if w.q != w_hat.q:
        raise ValueError("vectors have different lengths")
    best: RatioValue = Fraction(1)
    for i in range(1, w.q + 1):
        a, b = w_hat[i], w[i]
        if a < b:
            raise DominationError(f"w_hat_{i} = {a} < w_{i} = {b}")
        if b == 0:
            if a > 0:
                return INF
            continue
        best = max(best, a / b)
    return best


def _require_positive(w: SplittingVector) -> None:
    zero = [i for i in range(1, w.q + 1) if w[i] == 0]
    if zero:
        raise InfiniteRatioError(
            f"w_{zero[0]} = 0: no submodular cover has a finite approximation ratio")


def plc_cover(w: SplittingVector) -> PlcCover:
    """Greedy steepest-line cover of ``(i, w_i)``.

    From the pivot ``t`` (initially 0) take the steepest line to a later
    point; ties go to the largest index.  If no later point lies strictly
    above ``w_t`` the cover stays flat to ``q``.
    """
    _require_positive(w)
    q = w.q
    f = [Fraction(0)] * (q + 1)
    t = 0
    while t < q:
        slopes = [(w[i] - w[t]) / (i - t) for i in range(t + 1, q + 1)]
        best = max(slopes)
        if best <= 0:
            i_star, m_star = q, Fraction(0)
        else:
            i_star = t + 1 + max(k for k, m in enumerate(slopes) if m == best)
            m_star = best
        for i in range(t + 1, i_star + 1):
            f[i] = m_star * (i - t) + w[t]
        t = i_star
    return PlcCover.interpolate(f)


def plc_project(w: SplittingVector) -> ProjectionResult:
    cover = plc_cover(w)
    w_hat = SplittingVector(cover.ordinates, w.r)
    return ProjectionResult(w_hat, approx_ratio(w, w_hat), "plc", Fraction(1),
                            extras={"cover": cover})


def minmax_feasibility_violations(w: SplittingVector, w_hat: SplittingVector, kappa) -> list[str]:
    """Which constraints of the min-max problem ``(w_hat, kappa)`` violates."""
    out = []
    q = w.q
    for i in range(1, q + 1):
        if w_hat[i] > kappa * w[i]:
            out.append(f"ratio bound at {i}")
    for i in range(1, q):
        if 2 * w_hat[i] < w_hat[i - 1] + w_hat[i + 1]:
            out.append(f"concavity at {i}")
        if w_hat[i + 1] < w_hat[i]:
            out.append(f"monotonicity at {i}")
    for i in range(q + 1):
        if w_hat[i] < w[i]:
            out.append(f"domination at {i}")
    return out


def minmax_lp_oracle(w: SplittingVector) -> tuple[Fraction, SplittingVector]:
    """Solve the min-max ratio problem as an LP with the exact simplex.

    Variables ``w_hat_1..w_hat_q`` and ``kappa``.  Concavity is imposed at
    ``i = 1`` as well (with ``w_hat_0 = 0``), i.e. ``2 w_hat_1 >= w_hat_2``.
    """
    _require_positive(w)
    q = w.q
    K = q  # column of kappa; w_hat_i lives in column i - 1
    lp = simplex.LinearProgram(q + 1, {K: 1})
    for i in range(1, q + 1):
        lp.add({i - 1: 1, K: -w[i]}, simplex.LE, 0)
        lp.add({i - 1: 1}, simplex.GE, w[i])
    if q >= 2:
        lp.add({0: 2, 1: -1}, simplex.GE, 0)
    for i in range(2, q):
        lp.add({i - 1: 2, i - 2: -1, i: -1}, simplex.GE, 0)
    for i in range(1, q):
        lp.add({i: 1, i - 1: -1}, simplex.GE, 0)
    res = simplex.solve(lp)
    return res.x[K], SplittingVector([0, *res.x[:q]], w.r)


# ---------------------------------------------------------------------------
# norm baselines
#
# The first penalty is held at its original value and the remaining
# coordinates x_2..x_q are projected onto the submodular region; every
# constraint is written as a.x <= b in those reduced coordinates.


def _halfspaces(w1: Fraction, q: int) -> list[tuple[dict[int, Fraction], Fraction]]:
    """Submodular region with x_1 = w1 fixed, in coordinates x_2..x_q (index i-2)."""
    hs: list[tuple[dict[int, Fraction], Fraction]] = []

    def add(coeffs: dict[int, int], const: Fraction = Fraction(0)):
        # sum coeffs[i] * x_i <= 0 over full indices, x_1 folded into the bound
        a = {i - 2: Fraction(c) for i, c in coeffs.items() if i >= 2}
        b = -Fraction(coeffs.get(1, 0)) * w1
        hs.append((a, b + const))

    if q >= 2:
        add({2: 1, 1: -2})                      # x_2 <= 2 x_1
    for j in range(2, q):
        add({j - 1: 1, j + 1: 1, j: -2})        # x_{j-1} + x_{j+1} <= 2 x_j
    for j in range(1, q):
        add({j: 1, j + 1: -1})                  # x_j <= x_{j+1}
    return hs


def _scale_up(w: SplittingVector, x_full: Sequence[Fraction], method: str, exact: bool) -> ProjectionResult:
    w_prime = SplittingVector([0, *x_full], w.r)
    c = max(w[i] / w_prime[i] for i in range(1, w.q + 1) if w_prime[i] > 0)
    c = max(c, Fraction(1)) if w_prime[1] == w[1] else c
    w_hat = w_prime.scaled(c)
    rho = approx_ratio(w, w_hat)
    if rho == INF:
        raise InfiniteRatioError("a zero penalty makes the scaled projection ratio infinite")
    return ProjectionResult(w_hat, rho, method, c, w_prime, exact)


def _lp_projection(w: SplittingVector, norm: str) -> list[Fraction]:
    q = w.q
    d = q - 1
    hs = _halfspaces(w[1], q)
    target = [w[i] for i in range(2, q + 1)]
    if norm == "l1":
        # x_k - p_k + n_k = target_k ; minimise sum p + n
        lp = simplex.LinearProgram(3 * d, {j: 1 for j in range(d, 3 * d)})
        for k in range(d):
            lp.add({k: 1, d + 2 * k: -1, d + 2 * k + 1: 1}, simplex.EQ, target[k])
    else:
        # |x_k - target_k| <= tau ; minimise tau
        tau = d
        lp = simplex.LinearProgram(d + 1, {tau: 1})
        for k in range(d):
            lp.add({k: 1, tau: -1}, simplex.LE, target[k])
            lp.add({k: 1, tau: 1}, simplex.GE, target[k])
    for a, b in hs:
        lp.add(a, simplex.LE, b)
    res = simplex.solve(lp)
    return [w[1], *res.x[:d]]


def dykstra(points: np.ndarray, A: np.ndarray, b: np.ndarray, tol: float = 1e-9,
            max_iter: int = 200_000) -> np.ndarray:
    """Cyclic Dykstra projection of each row of ``points`` onto ``{x : A x <= b_row}``.

    ``b`` has one row of bounds per point.  Iterates until no coordinate moves
    by more than ``tol`` (scaled by the point's magnitude) over a sweep.
    """
    X = np.array(points, dtype=float)
    n, m = X.shape[0], A.shape[0]
    P = np.zeros((m, n, X.shape[1]))
    norms = np.einsum("ij,ij->i", A, A)
    scale = 1.0 + np.abs(X).max(axis=1)
    active = np.ones(n, dtype=bool)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        Xa = X[idx]
        start = Xa.copy()
        for k in range(m):
            Y = Xa + P[k, idx]
            viol = Y @ A[k] - b[idx, k]
            Z = Y - (np.maximum(viol, 0.0) / norms[k])[:, None] * A[k]
            P[k, idx] = Y - Z
            Xa = Z
        X[idx] = Xa
        moved = np.abs(Xa - start).max(axis=1)
        active[idx] = moved > tol * scale[idx]
    return X


def _independent_rows(rows: list[list[Fraction]]) -> list[int]:
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    keep = []
    for idx, row in enumerate(rows):
        v = list(row)
        for bvec, p in zip(basis, pivots):
            if v[p]:
                f = v[p] / bvec[p]
                v = [x - f * y for x, y in zip(v, bvec)]
        p = next((j for j, x in enumerate(v) if x), -1)
        if p >= 0:
            basis.append(v)
            pivots.append(p)
            keep.append(idx)
    return keep


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(M)
    aug = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def _polish_l2(target: list[Fraction], hs, estimate: np.ndarray, tol: float = 1e-6) -> list[Fraction] | None:
    """Exact Euclidean projection from the constraints Dykstra left active.

    Projects ``target`` onto the affine hull of the near-active constraints
    and accepts the point only if it is feasible and ``target - x`` lies in
    the cone of the active normals (the optimality conditions).  Returns None
    if the guess does not certify.
    """
    d = len(target)
    dense = [[a.get(k, Fraction(0)) for k in range(d)] for a, _ in hs]
    bounds = [b for _, b in hs]
    scale = 1.0 + float(np.abs(estimate).max())
    active = [i for i, (row, b) in enumerate(zip(dense, bounds))
              if abs(sum(float(c) * x for c, x in zip(row, estimate)) - float(b)) <= tol * scale]
    if not active:
        x = list(target)
    else:
        rows = [dense[i] for i in active]
        keep = _independent_rows(rows)
        Aa = [rows[i] for i in keep]
        ba = [bounds[active[i]] for i in keep]
        resid = [sum((c * t for c, t in zip(row, target)), Fraction(0)) - b for row, b in zip(Aa, ba)]
        gram = [[sum((p * q for p, q in zip(r1, r2)), Fraction(0)) for r2 in Aa] for r1 in Aa]
        lam = _solve_square(gram, resid)
        x = [t - sum((l * row[k] for l, row in zip(lam, Aa)), Fraction(0)) for k, t in enumerate(target)]
    for row, b in zip(dense, bounds):
        if sum((c * v for c, v in zip(row, x)), Fraction(0)) > b:
            return None
    gap = [t - v for t, v in zip(target, x)]
    if any(gap):
        cone = simplex.LinearProgram(len(active))
        for k in range(d):
            cone.add({j: dense[i][k] for j, i in enumerate(active)}, simplex.EQ, gap[k])
        # normals must also be tight at x
        for i in active:
            if sum((c * v for c, v in zip(dense[i], x)), Fraction(0)) != bounds[i]:
                return None
        try:
            simplex.solve(cone)
        except Exception:
            return None
    return x


def _interior_point(w1: Fraction, q: int) -> list[Fraction]:
    # strictly increasing, strictly concave, 2 x_1 > x_2
    return [w1 * (2 - Fraction(1, 2 ** (i - 1))) for i in range(1, q + 1)]


def _repair(w1: Fraction, q: int, hs, estimate: np.ndarray) -> list[Fraction]:
    """Rationalise a floating estimate and pull it into the region if needed."""
    x = [Fraction(float(v)).limit_denominator(10 ** 12) for v in estimate]
    z = _interior_point(w1, q)[1:]
    for e in [None, *range(40, -1, -1)]:
        lam = Fraction(0) if e is None else Fraction(1, 2 ** e)
        cand = [(1 - lam) * a + lam * b for a, b in zip(x, z)]
        if all(sum((c * cand[k] for k, c in a.items()), Fraction(0)) <= bound for a, bound in hs):
            return cand
    return z  # pragma: no cover - lam = 1 is always feasible


def l2_projection_batch(vectors: Sequence[SplittingVector]) -> list[tuple[list[Fraction], bool]]:
    """Euclidean projections (first penalty fixed) of many vectors with a shared q.

    Dykstra runs vectorised over the batch; each result is then polished to
    the exact projection when the active set certifies, otherwise rounded.
    Returns ``(x_full, exact)`` pairs.
    """
    if not vectors:
        return []
    q = vectors[0].q
    d = q - 1
    template = _halfspaces(Fraction(1), q)
    A = np.array([[float(a.get(k, 0)) for k in range(d)] for a, _ in template])
    B = np.array([[float(b) for _, b in _halfspaces(v[1], q)] for v in vectors])
    pts = np.array([[float(v[i]) for i in range(2, q + 1)] for v in vectors])
    est = dykstra(pts, A, B)
    out = []
    for v, e in zip(vectors, est):
        hs = _halfspaces(v[1], q)
        target = [v[i] for i in range(2, q + 1)]
        x = _polish_l2(target, hs, e)
        exact = x is not None
        if x is None:
            x = _repair(v[1], q, hs, e)
        out.append(([v[1], *x], exact))
    return out


def norm_project(w: SplittingVector, norm: str) -> ProjectionResult:
    """Nearest submodular vector under ``norm`` (first penalty fixed), scaled to dominate ``w``.

    l1 and l-infinity are solved exactly as LPs; l2 uses Dykstra's
    alternating projections followed by an exact active-set polish, and the
    result records whether that polish certified (``exact``).
    """
    if norm not in NORMS:
        raise ValueError(f"unknown norm {norm!r}")
    regime = classify(w)
    if regime.tag is RegimeTag.SUBMODULAR:
        return ProjectionResult(w, Fraction(1), norm, Fraction(1), w)
    if regime.tag is RegimeTag.DEGENERATE:
        raise InfiniteRatioError("w_1 = 0: no submodular vector with the same w_1 dominates w")
    _require_positive(w)
    if norm == "l2":
        x_full, exact = l2_projection_batch([w])[0]
        return _scale_up(w, x_full, norm, exact)
    return _scale_up(w, _lp_projection(w, norm), norm, True)


def project(w: SplittingVector, method: str) -> ProjectionResult:
    if method == "plc":
        return plc_project(w)
    return norm_project(w, method)
