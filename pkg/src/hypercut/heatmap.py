"""Approximation-ratio grids over (w_2, w_3) with w_1 = 1 for r in {6, 7}.

Grids are written as CSV (one row per cell and method) and optionally as
binary PPM images with a fixed white-to-navy colour ramp.
"""

from __future__ import annotations

import csv
import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import SplittingVector
from .errors import ParseError
from .numbers import INF, RatioValue, format_decimal, parse_rational
from .projection import METHODS, approx_ratio, l2_projection_batch, norm_project, plc_project, _scale_up
from .regime import is_submodular

# Colour ramp: t in [0, 1] maps linearly from white to navy; +inf is black and
# undefined differences (inf - inf) are red.
RAMP_LOW = (255, 255, 255)
RAMP_HIGH = (8, 48, 107)
RHO_RANGE = (1.0, 5.0)
DIFF_RANGE = (0.0, 1.0)
INF_COLOUR = (0, 0, 0)
NAN_COLOUR = (200, 0, 0)


def parse_axis(text: str) -> list[Fraction]:
    """Axis values from ``start:stop:step`` (inclusive) or ``start:stop:Nj`` (N evenly spaced points)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"grid axis must be start:stop:step, got {text!r}")
    start, stop = parse_rational(parts[0]), parse_rational(parts[1])
    if parts[2].strip().endswith("j"):
        try:
            count = int(parts[2].strip()[:-1])
        except ValueError:
            raise ParseError(f"bad point count in {text!r}") from None
        return linspace(start, stop, count)
    step = parse_rational(parts[2])
    if step <= 0 or stop < start:
        raise ParseError(f"empty or unbounded grid axis {text!r}")
    out = []
    k = 0
    while start + k * step <= stop:
        out.append(start + k * step)
        k += 1
    return out


def linspace(start, stop, count: int) -> list[Fraction]:
    start, stop = Fraction(start), Fraction(stop)
    if count < 1:
        raise ParseError("grid axis needs at least one point")
    if count == 1:
        return [start]
    return [start + (stop - start) * k / (count - 1) for k in range(count)]


@dataclass
class Heatmap:
    r: int
    w2: list[Fraction]
    w3: list[Fraction]
    grids: dict[str, list[list[RatioValue]]]   # method -> [i2][i3]

    def difference(self, later: str, earlier: str) -> list[list[float]]:
        out = []
        for row_a, row_b in zip(self.grids[later], self.grids[earlier]):
            out.append([_diff(a, b) for a, b in zip(row_a, row_b)])
        return out

    def difference_pairs(self) -> list[tuple[str, str]]:
        present = [m for m in METHODS if m in self.grids]
        return [(b, a) for a, b in itertools.combinations(present, 2)]


def _diff(a: RatioValue, b: RatioValue) -> float:
    if a == INF and b == INF:
        return math.nan
    if a == INF:
        return INF
    if b == INF:
        return -INF
    return float(Fraction(a) - Fraction(b))


def compute(r: int, w2_values: Sequence, w3_values: Sequence, methods: Sequence[str] = METHODS) -> Heatmap:
    if r not in (6, 7):
        raise ValueError("heatmaps are defined for r in {6, 7}")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    w2_values = [Fraction(x) for x in w2_values]
    w3_values = [Fraction(x) for x in w3_values]
    grids = {m: [[None] * len(w3_values) for _ in w2_values] for m in methods}
    pending = []   # cells needing an l2 projection
    for i, a in enumerate(w2_values):
        for j, b in enumerate(w3_values):
            if a <= 0 or b <= 0:
                for m in methods:
                    grids[m][i][j] = INF
                continue
            w = SplittingVector([0, 1, a, b], r)
            if is_submodular(w):
                for m in methods:
                    grids[m][i][j] = Fraction(1)
                continue
            for m in methods:
                if m == "plc":
                    grids[m][i][j] = plc_project(w).rho
                elif m == "l2":
                    pending.append((i, j, w))
                else:
                    grids[m][i][j] = norm_project(w, m).rho
    if pending:
        projected = l2_projection_batch([w for _, _, w in pending])
        for (i, j, w), (x, exact) in zip(pending, projected):
            grids["l2"][i][j] = _scale_up(w, x, "l2", exact).rho
    return Heatmap(r, w2_values, w3_values, grids)


def write_csv(path: str, w2: Sequence, w3: Sequence, method: str, grid) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(["w2", "w3", "method", "rho"])
        for i, a in enumerate(w2):
            for j, b in enumerate(w3):
                out.writerow([format_decimal(a), format_decimal(b), method, _fmt(grid[i][j])])


def _fmt(value) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format_decimal(value)


def _colour(value, lo: float, hi: float) -> tuple[int, int, int]:
    if isinstance(value, float) and math.isnan(value):
        return NAN_COLOUR
    if isinstance(value, float) and math.isinf(value):
        return INF_COLOUR
    t = min(max((float(value) - lo) / (hi - lo), 0.0), 1.0)
    return tuple(round(a + (b - a) * t) for a, b in zip(RAMP_LOW, RAMP_HIGH))


def write_ppm(path: str, grid, value_range: tuple[float, float], pixel: int = 4) -> None:
    """Binary P6 image: w_2 increases to the right, w_3 increases upwards."""
    n2 = len(grid)
    n3 = len(grid[0]) if n2 else 0
    lo, hi = value_range
    rows = bytearray()
    for j in reversed(range(n3)):
        line = bytearray()
        for i in range(n2):
            line.extend(bytes(_colour(grid[i][j], lo, hi)) * pixel)
        rows.extend(bytes(line) * pixel)
    with open(path, "wb") as fh:
        fh.write(f"P6\n{n2 * pixel} {n3 * pixel}\n255\n".encode())
        fh.write(bytes(rows))


def write_all(hm: Heatmap, out_dir: str, images: bool = True, pixel: int = 4) -> list[str]:
    """Write one CSV (and PPM) per method and per pairwise difference; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for m, grid in hm.grids.items():
        p = os.path.join(out_dir, f"rho_{m}.csv")
        write_csv(p, hm.w2, hm.w3, m, grid)
        paths.append(p)
        if images:
            p = os.path.join(out_dir, f"rho_{m}.ppm")
            write_ppm(p, grid, RHO_RANGE, pixel)
            paths.append(p)
    for later, earlier in hm.difference_pairs():
        name = f"{later}-{earlier}"
        grid = hm.difference(later, earlier)
        p = os.path.join(out_dir, f"diff_{later}_minus_{earlier}.csv")
        write_csv(p, hm.w2, hm.w3, name, grid)
        paths.append(p)
        if images:
            p = os.path.join(out_dir, f"diff_{later}_minus_{earlier}.ppm")
            write_ppm(p, grid, DIFF_RANGE, pixel)
            paths.append(p)
    return paths
