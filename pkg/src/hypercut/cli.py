"""Command-line interface.

Exit codes: ``classify`` returns 0/1/2 for Submodular/Degenerate/
NonSubmodularHard.  Every command returns 3 for usage, input or parse errors
and 4 when the library rejects the request (wrong regime, infinite ratio,
size limits).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import basic_lp, formats, generate, heatmap, projection, reductions, solvers
from .core import SplittingVector
from .errors import HypercutError, ParseError
from .numbers import format_rational, parse_rational, parse_rational_list
from .regime import RegimeTag, classify

EXIT_INPUT = 3
EXIT_REJECTED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _vector(text: str, r: int | None) -> SplittingVector:
    return SplittingVector(parse_rational_list(text), r)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(out_dir: str, name: str, text: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


def _instance(args):
    h, w = formats.read_hypergraph(_read(args.instance))
    if args.w is not None:
        w = _vector(args.w, h.r)
    if w is None:
        raise UsageError("no splitting vector: add a 'w' line to the instance or pass --w")
    return h, w


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args) -> int:
    regime = classify(_vector(args.w, args.r))
    print(regime)
    return {RegimeTag.SUBMODULAR: 0, RegimeTag.DEGENERATE: 1, RegimeTag.NON_SUBMODULAR_HARD: 2}[regime.tag]


def cmd_project(args) -> int:
    w = _vector(args.w, args.r)
    res = projection.project(w, args.method)
    record = {"method": res.method, "w": str(w), "w_hat": str(res.w_hat),
              "rho": format_rational(res.rho), "scale_factor": format_rational(res.scale_factor),
              "exact": res.exact}
    if res.w_prime is not None:
        record["w_prime"] = str(res.w_prime)
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for k in ("method", "w", "w_prime", "scale_factor", "w_hat", "rho", "exact"):
            if k in record:
                print(f"{k} {record[k]}")
    return 0


def cmd_solve(args) -> int:
    h, w = _instance(args)
    sol, cert = solvers.solve(h, w, args.mode)
    text = formats.format_solution(sol, cert)
    sys.stdout.write(text)
    if args.out:
        _write(args.out, "solution.txt", text)
    return 0


def cmd_heatmap(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in projection.METHODS:
            raise UsageError(f"unknown method {m!r}")
    hm = heatmap.compute(args.r, heatmap.parse_axis(args.w2), heatmap.parse_axis(args.w3), methods)
    paths = heatmap.write_all(hm, args.out, images=not args.no_images, pixel=args.pixel)
    print(f"grid {len(hm.w2)}x{len(hm.w3)} r={hm.r}")
    for m in methods:
        finite = [float(v) for row in hm.grids[m] for v in row if v != heatmap.INF]
        top = max(finite) if finite else float("nan")
        print(f"{m} max_rho {top:.12g}")
    for p in paths:
        print(f"wrote {p}")
    return 0


def cmd_gap(args) -> int:
    g = basic_lp.gap_instance(args.kind, parse_rational(args.w2))
    report = basic_lp.integrality_gap(g.hypergraph, g.w)
    bad = basic_lp.verify_feasible(g.model, g.point)
    print(f"OPT={format_rational(report.opt)} LP={format_rational(report.lp)} gap={format_rational(report.gap)}")
    print(f"hand-built point: objective {format_rational(g.model.objective_of(g.point))}, "
          + ("feasible" if not bad else "violates " + ", ".join(bad)))
    print(f"projection ratio {format_rational(projection.plc_project(g.w).rho)}")
    if args.out:
        _write(args.out, f"{args.kind}.hg", formats.write_hypergraph(g.hypergraph, g.w))
        _write(args.out, f"{args.kind}.lp", basic_lp.export_lp_format(g.model))
        _write(args.out, f"{args.kind}_point.txt",
               "".join(f"{k} {format_rational(v)}\n" for k, v in sorted(g.point.items())))
    return 0


def cmd_reduce_maxcut(args) -> int:
    g = formats.read_maxcut(_read(args.graph))
    w2 = parse_rational(args.w2)
    h, w = reductions.reduce_maxcut(g, args.regime, w2)
    text = formats.write_hypergraph(h, w)
    if args.out:
        print(f"wrote {_write(args.out, 'reduced.hg', text)}")
    else:
        sys.stdout.write(text)
    if args.verify:
        k, _ = reductions.max_cut(g)
        expected = reductions.maxcut_cut_value(args.regime, w2, g.m, k)
        found = solvers.brute_force_min_cut(h, w).value
        print(f"maxcut k*={k} m={g.m} expected={format_rational(expected)} min_cut={format_rational(found)}",
              file=sys.stderr if not args.out else sys.stdout)
        if expected != found:
            return EXIT_REJECTED
    return 0


def cmd_lp(args) -> int:
    h, w = _instance(args)
    model = basic_lp.build_for_hypergraph(h, w)
    sol = basic_lp.solve_lp(model)
    print(f"variables {len(model.names)} rows {len(model.lp.constraints)}")
    print(f"LP={format_rational(sol.objective)}")
    if len(h.free_nodes) <= solvers.BRUTE_FORCE_LIMIT:
        report = basic_lp.integrality_gap(h, w)
        print(f"OPT={format_rational(report.opt)} gap={format_rational(report.gap)}")
    if args.out:
        _write(args.out, "model.lp", basic_lp.export_lp_format(model))
        _write(args.out, "solution.txt",
               "".join(f"{k} {format_rational(v)}\n" for k, v in sol.nonzero().items()))
    return 0


def cmd_apx_bound(args) -> int:
    w2 = parse_rational(args.w2)
    bound = reductions.apx_lower_bound(w2)
    print(f"apx_lower_bound {'none' if bound is None else format_rational(bound)}")
    w = SplittingVector([0, 1, w2], 4)
    print(f"projection_ratio {format_rational(projection.plc_project(w).rho)}")
    return 0


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "submodular":
        w = generate.random_submodular_vector(rng, args.r)
    elif args.kind == "nonsubmodular":
        w = generate.random_nonsubmodular_vector(rng, args.r)
    else:
        w = generate.random_vector(rng, args.r)
    h = generate.random_hypergraph(rng, args.n, args.r, args.hyperedges, args.edges)
    text = formats.write_hypergraph(h, w)
    if args.out:
        print(f"wrote {_write(args.out, f'instance_{args.seed}.hg', text)}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypercut", description=__doc__.split("\n")[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def vec(sp):
        sp.add_argument("--w", required=True, help="penalties w_0..w_q, e.g. 0,1,1/2")
        sp.add_argument("--r", type=int, default=None, help="hyperedge size (default 2q)")

    c = sub.add_parser("classify", help="report the regime of a splitting vector")
    vec(c)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("project", help="project a splitting vector onto the submodular region")
    vec(c)
    c.add_argument("--method", choices=projection.METHODS, default="plc")
    c.add_argument("--json", action="store_true", help="print one JSON object")
    c.set_defaults(func=cmd_project)

    c = sub.add_parser("solve", help="minimum s-t cut of an instance file")
    c.add_argument("instance")
    c.add_argument("--w", default=None, help="override the instance's splitting vector")
    c.add_argument("--mode", choices=solvers.MODES, default="auto")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_solve)

    c = sub.add_parser("heatmap", help="approximation-ratio grids over (w_2, w_3) with w_1 = 1")
    c.add_argument("--r", type=int, choices=(6, 7), default=6)
    c.add_argument("--w2", required=True, help="start:stop:step or start:stop:Nj")
    c.add_argument("--w3", required=True, help="start:stop:step or start:stop:Nj")
    c.add_argument("--methods", default=",".join(projection.METHODS))
    c.add_argument("--out", required=True)
    c.add_argument("--no-images", action="store_true")
    c.add_argument("--pixel", type=int, default=4, help="pixels per grid cell in PPM output")
    c.set_defaults(func=cmd_heatmap)

    c = sub.add_parser("gap", help="Basic LP integrality-gap instance")
    c.add_argument("--kind", choices=("w2_small", "w2_large"), required=True)
    c.add_argument("--w2", required=True)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_gap)

    c = sub.add_parser("reduce-maxcut", help="encode a MaxCut instance as a 4-uniform cut instance")
    c.add_argument("graph")
    c.add_argument("--regime", choices=reductions.REGIMES, required=True)
    c.add_argument("--w2", required=True)
    c.add_argument("--verify", action="store_true", help="check the min cut against exhaustive MaxCut")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_reduce_maxcut)

    c = sub.add_parser("lp", help="solve the Basic LP relaxation of an instance")
    c.add_argument("instance")
    c.add_argument("--w", default=None)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_lp)

    c = sub.add_parser("apx-bound", help="MaxCut-derived inapproximability factor for w = (1, w_2)")
    c.add_argument("--w2", required=True)
    c.set_defaults(func=cmd_apx_bound)

    c = sub.add_parser("generate", help="write a seeded random instance")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--n", type=int, default=10)
    c.add_argument("--r", type=int, default=4)
    c.add_argument("--hyperedges", type=int, default=8)
    c.add_argument("--edges", type=int, default=0)
    c.add_argument("--kind", choices=("any", "submodular", "nonsubmodular"), default="any")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypercutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED if not isinstance(exc, ValueError) else EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
