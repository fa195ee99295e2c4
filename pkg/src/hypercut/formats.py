"""Line-based text formats.

Hypergraph instance::

    # comments start with '#'
    n 6                 # node count
    r 4                 # hyperedge size
    s 0
    t 5
    w 0,1,1/2           # optional splitting vector w_0..w_q
    hyperedge 0 5 1 2 1 # r node indices, then the weight
    edge 0 3 6          # u v weight

``n``, ``r``, ``s`` and ``t`` must precede the first hyperedge or edge.
Numbers are integers, decimals or ``p/q``; weights are written back as exact
fractions so a round trip is lossless.

VCSP instance::

    variables 3
    r 4
    w 0,1,1/2
    constraint 0 1 st 1  # scope..., kind, weight

MaxCut graph: a line ``n N`` (or just ``N``) followed by ``u v`` lines.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .core import CutSolution, Hypergraph, SplittingVector
from .errors import HypercutError, ParseError
from .numbers import format_rational, parse_rational, parse_rational_list
from .reductions import MaxCutInstance
from .regime import ALL_KINDS, VcspInstance, arity


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def _vector(tokens: list[str], no: int, r: int | None) -> SplittingVector:
    try:
        values = parse_rational_list(" ".join(tokens))
    except ParseError as exc:
        raise ParseError(str(exc), no) from None
    try:
        return SplittingVector(values, r)
    except HypercutError as exc:
        raise ParseError(str(exc), no) from None


def read_hypergraph(text: str) -> tuple[Hypergraph, SplittingVector | None]:
    header: dict[str, int] = {}
    w_tokens: tuple[int, list[str]] | None = None
    hyperedges, edges = [], []
    for no, tok in _lines(text):
        key, args = tok[0], tok[1:]
        if key in ("n", "r", "s", "t"):
            if key in header:
                raise ParseError(f"duplicate '{key}' line", no)
            if hyperedges or edges:
                raise ParseError(f"'{key}' must come before hyperedges and edges", no)
            if len(args) != 1:
                raise ParseError(f"'{key}' takes one integer", no)
            header[key] = _int(args[0], no)
        elif key == "w":
            if w_tokens is not None:
                raise ParseError("duplicate 'w' line", no)
            if not args:
                raise ParseError("'w' needs penalties", no)
            w_tokens = (no, args)
        elif key in ("hyperedge", "edge"):
            missing = [k for k in ("n", "r", "s", "t") if k not in header]
            if missing:
                raise ParseError(f"'{key}' before header field(s) {', '.join(missing)}", no)
            n, r = header["n"], header["r"]
            size = r if key == "hyperedge" else 2
            if len(args) != size + 1:
                raise ParseError(f"'{key}' needs {size} nodes and a weight", no)
            nodes = [_int(a, no) for a in args[:-1]]
            weight = parse_rational(args[-1], no)
            if len(set(nodes)) != size:
                raise ParseError(f"repeated node in {key}", no)
            if any(v < 0 or v >= n for v in nodes):
                raise ParseError(f"node out of range 0..{n - 1}", no)
            if weight < 0:
                raise ParseError("negative weight", no)
            (hyperedges if key == "hyperedge" else edges).append(
                (nodes, weight) if key == "hyperedge" else (*nodes, weight))
        else:
            raise ParseError(f"unknown keyword {key!r}", no)
    missing = [k for k in ("n", "r", "s", "t") if k not in header]
    if missing:
        raise ParseError(f"missing header field(s) {', '.join(missing)}")
    try:
        h = Hypergraph(header["n"], header["s"], header["t"], header["r"], hyperedges, edges)
    except HypercutError as exc:
        raise ParseError(str(exc)) from None
    w = _vector(w_tokens[1], w_tokens[0], h.r) if w_tokens else None
    return h, w


def write_hypergraph(h: Hypergraph, w: SplittingVector | None = None) -> str:
    out = [f"n {h.node_count}", f"r {h.r}", f"s {h.s}", f"t {h.t}"]
    if w is not None:
        out.append(f"w {w}")
    for e in h.hyperedges:
        out.append("hyperedge " + " ".join(map(str, e.nodes)) + f" {e.weight}")
    for e in h.edges:
        out.append(f"edge {e.u} {e.v} {e.weight}")
    return "\n".join(out) + "\n"


def read_vcsp(text: str) -> tuple[VcspInstance, SplittingVector | None]:
    header: dict[str, int] = {}
    w_tokens = None
    cons = []
    for no, tok in _lines(text):
        key, args = tok[0], tok[1:]
        if key in ("variables", "r"):
            if key in header:
                raise ParseError(f"duplicate '{key}' line", no)
            if len(args) != 1:
                raise ParseError(f"'{key}' takes one integer", no)
            header[key] = _int(args[0], no)
        elif key == "w":
            w_tokens = (no, args)
        elif key == "constraint":
            if "r" not in header or "variables" not in header:
                raise ParseError("'constraint' before 'variables' and 'r'", no)
            if len(args) < 2:
                raise ParseError("'constraint' needs a kind and a weight", no)
            kind, weight = args[-2], parse_rational(args[-1], no)
            if kind not in ALL_KINDS:
                raise ParseError(f"unsupported cost function {kind!r}", no)
            scope = [_int(a, no) for a in args[:-2]]
            if len(scope) != arity(kind, header["r"]):
                raise ParseError(f"{kind} takes {arity(kind, header['r'])} variables", no)
            cons.append((scope, kind, weight))
        else:
            raise ParseError(f"unknown keyword {key!r}", no)
    if "r" not in header or "variables" not in header:
        raise ParseError("missing 'variables' or 'r'")
    try:
        p = VcspInstance(header["variables"], header["r"], cons)
    except HypercutError as exc:
        raise ParseError(str(exc)) from None
    w = _vector(w_tokens[1], w_tokens[0], p.r) if w_tokens else None
    return p, w


def write_vcsp(p: VcspInstance, w: SplittingVector | None = None) -> str:
    out = [f"variables {p.variable_count}", f"r {p.r}"]
    if w is not None:
        out.append(f"w {w}")
    for c in p.constraints:
        out.append("constraint " + " ".join(map(str, c.scope)) + (" " if c.scope else "")
                   + f"{c.kind} {c.weight}")
    return "\n".join(out) + "\n"


def read_maxcut(text: str) -> MaxCutInstance:
    n = None
    edges = []
    for no, tok in _lines(text):
        if n is None:
            if tok[0] == "n" and len(tok) == 2:
                n = _int(tok[1], no)
            elif len(tok) == 1:
                n = _int(tok[0], no)
            else:
                raise ParseError("first line must give the node count", no)
            continue
        if len(tok) != 2:
            raise ParseError("edge lines are 'u v'", no)
        u, v = _int(tok[0], no), _int(tok[1], no)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"bad edge ({u}, {v})", no)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty graph file")
    return MaxCutInstance(n, edges)


def write_maxcut(g: MaxCutInstance) -> str:
    return "\n".join([f"n {g.node_count}", *(f"{u} {v}" for u, v in g.edges)]) + "\n"


def format_solution(sol: CutSolution, cert) -> str:
    """Solution record; approximate solutions carry the ratio certificate."""
    out = [f"membership {sol.bitstring()}",
           f"source_side {' '.join(map(str, sorted(sol.source_side)))}",
           f"value {format_rational(sol.value)}",
           f"regime {cert.regime}",
           f"method {cert.method}"]
    if cert.method == "approx":
        out += [f"rho {format_rational(cert.rho)}",
                f"w_hat {cert.w_hat}",
                f"projected_value {format_rational(cert.projected_value)}",
                f"opt_lower_bound {format_rational(cert.opt_lower_bound)}",
                f"certificate {cert.bound_line(sol.value)}"]
    return "\n".join(out) + "\n"
