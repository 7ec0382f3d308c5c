"""Command-line front end.

Subcommands: ``eval`` (expression evaluator), ``table`` (multiplication
tables over the canonical basis), ``classify`` and ``repr`` (signature
classification and spinor matrices), ``convert`` (dotted/undotted basis
conversion), ``omultable`` (octonion table), ``bench`` (algorithm
benchmark) and ``env`` (effective session settings).

Exit codes: 0 success, 1 usage error, 2 evaluation error, 3 benchmark
cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench as bench_mod
from .bform import BilinearForm, split
from .dotted import DottedContext
from .expr import EvalError, ParseError, Session, evaluate, parse, parse_scalar
from .multivector import Blade, Multivector, cbasis, wedge
from .product import Algorithm, cmul
from .render import blade_text, mv_json, mv_latex, mv_text
from .special import DEFAULT_FANO_TRIPLES, FanoTripleSet, omultable
from .structure import CliffordMatrix, DoubleFieldMatrix, classify, spinor_repr


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# session construction
# ---------------------------------------------------------------------------

def _form_from_file(path: str, dim: int) -> BilinearForm:
    with open(path) as fh:
        spec = json.load(fh)
    file_dim = int(spec["dim"])
    kind = spec["kind"]
    if kind == "named":
        return BilinearForm.named(spec["entries"], file_dim)
    if kind == "signature":
        p, q, *rest = spec["entries"]
        return BilinearForm.from_signature(int(p), int(q), int(rest[0]) if rest else 0)
    if kind == "explicit":
        rows = [
            [parse_scalar(str(cell), file_dim) for cell in row]
            for row in spec["entries"]
        ]
        return BilinearForm.explicit(rows)
    raise EvalError(f"unknown form kind {kind!r} in {path}")


def _resolve_form_option(text: str | None, dim: int, declared: dict) -> BilinearForm:
    """--form accepts a file path, a signature ``p,q[,r]``, ``g+F``, or a name."""
    if text is None:
        form = BilinearForm.named("B", dim)
        declared["B"] = form
        return form
    if os.path.exists(text) or text.endswith(".json"):
        return _form_from_file(text, dim)
    if "," in text:
        parts = [int(v) for v in text.split(",")]
        if len(parts) not in (2, 3):
            raise EvalError(f"signature needs p,q or p,q,r, got {text!r}")
        form = BilinearForm.from_signature(*parts)
        if form.dim != dim:
            raise EvalError(f"signature {text} has dimension {form.dim}, session dim is {dim}")
        return form
    if "+" in text:
        sym_name, asym_name = (s.strip() for s in text.split("+", 1))
        g = BilinearForm.symmetric_named(sym_name, dim)
        F = BilinearForm.antisymmetric_named(asym_name, dim)
        declared[sym_name] = g
        declared[asym_name] = F
        return g + F
    form = BilinearForm.named(text, dim)
    declared[text] = form
    return form


def make_session(args) -> Session:
    declared: dict = {}
    form = _resolve_form_option(args.form, args.dim, declared)
    return Session(
        dim=args.dim,
        default_form=form,
        algorithm=Algorithm(args.algo),
        basis=args.basis,
        forms=declared,
    )


def _common_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, default=3, help="ambient dimension 1..9 (default 3)")
    p.add_argument("--form", default=None,
                   help="default bilinear form: file, name, g+F split, or signature p,q[,r] "
                        "(default: the fully symbolic named form B)")
    p.add_argument("--algo", choices=[a.value for a in Algorithm], default=Algorithm.ROTA_STEIN.value,
                   help="blade product algorithm (default rs)")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.add_argument("--basis", choices=["undotted", "dotted"], default="undotted")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alias", action="store_true", help="print blades in compact e123 form")


def _render_mv(mv, args, session: Session) -> str:
    dotted_ctx = session.default_dotted_context() if args.basis == "dotted" else None
    if args.format == "json":
        return json.dumps(mv_json(mv, dotted_ctx=dotted_ctx))
    if args.format == "latex":
        return mv_latex(mv, dotted_ctx=dotted_ctx)
    return mv_text(mv, alias=args.alias, dotted_ctx=dotted_ctx)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args) -> int:
    session = make_session(args)
    mv = evaluate(parse(args.expr, session.dim), session)
    print(_render_mv(mv, args, session))
    return 0


def cmd_table(args) -> int:
    session = make_session(args)
    if session.dim > 4 and not args.force:
        raise EvalError(
            f"a dim-{session.dim} table has {4 ** session.dim} entries; pass --force to render it"
        )
    basis = cbasis(session.dim)
    if args.kind == "wedge":
        op = wedge
    else:
        op = lambda u, v: cmul(u, v, session.default_form, session.algorithm)
    headers = [blade_text(b, alias=args.alias) for b in basis]
    cells = [
        [mv_text(op(x.as_multivector(), y.as_multivector()), alias=args.alias) for y in basis]
        for x in basis
    ]
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "basis": headers, "rows": cells}))
        return 0
    widths = [max(len(headers[j]), max(len(row[j]) for row in cells)) for j in range(len(basis))]
    head_w = max(len(h) for h in headers)
    print(" " * (head_w + 2) + "| " + " | ".join(h.ljust(widths[j]) for j, h in enumerate(headers)))
    print("-" * (head_w + 2) + "+" + "-" * (sum(widths) + 3 * len(widths) - 1))
    for h, row in zip(headers, cells):
        print(h.ljust(head_w + 2) + "| " + " | ".join(c.ljust(widths[j]) for j, c in enumerate(row)))
    return 0


def cmd_classify(args) -> int:
    cd = classify(args.p, args.q)
    if args.format == "json":
        print(json.dumps({
            "p": cd.p, "q": cd.q,
            "field": cd.field_type.value,
            "matrix_dim": cd.matrix_dim,
            "simple": cd.simple,
            "idempotent": mv_text(cd.idempotent),
            "ideal_real_basis": [mv_text(b) for b in cd.ideal_real_basis],
            "division_ring_basis": [mv_text(b) for b in cd.division_ring_basis],
            "module_basis": [mv_text(b) for b in cd.module_basis],
        }))
        return 0
    print(f"Cl({cd.p},{cd.q}): {cd.field_type.value}, matrix dim {cd.matrix_dim}, {cd.simplicity}")
    print(f"  idempotent:          {mv_text(cd.idempotent)}")
    print(f"  ideal real basis:    [{', '.join(mv_text(b) for b in cd.ideal_real_basis)}]")
    print(f"  division ring basis: [{', '.join(mv_text(b) for b in cd.division_ring_basis)}]")
    print(f"  module basis:        [{', '.join(mv_text(b) for b in cd.module_basis)}]")
    return 0


def _matrix_rows(m: CliffordMatrix) -> list:
    def entry(v):
        return str(v.scalar_part()) if v.is_scalar() else mv_text(v)

    return [[entry(m.entries[i][j]) for j in range(m.cols)] for i in range(m.rows)]


def cmd_repr(args) -> int:
    rep = spinor_repr(args.p, args.q)
    if args.format == "json":
        out = []
        for i, M in rep:
            if isinstance(M, DoubleFieldMatrix):
                out.append({"generator": f"e{i}",
                            "components": [_matrix_rows(M.first), _matrix_rows(M.second)]})
            else:
                out.append({"generator": f"e{i}", "matrix": _matrix_rows(M)})
        print(json.dumps(out))
        return 0
    for i, M in rep:
        if isinstance(M, DoubleFieldMatrix):
            print(f"e{i} = {M.first} (+) {M.second}")
        else:
            print(f"e{i} = {M}")
    return 0


def cmd_convert(args) -> int:
    session = make_session(args)
    mv = evaluate(parse(args.expr, session.dim), session)
    ctx = session.default_dotted_context()
    if args.to == "dotted":
        if args.format == "json":
            print(json.dumps(mv_json(mv, dotted_ctx=ctx)))
        elif args.format == "latex":
            print(mv_latex(mv, dotted_ctx=ctx))
        else:
            print(mv_text(mv, dotted_ctx=ctx))
    else:
        if args.format == "json":
            print(json.dumps(mv_json(mv)))
        elif args.format == "latex":
            print(mv_latex(mv))
        else:
            print(mv_text(mv, alias=args.alias))
    return 0


def cmd_omultable(args) -> int:
    triples = FanoTripleSet(_parse_fano(args.fano)) if args.fano else FanoTripleSet()
    table = omultable(triples)
    names = ["1"] + [f"o{i}" for i in range(1, 8)]

    def cell(sign, k):
        return ("-" if sign < 0 else "") + names[k]

    if args.format == "json":
        print(json.dumps({
            "triples": [list(t) for t in triples.triples],
            "table": [[cell(s, k) for s, k in row] for row in table],
        }))
        return 0
    width = 4
    print(" " * width + "".join(n.rjust(width) for n in names))
    for i, row in enumerate(table):
        print(names[i].rjust(width) + "".join(cell(s, k).rjust(width) for s, k in row))
    return 0


def _parse_fano(text: str):
    triples = []
    for part in text.split(";"):
        items = [int(v) for v in part.split(",")]
        triples.append(tuple(items))
    return tuple(triples)


def cmd_bench(args) -> int:
    scenarios = bench_mod.SCENARIOS if args.scenario == "all" else (args.scenario,)
    dims = [int(v) for v in args.dims.split(",")]
    report = bench_mod.run_bench(scenarios, dims, args.trials, seed=args.seed)
    print(bench_mod.summary_text(report))
    if args.csv:
        bench_mod.write_csv(report, args.csv)
        print(f"wrote {args.csv}")
        if not args.no_plot:
            plot_path = os.path.splitext(args.csv)[0] + ".png"
            bench_mod.write_plot(report, plot_path)
            print(f"wrote {plot_path}")
    return 0


def cmd_env(args) -> int:
    session = make_session(args)
    settings = {
        "dim": session.dim,
        "form": args.form or "B (named)",
        "algorithm": session.algorithm.value,
        "format": args.format,
        "basis": session.basis,
        "seed": args.seed,
        "declared_forms": sorted(session.forms),
    }
    if args.format == "json":
        print(json.dumps(settings))
    else:
        for k, v in settings.items():
            print(f"{k} = {v}")
    return 0


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    p = _Parser(prog="grassclif", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate an expression")
    _common_options(pe)
    pe.add_argument("expr")
    pe.set_defaults(fn=cmd_eval)

    pt = sub.add_parser("table", help="multiplication table over the canonical basis")
    _common_options(pt)
    pt.add_argument("kind", choices=["wedge", "cmul"])
    pt.add_argument("--force", action="store_true", help="allow tables beyond dim 4")
    pt.set_defaults(fn=cmd_table)

    pc = sub.add_parser("classify", help="classification data for Cl(p,q)")
    pc.add_argument("p", type=int)
    pc.add_argument("q", type=int)
    pc.add_argument("--format", choices=["text", "json"], default="text")
    pc.set_defaults(fn=cmd_classify)

    pr = sub.add_parser("repr", help="spinor matrices of the generators of Cl(p,q)")
    pr.add_argument("p", type=int)
    pr.add_argument("q", type=int)
    pr.add_argument("--format", choices=["text", "json"], default="text")
    pr.set_defaults(fn=cmd_repr)

    pv = sub.add_parser("convert", help="convert between dotted and undotted coordinates")
    _common_options(pv)
    pv.add_argument("expr")
    pv.add_argument("--to", choices=["dotted", "undotted"], required=True)
    pv.set_defaults(fn=cmd_convert)

    po = sub.add_parser("omultable", help="octonion multiplication table")
    po.add_argument("--fano", default=None, help='triples like "1,2,3;1,4,5;..."')
    po.add_argument("--format", choices=["text", "json"], default="text")
    po.set_defaults(fn=cmd_omultable)

    pb = sub.add_parser("bench", help="compare the two product algorithms")
    pb.add_argument("--scenario", choices=list(bench_mod.SCENARIOS) + ["all"], default="all")
    pb.add_argument("--dims", default="3,4,5", help="comma-separated dimensions")
    pb.add_argument("--trials", type=int, default=20)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--csv", default=None, help="write per-row timings to this CSV file")
    pb.add_argument("--no-plot", action="store_true",
                    help="skip the timing figure next to the CSV")
    pb.set_defaults(fn=cmd_bench)

    pn = sub.add_parser("env", help="print the effective session settings")
    _common_options(pn)
    pn.set_defaults(fn=cmd_env)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return args.fn(args)
    except bench_mod.CrossCheckError as e:
        print(f"bench cross-check failure: {e}", file=sys.stderr)
        return 3
    except (ParseError, EvalError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
