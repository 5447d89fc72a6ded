"""Command-line front end.

Exit codes: 0 success, 1 a verification or membership check failed,
2 usage or parse errors.
"""

from __future__ import annotations

import json
import re
import sys
from typing import Optional, Tuple

import click

from .fields import Field, FieldError, DivisionByZero, FieldMismatch
from .ordinals import Ordinal, ONE, OrdinalParseError, parse_ordinal
from .algebra import (Algebra, Element, TupleElement, LevelMismatch,
                      dimension_sequence, element_from_json, element_to_json,
                      factor_equivalent, quasi_inverse, swallow_backward,
                      swallow_forward, tuple_loewy_depth, tuple_quasi_inverse)
from .basis import (BadIndex, BasisBudget, CayleyTable, cayley_table,
                    closure_check, conormed_check, enumerate_basis,
                    finite_field_mult_basis_search, TooLarge)
from .expr import ExprTypeError, ParseError, evaluate, parse
from .injectivity import BadCardinal, BadDescriptor, query_from_json
from . import acceptance


def parse_field(text: str) -> Field:
    t = text.strip().lower()
    if t == "q":
        return Field.rationals()
    m = re.fullmatch(r"f(\d+)(x?)", t)
    if m:
        p = int(m.group(1))
        return Field.rational_functions(p) if m.group(2) else Field.prime(p)
    raise click.BadParameter("field must be q, f<p> or f<p>x, got %r" % text)


def parse_budget(text: str) -> BasisBudget:
    """--budget MAXCOORD[,MAXDEPTH[,LIMITCAP]] e.g. '3', '4,3', '3,3,w+3'."""
    parts = [p.strip() for p in text.split(",")]
    try:
        mc = int(parts[0])
        depth = int(parts[1]) if len(parts) > 1 else 3
        cap = parse_ordinal(parts[2]) if len(parts) > 2 else None
    except (ValueError, OrdinalParseError) as exc:
        raise click.BadParameter("bad budget %r: %s" % (text, exc))
    return BasisBudget(mc, cap, depth)


class _Ctx:
    def __init__(self, field, level, width, fmt, seed):
        self.field = field
        self.level = level
        self.width = width
        self.fmt = fmt
        self.seed = seed

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.field, self.level, self.width)


def common_options(fn):
    fn = click.option("--field", "field_", default="q", metavar="FIELD",
                      help="q, f<p> or f<p>x")(fn)
    fn = click.option("--level", default="1", metavar="ORDINAL",
                      help="algebra level in w-notation")(fn)
    fn = click.option("--width", default=1, type=int)(fn)
    fn = click.option("--format", "fmt", default="text",
                      type=click.Choice(["json", "text"]))(fn)
    fn = click.option("--seed", default=0, type=int)(fn)
    return fn


def make_ctx(field_, level, width, fmt, seed) -> _Ctx:
    try:
        lvl = parse_ordinal(level)
    except OrdinalParseError as exc:
        raise click.BadParameter("bad level %r: %s" % (level, exc))
    if width < 1:
        raise click.BadParameter("width must be >= 1")
    return _Ctx(parse_field(field_), lvl, width, fmt, seed)


def eval_expr(ctx: _Ctx, src: str):
    try:
        return evaluate(parse(src, ctx.field), ctx.algebra)
    except ParseError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(2)
    except (ExprTypeError, LevelMismatch, BadIndex, FieldMismatch,
            DivisionByZero) as exc:
        click.echo("type error: %s" % exc, err=True)
        sys.exit(2)


def element_text(x) -> str:
    """Re-parseable text form of an element."""
    if isinstance(x, TupleElement):
        return "[" + " | ".join(element_text(c) for c in x.components) + "]"
    if x.level.is_zero() or not x.dev:
        if x.level.is_zero():
            return x.const.literal()
        return "{; %s}" % x.const.literal()
    entries = ", ".join("%s: %s" % (c, element_text(v)) for c, v in x.dev)
    return "{%s; %s}" % (entries, x.const.literal())


def emit_element(ctx: _Ctx, x):
    if ctx.fmt == "json":
        click.echo(json.dumps(element_to_json(x)))
    else:
        click.echo(element_text(x))


def emit(ctx: _Ctx, data: dict, text: str):
    click.echo(json.dumps(data) if ctx.fmt == "json" else text)


@click.group()
def main():
    """Exact arithmetic and verification for ordinal-indexed algebras."""


@main.command("eval")
@common_options
@click.argument("expr")
def eval_cmd(field_, level, width, fmt, seed, expr):
    """Evaluate an element expression."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    emit_element(ctx, eval_expr(ctx, expr))


@main.command("qi")
@common_options
@click.argument("expr")
def qi_cmd(field_, level, width, fmt, seed, expr):
    """Reflexive quasi-inverse of an expression."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    x = eval_expr(ctx, expr)
    q = tuple_quasi_inverse(x) if isinstance(x, TupleElement) else quasi_inverse(x)
    emit_element(ctx, q)


@main.command("depth")
@common_options
@click.argument("expr")
def depth_cmd(field_, level, width, fmt, seed, expr):
    """Loewy depth of an expression (the zero element has none)."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    d = tuple_loewy_depth(eval_expr(ctx, expr))
    emit(ctx, {"depth": None if d is None else str(d)},
         "none" if d is None else str(d))


@main.command("dimseq")
@common_options
def dimseq_cmd(field_, level, width, fmt, seed):
    """Dimension sequence of the configured algebra."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    ds = dimension_sequence(ctx.algebra)
    emit(ctx, ds.to_json(),
         "level %s, top layer dimension %d, lower layers %s"
         % (ds.level, ds.top_dim, ds.lower_layer_profile()))


@main.command("factor-eq")
@common_options
@click.option("--other-level", required=True, metavar="ORDINAL")
@click.option("--other-width", default=1, type=int)
@click.option("--other-field", default=None, metavar="FIELD")
def factor_eq_cmd(field_, level, width, fmt, seed, other_level, other_width,
                  other_field):
    """Compare dimension sequences of two configurations."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    octx = make_ctx(other_field or field_, other_level, other_width, fmt, seed)
    eq = factor_equivalent(dimension_sequence(ctx.algebra),
                           dimension_sequence(octx.algebra))
    emit(ctx, {"factor_equivalent": eq}, "true" if eq else "false")
    sys.exit(0 if eq else 1)


@main.command("basis")
@common_options
@click.option("--budget", default="3,3", metavar="MC[,DEPTH[,CAP]]")
def basis_cmd(field_, level, width, fmt, seed, budget):
    """Enumerate basis indices and elements within a budget."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    entries = enumerate_basis(ctx.algebra, parse_budget(budget))
    if ctx.fmt == "json":
        click.echo(json.dumps([{"index": i.literal(),
                                "element": element_to_json(b)}
                               for i, b in entries]))
    else:
        for i, b in entries:
            click.echo("%-20s %s" % (i.literal(), element_text(b)))


@main.command("closure-check")
@common_options
@click.option("--budget", default="3,3", metavar="MC[,DEPTH[,CAP]]")
def closure_cmd(field_, level, width, fmt, seed, budget):
    """Verify all pairwise basis products stay in the basis."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    report = closure_check(ctx.algebra, parse_budget(budget))
    emit(ctx, report,
         "%s (%d products)" % ("pass" if report["passed"] else
                               "FAIL: %r" % report["counterexample"],
                               report["pairs"]))
    sys.exit(0 if report["passed"] else 1)


@main.command("conormed-check")
@common_options
@click.option("--samples", default=200, type=int)
@click.option("--gamma", "gamma_", default=None, metavar="ORDINAL",
              help="depth bound; defaults to the level")
def conormed_cmd(field_, level, width, fmt, seed, samples, gamma_):
    """Verify basis expansions respect Loewy depth on random samples."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    g = parse_ordinal(gamma_) if gamma_ else ctx.level + 1
    report = conormed_check(ctx.algebra, g, samples=samples, seed=seed)
    emit(ctx, report,
         "%s (%d elements below %s)" % ("pass" if report["passed"] else
                                        "FAIL: %r" % report["counterexample"],
                                        report["checked"], g))
    sys.exit(0 if report["passed"] else 1)


@main.command("cayley")
@common_options
@click.option("--budget", default="2,2", metavar="MC[,DEPTH[,CAP]]")
@click.option("--out", default=None, metavar="BASEPATH",
              help="write BASEPATH.csv, .dot and .png")
def cayley_cmd(field_, level, width, fmt, seed, budget, out):
    """Cayley table of the enumerated basis (CSV/DOT, heatmap with --out)."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    table = cayley_table(ctx.algebra, parse_budget(budget))
    if out:
        from .report import write_cayley_files
        paths = write_cayley_files(table, out)
        emit(ctx, paths, "wrote %s, %s and %s"
             % (paths["csv"], paths["dot"], paths["png"]))
    elif ctx.fmt == "json":
        click.echo(json.dumps({
            "indices": [i.literal() for i in table.indices],
            "rows": [[c.literal() for c in row] for row in table.rows]}))
    else:
        click.echo(table.to_csv(), nl=False)


@main.command("iso")
@common_options
@click.option("--beta", required=True, metavar="ORDINAL",
              help="lower level of the swallow pair")
@click.option("--backward", "backward_", is_flag=True)
@click.argument("exprs", nargs=-1)
def iso_cmd(field_, level, width, fmt, seed, beta, backward_, exprs):
    """Swallow isomorphism B(beta) x B(level) <-> B(level).

    Forward takes two expressions (at levels beta and level); backward takes
    one expression at the big level.
    """
    ctx = make_ctx(field_, level, width, fmt, seed)
    try:
        b = parse_ordinal(beta)
    except OrdinalParseError as exc:
        raise click.BadParameter("bad beta: %s" % exc)
    if ctx.width != 1:
        raise click.BadParameter("iso runs on width-1 algebras")
    small = _Ctx(ctx.field, b, 1, ctx.fmt, ctx.seed)
    try:
        if backward_:
            if len(exprs) != 1:
                raise click.BadParameter("backward takes one expression")
            x, y = swallow_backward(b, eval_expr(ctx, exprs[0]))
            if ctx.fmt == "json":
                click.echo(json.dumps({"small": element_to_json(x),
                                       "big": element_to_json(y)}))
            else:
                click.echo("small: %s" % element_text(x))
                click.echo("big:   %s" % element_text(y))
        else:
            if len(exprs) != 2:
                raise click.BadParameter("forward takes two expressions")
            z = swallow_forward(b, eval_expr(small, exprs[0]),
                                eval_expr(ctx, exprs[1]))
            emit_element(ctx, z)
    except (LevelMismatch, ValueError) as exc:
        if isinstance(exc, click.ClickException):
            raise
        click.echo("error: %s" % exc, err=True)
        sys.exit(2)


def _twisted_from_json(field: Field, text: str):
    from .twisted import TwistedElement
    try:
        data = json.loads(text)
        dev = tuple(sorted((int(c), field.parse(v)) for c, v in data.get("dev", [])))
        return TwistedElement(dev, field.parse(data["nu_param"]))
    except (ValueError, KeyError, TypeError) as exc:
        click.echo("bad twisted element %r: %s" % (text, exc), err=True)
        sys.exit(2)


def _twisted_to_json(t) -> dict:
    return {"dev": [[c, v.literal()] for c, v in t.dev],
            "nu_param": t.tail.literal()}


@main.command("twisted")
@common_options
@click.argument("op", type=click.Choice(["mul", "qi", "member", "psi"]))
@click.argument("args", nargs=-1)
def twisted_cmd(field_, level, width, fmt, seed, op, args):
    """Frobenius-twisted carrier: mul A B, qi A (JSON literals);
    member EXPR, psi EXPR (level-1 element expressions)."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    from .twisted import psi_embed, t_membership, t_quasi_inverse
    if ctx.field.characteristic == 0:
        click.echo("twisted operations need characteristic p", err=True)
        sys.exit(2)
    if op in ("mul", "qi"):
        want = 2 if op == "mul" else 1
        if len(args) != want:
            raise click.BadParameter("%s takes %d argument(s)" % (op, want))
        vals = [_twisted_from_json(ctx.field, a) for a in args]
        out = vals[0] * vals[1] if op == "mul" else t_quasi_inverse(vals[0])
        emit(ctx, _twisted_to_json(out), json.dumps(_twisted_to_json(out)))
        return
    if len(args) != 1:
        raise click.BadParameter("%s takes one expression" % op)
    ctx1 = _Ctx(ctx.field, ONE, 1, ctx.fmt, ctx.seed)
    x = eval_expr(ctx1, args[0])
    if op == "member":
        ok = t_membership(x)
        emit(ctx, {"member": ok}, "true" if ok else "false")
        sys.exit(0 if ok else 1)
    out = psi_embed(x)
    emit(ctx, _twisted_to_json(out), json.dumps(_twisted_to_json(out)))


@main.command("baer")
@common_options
@click.option("--lambda", "lambda_", required=True, metavar="CARDINAL",
              help="fin:n, aleph:k, kappa or kappa+")
@click.option("--ideal", required=True, metavar="IDEAL",
              help="fg:EXPR[;EXPR...] or socle-sum:CARDINAL or socle-sum:{0,1,...}")
@click.option("--hom", default="inclusion", metavar="HOM",
              help="inclusion or table:{\"a\": {\"a\": value}, ...}")
def baer_cmd(field_, level, width, fmt, seed, lambda_, ideal, hom):
    """Baer-criterion verdict for an ideal/hom query against M_lambda."""
    ctx = make_ctx(field_, level, width, fmt, seed)
    from .injectivity import baer_extend, Verdict
    try:
        ideal_data = _ideal_json(ideal)
        if "fg" in ideal_data:
            # generators are element expressions at level 1
            gens = [eval_expr(_Ctx(ctx.field, ONE, 1, ctx.fmt, ctx.seed), src)
                    for src in ideal_data["fg"]]
            ideal_data = {"fg": [element_to_json(g) for g in gens]}
        query = {"lambda": lambda_, "ideal": ideal_data, "hom": _hom_json(hom)}
        lam, idl, hm = query_from_json(query, ctx.field)
        verdict = baer_extend(lam, idl, hm, field=ctx.field)
    except (BadCardinal, BadDescriptor, ValueError) as exc:
        click.echo("bad query: %s" % exc, err=True)
        sys.exit(2)
    emit(ctx, verdict.to_json(), json.dumps(verdict.to_json()))
    sys.exit(0 if verdict.kind == Verdict.EXTENDS else 1)


def _ideal_json(text: str) -> dict:
    t = text.strip()
    if t.startswith("fg:"):
        return {"fg": [s for s in t[3:].split(";") if s.strip()]}
    if t.startswith("socle-sum:"):
        arg = t[len("socle-sum:"):].strip()
        if arg.startswith("{"):
            coords = [int(c) for c in arg.strip("{}").split(",") if c.strip()]
            return {"socle_sum": coords}
        return {"socle_sum": arg}
    raise BadDescriptor("ideal must start with fg: or socle-sum:")


def _hom_json(text: str):
    t = text.strip()
    if t == "inclusion":
        return "inclusion"
    if t.startswith("table:"):
        return {"table": json.loads(t[len("table:"):])}
    raise BadDescriptor("hom must be inclusion or table:{...}")


@main.command("search-mult-basis")
@click.option("--p", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
def search_cmd(p, n, fmt):
    """Exhaustive search for multiplicative F_p-bases of GF(p^n)."""
    try:
        found = finite_field_mult_basis_search(p, n)
    except (TooLarge, FieldError, ValueError) as exc:
        click.echo("bad search: %s" % exc, err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(json.dumps({"p": p, "n": n, "bases": [list(b) for b in found]}))
    elif not found:
        click.echo("[] (no multiplicative basis)")
    else:
        for b in found:
            click.echo("{%s}" % ", ".join(str(c) for c in b))


@main.command("selftest")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
def selftest_cmd(fmt):
    """Run the full verification suite; exit 0 only if everything passes."""
    results = []

    def progress(r):
        results.append(r)
        if fmt == "text":
            click.echo("%-18s %s  %s" % (r.name, "pass" if r.passed else "FAIL",
                                         r.detail))

    acceptance.run_all(progress=progress)
    ok = all(r.passed for r in results)
    if fmt == "json":
        click.echo(json.dumps([{"suite": r.name, "passed": r.passed,
                                "detail": r.detail} for r in results]))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
