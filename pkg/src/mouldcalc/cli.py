"""Command-line front end: mouldcalc {eval, op, ganit, expari, check, gexpand, excoeff, verify}."""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as V
from .ari_exp import c_coeff, ex_coeff, expari, expari_expansion
from .errors import MouldError
from .exactalg.textio import render_ratfun
from .flexion import NAMED, g_expand, ganit_apply, named_mould
from .gamma import GammaSpec
from .mould import Mould, anti, exp_times, log_times, lu_bracket, mu, pari
from .mouldio import parse_mould, parse_word, render_mould, render_sigmas
from .symmetry import KINDS, check_symmetry

OPS = ("mu", "lu", "exp", "log", "ganit", "expari", "pari", "anti")
FLIP_ENV = "MOULDCALC_FLIP_ARIT"


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ inputs


def _read_text(path: str) -> tuple:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def load_mould(ref: str, group: str | None = None, depth: int | None = None) -> Mould:
    """A mould file path, '-' for stdin, or a named mould (pic, poc, A, C, paj, pij, I)."""
    if ref in NAMED or ref in ("I", "identity"):
        if depth is None:
            raise UsageError("named mould %r needs --depth" % ref)
        return named_mould(ref, GammaSpec.parse(group or "z2"), depth)
    text, source = _read_text(ref)
    m = parse_mould(text, source=source)
    if group is not None and GammaSpec.parse(group) is not m.spec:
        raise UsageError("%s is over %s, not %s" % (source, m.spec.render(), group))
    return m


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _flip(args) -> bool:
    return bool(getattr(args, "flip_arit_sign", False)) or os.environ.get(FLIP_ENV, "") in ("1", "true", "yes")


# ---------------------------------------------------------------- commands


def cmd_eval(args) -> int:
    group = args.group
    if args.mould in NAMED or args.mould in ("I", "identity"):
        spec = GammaSpec.parse(group or "z2")
        w = parse_word(args.word, spec, source="<word>")
        m = named_mould(args.mould, spec, max(args.depth or 0, len(w), 1))
    else:
        m = load_mould(args.mould, group)
        w = parse_word(args.word, m.spec, source="<word>")
    print(render_ratfun(m.evaluate(w), "v"))
    return 0


def _unary_input(args) -> Mould:
    return load_mould(args.input, args.group, args.depth)


def cmd_op(args) -> int:
    name = args.name
    if name in ("mu", "lu"):
        if not args.a or not args.b:
            raise UsageError("op %s needs --a and --b" % name)
        a = load_mould(args.a, args.group, args.depth)
        b = load_mould(args.b, args.group, args.depth if args.depth else a.R)
        out = mu(a, b) if name == "mu" else lu_bracket(a, b)
    elif name == "ganit":
        m = _unary_input(args)
        b = load_mould(args.b or "pic", m.spec.render(), m.R)
        out = ganit_apply(b, m)
    elif name == "expari":
        m = _unary_input(args)
        if args.method == "expansion":
            out = expari_expansion(m, _flip(args))
        else:
            out = expari(m, _flip(args))
    else:
        m = _unary_input(args)
        out = {"exp": exp_times, "log": log_times, "pari": pari, "anti": anti}[name](m)
    _write(render_mould(out), args.out)
    return 0


def cmd_check(args) -> int:
    m = _unary_input(args)
    res = check_symmetry(m, args.kind, route=args.route, max_depth=args.max_depth, all_records=True)
    lines = []
    for w in res.records:
        status = "PASS" if w.residual.is_zero() else "FAIL"
        lines.append("p=%d q=%d sigmas=%s %s %s" % (w.p, w.q, render_sigmas(w.sigmas), status, render_ratfun(w.residual, "x")))
    lines.append("%s %s" % (args.kind, "PASS" if res.holds else "FAIL"))
    _write("\n".join(lines) + "\n", args.out)
    return 0 if res.holds else 1


def cmd_gexpand(args) -> int:
    spec = GammaSpec.parse(args.group or "z2")
    w = parse_word(args.word, spec, source="<word>")
    depth = args.depth or max(len(w), 1)
    b = load_mould(args.b, spec.render(), depth)
    print(g_expand(b, w).render("v"))
    return 0


def _parse_composition(text: str) -> tuple:
    try:
        comp = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError("composition must look like 2,1") from exc
    if not comp or any(x < 1 for x in comp):
        raise UsageError("composition parts must be positive integers")
    return comp


def cmd_excoeff(args) -> int:
    comp = _parse_composition(args.composition)
    print(c_coeff(comp) if args.family == "C" else ex_coeff(comp))
    return 0


def cmd_verify(args) -> int:
    cfg = V.Config(
        group=GammaSpec.parse(args.group),
        depth=args.depth,
        equality=args.equality,
        seed=args.seed,
        trials=args.trials,
        samples=args.samples,
        flip_arit=_flip(args),
    )
    workers = args.threads if args.threads else None
    records, timings = V.run_suite(args.suite, cfg, workers)
    _write(V.render_report(records), args.out)
    timing_text = "".join("%s %.3f\n" % (t, timings[t]) for t in sorted(timings))
    if args.timings:
        with open(args.timings, "w", encoding="utf-8") as fh:
            fh.write(timing_text)
    elif not args.quiet:
        sys.stderr.write(timing_text)
    return 1 if V.any_failed(records) else 0


# ------------------------------------------------------------------ parser


def _add_group_depth(p, depth_help="depth for named moulds"):
    p.add_argument("--group", default=None, help="finite abelian group, e.g. z2 or z2xz3")
    p.add_argument("--depth", type=int, default=None, help=depth_help)


def _add_op_options(p, name=None):
    _add_group_depth(p)
    p.add_argument("--input", default="-", help="mould file, named mould, or - for stdin")
    p.add_argument("--a", default=None)
    p.add_argument("--b", default=None, help="second operand (mu, lu) or B for ganit (default pic)")
    p.add_argument("--method", choices=("series", "expansion"), default="series", help="expari method")
    p.add_argument("--flip-arit-sign", action="store_true", help="negative control: flip the sign in arit")
    p.add_argument("--out", default=None)
    if name:
        p.set_defaults(func=cmd_op, name=name)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mouldcalc", description="Exact mould calculus over a finite abelian group.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a mould at a word literal")
    p.add_argument("mould", help="named mould or mould file")
    p.add_argument("word", help="word literal such as [(0|v1),(1|v2)]")
    _add_group_depth(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("op", help="apply a mould operation")
    p.add_argument("name", choices=OPS)
    _add_op_options(p)
    p.set_defaults(func=cmd_op)

    for alias in ("ganit", "expari"):
        p = sub.add_parser(alias, help="same as 'op %s'" % alias)
        _add_op_options(p, alias)

    p = sub.add_parser("check", help="test a symmetry, one line per (p,q,sigmas)")
    p.add_argument("kind", choices=KINDS)
    _add_group_depth(p)
    p.add_argument("--input", default="-")
    p.add_argument("--route", choices=("direct", "characterization"), default="direct")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gexpand", help="print the formal word sum g_B(w)")
    p.add_argument("--b", default="pic")
    p.add_argument("--word", required=True)
    _add_group_depth(p)
    p.set_defaults(func=cmd_gexpand)

    p = sub.add_parser("excoeff", help="exact Ex (or C) coefficient of a composition")
    p.add_argument("composition", help="comma-separated positive parts, e.g. 2,1")
    p.add_argument("--family", choices=("Ex", "C"), default="Ex")
    p.set_defaults(func=cmd_excoeff)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=V.SUITES + ("all",), default="all")
    p.add_argument("--group", default="z2")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--equality", choices=("canonical", "probabilistic"), default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $%s or 1)" % V.THREADS_ENV)
    p.add_argument("--flip-arit-sign", action="store_true", help="negative control: flip the sign in arit")
    p.add_argument("--out", default=None, help="report file (default stdout)")
    p.add_argument("--timings", default=None, help="write per-check wall times here instead of stderr")
    p.add_argument("--quiet", action="store_true", help="do not print timings")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (MouldError, UsageError, ValueError, OSError) as exc:
        sys.stderr.write("mouldcalc: error: %s\n" % exc)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
