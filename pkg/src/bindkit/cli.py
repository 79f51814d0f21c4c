"""``bindkit``: command-line access to terms, recursors and law suites.

Exit codes: 0 success, 1 domain error (bad term, fuel exhausted, invalid
permutation), 2 usage error, 3 a law suite found a violation.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import re
import sys
from typing import Callable, Sequence

from . import perm as P
from . import recursion as R
from . import renset as RS
from . import semantics as S
from .reports import LawReport, dumps
from .terms import (
    FinTermEnv, Names, ParseError, Term, VarId, alpha_eq, fresh_var, free_vars,
    parse_term, print_debruijn, print_term, psubst, rename, subst, swap, to_debruijn,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


class DomainError(Exception):
    pass


class _Ctx:
    """Per-invocation state: one naming session shared by every argument."""

    def __init__(self, args, argv):
        self.args = args
        self.names = Names()
        for a in argv:
            self.names.reserve(a)

    def term(self, text: str) -> Term:
        return parse_term(text, self.names)

    def var(self, text: str) -> VarId:
        if not _IDENT.match(text):
            raise DomainError(f"not a variable name: {text!r}")
        return self.names(text)


def _emit(ctx, text, payload=None):
    if ctx.args.json:
        print(json.dumps(payload if payload is not None else {"result": text},
                         sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _emit_term(ctx, t: Term):
    _emit(ctx, print_term(t), {"term": print_term(t), "debruijn": print_debruijn(to_debruijn(t))})


# ---------------------------------------------------------------- term commands


def _ast(p) -> str:
    from .terms import Var, App
    if isinstance(p, Var):
        return f"Vr {p.v}"
    if isinstance(p, App):
        return f"Ap ({_ast(p.fun)}) ({_ast(p.arg)})"
    return f"Lm {p.binder} ({_ast(p.body)})"


def cmd_parse(ctx):
    t = ctx.term(ctx.args.term)
    _emit(ctx, _ast(t.pre), {"ast": _ast(t.pre), "term": print_term(t)})


def cmd_print(ctx):
    _emit_term(ctx, ctx.term(ctx.args.term))


def cmd_fv(ctx):
    vs = sorted(free_vars(ctx.term(ctx.args.term)))
    _emit(ctx, " ".join(map(str, vs)), {"fv": [str(v) for v in vs]})


def cmd_fresh(ctx):
    avoid = frozenset().union(*(ctx.term(t).fv for t in ctx.args.terms))
    v = fresh_var(avoid)
    _emit(ctx, str(v), {"fresh": str(v)})


def cmd_rename(ctx):
    a = ctx.args
    _emit_term(ctx, rename(ctx.term(a.term), ctx.var(a.new), ctx.var(a.old)))


def cmd_swap(ctx):
    a = ctx.args
    _emit_term(ctx, swap(ctx.term(a.term), ctx.var(a.x1), ctx.var(a.x2)))


def cmd_subst(ctx):
    a = ctx.args
    _emit_term(ctx, subst(ctx.term(a.term), ctx.term(a.s), ctx.var(a.x)))


def _pairs(ctx, items, value):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise DomainError(f"expected NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        key = ctx.var(k.strip())
        if key in out:
            raise DomainError(f"variable {k.strip()} mapped twice")
        out[key] = value(v.strip())
    return out


def cmd_psubst(ctx):
    a = ctx.args
    t = ctx.term(a.term)
    rho = FinTermEnv(_pairs(ctx, a.map, ctx.term))
    _emit_term(ctx, psubst(t, rho))


def cmd_alphaeq(ctx):
    ok = alpha_eq(ctx.term(ctx.args.t1), ctx.term(ctx.args.t2))
    _emit(ctx, "true" if ok else "false", {"alpha_eq": ok})


def cmd_debruijn(ctx):
    d = print_debruijn(to_debruijn(ctx.term(ctx.args.term)))
    _emit(ctx, d, {"debruijn": d})


def cmd_normalize(ctx):
    if ctx.args.fuel < 1:
        raise DomainError("fuel must be at least 1")
    try:
        nf = S.normalize(ctx.term(ctx.args.term), ctx.args.fuel)
    except S.FuelExhausted:
        raise DomainError(f"fuel exhausted after {ctx.args.fuel} beta-steps")
    _emit_term(ctx, nf)


def _nat_cmd(fn):
    def run(ctx):
        n = fn(ctx.term(ctx.args.term))
        _emit(ctx, str(n).lower(), {"result": n})
    return run


def cmd_cfv(ctx):
    n = S.cfv(ctx.term(ctx.args.term), ctx.var(ctx.args.x))
    _emit(ctx, str(n), {"result": n})


def cmd_perm(ctx):
    a = ctx.args
    t = ctx.term(a.term)
    try:
        s = P.FinPerm(_pairs(ctx, a.map, ctx.var))
    except ValueError as exc:
        raise DomainError(str(exc))
    direct, folded = P.perm_map_term(t, s), P.perm_action_term(t, s)
    if direct != folded:  # pragma: no cover - guarded by the law suites
        raise DomainError("permutation action disagrees with its transposition factorisation")
    _emit(ctx, print_term(direct), {"term": print_term(direct), "perm": json.loads(s.to_json()),
                                   "transpositions": [[str(x), str(y)] for x, y in
                                                      P.decompose_transpositions(s)]})


# ---------------------------------------------------------------- law suites


def _renset_targets():
    return {
        "term": RS.TERM_RENSET,
        "var": RS.VAR_RENSET,
        "list": RS.lift_renset_list(RS.TERM_RENSET),
        "pair": RS.lift_renset_pair(RS.TERM_RENSET, RS.VAR_RENSET),
        "option": RS.lift_renset_option(RS.TERM_RENSET),
        "naive": RS.NAIVE_TERM_RENSET,
    }


def _suite_renset(target, seed, trials, ctx):
    return RS.check_renset_laws(_renset_targets()[target], seed, trials)


def _suite_nominal(target, seed, trials, ctx):
    if target == "term":
        from .terms import Vr, Ap, Lm, subst, var
        n = RS.TERM_NOMINAL
        x, s = var(0), Ap(Vr(var(1)), Vr(var(2)))
        X = frozenset({x}) | s.fv
        commutation, _, _ = RS.check_support_commutation(lambda t: subst(t, s, x), n, n, X, seed, trials)
        return (RS.check_nominal_laws(n, seed, trials)
                + RS.check_ce_nominal_laws(n, Vr, Ap, Lm, seed, trials) + [commutation])
    if target == "derived":
        inst = RS.TERM_RENSET
        return (RS.check_nominal_laws(RS.derive_nominal(inst), seed, trials)
                + [RS.check_pivot_independence(inst, seed, trials),
                   RS.check_swap_freshness_agreement(inst, seed, trials)])
    return RS.check_nominal_laws(RS.BINDER_BLIND_NOMINAL, seed, trials)


def _ce_targets(ctx):
    specs = {name: (spec, X) for name, spec, X in S.shipped_specs()}
    specs["interp"] = (S.interp_ce_spec(_domain(ctx)), frozenset())
    specs["broken"] = (R.BROKEN_TERM_CE, frozenset())
    return specs


def _suite_ce(target, seed, trials, ctx):
    spec, X = _ce_targets(ctx)[target]
    reports = R.check_ce_laws(spec, X, seed, trials)
    if target != "broken":
        reports += R.check_recursor_clauses(spec, X, seed, trials)
    return reports


def _suite_frce(target, seed, trials, ctx):
    spec = R.REDEX_COUNT if target == "redex" else R.frce_from_ce(R.TERM_CE)
    return R.check_frce_laws(spec, (), seed, trials) + R.check_prim_clauses(spec, (), seed, trials)


def _suite_subst(target, seed, trials, ctx):
    return R.check_subst_laws(R.TERM_SUBST, seed, trials) + [
        R.check_subst_recurse(R.TERM_SUBST, seed, trials)]


def _fresh_targets():
    return {"term": RS.TERM_RENSET, "var": RS.VAR_RENSET, "list": RS.lift_renset_list(RS.TERM_RENSET)}


def _suite_prop3(target, seed, trials, ctx):
    from .terms import is_fresh
    oracle = is_fresh if target == "term" else None
    return [RS.check_prop3_equivalence(_fresh_targets()[target], seed, trials, oracle=oracle)]


def _suite_prop4(target, seed, trials, ctx):
    return RS.check_prop4(_fresh_targets()[target], seed, trials)


def _domain(ctx):
    if getattr(ctx.args, "target", None) == "one-point":
        return S.ONE_POINT
    return S.fixture_domain(ctx.args.fixtures)


def _suite_fcb(target, seed, trials, ctx):
    return list(S.fcb_contrast_report(_domain(ctx), seed, trials))


def _suite_roundtrip(target, seed, trials, ctx):
    return (P.check_group_laws(seed, trials)
            + P.check_perm_action_laws(P.TERM_PERM, seed, trials)
            + [P.check_decomposition_independence(RS.TERM_NOMINAL, seed, trials)]
            + P.check_gh_roundtrip(P.TERM_PERM, RS.TERM_NOMINAL, seed, trials))


SUITES: dict[str, tuple[Callable, tuple[str, ...], str]] = {
    "renset": (_suite_renset, ("term", "var", "list", "pair", "option", "naive"),
               "Identity, Idempotence, Chaining, Commutativity"),
    "nominal": (_suite_nominal, ("term", "derived", "binder-blind"),
                "swapping laws, constructor equivariance, support vs swap-commutation"),
    "ce": (_suite_ce, ("term", "length", "clam", "cfv", "subst", "psubst", "interp", "broken"),
           "constructor laws (S1)-(S5) and recursor clauses"),
    "frce": (_suite_frce, ("redex", "term"), "primitive-recursion laws (RS1)-(RS5) and clauses"),
    "subst": (_suite_subst, ("term",), "substitutive-set axioms and consequences"),
    "prop3": (_suite_prop3, ("term", "var", "list"), "three definitions of freshness agree"),
    "prop4": (_suite_prop4, ("term", "var", "list"), "freshness under renaming"),
    "fcb": (_suite_fcb, ("fixture", "one-point"),
            "renaming- vs swapping-freshness for interpretations"),
    "roundtrip": (_suite_roundtrip, ("term",), "permutation group, actions, G/H roundtrips"),
}


def suite_ok(suite: str, reports: Sequence[LawReport], target: str = "") -> bool:
    """Whether a suite's outcome is the expected one.

    For ``fcb`` the swapping side is expected to produce a counterexample,
    except on the one-point domain where every value is equal.
    """
    if suite == "fcb":
        renaming, swapping = reports
        return renaming.passed and (swapping.passed if target == "one-point" else not swapping.passed)
    return all(r.passed for r in reports)


def cmd_laws(ctx):
    a = ctx.args
    fn, targets, _ = SUITES[a.suite]
    target = a.target or targets[0]
    if target not in targets:
        raise _Usage(f"suite {a.suite!r} has targets: {', '.join(targets)}")
    reports = fn(target, a.seed, a.trials, ctx)
    if a.json:
        print(dumps(reports))
    else:
        for r in reports:
            print(r.summary() + (f"\n      note: {r.note}" if r.note else ""))
    return EXIT_OK if suite_ok(a.suite, reports, target) else EXIT_VIOLATION


def cmd_crosscheck(ctx):
    a = ctx.args
    from .terms import var
    vs = tuple(var(i) for i in range(a.vars))
    rep = S.cross_check(a.name, a.max_size, vs, a.seed, a.trials, a.random_max_size)
    if a.json:
        print(dumps([rep]))
    else:
        print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


# ---------------------------------------------------------------- parser


class _Usage(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("BINDKIT_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"BINDKIT_SEED must be an integer, got {raw!r}")


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bindkit",
        description="Lambda-terms modulo alpha, renaming-based recursion, and law checking.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--fixtures", metavar="PATH", default=None,
                        help="config file for the arithmetic fixture domain")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--fixtures", metavar="PATH", default=argparse.SUPPRESS,
                        help="config file for the arithmetic fixture domain")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help, *params):
        p = sub.add_parser(name, help=help, description=help, parents=[common])
        for args, kw in params:
            p.add_argument(*args, **kw)
        p.set_defaults(func=fn)
        return p

    term = (("term",), {"help": "term text, e.g. '\\x. x y'"})
    add("parse", cmd_parse, "parse a term and show its abstract syntax", term)
    add("print", cmd_print, "parse a term and print it back", term)
    add("fv", cmd_fv, "free variables", term)
    add("fresh", cmd_fresh, "smallest variable fresh for all given terms",
        (("terms",), {"nargs": "*", "metavar": "TERM"}))
    add("rename", cmd_rename, "capture-avoiding renaming t[new/old]", term,
        (("--new",), {"required": True}), (("--old",), {"required": True}))
    add("swap", cmd_swap, "swap two variables everywhere", term, (("x1",), {}), (("x2",), {}))
    add("subst", cmd_subst, "capture-avoiding substitution t[s/x]", term, (("s",), {}), (("x",), {}))
    add("psubst", cmd_psubst, "parallel substitution", term,
        (("--map",), {"action": "append", "metavar": "X=TERM", "help": "repeatable"}))
    add("alphaeq", cmd_alphaeq, "alpha-equivalence test", (("t1",), {}), (("t2",), {}))
    add("debruijn", cmd_debruijn, "nameless form", term)
    add("normalize", cmd_normalize, "beta-normal form by evaluation", term,
        (("--fuel",), {"type": int, "default": 10_000, "help": "beta-step budget"}))
    add("length", _nat_cmd(S.length_of), "depth of the syntax tree", term)
    add("clam", _nat_cmd(S.clam), "number of abstractions", term)
    add("cfv", cmd_cfv, "free occurrences of a variable", term, (("x",), {}))
    add("cbv", _nat_cmd(S.cbv), "bound-variable occurrences", term)
    add("caneta", _nat_cmd(S.can_eta), "is the term an eta-redex", term)
    add("perm", cmd_perm, "apply a finite permutation of variables", term,
        (("--map",), {"action": "append", "metavar": "X=Y", "help": "repeatable"}))

    suite_lines = "\n".join(f"  {k:<10} targets: {', '.join(v[1])}\n  {'':<10} {v[2]}"
                            for k, v in SUITES.items())
    laws = sub.add_parser("laws", help="run a law suite",
                          description="Run a seeded law suite.  Suites:\n" + suite_lines,
                          formatter_class=argparse.RawDescriptionHelpFormatter,
                          parents=[common])
    laws.add_argument("suite", choices=list(SUITES))
    laws.add_argument("--target", default=None, help="instance to check (first listed is default)")
    laws.add_argument("--seed", type=int, default=None, help="default: $BINDKIT_SEED or 0")
    laws.add_argument("--trials", type=int, default=1000)
    laws.set_defaults(func=cmd_laws)

    cc = sub.add_parser("crosscheck", help="compare an engine function with its oracle",
                        description="Engine versus oracle on all small terms plus random ones.",
                        parents=[common])
    cc.add_argument("name", choices=list(S.CROSS_CHECKS))
    cc.add_argument("--max-size", type=int, default=6)
    cc.add_argument("--vars", type=int, default=3, help="alphabet size")
    cc.add_argument("--seed", type=int, default=None)
    cc.add_argument("--trials", type=int, default=1000, help="random terms")
    cc.add_argument("--random-max-size", type=int, default=25)
    cc.set_defaults(func=cmd_crosscheck)

    rows = []
    for name, p in sub.choices.items():
        usage = p.format_usage().replace("usage: ", "").strip()
        rows.append(f"  {usage}")
    parser.epilog = ("commands:\n" + "\n".join(rows)
                     + "\n\nexit codes: 0 ok, 1 domain error, 2 usage error, 3 law violation"
                     + "\nenvironment: BINDKIT_SEED sets the default seed")
    return parser


def cmd_table() -> str:
    return build_parser().format_help()


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        if getattr(args, "trials", 1) < 1:
            raise _Usage("--trials must be positive")
        code = args.func(_Ctx(args, argv))
        return EXIT_OK if code is None else code
    except _Usage as exc:
        print(f"bindkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DomainError, OSError) as exc:
        print(f"bindkit: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, KeyError) as exc:
        print(f"bindkit: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
