"""Command-line front end.

Groups: ``ord`` (ordinal calculator), ``balpha`` (pair elements), ``bruck``
(extension triples), ``iso`` (level-shift conversions), ``top`` (topology
queries and truncated checks), ``verify`` (reproducible suites).

Exit codes: 0 success; 1 a verification found a failure; 2 usage or parse
error; 3 violated operation precondition.  With ``--json`` every command
prints a single JSON document carrying ``"schema": 1``; ``verify`` always
prints its report as JSON.  Output is deterministic: identical argv
(including ``--seed``) reproduces identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List

from .errors import DomainError, ParseError
from .iso import classify_case, from_bruck, to_bruck
from .ordinal import ONE, Ordinal, compare, format_ordinal, modified_split, parse_ordinal
from .semigroup import (
    balpha_inverse,
    balpha_mul,
    balpha_pow,
    box_of,
    bruck_mul,
    format_balpha,
    format_bruck,
    parse_balpha,
    parse_bruck,
)
from .topology import (
    TopologySpec,
    base_nbhd,
    classify_point,
    continuity_witness,
    enumerate_topologies,
    format_descriptor,
    hausdorff_witness,
    nbhd_contains,
    parse_descriptor,
    topology_finer,
    uncovered_boxes,
    verify_shift_inclusion,
)
from .verify import SUITES, run_suite, verify_all

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _level(text: str) -> Ordinal:
    """Parse a level argument: a natural number or the literal "w"."""
    return parse_ordinal(text)


def _emit(ns: argparse.Namespace, text: str, payload: object = None) -> None:
    if getattr(ns, "json", False):
        doc = {"schema": 1, "result": text if payload is None else payload}
        print(json.dumps(doc))
    else:
        print(text)


# --- ord ----------------------------------------------------------------------


def _h_ord_add(ns):
    value = parse_ordinal(ns.x) + parse_ordinal(ns.y)
    _emit(ns, format_ordinal(value))
    return 0


def _h_ord_sub(ns):
    value = parse_ordinal(ns.x) - parse_ordinal(ns.y)
    _emit(ns, format_ordinal(value))
    return 0


def _h_ord_cmp(ns):
    word = {-1: "less", 0: "equal", 1: "greater"}[compare(parse_ordinal(ns.x), parse_ordinal(ns.y))]
    _emit(ns, word)
    return 0


def _h_ord_normalize(ns):
    _emit(ns, format_ordinal(parse_ordinal(ns.x)))
    return 0


def _h_ord_split(ns):
    head, tail = modified_split(parse_ordinal(ns.x), _level(ns.alpha))
    _emit(ns, f"({head}, {format_ordinal(tail)})", [head, format_ordinal(tail)])
    return 0


# --- balpha -------------------------------------------------------------------


def _h_balpha_mul(ns):
    level = _level(ns.alpha)
    product = balpha_mul(parse_balpha(ns.x, level), parse_balpha(ns.y, level))
    _emit(ns, format_balpha(product))
    return 0


def _h_balpha_inv(ns):
    _emit(ns, format_balpha(balpha_inverse(parse_balpha(ns.x, _level(ns.alpha)))))
    return 0


def _h_balpha_pow(ns):
    _emit(ns, format_balpha(balpha_pow(parse_balpha(ns.x, _level(ns.alpha)), ns.k)))
    return 0


# --- bruck --------------------------------------------------------------------


def _h_bruck_mul(ns):
    level = _level(ns.alpha)
    product = bruck_mul(parse_bruck(ns.x, level), parse_bruck(ns.y, level), balpha_mul)
    _emit(ns, format_bruck(product))
    return 0


def _h_bruck_box(ns):
    box = box_of(parse_bruck(ns.x, _level(ns.alpha)))
    _emit(ns, str(box), [box.n, box.m])
    return 0


# --- iso ----------------------------------------------------------------------


def _h_iso_to_bruck(ns):
    alpha = _level(ns.alpha)
    _emit(ns, format_bruck(to_bruck(alpha, parse_balpha(ns.x, alpha + ONE))))
    return 0


def _h_iso_from_bruck(ns):
    alpha = _level(ns.alpha)
    _emit(ns, format_balpha(from_bruck(alpha, parse_bruck(ns.x, alpha))))
    return 0


def _h_iso_case(ns):
    alpha = _level(ns.alpha)
    level = alpha + ONE
    tag = classify_case(parse_balpha(ns.x, level), parse_balpha(ns.y, level), alpha)
    _emit(ns, tag.name)
    return 0


# --- top ----------------------------------------------------------------------


def _spec(ns) -> TopologySpec:
    return TopologySpec(_level(ns.i), _level(ns.alpha))


def _h_top_classify(ns):
    spec = _spec(ns)
    _emit(ns, str(classify_point(spec, parse_balpha(ns.x, spec.alpha))))
    return 0


def _h_top_nbhd(ns):
    spec = _spec(ns)
    d = base_nbhd(spec, parse_balpha(ns.x, spec.alpha), ns.n)
    _emit(ns, format_descriptor(d))
    return 0


def _h_top_member(ns):
    level = _level(ns.alpha)
    d = parse_descriptor(ns.desc, level)
    inside = nbhd_contains(d, parse_balpha(ns.x, level))
    _emit(ns, "true" if inside else "false", inside)
    return 0


def _h_top_witness(ns):
    spec = _spec(ns)
    level = spec.alpha
    witness = continuity_witness(
        spec,
        parse_balpha(ns.l, level),
        parse_balpha(ns.r, level),
        parse_balpha(ns.x, level),
        parse_descriptor(ns.target, level),
    )
    _emit(ns, format_descriptor(witness))
    return 0


def _h_top_verify_shift(ns):
    level = _level(ns.alpha)
    outcome = verify_shift_inclusion(
        parse_balpha(ns.l, level),
        parse_descriptor(ns.desc, level),
        parse_balpha(ns.r, level),
        parse_descriptor(ns.target, level),
        ns.bound,
    )
    if outcome.ok:
        _emit(ns, "ok", {"ok": True})
        return 0
    text = format_balpha(outcome.counterexample)
    _emit(ns, f"counterexample: {text}", {"ok": False, "counterexample": text})
    return 1


def _h_top_separate(ns):
    spec = _spec(ns)
    dp, dq = hausdorff_witness(
        spec, parse_balpha(ns.p, spec.alpha), parse_balpha(ns.q, spec.alpha)
    )
    left, right = format_descriptor(dp), format_descriptor(dq)
    _emit(ns, f"{left}\n{right}", [left, right])
    return 0


def _h_top_boxes(ns):
    alpha = _level(ns.alpha) if ns.alpha is not None else Ordinal(ns.j + 1)
    i = _level(ns.i) if ns.i is not None else Ordinal(ns.j + 1)
    square = uncovered_boxes(TopologySpec(i, alpha), ns.j, ns.n)
    pairs = square.indices()
    _emit(ns, " ".join(f"[{p}, {q}]" for p, q in pairs), [list(pq) for pq in pairs])
    return 0


def _h_top_lattice(ns):
    alpha = _level(ns.alpha)
    specs = enumerate_topologies(alpha, cap=None if alpha.is_finite else ns.bound)
    for first, second in zip(specs, specs[1:]):
        assert topology_finer(first, second).relation == "strictly-finer"
    text = " > ".join(str(s) for s in specs)
    _emit(ns, text, [str(s) for s in specs])
    return 0


# --- verify -------------------------------------------------------------------


def _h_verify(ns):
    alpha = ns.alpha
    if ns.suite == "all":
        reports = verify_all(seed=ns.seed, trials=ns.trials, bound=ns.bound, alpha=alpha)
        print(json.dumps({"schema": 1, "reports": [r.as_dict() for r in reports]}))
        return 0 if all(r.passed for r in reports) else 1
    report = run_suite(ns.suite, seed=ns.seed, trials=ns.trials, bound=ns.bound, alpha=alpha)
    print(json.dumps(report.as_dict()))
    return 0 if report.passed else 1


# --- wiring -------------------------------------------------------------------


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a single JSON document")


def _build_parser() -> _Parser:
    parser = _Parser(prog="bicyclic", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    ord_p = groups.add_parser("ord", help="ordinal calculator")
    ord_sub = ord_p.add_subparsers(dest="cmd", required=True)
    for name, handler, args in (
        ("add", _h_ord_add, ("x", "y")),
        ("sub", _h_ord_sub, ("x", "y")),
        ("cmp", _h_ord_cmp, ("x", "y")),
        ("normalize", _h_ord_normalize, ("x",)),
    ):
        p = ord_sub.add_parser(name)
        for a in args:
            p.add_argument(a)
        _add_json(p)
        p.set_defaults(handler=handler)
    p = ord_sub.add_parser("split")
    p.add_argument("--alpha", required=True, help='split level: a number or "w"')
    p.add_argument("x")
    _add_json(p)
    p.set_defaults(handler=_h_ord_split)

    balpha_p = groups.add_parser("balpha", help="pair-element operations")
    balpha_sub = balpha_p.add_subparsers(dest="cmd", required=True)
    for name, handler, extra in (
        ("mul", _h_balpha_mul, ("x", "y")),
        ("inv", _h_balpha_inv, ("x",)),
        ("pow", _h_balpha_pow, ("x",)),
    ):
        p = balpha_sub.add_parser(name)
        p.add_argument("--alpha", default="1", help='level: a number or "w" (default 1)')
        for a in extra:
            p.add_argument(a)
        if name == "pow":
            p.add_argument("k", type=int)
        _add_json(p)
        p.set_defaults(handler=handler)

    bruck_p = groups.add_parser("bruck", help="extension-triple operations")
    bruck_sub = bruck_p.add_subparsers(dest="cmd", required=True)
    p = bruck_sub.add_parser("mul")
    p.add_argument("--alpha", default="1", help="payload level (default 1)")
    p.add_argument("x")
    p.add_argument("y")
    _add_json(p)
    p.set_defaults(handler=_h_bruck_mul)
    p = bruck_sub.add_parser("box")
    p.add_argument("--alpha", default="1", help="payload level (default 1)")
    p.add_argument("x")
    _add_json(p)
    p.set_defaults(handler=_h_bruck_box)

    iso_p = groups.add_parser("iso", help="level-shift conversions")
    iso_sub = iso_p.add_subparsers(dest="cmd", required=True)
    for name, handler, args in (
        ("to-bruck", _h_iso_to_bruck, ("x",)),
        ("from-bruck", _h_iso_from_bruck, ("x",)),
        ("case", _h_iso_case, ("x", "y")),
    ):
        p = iso_sub.add_parser(name)
        p.add_argument("--alpha", default="1", help="base level (default 1)")
        for a in args:
            p.add_argument(a)
        _add_json(p)
        p.set_defaults(handler=handler)

    top_p = groups.add_parser("top", help="topology queries")
    top_sub = top_p.add_subparsers(dest="cmd", required=True)

    def top_parser(name, handler, need_i=True):
        p = top_sub.add_parser(name)
        p.add_argument("--alpha", required=True, help='level: a number or "w"')
        if need_i:
            p.add_argument("--i", required=True, help='topology index: a number or "w"')
        else:
            p.add_argument("--i", default=None, help="accepted but not needed")
        _add_json(p)
        p.set_defaults(handler=handler)
        return p

    p = top_parser("classify", _h_top_classify)
    p.add_argument("x")
    p = top_parser("nbhd", _h_top_nbhd)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("x")
    p = top_parser("member", _h_top_member, need_i=False)
    p.add_argument("--desc", required=True)
    p.add_argument("x")
    p = top_parser("witness", _h_top_witness)
    p.add_argument("--l", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--target", required=True)
    p = top_parser("verify-shift", _h_top_verify_shift, need_i=False)
    p.add_argument("--l", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--desc", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--bound", type=int, default=8)
    p = top_parser("separate", _h_top_separate)
    p.add_argument("p")
    p.add_argument("q")
    p = top_sub.add_parser("boxes")
    p.add_argument("--alpha", default=None)
    p.add_argument("--i", default=None)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(handler=_h_top_boxes)
    p = top_parser("lattice", _h_top_lattice, need_i=False)
    p.add_argument("--bound", type=int, default=8, help="finite indices listed at alpha=w")

    verify_p = groups.add_parser("verify", help="reproducible verification suites")
    verify_p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify_p.add_argument("--alpha", default=None, help="restrict to one level")
    verify_p.add_argument("--trials", type=int, default=None)
    verify_p.add_argument("--bound", type=int, default=None)
    verify_p.add_argument("--seed", type=lambda s: int(s) & (2**64 - 1), default=0)
    _add_json(verify_p)
    verify_p.set_defaults(handler=_h_verify)

    return parser


def run(argv: List[str]) -> int:
    """Dispatch one invocation; returns the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return ns.handler(ns)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
