"""Command-line surface: `coxtw --type A~1 <subcommand> ...`.

Exit codes are part of the contract: 0 success, 1 usage or expression
syntax problems, 2 domain errors (non-reduced words, incomparable
endpoints, invalid constructions), 3 resource caps.  JSON output is a
single sorted-key line so byte-level golden tests stay stable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .elements import ball, from_word
from .errors import (DomainError, ExprError, ResourceError, ValidationError)
from .exprs import _word as _parse_word
from .exprs import parse_biclosed
from .figures import FIGURES, emit_figure
from .infwords import classify
from .order import (chain, check_meet_semilattice, hasse, interval, join,
                    le, meet, twisted_length)
from .oracle import run_selftest
from .system import CoxeterSystem, build_system, parse_cartan_file

_DEFAULT_CAP = 8


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1
    def error(self, message):
        raise ExprError(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="coxtw", description="twisted weak orders of "
                  "finite and affine Weyl groups")
    top.add_argument("--type", dest="type_string", metavar="T", default=None,
                     help="Cartan type string such as A2, G2, B~3")
    top.add_argument("--cartan", dest="cartan_file", metavar="FILE",
                     default=None, help="file holding an explicit Cartan matrix")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"),
                        default="text")
    common.add_argument("--out", metavar="FILE", default=None)

    withb = _Parser(add_help=False)
    withb.add_argument("--biclosed", metavar="EXPR", default="empty")

    p = sub.add_parser("roots", parents=[common],
                       help="positive roots up to a delta level")
    p.add_argument("--level", type=int, default=2)

    p = sub.add_parser("ball", parents=[common],
                       help="group elements up to a given length")
    p.add_argument("radius", type=int)

    p = sub.add_parser("invset", parents=[common],
                       help="inversion set of a word")
    p.add_argument("word")

    p = sub.add_parser("tlen", parents=[common, withb],
                       help="twisted length of a word")
    p.add_argument("word")

    for name, help_text in (("le", "is x below y in the twisted order"),
                            ("chain", "a saturated chain from x up to y"),
                            ("interval", "all elements between x and y")):
        p = sub.add_parser(name, parents=[common, withb], help=help_text)
        p.add_argument("x")
        p.add_argument("y")

    p = sub.add_parser("meet", parents=[common, withb],
                       help="greatest lower bound of x and y")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--join", action="store_true",
                   help="least upper bound instead")

    p = sub.add_parser("hasse", parents=[common, withb],
                       help="cover graph over a ball")
    p.add_argument("--radius", type=int, default=2)

    sub.add_parser("classify", parents=[common, withb],
                   help="decide what kind of inversion set B is")

    p = sub.add_parser("check", parents=[common, withb],
                       help="search a ball for meet failures")
    p.add_argument("--radius", type=int, default=2)

    p = sub.add_parser("figure", parents=[common],
                       help="reproduce a pinned reference diagram")
    p.add_argument("name", choices=sorted(FIGURES))

    p = sub.add_parser("selftest", parents=[common],
                       help="battery comparison of order code vs oracles")
    p.add_argument("--radius", type=int, default=2)

    return top


def _system(args) -> CoxeterSystem:
    if args.type_string and args.cartan_file:
        raise ExprError("pass either --type or --cartan, not both")
    if args.type_string:
        return build_system(args.type_string)
    if args.cartan_file:
        try:
            text = Path(args.cartan_file).read_text()
        except OSError as exc:
            raise ExprError(f"cannot read Cartan file: {exc}")
        return parse_cartan_file(text)
    raise ExprError("a system is required: pass --type or --cartan")


def _cap_check(value: int, what: str) -> int:
    raw = os.environ.get("COXTW_MAX_BALL")
    cap = _DEFAULT_CAP
    if raw is not None:
        try:
            cap = int(raw)
        except ValueError:
            raise ExprError(f"bad COXTW_MAX_BALL value {raw!r}")
    if value > cap:
        raise ResourceError(
            f"{what} {value} exceeds the cap {cap}; "
            "raise it with COXTW_MAX_BALL if you mean it")
    return value


def _element(system, text):
    return from_word(system, _parse_word(text, system))


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _cmd_roots(args, system):
    level = _cap_check(args.level, "level")
    roots = sorted(system.positive_roots_up_to(level), key=lambda r: r.key)
    if args.format == "json":
        return _json_line({"count": len(roots),
                           "roots": [r.literal() for r in roots]}), 0
    return "".join(f"{r.literal()}\n" for r in roots), 0


def _cmd_ball(args, system):
    radius = _cap_check(args.radius, "radius")
    elems = ball(system, radius)
    if args.format == "json":
        return _json_line({"count": len(elems),
                           "elements": [list(w.word) for w in elems]}), 0
    return "".join(f"{w.label()}\n" for w in elems), 0


def _cmd_invset(args, system):
    el = _element(system, args.word)
    roots = sorted(el.inversion_set(), key=lambda r: r.key)
    if args.format == "json":
        return _json_line({"count": len(roots),
                           "roots": [r.literal() for r in roots]}), 0
    return "".join(f"{r.literal()}\n" for r in roots), 0


def _cmd_tlen(args, system):
    el = _element(system, args.word)
    oracle = parse_biclosed(system, args.biclosed)
    value = twisted_length(el, oracle)
    if args.format == "json":
        return _json_line({"tlen": value, "word": list(el.word)}), 0
    return f"{value}\n", 0


def _cmd_le(args, system):
    oracle = parse_biclosed(system, args.biclosed)
    verdict = le(_element(system, args.x), _element(system, args.y), oracle)
    if args.format == "json":
        return _json_line({"le": verdict}), 0
    return ("true" if verdict else "false") + "\n", 0


def _cmd_chain(args, system):
    oracle = parse_biclosed(system, args.biclosed)
    ch = chain(_element(system, args.x), _element(system, args.y), oracle)
    if args.format == "json":
        return _json_line({"chain": [list(w.word) for w in ch]}), 0
    return "".join(f"{w.label()}\n" for w in ch), 0


def _cmd_interval(args, system):
    oracle = parse_biclosed(system, args.biclosed)
    iv = interval(_element(system, args.x), _element(system, args.y), oracle)
    if args.format == "json":
        return _json_line({"elements": [
            {"word": list(w.word), "tlen": twisted_length(w, oracle)}
            for w in iv]}), 0
    return "".join(f"{w.label()}\n" for w in iv), 0


def _cmd_meet(args, system):
    oracle = parse_biclosed(system, args.biclosed)
    op = join if args.join else meet
    m = op(_element(system, args.x), _element(system, args.y), oracle)
    if args.format == "json":
        return _json_line({"word": list(m.word),
                           "tlen": twisted_length(m, oracle)}), 0
    return f"{m.label()}\n", 0


def _cmd_hasse(args, system):
    radius = _cap_check(args.radius, "radius")
    oracle = parse_biclosed(system, args.biclosed)
    graph = hasse(system, oracle, radius)
    if args.format == "json":
        return _json_line(graph.to_json()), 0
    return graph.to_dot(), 0


def _cmd_classify(args, system):
    oracle = parse_biclosed(system, args.biclosed)
    cls = classify(oracle)
    payload = {"kind": cls.kind, "witness": cls.witness_json()}
    if args.format == "json":
        return _json_line(payload), 0
    return f"kind: {cls.kind}\nwitness: {json.dumps(payload['witness'])}\n", 0


def _cmd_check(args, system):
    radius = _cap_check(args.radius, "radius")
    oracle = parse_biclosed(system, args.biclosed)
    result = check_meet_semilattice(system, oracle, radius)
    if args.format == "json":
        return _json_line(result.to_json()), 0
    lines = [f"status: {result.status}", f"checked: {result.checked}"]
    if result.pair is not None:
        lines.append(f"pair: {result.pair[0].label()} | {result.pair[1].label()}")
    return "".join(f"{ln}\n" for ln in lines), 0


def _cmd_figure(args, system):
    graph, labels = emit_figure(args.name, system)
    if args.format == "json":
        return _json_line(graph.to_json()), 0
    return graph.to_dot(labels), 0


def _cmd_selftest(args, system):
    radius = _cap_check(args.radius, "radius")
    report = run_selftest(system, radius)
    code = 0 if not report["mismatches"] else 2
    if args.format == "json":
        return _json_line(report), code
    lines = [f"checked: {report['checked']}",
             f"mismatches: {len(report['mismatches'])}"]
    for m in report["mismatches"][:10]:
        lines.append(json.dumps(m, sort_keys=True))
    return "".join(f"{ln}\n" for ln in lines), code


_COMMANDS = {
    "roots": _cmd_roots,
    "ball": _cmd_ball,
    "invset": _cmd_invset,
    "tlen": _cmd_tlen,
    "le": _cmd_le,
    "chain": _cmd_chain,
    "interval": _cmd_interval,
    "meet": _cmd_meet,
    "hasse": _cmd_hasse,
    "classify": _cmd_classify,
    "check": _cmd_check,
    "figure": _cmd_figure,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise ExprError("a subcommand is required (see --help)")
        if args.format == "dot" and args.command not in ("hasse", "figure"):
            raise ExprError("dot output only applies to hasse and figure")
        if args.command == "figure" and not (args.type_string or args.cartan_file):
            system = None
        else:
            system = _system(args)
        text, code = _COMMANDS[args.command](args, system)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
