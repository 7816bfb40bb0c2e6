"""Command line front end.

Polytopes travel between subcommands as canonical JSON on standard
input/output, so shell pipelines mirror the library call graph::

    toricloops make hirzebruch --r 1 --tau 2 --lam 1 | toricloops lambda --b 1,1
"""
import argparse
import json
import sys

from . import exact
from .action import OrbitLoopSpec, verify_orbit_loop
from .errors import InputError, ParseError, ToricError, UsageError
from .families import BlowupParams, HirzebruchParams, blowup_cpn, hirzebruch, simplex
from .invariants import (
    distinguishable,
    enumerate_distinct_classes,
    lambda_invariant,
    lambda_rescaled,
    localization_check,
    normalized_centroid,
)
from .lie import Weight, center_image_count
from .polytope import (
    centroid,
    delzant_defects,
    from_json,
    is_quantizable,
    minimal_rescale,
    origin_vertex,
    to_json,
    volume,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers: {text!r}") from exc


def _rational_list(text):
    try:
        return exact.vector(text.split(","))
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational_arg(text):
    try:
        return exact.rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fmt_vec(v):
    return [exact.format_rational(c) for c in v]


def _read_polytope(args, stdin):
    if args.json is not None:
        text = args.json
    elif args.input not in (None, "-"):
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
    else:
        text = stdin.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("polytope JSON must be an object")
    return from_json(obj)


def _cmd_make(args, stdin):
    if args.family == "simplex":
        if args.n is None:
            raise UsageError("make simplex requires --n")
        return to_json(simplex(args.n, args.scale if args.scale is not None else 1))
    if args.tau is None or args.lam is None:
        raise UsageError(f"make {args.family} requires --tau and --lam")
    if args.family == "hirzebruch":
        if args.r is None:
            raise UsageError("make hirzebruch requires --r")
        return to_json(hirzebruch(HirzebruchParams(args.r, args.tau, args.lam)))
    if args.n is None:
        raise UsageError("make blowup requires --n")
    return to_json(blowup_cpn(BlowupParams(args.n, args.tau, args.lam)))


def _cmd_check_delzant(args, stdin):
    P = _read_polytope(args, stdin)
    bad = delzant_defects(P)
    return {
        "delzant": not bad,
        "simple": P.is_simple,
        "offending_vertices": [_fmt_vec(P.vertices[i]) for i in bad],
    }


def _cmd_mass_center(args, stdin):
    P = _read_polytope(args, stdin)
    out = {"mass_center": _fmt_vec(centroid(P))}
    if args.volume:
        out["volume"] = exact.format_rational(volume(P))
    return out


def _cmd_quantizable(args, stdin):
    P = _read_polytope(args, stdin)
    return {
        "quantizable": is_quantizable(P),
        "minimal_rescale": exact.format_rational(minimal_rescale(P)),
        "origin_vertex": _fmt_vec(origin_vertex(P)),
    }


def _normalization(P):
    return {"origin_vertex": _fmt_vec(origin_vertex(P)), "mass_center": _fmt_vec(normalized_centroid(P))}


def _cmd_lambda(args, stdin):
    P = _read_polytope(args, stdin)
    if args.rescaled:
        cls, r = lambda_rescaled(P, args.b)
        return {"lambda": str(cls), "rescale": exact.format_rational(r), "normalization": _normalization(P)}
    return {"lambda": str(lambda_invariant(P, args.b))}


def _cmd_distinguish(args, stdin):
    P = _read_polytope(args, stdin)
    out = {"distinguishable": distinguishable(P, args.b, args.b2), "quantizable": is_quantizable(P)}
    if not out["quantizable"]:
        out["rescale"] = exact.format_rational(minimal_rescale(P))
        out["normalization"] = _normalization(P)
    return out


def _cmd_enumerate(args, stdin):
    P = _read_polytope(args, stdin)
    family = enumerate_distinct_classes(P)
    return {
        "classes": [list(b) for b in family],
        "lambdas": [str(lambda_invariant(P, b)) for b in family],
    }


def _cmd_localization(args, stdin):
    P = _read_polytope(args, stdin)
    return localization_check(P, args.b).to_json()


def _cmd_verify_action(args, stdin):
    P = _read_polytope(args, stdin)
    spec = OrbitLoopSpec(P, args.b, args.mu, args.vertex)
    return verify_orbit_loop(spec, args.n_quad).to_json()


def _cmd_lie(args, stdin):
    try:
        k = center_image_count(args.n, Weight(args.weight))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"center_image_count": k, "lower_bound_pi1": k}


def build_parser():
    parser = _Parser(prog="toricloops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("-i", "--input", help="polytope JSON file ('-' or omitted: standard input)")
        p.add_argument("--json", help="inline polytope JSON")
        return p

    make = sub.add_parser("make", help="emit a standard polytope")
    make.add_argument("family", choices=["simplex", "hirzebruch", "blowup"])
    make.add_argument("--n", type=int)
    make.add_argument("--scale", type=_rational_arg)
    make.add_argument("--r", type=int)
    make.add_argument("--tau", type=_rational_arg)
    make.add_argument("--lam", type=_rational_arg)
    make.set_defaults(func=_cmd_make)

    with_input(sub.add_parser("check-delzant")).set_defaults(func=_cmd_check_delzant)

    p = with_input(sub.add_parser("mass-center"))
    p.add_argument("--volume", action="store_true", help="also report the volume")
    p.set_defaults(func=_cmd_mass_center)

    with_input(sub.add_parser("quantizable")).set_defaults(func=_cmd_quantizable)

    p = with_input(sub.add_parser("lambda"))
    p.add_argument("--b", type=_int_list, required=True)
    p.add_argument("--rescaled", action="store_true", help="use the rescaled invariant (any polytope)")
    p.set_defaults(func=_cmd_lambda)

    p = with_input(sub.add_parser("distinguish"))
    p.add_argument("--b", type=_int_list, required=True)
    p.add_argument("--b2", type=_int_list, required=True)
    p.set_defaults(func=_cmd_distinguish)

    with_input(sub.add_parser("enumerate-classes")).set_defaults(func=_cmd_enumerate)

    p = with_input(sub.add_parser("localization"))
    p.add_argument("--b", type=_int_list, required=True)
    p.set_defaults(func=_cmd_localization)

    p = with_input(sub.add_parser("verify-action"))
    p.add_argument("--b", type=_int_list, required=True)
    p.add_argument("--mu", type=_rational_list, required=True)
    p.add_argument("--n-quad", type=int, default=64)
    p.add_argument("--vertex", type=int, default=0, help="index of the chain's base vertex")
    p.set_defaults(func=_cmd_verify_action)

    p = sub.add_parser("lie")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", type=_int_list, required=True)
    p.set_defaults(func=_cmd_lie)
    return parser


def run(argv=None, stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args, stdin)
        status = 0
    except ToricError as exc:
        result = {"error": exc.code, "detail": str(exc)}
        status = 2
    except ValueError as exc:
        result = {"error": UsageError.code, "detail": str(exc)}
        status = 2
    json.dump(result, stdout)
    stdout.write("\n")
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
