"""Command-line surface: classification, equivalence, counting, direction
matrices and pipe analysis with deterministic JSON output.

JSON goes to stdout (one document per run, compact separators, canonical
ordering), diagnostics to stderr.  Exit codes: 0 success or equivalent,
1 not equivalent, 2 parse error, 3 invalid input or range.
"""

import argparse
import json
import sys

from .dmatrix import bool_mat_mul, direction_matrix
from .lattice import count_antichains
from .pipes import (PipeCodeError, code_equivalent, count_pipe_classes,
                    pipe_preorder)
from .signed import count_classes_Ln_to_R, count_classes_Rn_to_L
from .terms import (TermSyntaxError, canonical_representative, compose,
                    homotopy_class, parse_term, parse_vector, print_term)

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _subset_text(indices) -> str:
    return "{" + ",".join(f"x{i}" for i in indices) + "}"


def _antichain_text(lists) -> str:
    if not lists:
        return "(bounded)"
    return ", ".join(_subset_text(s) for s in lists)


def _matrix_text_lines(matrix_dict) -> list[str]:
    lines = []
    for row in matrix_dict["rows"]:
        target = "(zero)" if row["J"] is None else _subset_text(row["J"])
        lines.append(f"{_subset_text(row['I'])} -> {target}")
    return lines


def _cmd_classify(args) -> int:
    term = parse_term(args.term, args.n)
    antichain = homotopy_class(term, args.n)
    rep = print_term(canonical_representative(antichain))
    lists = antichain.to_lists()
    _emit(args, {"antichain": lists, "representative": rep},
          [f"antichain: {_antichain_text(lists)}", f"representative: {rep}"])
    return EXIT_OK


def _cmd_equiv(args) -> int:
    f = parse_term(args.f, args.n)
    g = parse_term(args.g, args.n)
    left = homotopy_class(f, args.n)
    right = homotopy_class(g, args.n)
    equal = left == right
    payload = {"equivalent": equal,
               "left": left.to_lists(), "right": right.to_lists()}
    if equal:
        _emit(args, payload, ["equivalent"])
        return EXIT_OK
    _emit(args, payload, ["not equivalent",
                          f"left: {_antichain_text(left.to_lists())}",
                          f"right: {_antichain_text(right.to_lists())}"])
    return EXIT_DIFFERENT


def _cmd_count(args) -> int:
    if args.target == "pipe":
        if args.code is None:
            raise ValueError("count pipe needs a code argument")
        value = count_pipe_classes(args.code)
    else:
        if args.code is not None:
            raise ValueError(f"count {args.target} takes no code argument")
        if args.n is None:
            raise ValueError(f"count {args.target} needs --n")
        if args.target == "rn-to-r":
            value = count_antichains(args.n)
        elif args.target == "ln-to-r":
            value = count_classes_Ln_to_R(args.n)
        else:
            value = count_classes_Rn_to_L(args.n)
    _emit(args, {"count": value}, [str(value)])
    return EXIT_OK


def _cmd_dmatrix(args) -> int:
    vector = parse_vector(args.terms, args.n)
    payload = direction_matrix(vector).to_json_dict()
    _emit(args, payload, _matrix_text_lines(payload))
    return EXIT_OK


def _cmd_monoid_check(args) -> int:
    f = parse_vector(args.f, args.n)
    g = parse_vector(args.g, args.n)
    lhs = direction_matrix(compose(f, g))
    rhs = bool_mat_mul(direction_matrix(g), direction_matrix(f))
    equal = lhs == rhs
    lhs_dict = lhs.to_json_dict()
    rhs_dict = rhs.to_json_dict()
    lines = ["equal" if equal else "not equal", "composite:"]
    lines += _matrix_text_lines(lhs_dict)
    lines.append("product:")
    lines += _matrix_text_lines(rhs_dict)
    _emit(args, {"equal": equal, "lhs": lhs_dict, "rhs": rhs_dict}, lines)
    return EXIT_OK if equal else EXIT_DIFFERENT


def _cmd_pipe_order(args) -> int:
    order = pipe_preorder(args.code)
    pairs = order.reach_pairs()
    classes = count_pipe_classes(args.code)
    payload = {"k": order.k,
               "order": [[i, j] for i, j in pairs],
               "classes": classes}
    order_text = " ".join(f"{i}<{j}" for i, j in pairs) if pairs else "(none)"
    _emit(args, payload,
          [f"k: {order.k}", f"order: {order_text}", f"classes: {classes}"])
    return EXIT_OK


def _cmd_pipe_equiv(args) -> int:
    equal = code_equivalent(args.a, args.b)
    _emit(args, {"equivalent": equal},
          ["equivalent" if equal else "not equivalent"])
    return EXIT_OK if equal else EXIT_DIFFERENT


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="json",
                     help="output rendering (default json)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="longhom",
        description="Homotopy classes of max/min lattice-term maps between "
                    "long-ray manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="homotopy class of a term R^n -> R")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("term", help="term text, e.g. 'max(min(x1,x2),x3)'")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("equiv", help="decide homotopy of two terms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("f")
    p.add_argument("g")
    _add_format(p)
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("count", help="number of homotopy classes")
    p.add_argument("target",
                   choices=("rn-to-r", "ln-to-r", "rn-to-l", "pipe"))
    p.add_argument("code", nargs="?", default=None,
                   help="pipe code (pipe target only)")
    p.add_argument("--n", type=int, default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("dmatrix", help="direction matrix of a self-map")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("terms", help="components separated by ';', e.g. 'x2;x1'")
    _add_format(p)
    p.set_defaults(handler=_cmd_dmatrix)

    p = sub.add_parser("monoid-check",
                       help="compare D(f.g) with D(g)*D(f)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("f")
    p.add_argument("g")
    _add_format(p)
    p.set_defaults(handler=_cmd_monoid_check)

    p = sub.add_parser("pipe-order",
                       help="preorder and class count of a pipe code")
    p.add_argument("code")
    _add_format(p)
    p.set_defaults(handler=_cmd_pipe_order)

    p = sub.add_parser("pipe-equiv",
                       help="whether two codes describe the same pipe")
    p.add_argument("a")
    p.add_argument("b")
    _add_format(p)
    p.set_defaults(handler=_cmd_pipe_equiv)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (TermSyntaxError, PipeCodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
