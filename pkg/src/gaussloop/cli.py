"""Command-line front end.

Subcommands read one Gauss code per input line (file or stdin) and write
one JSON report per line to stdout; human-readable notes go to stderr.
Exit codes: 0 success, 1 property violation, 2 usage or parse error.
"""

import argparse
import json
import os
import sys

from .diagram import GaussCodeError, parse_gauss_code
from .invariants import (framed_invariant, general_invariant, symmetry_report,
                         three_loop)
from .moves import finite_type_derivative, random_walk
from .surface import (commuting_check, gv_functional, parse_labeled,
                      surface_invariant)
from .weights import crossing_weight


def _default_seed():
    env = os.environ.get("GAUSSLOOP_SEED")
    return int(env) if env else 0


def _parse_triple(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated "
                                         "integers, e.g. 1,0,2")
    return tuple(int(p) for p in parts)


def _parse_invariant(text):
    if text == "phifr":
        return ("phifr", None)
    if text == "phigen":
        return ("phigen", None)
    if text.startswith("phi:"):
        return ("phi", _parse_triple(text[4:]))
    raise argparse.ArgumentTypeError("invariant must be phi:i,j,k, phifr "
                                     "or phigen")


def _read_lines(path):
    stream = sys.stdin if path in (None, "-") else open(path)
    with stream if stream is not sys.stdin else _nullcontext(stream) as fh:
        for number, line in enumerate(fh, start=1):
            line = line.strip()
            if line and not line.startswith("#"):
                yield number, line


class _nullcontext:
    def __init__(self, value):
        self.value = value

    def __enter__(self):
        return self.value

    def __exit__(self, *exc):
        return False


def _parse_line(number, line):
    try:
        return parse_gauss_code(line)
    except GaussCodeError as err:
        sys.stderr.write("line %d, column %d: %s\n"
                         % (number, err.position + 1, str(err)))
        raise SystemExit(2)


def _combination_json(comb):
    return [{"config": cls, "labels": list(labels), "coeff": coeff}
            for (cls, labels), coeff in comb.terms]


def _emit(report):
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")


def _figure_path(directory, number):
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, "diagram_%03d.png" % number)


# -- compute ---------------------------------------------------------------

def cmd_compute(args):
    for number, line in _read_lines(args.input):
        d = _parse_line(number, line)
        results = {}
        diagnostics = []
        for triple in args.phi or ():
            results.setdefault("phi", {})["(%d,%d,%d)" % triple] = \
                three_loop(d, *triple)
        if args.phifr:
            results["phi_fr"] = framed_invariant(d).sorted_support()
        if args.phigen:
            results["phi_general"] = _combination_json(general_invariant(d))
        if args.weights:
            results["weights"] = [crossing_weight(d, c) for c in range(d.n)]
        if args.writhe:
            results["writhe"] = d.writhe()
        if not results:
            diagnostics.append("no invariant requested")
        report = {"input": d.canonical_code(), "results": results,
                  "diagnostics": diagnostics}
        if args.figures:
            from .plotting import render_to_file
            path = _figure_path(args.figures, number)
            render_to_file(d, path)
            report["figure"] = path
        _emit(report)
    return 0


# -- verify ----------------------------------------------------------------

def _evaluate(kind, triple, diagram):
    if kind == "phi":
        return three_loop(diagram, *triple)
    if kind == "phifr":
        return framed_invariant(diagram)
    return general_invariant(diagram)


def cmd_verify(args):
    kind, triple = args.invariant
    frame = args.frame_preserving
    even = args.even_r1
    if kind == "phifr" and not (frame or even):
        sys.stderr.write("note: the framed invariant is certified only on "
                         "frame-preserving or even-kink walks; enabling "
                         "--even-r1\n")
        even = True
    status = 0
    for number, line in _read_lines(args.input):
        d = _parse_line(number, line)
        base = _evaluate(kind, triple, d)
        for walk in range(args.walks):
            seed = args.seed + 7919 * walk
            end = random_walk(d, args.moves, seed=seed,
                              frame_preserving=frame, even_r1=even)
            value = _evaluate(kind, triple, end)
            if value != base:
                transcript = {"input": line, "invariant": args.raw_invariant,
                              "seed": seed, "moves": args.moves,
                              "frame_preserving": frame, "even_r1": even,
                              "expected": str(base), "got": str(value)}
                sys.stderr.write("violation: %s\n"
                                 % json.dumps(transcript, sort_keys=True))
                status = 1
                break
        else:
            _emit({"input": d.canonical_code(),
                   "results": {"constant": str(base), "walks": args.walks,
                               "moves": args.moves},
                   "diagnostics": []})
    return status


# -- symmetry --------------------------------------------------------------

def cmd_symmetry(args):
    for number, line in _read_lines(args.input):
        d = _parse_line(number, line)
        rep = symmetry_report(d)
        _emit({"input": d.canonical_code(),
               "results": {"support": list(rep.support),
                           "reflected_support": list(rep.reflected_support),
                           "detects_inverse": rep.detects_inverse,
                           "detects_mirror": rep.detects_mirror,
                           "detects_switch": rep.detects_switch},
               "diagnostics": []})
    return 0


# -- finite-type -----------------------------------------------------------

def cmd_finite_type(args):
    kind, triple = args.invariant
    if kind == "phigen":
        sys.stderr.write("finite-type supports phi:i,j,k and phifr only\n")
        return 2
    for number, line in _read_lines(args.input):
        d = _parse_line(number, line)
        if not d.singular_indices():
            sys.stderr.write("line %d: no singular crossings\n" % number)
            return 2
        if kind == "phi":
            value = finite_type_derivative(d, lambda x: three_loop(x, *triple))
            encoded = value
        else:
            value = finite_type_derivative(d, framed_invariant,
                                           multiplicative=True)
            encoded = value.sorted_support()
        _emit({"input": d.canonical_code(),
               "results": {"derivative": encoded}, "diagnostics": []})
    return 0


# -- surface ---------------------------------------------------------------

def _parse_classes(text):
    out = []
    for part in text.split("/"):
        out.append(tuple(int(x) for x in part.split(",")))
    if len(out) != 3:
        raise argparse.ArgumentTypeError("expected three '/'-separated "
                                         "classes, e.g. 1,0/0,1/1,1")
    return out


def cmd_surface(args):
    with open(args.input) as fh:
        ld = parse_labeled(fh.read())
    results = {"genus": ld.genus,
               "invariant": _combination_json(surface_invariant(ld))}
    status = 0
    if args.functional:
        alpha, beta, gamma = args.functional
        results["functional"] = gv_functional(surface_invariant(ld),
                                              alpha, beta, gamma, ld.genus)
    if args.check_commute:
        ok = commuting_check(ld)
        results["commutes"] = ok
        if not ok:
            status = 1
    report = {"input": ld.diagram.canonical_code(), "results": results,
              "diagnostics": []}
    if args.figures:
        from .plotting import render_to_file
        path = _figure_path(args.figures, 1)
        render_to_file(ld.diagram, path)
        report["figure"] = path
    _emit(report)
    return status


# -- argument wiring -------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="gaussloop",
        description="Loop invariants of virtual knots from Gauss codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate invariants on each line")
    p.add_argument("--phi", action="append", type=_parse_triple,
                   metavar="I,J,K", help="integer loop invariant (repeatable)")
    p.add_argument("--phifr", action="store_true",
                   help="group-valued framed invariant (support array)")
    p.add_argument("--phigen", action="store_true",
                   help="configuration-sum invariant (normal form terms)")
    p.add_argument("--weights", action="store_true",
                   help="crossing weights in arrow order")
    p.add_argument("--writhe", action="store_true")
    p.add_argument("--figures", metavar="DIR",
                   help="render each diagram to DIR as a chord-diagram image")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="random-walk invariance certification")
    p.add_argument("--invariant", type=_parse_invariant, required=True,
                   metavar="{phi:I,J,K|phifr|phigen}")
    p.add_argument("--moves", type=int, default=200)
    p.add_argument("--walks", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--frame-preserving", action="store_true")
    p.add_argument("--even-r1", action="store_true",
                   help="perform kink moves in pairs (writhe-parity "
                        "preserving walks)")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("symmetry",
                       help="invertibility/chirality/switch detection report")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("finite-type",
                       help="alternating derivative over resolutions of the "
                            "singular crossings")
    p.add_argument("--invariant", type=_parse_invariant, required=True,
                   metavar="{phi:I,J,K|phifr}")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_finite_type)

    p = sub.add_parser("surface",
                       help="invariants of homology-labeled diagrams")
    p.add_argument("--functional", type=_parse_classes, metavar="A/B/C",
                   help="evaluate the counting functional at three classes, "
                        "each a comma-separated coordinate vector")
    p.add_argument("--check-commute", action="store_true",
                   help="compare the weight image against the virtual "
                        "invariant of the underlying diagram")
    p.add_argument("--figures", metavar="DIR")
    p.add_argument("input")
    p.set_defaults(func=cmd_surface)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        args.seed = _default_seed()
    if hasattr(args, "invariant"):
        args.raw_invariant = (args.invariant[0] if args.invariant[1] is None
                              else "phi:%d,%d,%d" % args.invariant[1])
    try:
        return args.func(args)
    except ValueError as err:
        sys.stderr.write("error: %s\n" % err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
