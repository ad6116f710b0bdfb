"""
dahakit command line. Every invocation prints exactly one JSON document on
stdout; exit status 0 = ok, 1 = a check failed, 2 = usage or input error.
JSON input is read from --json TEXT, --input FILE, or stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import jsonio
from .convolution import convolve
from .daha import Daha, InvariantViolation
from .extweyl import ExtendedAffineWeylGroup
from .parahoric import enumerate_standard, to_classical_index
from .rootsys import ADJOINT, SIMPLY_CONNECTED, build_root_datum, parse_type, weyl_group_order
from .verify import DEFAULT_SEED, SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _indices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return sorted({int(x) for x in text.replace(" ", "").split(",") if x != ""})


def _datum_args(p: argparse.ArgumentParser):
    p.add_argument("--type", required=True, help="Cartan letter (A..G) or a label such as B3")
    p.add_argument("--rank", type=int, help="rank (omit when --type carries it)")
    p.add_argument("--adjoint", action="store_true", help="adjoint flavor (default simply connected)")


def _input_args(p: argparse.ArgumentParser):
    p.add_argument("--json", dest="json_text", help="JSON input as a string")
    p.add_argument("--input", help="file with JSON input ('-' for stdin)")


def _datum(args):
    letter = args.type.strip().upper()
    if len(letter) > 1:
        letter, rank = parse_type(letter)
        if args.rank is not None and args.rank != rank:
            raise UsageError("--rank disagrees with the rank in --type")
    else:
        if args.rank is None:
            raise UsageError("--rank is required")
        rank = args.rank
    return build_root_datum(letter, rank, ADJOINT if args.adjoint else SIMPLY_CONNECTED)


def _read_json(args):
    if args.json_text is not None:
        text = args.json_text
    elif args.input and args.input != "-":
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return json.loads(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dahakit", description="Exact computations with W~, the graded DAHA "
                     "and double-coset convolution algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    rs = sub.add_parser("rootsys", help="finite root data").add_subparsers(dest="action", required=True)
    _datum_args(rs.add_parser("info", help="Cartan matrix, roots, theta, rho, h_dual, Killing form"))

    wx = sub.add_parser("wext", help="extended affine Weyl group").add_subparsers(dest="action", required=True)
    for name, text in (("mul", "product of a JSON list of elements"),
                       ("inv", "inverse of an element"),
                       ("act", "{element, weight|coweight} -> image"),
                       ("word", "reduced word and omega part")):
        p = wx.add_parser(name, help=text)
        _datum_args(p)
        _input_args(p)
    p = wx.add_parser("cosets", help="minimal double-coset representatives up to a length")
    _datum_args(p)
    p.add_argument("--P", default="")
    p.add_argument("--Q", default="")
    p.add_argument("--max-length", type=int, default=3)

    dh = sub.add_parser("daha", help="graded DAHA").add_subparsers(dest="action", required=True)
    for name, text in (("mul", "product of a JSON list of elements"),
                       ("nf", "normal form of an element or {\"product\": [...]}"),
                       ("specialize", "image modulo delta and u")):
        p = dh.add_parser(name, help=text)
        _datum_args(p)
        _input_args(p)
    p = dh.add_parser("verify", help="relation suite, or the operator-model oracle")
    _datum_args(p)
    p.add_argument("--oracle", choices=["polyrep"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int)
    p.add_argument("--timing", action="store_true")

    cv = sub.add_parser("conv", help="double-coset convolution").add_subparsers(dest="action", required=True)
    p = cv.add_parser("mul", help="f1 *_Q f2 for a JSON list [f1, f2]")
    _datum_args(p)
    _input_args(p)
    p.add_argument("--P", required=True)
    p.add_argument("--Q", required=True)
    p.add_argument("--R", required=True)

    ph = sub.add_parser("parahoric", help="standard parahoric types").add_subparsers(dest="action", required=True)
    _datum_args(ph.add_parser("list", help="enumerate standard parahoric types"))

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    vf.add_argument("--types", help="e.g. A1..A4,B2..B4,D4,G2 (default depends on the suite)")
    vf.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vf.add_argument("--samples", type=int)
    vf.add_argument("--sc-only", action="store_true", help="skip the adjoint flavor")
    vf.add_argument("--timing", action="store_true", help="include wall-clock duration in the report")
    return parser


# -- handlers -------------------------------------------------------------------


def _rootsys(args):
    d = _datum(args)
    s = jsonio.frac_to_json
    return 0, {
        "datum": d.descriptor,
        "cartan_matrix": [list(r) for r in d.cartan],
        "positive_roots": [list(r) for r in d.positive_roots],
        "theta": [s(x) for x in d.theta],
        "theta_dual": [s(x) for x in d.theta_dual],
        "rho": [s(x) for x in d.rho],
        "h_dual": d.h_dual,
        "killing_gram": [list(r) for r in d.killing_gram],
        "weyl_order": weyl_group_order(d.cartan_type, d.rank),
    }


def _elt_out(W, a):
    out = jsonio.elt_to_json(a)
    out["reduced_word"] = jsonio.word_to_json(W.reduced_word(a))
    out["length"] = W.length(a)
    return out


def _wext(args):
    d = _datum(args)
    W = ExtendedAffineWeylGroup(d)
    if args.action == "cosets":
        P, Q = _indices(args.P), _indices(args.Q)
        reps = W.double_cosets(P, Q, args.max_length)
        return 0, {"P": P, "Q": Q, "max_length": args.max_length, "reps": [_elt_out(W, r) for r in reps]}
    obj = _read_json(args)
    if args.action == "mul":
        if not isinstance(obj, list):
            raise ValueError("wext mul expects a JSON list of elements")
        x = W.identity
        for e in obj:
            x = W.mul(x, jsonio.elt_from_json(W, e))
        return 0, _elt_out(W, x)
    if args.action == "inv":
        return 0, _elt_out(W, W.inv(jsonio.elt_from_json(W, obj)))
    if args.action == "word":
        a = jsonio.elt_from_json(W, obj)
        return 0, {**jsonio.word_to_json(W.reduced_word(a)), "length": W.length(a)}
    # act
    a = jsonio.elt_from_json(W, obj["element"])
    if "weight" in obj:
        return 0, {"weight": jsonio.weight_to_json(W.act_on_weight(a, jsonio.weight_from_json(obj["weight"])))}
    if "coweight" in obj:
        eta = jsonio.coweight_from_json(obj["coweight"])
        return 0, {"coweight": jsonio.coweight_to_json(W.act_on_coweight(a, eta))}
    raise ValueError("wext act expects a 'weight' or 'coweight' field")


def _daha(args):
    d = _datum(args)
    if args.action == "verify":
        cfg = SuiteConfig(seed=args.seed, samples=args.samples, flavors=(d.flavor,))
        suite = "oracle" if args.oracle else "daha"
        report = run_suite(suite, [(d.cartan_type, d.rank)], cfg)
        print(f"{suite}: {report.duration:.2f}s", file=sys.stderr)
        return (0 if report.passed else 1), report.to_json(args.timing)
    H = Daha(d)
    obj = _read_json(args)
    if args.action == "mul":
        if not isinstance(obj, list) or not all(isinstance(f, (list, dict)) for f in obj):
            raise ValueError("daha mul expects a JSON list of elements")
        a = H.product(jsonio.daha_from_json(H, f) for f in obj)
    else:
        a = jsonio.daha_from_json(H, obj)
        if args.action == "specialize":
            a = H.specialize(a)
    deg, homogeneous = H.degree(a)
    return 0, {"element": jsonio.daha_to_json(H, a), "text": H.format(a),
               "degree": None if not a else int(deg), "homogeneous": homogeneous}


def _conv(args):
    d = _datum(args)
    W = ExtendedAffineWeylGroup(d)
    P, Q, R = _indices(args.P), _indices(args.Q), _indices(args.R)
    obj = _read_json(args)
    if isinstance(obj, dict):
        obj = [obj.get("f1"), obj.get("f2")]
    if not isinstance(obj, list) or len(obj) != 2:
        raise ValueError("conv mul expects [f1, f2]")
    f1, f2 = (jsonio.dcoset_from_json(W, f) for f in obj)
    if (sorted(f1.P), sorted(f1.Q)) != (P, Q) or (sorted(f2.P), sorted(f2.Q)) != (Q, R):
        raise ValueError("input functions do not live on P\\W/Q and Q\\W/R")
    return 0, jsonio.dcoset_to_json(convolve(f1, f2))


def _parahoric(args):
    d = _datum(args)
    W = ExtendedAffineWeylGroup(d)
    out = []
    for P in enumerate_standard(d):
        try:
            cls = list(to_classical_index(P))
        except ValueError:
            cls = None
        out.append({"subset": list(P.indices), "classical_index": cls,
                    "weyl_order": len(W.parabolic_subgroup(P.subset))})
    return 0, out


def _verify(args):
    flavors = (SIMPLY_CONNECTED,) if args.sc_only else (SIMPLY_CONNECTED, ADJOINT)
    cfg = SuiteConfig(seed=args.seed, samples=args.samples, flavors=flavors)
    report = run_suite(args.suite, args.types, cfg)
    print(f"{args.suite}: {report.duration:.2f}s", file=sys.stderr)
    return (0 if report.passed else 1), report.to_json(args.timing)


_HANDLERS = {"rootsys": _rootsys, "wext": _wext, "daha": _daha, "conv": _conv,
             "parahoric": _parahoric, "verify": _verify}


def run(argv: Sequence[str] | None = None) -> tuple[int, object]:
    """Parse and execute; returns (exit code, JSON-able result)."""
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        return 2, {"error": "usage", "message": str(exc)}
    except json.JSONDecodeError as exc:
        return 2, {"error": "malformed_json", "message": str(exc)}
    except (ValueError, KeyError, IndexError, TypeError, OSError) as exc:
        return 2, {"error": "invalid_input", "message": f"{type(exc).__name__}: {exc}"}
    except InvariantViolation as exc:
        return 1, {"error": "invariant_violation", "message": str(exc)}


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        code, result = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if code != 0 and isinstance(result, dict) and "error" in result:
        print(result["message"], file=sys.stderr)
    sys.stdout.write(json.dumps(result, sort_keys=True, indent=1) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
