"""``csskein`` command-line interface.

Every subcommand prints one JSON document on stdout.  Exit codes: 0 on
success, 2 on invalid input (error JSON on stderr), 3 on I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bracket import (
    HomflyDepthError,
    ambient_normalized,
    homfly_eval,
    homfly_poly,
    jones,
    jones_in_t,
    kauffman_bracket,
    su2_pipeline_bracket,
)
from .corpus import CORPUS, named
from .coupling import (
    Coupling,
    CouplingError,
    gln_matrices,
    gln_resolution_coeffs,
    homfly_params,
    su2_coeffs,
    su2_resolution_coeffs,
)
from .diagram import DiagramError, LinkDiagram, components, linking_matrix, parse_pd, validate, writhe
from .expectation import GaugeSpec, gauge_expectation, u1_expectation
from .goldman import CurveSystem, GoldmanError, TorusCurve, goldman_gl, goldman_su2, torus_bracket
from .laurent import PolyError
from .states import StateCapError
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def num(x):
    """JSON-ready number at 12 significant digits; complex becomes ``{"re", "im"}``."""
    if isinstance(x, complex):
        if x.imag == 0:
            return num(x.real)
        return {"re": num(x.real), "im": num(x.imag)}
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    return float(f"{float(x):.12g}")


def parse_number(text: str):
    try:
        v = complex(text.replace("i", "j")) if any(c in text for c in "ij") else float(text)
    except ValueError:
        raise InputError(f"not a number: {text!r}") from None
    return v


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_diagram(args) -> LinkDiagram:
    if args.corpus:
        return named(args.corpus)
    if not args.pd:
        raise InputError("give a diagram with --pd FILE or --corpus NAME")
    return parse_pd(_read(args.pd).strip())


def coupling_from(args) -> Coupling:
    if args.lam is not None and args.beta is not None:
        raise InputError("give at most one of --lambda and --beta")
    if args.lam is not None:
        return Coupling.from_lambda(parse_number(args.lam))
    return Coupling(parse_number(args.beta) if args.beta is not None else 0.0)


# ----------------------------------------------------------------------------
# subcommands


def cmd_parse(args):
    d = load_diagram(args)
    count, _ = components(d)
    return {"diagram": d.to_json(), "pd": d.to_pd(), "crossings": len(d.crossings),
            "components": count, "writhe": writhe(d), "violations": validate(d)}


def cmd_bracket(args):
    d = load_diagram(args)
    if args.normalized:
        poly = ambient_normalized(d)
    else:
        poly = kauffman_bracket(d)
    out = {"normalized": args.normalized, "poly": poly.to_json(), "text": str(poly)}
    if args.beta is not None:
        c = Coupling(parse_number(args.beta))
        out["q"] = num(su2_coeffs(c).q)
        out["value"] = num(poly.eval_numeric(su2_coeffs(c).q))
        if not args.normalized:
            out["su2_pipeline"] = num(su2_pipeline_bracket(d, c))
    return out


def cmd_jones(args):
    d = load_diagram(args)
    vq = jones(d)
    vt, var = jones_in_t(d)
    return {"q": {"poly": vq.to_json(), "text": str(vq)},
            var: {"poly": vt.to_json(), "text": str(vt)}}


def cmd_expect(args):
    d = load_diagram(args)
    c = coupling_from(args)
    group = {"u1": "U1", "su2": "SU2", "gl": "GLN", "un": "UN"}[args.group]
    n = args.n if group in ("GLN", "UN") else None
    if group in ("GLN", "UN") and n is None:
        raise InputError(f"--group {args.group} needs --n")
    lv = parse_number(args.loop_value) if args.loop_value is not None else None
    spec = GaugeSpec(group, c, n=n, loop_value=lv)
    value = complex(gauge_expectation(d, spec))
    out = {"value_re": num(value.real), "value_im": num(value.imag), "writhe": writhe(d),
           "components": components(d)[0], "states": 2 ** len(d.crossings)}
    if group == "U1":
        out["closed_form"] = num(complex(u1_expectation(d, c)))
    return out


def cmd_linking(args):
    d = load_diagram(args)
    return {"writhe": writhe(d), "linking_matrix": linking_matrix(d), "components": components(d)[0]}


def cmd_homfly(args):
    d = load_diagram(args)
    poly = homfly_poly(d)
    out = {"poly": poly.to_json(), "text": str(poly)}
    if args.n is not None or args.beta is not None:
        n = args.n if args.n is not None else 2
        c = Coupling(parse_number(args.beta) if args.beta is not None else 0.0)
        q, z = homfly_params(n, c)
        out.update({"n": n, "q": num(q), "z": num(z), "value": num(homfly_eval(d, q, z))})
    return out


def cmd_coeffs(args):
    c = Coupling(parse_number(args.beta))
    s = su2_coeffs(c)
    out = {"beta": num(c.beta), "a": num(s.a), "b": num(s.b), "q": num(s.q), "delta": num(s.delta),
           "sqrt_ab": num(s.sqrt_ab),
           "su2": {str(e): [num(v) for v in su2_resolution_coeffs(c, e)] for e in (1, -1)}}
    if args.n is not None:
        _, _, delta = gln_matrices(args.n)
        out["gln"] = {"n": args.n, "Delta": num(delta),
                      "coeffs": {str(e): [num(v) for v in gln_resolution_coeffs(args.n, c, e)] for e in (1, -1)}}
        try:
            q, z = homfly_params(args.n, c)
            out["gln"]["homfly"] = {"q": num(q), "z": num(z)}
        except CouplingError as exc:
            out["gln"]["homfly"] = {"error": str(exc)}
    return out


def _torus_pair(text: str) -> TorusCurve:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"torus curve must look like p,q; got {text!r}") from None
    return TorusCurve(p, q)


def cmd_goldman(args):
    if args.torus:
        c1, c2 = (_torus_pair(t) for t in args.torus)
        fs = torus_bracket(c1, c2)
        return {"torus": [[c1.p, c1.q], [c2.p, c2.q]],
                "terms": [{"class": [k.p, k.q], "coeff": int(v)} for k, v in fs.terms.items()]}
    if not args.curves:
        raise InputError("goldman needs --curves FILE or --torus p,q r,s")
    try:
        obj = json.loads(_read(args.curves))
    except json.JSONDecodeError as exc:
        raise InputError(f"curve file is not JSON: {exc}") from None
    cs = CurveSystem.from_json(obj)
    fs = goldman_su2(cs) if args.su2 else goldman_gl(cs)
    return {"variant": "su2" if args.su2 else "gl", "terms": fs.to_json()}


def cmd_verify(args):
    return run_suite(args.suite, args.seed, args.count)


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="csskein", description=__doc__.splitlines()[0])
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_diagram(sp):
        sp.add_argument("--pd", help="PD code or native JSON file ('-' for stdin)")
        sp.add_argument("--corpus", choices=sorted(CORPUS), help="built-in diagram")
        return sp

    with_diagram(sub.add_parser("parse", help="validate a diagram and report its structure"))
    sp = with_diagram(sub.add_parser("bracket", help="Kauffman bracket"))
    sp.add_argument("--normalized", action="store_true", help="apply the writhe twist")
    sp.add_argument("--beta", help="also evaluate at q(beta)")
    with_diagram(sub.add_parser("jones", help="Jones polynomial"))
    sp = with_diagram(sub.add_parser("expect", help="gauge expectation by state sum"))
    sp.add_argument("--group", choices=("u1", "su2", "gl", "un"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--beta")
    sp.add_argument("--loop-value", help="override the value of a closed loop")
    with_diagram(sub.add_parser("linking", help="writhe and linking matrix"))
    sp = with_diagram(sub.add_parser("homfly", help="HOMFLY polynomial by skein tree"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--beta")
    sp = sub.add_parser("coeffs", help="coupling-derived scalars")
    sp.add_argument("--beta", required=True)
    sp.add_argument("--n", type=int)
    sp = sub.add_parser("goldman", help="Goldman bracket")
    variant = sp.add_mutually_exclusive_group()
    variant.add_argument("--gl", action="store_true")
    variant.add_argument("--su2", action="store_true")
    sp.add_argument("--curves", help="JSON curve system file")
    sp.add_argument("--torus", nargs=2, metavar=("P,Q", "R,S"))
    sp = sub.add_parser("verify", help="run a seeded invariant suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    return p


COMMANDS = {
    "parse": cmd_parse,
    "bracket": cmd_bracket,
    "jones": cmd_jones,
    "expect": cmd_expect,
    "linking": cmd_linking,
    "homfly": cmd_homfly,
    "coeffs": cmd_coeffs,
    "goldman": cmd_goldman,
    "verify": cmd_verify,
}


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {json.dumps(x)}" for x in obj)
    return f"{pad}{obj}"


def _fail(kind: str, message: str, code: int, violations=None) -> int:
    err = {"error": kind, "message": message}
    if violations:
        err["violations"] = violations
    print(json.dumps(err), file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except DiagramError as exc:
        return _fail("invalid_diagram", str(exc), EXIT_INVALID, exc.violations)
    except (InputError, GoldmanError, CouplingError, PolyError, StateCapError,
            HomflyDepthError, KeyError, ValueError) as exc:
        return _fail(type(exc).__name__, str(exc).strip("'\""), EXIT_INVALID)
    except OSError as exc:
        return _fail("io_error", str(exc), EXIT_IO)
    if args.pretty:
        print(_pretty(result))
    else:
        print(json.dumps(result, sort_keys=True))
    if args.command == "verify" and not result["passed"]:
        return 1
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
