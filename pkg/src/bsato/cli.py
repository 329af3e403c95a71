"""Command-line front end: ``bsato <command> [files] [flags]``.

Input files hold ``{"vars": n, "monomials": [[...], ...]}``. Factored
polynomials are read and written as ``{"factors": [{"root": "-3/2", "mult": 1}, ...]}``
sorted by increasing ``-root``. A bare fixture name such as ``pairs3`` may be
given in place of a path when no such file exists.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 computation error or
failed consistency check.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .bsengine import bernstein_sato, bw_generator, compose_thom_sebastiani
from .conegen import ExponentMatrix, af_generators
from .errors import BsatoError, InvalidInput, NonRationalFactor, ZeroEliminationIdeal
from .exactalg import FactoredBPoly, format_rational, parse_rational
from .newton import check_roots_and_jumps, enumeration_bound, jumping_coefficients, lct, multiplier_membership, newton_polyhedron

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


def fixture_names() -> list[str]:
    root = resources.files("bsato") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    return resources.files("bsato") / "fixtures" / f"{name}.json"


def _read_json(source):
    path = Path(source)
    if not path.exists() and source in fixture_names():
        text = fixture_path(source).read_text()
    else:
        try:
            text = path.read_text()
        except OSError as e:
            raise InvalidInput(f"cannot read {source}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{source}: malformed JSON ({e.msg})") from e


def parse_input(doc) -> ExponentMatrix:
    """Validate an input document and build the exponent matrix."""
    if not isinstance(doc, dict) or "vars" not in doc or "monomials" not in doc:
        raise InvalidInput('input must be an object with "vars" and "monomials"')
    n = doc["vars"]
    mons = doc["monomials"]
    if type(n) is not int or n < 1:
        raise InvalidInput('"vars" must be a positive integer')
    if not isinstance(mons, list) or not mons:
        raise InvalidInput("at least one monomial is required")
    seen = []
    for m in mons:
        if not isinstance(m, list) or len(m) != n or any(type(x) is not int for x in m):
            raise InvalidInput(f"monomial {m!r} is not a list of {n} integers")
        if any(x < 0 for x in m):
            raise InvalidInput(f"monomial {m} has a negative exponent")
        if not any(m):
            raise InvalidInput("the constant monomial 1 is not allowed")
        m = tuple(m)
        if m in seen:
            print(f"warning: duplicate monomial {list(m)} removed", file=sys.stderr)
            continue
        seen.append(m)
    return ExponentMatrix.from_monomials(seen, n)


def load_input(source) -> ExponentMatrix:
    return parse_input(_read_json(source))


def factored_to_doc(f: FactoredBPoly) -> dict:
    return {"factors": [{"root": format_rational(-a), "mult": m} for a, m in f.items()]}


def doc_to_factored(doc) -> FactoredBPoly:
    if not isinstance(doc, dict) or not isinstance(doc.get("factors"), list):
        raise InvalidInput('factored polynomial must be an object with a "factors" list')
    acc = {}
    for item in doc["factors"]:
        if not isinstance(item, dict) or set(item) != {"root", "mult"}:
            raise InvalidInput(f"bad factor entry {item!r}")
        mult = item["mult"]
        if type(mult) is not int or mult < 1:
            raise InvalidInput(f"multiplicity {mult!r} must be a positive integer")
        try:
            alpha = -parse_rational(item["root"])
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidInput(f"bad root {item['root']!r}") from e
        if alpha in acc:
            raise InvalidInput(f"root {item['root']} listed twice")
        acc[alpha] = mult
    return FactoredBPoly(acc)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"not an exact rational: {text!r}") from e


def _vector_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as e:
        raise InvalidInput(f"not an integer vector: {text!r}") from e


def _jump_list(jumps) -> list[dict]:
    return [{"value": format_rational(v), "witness": list(x)} for v, x in jumps]


def _rationals(values) -> list[str]:
    return [format_rational(v) for v in values]


# Each command returns (payload, text lines, exit code).


def cmd_bf(args):
    A = load_input(args.input)
    t0 = time.perf_counter()
    res = bernstein_sato(A)
    out = {"bf": factored_to_doc(res.bf)}
    lines = [f"b_f(s) = {res.bf}"]
    meta = {
        "generators": res.af_generator_count,
        "codim": res.codim,
        "bz": factored_to_doc(res.bz),
        "expanded": str(res.bf_expanded),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    if not args.no_meta:
        out["meta"] = meta
        lines += [
            f"expanded: {meta['expanded']}",
            f"generators: {meta['generators']}",
            f"codim: {meta['codim']}",
            f"b_Z(s) = {res.bz}",
            f"seconds: {meta['seconds']}",
        ]
    return out, lines, EXIT_OK


def cmd_bz(args):
    A = load_input(args.input)
    t0 = time.perf_counter()
    res = bernstein_sato(A)
    out = {"bz": factored_to_doc(res.bz), "codim": res.codim}
    lines = [f"b_Z(s) = {res.bz}", f"codim: {res.codim}"]
    if not args.no_meta:
        out["meta"] = {"bf": factored_to_doc(res.bf), "seconds": round(time.perf_counter() - t0, 3)}
        lines += [f"b_f(s) = {res.bf}", f"seconds: {out['meta']['seconds']}"]
    return out, lines, EXIT_OK


def cmd_jumps(args):
    A = load_input(args.input)
    P = newton_polyhedron(A)
    c = lct(P)
    top = _rational_arg(args.max) if args.max is not None else c + A.n
    if top < c:
        raise InvalidInput(f"--max {format_rational(top)} is below the log canonical threshold {format_rational(c)}")
    jumps = jumping_coefficients(P, top)
    out = {"lct": format_rational(c), "max": format_rational(top), "jumps": _jump_list(jumps)}
    lines = [f"lct: {out['lct']}", f"max: {out['max']}"]
    lines += [f"{format_rational(v)} at {list(x)}" for v, x in jumps]
    if not args.no_meta:
        out["meta"] = {"box_bound": enumeration_bound(P, top)}
        lines.append(f"box bound: {out['meta']['box_bound']}")
    return out, lines, EXIT_OK


def cmd_member(args):
    A = load_input(args.input)
    nu = _vector_arg(args.exponent)
    alpha = _rational_arg(args.alpha)
    if len(nu) != A.n:
        raise InvalidInput(f"--exponent needs {A.n} entries, got {len(nu)}")
    if any(x < 0 for x in nu):
        raise InvalidInput("--exponent entries must be nonnegative")
    if alpha <= 0:
        raise InvalidInput("--alpha must be positive")
    ans = multiplier_membership(newton_polyhedron(A), nu, alpha)
    out = {"exponent": nu, "alpha": format_rational(alpha), "member": ans}
    return out, ["true" if ans else "false"], EXIT_OK


def cmd_check(args):
    A = load_input(args.input)
    t0 = time.perf_counter()
    rep = check_roots_and_jumps(A)
    chk = rep.check
    out = {
        "pass": chk.passed,
        "lct": format_rational(rep.lct),
        "min_root": format_rational(chk.min_root),
        "lct_matches": chk.lct_matches,
        "window_jumps": _rationals(chk.window_jumps),
        "missing_from_roots": _rationals(chk.missing_from_roots),
        "roots_not_jumps": _rationals(chk.roots_not_jumps),
        "bf": factored_to_doc(rep.bf),
        "jumps": _jump_list(rep.jumps),
    }
    lines = [
        f"b_f(s) = {rep.bf}",
        f"lct: {out['lct']}",
        f"smallest root: {out['min_root']}",
        f"lct matches: {'yes' if chk.lct_matches else 'no'}",
        f"window jumps: {', '.join(out['window_jumps'])}",
        f"jumps missing from roots: {', '.join(out['missing_from_roots']) or 'none'}",
        f"roots that are not jumps: {', '.join(out['roots_not_jumps']) or 'none'}",
    ]
    if not args.no_meta:
        out["meta"] = {"box_bound": rep.meta["box_bound"], "seconds": round(time.perf_counter() - t0, 3)}
        lines += [f"box bound: {out['meta']['box_bound']}", f"seconds: {out['meta']['seconds']}"]
    lines.append("PASS" if chk.passed else "FAIL")
    return out, lines, EXIT_OK if chk.passed else EXIT_COMPUTE


def cmd_compose(args):
    bf = doc_to_factored(_read_json(args.bf))
    bg = doc_to_factored(_read_json(args.bg))
    h = compose_thom_sebastiani(bf, bg)
    return factored_to_doc(h), [str(h)], EXIT_OK


def cmd_bw(args):
    A = load_input(args.input)
    w = _vector_arg(args.w)
    g = bw_generator(A, w)
    return {"w": w, "generator": str(g)}, [str(g)], EXIT_OK


def cmd_gens(args):
    A = load_input(args.input)
    gens = [str(g) for g in af_generators(A)]
    return {"count": len(gens), "generators": gens}, gens, EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-meta", action="store_true", help="omit timing and other metadata")

    p = _Parser(prog="bsato", description="Bernstein-Sato polynomials and multiplier ideals of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, input_file=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if input_file:
            sp.add_argument("input", help="input JSON file or fixture name")
        sp.set_defaults(func=func)
        return sp

    add("bf", cmd_bf, "b-function b_f(s)")
    add("bz", cmd_bz, "b-function of the subscheme, b_f(s - codim)")
    sp = add("jumps", cmd_jumps, "jumping coefficients with witnesses")
    sp.add_argument("--max", help="largest value to report (default lct + n)")
    sp = add("member", cmd_member, "monomial membership in a multiplier ideal")
    sp.add_argument("--exponent", required=True, help="comma separated exponent vector")
    sp.add_argument("--alpha", required=True, help="positive rational")
    add("check", cmd_check, "compare lct and jumps with the roots of b_f(-s)")
    sp = add("compose", cmd_compose, "Thom-Sebastiani composition of two b-functions", input_file=False)
    sp.add_argument("bf")
    sp.add_argument("bg")
    sp = add("bw", cmd_bw, "generator of the several-variable ideal for a weight vector")
    sp.add_argument("--w", required=True, help="comma separated nonnegative weights")
    add("gens", cmd_gens, "finite generating set of the shift ideal")
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        payload, lines, code = args.func(args)
    except (NonRationalFactor, ZeroEliminationIdeal) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except (InvalidInput, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BsatoError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
