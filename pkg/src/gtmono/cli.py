"""Command-line front end for basis generation, checks and expansions.

Exit codes: 0 success, 1 verification/precondition failure, 2 usage or
parse errors.  All numeric output is exact rational text; `--approx` adds
decimal renderings next to (never instead of) the exact fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import TaylorTable, reconstruct, taylor_expand
from .bases import branch_decompose_harmonic, enumerate_labels, fischer_decompose, format_label, harmonic_element, monogenic_element, spinor_element
from .expressions import ParseError, format_multivector, format_poly, parse_poly
from .verify import CHECK_NAMES, run_check

SPACES = ("harmonic", "clifford", "spinor")


def _spinor_alg(m: int) -> int:
    return 2 * ((m + 1) // 2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtmono", description="Exact Gelfand-Tsetlin bases for spherical harmonics and monogenics")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k=True):
        p.add_argument("--space", choices=SPACES, default="harmonic")
        p.add_argument("-m", type=int, default=3, help="ambient dimension (number of variables)")
        if with_k:
            p.add_argument("-k", type=int, default=2, help="degree bound")
        p.add_argument("--chirality", choices=["+", "-"], default="+")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="as_json", action="store_true")
        fmt.add_argument("--text", dest="as_json", action="store_false")
        p.set_defaults(as_json=False)
        p.add_argument("--approx", action="store_true", help="add decimal renderings")

    p_basis = sub.add_parser("basis", help="emit labeled basis elements")
    common(p_basis)

    p_check = sub.add_parser("check", help="run a named verification")
    common(p_check)
    p_check.add_argument("--property", choices=CHECK_NAMES, required=True)

    p_expand = sub.add_parser("expand", help="generalized Taylor table of an input polynomial")
    common(p_expand, with_k=False)
    p_expand.add_argument("--input", default="-", help="expression file or '-' for stdin")
    p_expand.add_argument("--roundtrip", action="store_true", help="verify expand-then-reconstruct equality")

    p_dec = sub.add_parser("decompose", help="branch or Fischer decomposition of an input polynomial")
    common(p_dec, with_k=False)
    p_dec.add_argument("--property", choices=["branch", "fischer"], required=True)
    p_dec.add_argument("--input", default="-", help="expression file or '-' for stdin")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _attach_approx(obj):
    """Recursively add re_approx/im_approx floats beside exact rational fields."""
    if isinstance(obj, dict):
        if "re" in obj and "im" in obj and isinstance(obj["re"], str):
            from .scalars import parse_rational

            obj["re_approx"] = float(parse_rational(obj["re"]))
            obj["im_approx"] = float(parse_rational(obj["im"]))
        for value in obj.values():
            _attach_approx(value)
    elif isinstance(obj, list):
        for value in obj:
            _attach_approx(value)
    return obj


def _approx_poly_text(p) -> str:
    parts = []
    for exp, coeff in p.terms_sorted():
        for blade, value in coeff.blades_sorted():
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exp) if e)
            name = "e" + "".join(str(i) for i in blade) if blade else ""
            sym = "*".join(s for s in (mono, name) if s)
            z = value.approx()
            txt = f"({z.real:.6g}{z.imag:+.6g}i)"
            parts.append(f"{txt}*{sym}" if sym else txt)
    return " + ".join(parts) if parts else "0"


def _emit_json(payload, approx: bool):
    if approx:
        _attach_approx(payload)
    print(json.dumps(payload, indent=2))


def _cmd_basis(args) -> int:
    m, k = args.m, args.k
    entries = []
    if args.space == "harmonic":
        for label in enumerate_labels("harmonic", m, k):
            entries.append({"label": format_label(k, label), "poly": harmonic_element(m, k, label)})
    elif args.space == "clifford":
        for label in enumerate_labels("monogenic", m, k):
            entries.append({"label": format_label(k, label), "poly": monogenic_element(m, k, label)})
    else:
        for label in enumerate_labels("monogenic", m, k):
            for nu in enumerate_labels("spinor", m, k):
                entries.append(
                    {"label": format_label(k, label), "nu": nu, "poly": spinor_element(m, k, label, nu, args.chirality)}
                )
    if args.as_json:
        payload = []
        for entry in entries:
            item = {"label": entry["label"]}
            if "nu" in entry:
                item["nu"] = entry["nu"]
            item["poly"] = entry["poly"].to_json()
            payload.append(item)
        _emit_json(payload, args.approx)
    else:
        for entry in entries:
            name = entry["label"] + (";" + entry["nu"] if "nu" in entry else "")
            line = f"{name}\t{format_poly(entry['poly'])}"
            if args.approx:
                line += f"\t~ {_approx_poly_text(entry['poly'])}"
            print(line)
    return 0


def _cmd_check(args) -> int:
    try:
        ok, lines = run_check(args.property, args.space, args.m, args.k, args.chirality)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.as_json:
        payload = {
            "property": args.property,
            "space": args.space,
            "m": args.m,
            "k": args.k,
            "passed": ok,
            "detail": lines,
        }
        _emit_json(payload, args.approx)
    else:
        for line in lines:
            print(line)
    return 0 if ok else 1


def _cmd_expand(args) -> int:
    m = args.m
    alg = _spinor_alg(m) if args.space == "spinor" else m
    try:
        g = parse_poly(_read_input(args.input), m, alg=alg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        table = taylor_expand(g, "harmonic" if args.space == "harmonic" else args.space, args.chirality)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    roundtrip_ok = None
    if args.roundtrip:
        rebuilt = reconstruct(table, args.space, m, args.chirality, alg=g.alg)
        roundtrip_ok = rebuilt == g
    if args.as_json:
        _emit_json(table.to_json(), args.approx)
    else:
        for (k, label, nu), coeff in table.items_sorted():
            name = format_label(k, label) + (";" + nu if nu is not None else "")
            line = f"k={k}\t{name}\t{format_multivector(coeff)}"
            if args.approx:
                z = coeff.scalar_part().approx()
                line += f"\t~ ({z.real:.6g}{z.imag:+.6g}i)" if coeff.is_scalar() else ""
            print(line)
    if roundtrip_ok is not None:
        print(f"roundtrip exact: {'true' if roundtrip_ok else 'false'}", file=sys.stderr)
        if not roundtrip_ok:
            return 1
    return 0


def _cmd_decompose(args) -> int:
    m = args.m
    try:
        if args.property == "branch":
            g = parse_poly(_read_input(args.input), m)
        else:
            g = parse_poly(_read_input(args.input), m - 1, alg=m)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.property == "branch":
            parts = list(enumerate(branch_decompose_harmonic(g)))
        else:
            parts = fischer_decompose(g, m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.as_json:
        payload = [{"j": j, "component": component.to_json()} for j, component in parts]
        _emit_json(payload, args.approx)
    else:
        for j, component in parts:
            line = f"j={j}\t{format_poly(component)}"
            if args.approx:
                line += f"\t~ {_approx_poly_text(component)}"
            print(line)
    return 0


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {"basis": _cmd_basis, "check": _cmd_check, "expand": _cmd_expand, "decompose": _cmd_decompose}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
