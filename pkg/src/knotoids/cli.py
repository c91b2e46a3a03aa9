"""Command-line front end: ``knotoids <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import closure as closure_mod
from .chord import chord_of_singular, regular_diagram
from .codec import (
    coeff_envelope,
    emit_closed,
    emit_ktd,
    parse_ktd,
    poly_envelope,
    poly_from_envelope,
    to_json,
)
from .core import Kind, KnotoidDiagram
from .errors import KnotoidError, KtdSyntaxError
from .invariants import (
    INVARIANTS,
    MAX_STATE_CROSSINGS,
    kauffman_bracket,
    normalized_bracket,
    skein_extend,
    turaev_extended_bracket,
)
from .moves import random_walk
from .poly import LaurentPoly2, exp_coeff, exp_coeff2


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path) -> KnotoidDiagram:
    return parse_ktd(_read(path))


def _poly_fn(name: str, n_max: int):
    if name == "bracket":
        return lambda d: kauffman_bracket(d, n_max)
    if name == "f":
        return lambda d: normalized_bracket(d, n_max)
    if name == "turaev":
        return lambda d: turaev_extended_bracket(d, None, n_max)
    return INVARIANTS[name]


def _coeff_table(p, order: int) -> dict[tuple[int, ...], object]:
    if isinstance(p, LaurentPoly2):
        return {(k, l): v for k in range(order + 1) for l, v in exp_coeff2(p, k).items()}
    return {(n,): exp_coeff(p, n) for n in range(order + 1)}


def _print_table(name: str, table: dict, fmt: str, out):
    if fmt == "json":
        print(to_json(coeff_envelope(name, table)), file=out)
        return
    for key, v in sorted(table.items()):
        label = f"v{key[0]}" if len(key) == 1 else f"t[{key[0]},{key[1]}]"
        print(f"{label} = {v}", file=out)


def cmd_compute(args, out):
    d = _load(args.input)
    base = {"vcoeff": "f", "tcoeff": "turaev"}.get(args.inv, args.inv)
    fn = _poly_fn(base, args.max_crossings)
    value = skein_extend(fn, d) if args.skein else fn(d)
    if args.inv in ("vcoeff", "tcoeff"):
        _print_table(args.inv, _coeff_table(value, args.order), args.format, out)
    elif args.format == "json":
        print(to_json(poly_envelope(args.inv, value)), file=out)
    else:
        print(value, file=out)


def cmd_closure(args, out):
    d = _load(args.input)
    out.write(emit_closed(closure_mod.CLOSURES[args.type](d)))


def cmd_chord(args, out):
    print(chord_of_singular(_load(args.input)).w, file=out)


def cmd_regular(args, out):
    out.write(emit_ktd(regular_diagram(args.w)))


def cmd_fuzz(args, out):
    d = _load(args.input)
    checks = [c for c in args.check.split(",") if c] if args.check else []
    for c in checks:
        if c not in INVARIANTS or c == "bracket":
            raise KnotoidError(f"cannot check {c!r}; choose from f, turaev, affine, vbar")
    singular = d.count(Kind.SINGULAR) > 0
    end = random_walk(d, args.steps, args.seed, args.max_crossings)
    print(f"# seed {args.seed} steps {args.steps}", file=out)
    out.write(emit_ktd(end))
    changed = []
    for c in checks:
        fn = INVARIANTS[c]
        before = skein_extend(fn, d) if singular else fn(d)
        after = skein_extend(fn, end) if singular else fn(end)
        status = "ok" if before == after else "CHANGED"
        print(f"# {c}: {status} ({after})", file=out)
        if before != after:
            changed.append(c)
    if changed:
        raise KnotoidError("invariants changed under moves: " + ", ".join(changed))


def cmd_expand(args, out):
    try:
        env = json.loads(_read(args.input))
        p = poly_from_envelope(env)
    except json.JSONDecodeError as exc:
        raise KtdSyntaxError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from None
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise KtdSyntaxError(f"not a polynomial envelope: {exc}", 1) from None
    _print_table(env.get("invariant", "poly"), _coeff_table(p, args.order), args.format, out)


def cmd_validate(args, out):
    text = _read(args.input)
    try:
        parse_ktd(text)
    except KnotoidError as exc:
        rep = getattr(exc, "report", None)
        for v in (rep.violations if rep else []):
            print(f"{v.code}: {v.message}", file=out)
        raise
    print("valid", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotoids", description="Knotoid diagram invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute an invariant of a KTD diagram")
    c.add_argument("input", nargs="?")
    c.add_argument("--inv", required=True,
                   choices=["bracket", "f", "turaev", "affine", "vbar", "vcoeff", "tcoeff"])
    c.add_argument("--skein", action="store_true", help="resolve singular crossings by the skein relation")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--order", type=int, default=3, help="highest coefficient order for vcoeff/tcoeff")
    c.add_argument("--max-crossings", type=int, default=MAX_STATE_CROSSINGS,
                   help="refuse state sums above this many crossings")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("closure", help="close a knotoid along a minimal shortcut")
    c.add_argument("input", nargs="?")
    c.add_argument("--type", required=True, choices=["u", "o", "v", "s"])
    c.set_defaults(func=cmd_closure)

    c = sub.add_parser("chord", help="winding number of a one-singularity diagram")
    c.add_argument("input", nargs="?")
    c.set_defaults(func=cmd_chord)

    c = sub.add_parser("regular", help="emit the regular diagram with winding w")
    c.add_argument("--w", type=int, required=True)
    c.set_defaults(func=cmd_regular)

    c = sub.add_parser("fuzz", help="random move walk, checking invariants")
    c.add_argument("input", nargs="?")
    c.add_argument("--steps", type=int, default=1000)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--check", default="f,turaev,affine,vbar")
    c.add_argument("--max-crossings", type=int, default=12)
    c.set_defaults(func=cmd_fuzz)

    c = sub.add_parser("expand", help="coefficients of a JSON polynomial after A = e^x")
    c.add_argument("input", nargs="?")
    c.add_argument("--order", type=int, default=3)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_expand)

    c = sub.add_parser("validate", help="parse and validate a KTD diagram")
    c.add_argument("input", nargs="?")
    c.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except KtdSyntaxError as exc:
        print(f"error: KtdSyntaxError: {exc}", file=sys.stderr)
        return 2
    except KnotoidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
