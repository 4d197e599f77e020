"""Command-line front end.

Commands: basis, grid, seed, trace, classify, obstructions, genfun-check,
registry, selftest.  Exit codes: 0 success, 1 mathematical negative (a
NotPreserved classification or a failed identity check), 2 usage error,
3 internal validation failure.  GRIDFORGE_PREC overrides the default
precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from gridforge import acceptance
from gridforge.basis import HAT, INF, build_basis, build_grid, duality_residual
from gridforge.leveldata import registry_dump
from gridforge.qseries import DEFAULT_PREC
from gridforge.seedsynth import SynthesisError, family_audit, synthesize_seed
from gridforge.traceops import (
    classify,
    genfun_check,
    genfun_level4_closed_form,
    obstructions,
    trace,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _default_prec() -> int:
    env = os.environ.get("GRIDFORGE_PREC")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"GRIDFORGE_PREC is not an integer: {env!r}")
    return DEFAULT_PREC


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None,
                        help="working precision (default 60; "
                             "env GRIDFORGE_PREC)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None,
                        help="output path (default stdout)")

    p = _Parser(prog="gridforge",
                description="Exact canonical bases, modular grids and "
                            "trace operators for genus-zero Gamma_0(N).")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add_parser("basis", help="print canonical basis elements")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--space", choices=(INF, HAT), default=INF)
    sp.add_argument("--count", type=int, default=5)

    sp = add_parser("grid", help="print both sides of a modular grid")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--check-duality", action="store_true",
                    help="also report the exact duality residual")

    sp = add_parser("seed", help="synthesize a first basis element")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--json", dest="audit_json", action="store_true",
                    help="emit the spanning-family audit as JSON")

    sp = add_parser("trace", help="trace a basis element to a divisor level")
    sp.add_argument("--from", dest="from_level", type=int, required=True)
    sp.add_argument("--to", dest="to_level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--space", choices=(INF, HAT), default=INF)
    sp.add_argument("--index", type=int, required=True)

    sp = add_parser("classify", help="does the trace preserve duality?")
    sp.add_argument("--from", dest="from_level", type=int, required=True)
    sp.add_argument("--to", dest="to_level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)

    sp = add_parser("obstructions",
                    help="obstruction pairs of the traced identities")
    sp.add_argument("--from", dest="from_level", type=int, required=True)
    sp.add_argument("--to", dest="to_level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)

    sp = add_parser("genfun-check",
                    help="verify traced generating-function identities")
    sp.add_argument("--from", dest="from_level", type=int, required=True)
    sp.add_argument("--to", dest="to_level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--side", choices=("k", "dual", "both"), default="both")
    sp.add_argument("--max-index", type=int, default=12)
    sp.add_argument("--level4-closed-form", action="store_true",
                    help="check the level-4 closed form instead")

    add_parser("registry", help="dump the level registry as JSON")
    add_parser("selftest", help="run the acceptance suite")
    return p


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _series_text(s) -> str:
    return str(s)


def _cmd_basis(args, prec) -> int:
    b = build_basis(args.level, args.weight, args.space, args.count, prec)
    if args.format == "json":
        doc = [{"N": b.N, "k": b.k, "space": b.space, "m": m,
                "series": b.element(m).to_json_dict()} for m in b.indices]
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = [f"f_{{{b.k},{m}}}^({b.N}) = {b.element(m)}"
                 if b.space == INF else
                 f"g_{{{b.k},{m}}}^({b.N}) = {b.element(m)}"
                 for m in b.indices]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_grid(args, prec) -> int:
    explicit = args.prec is not None or "GRIDFORGE_PREC" in os.environ
    g = build_grid(args.level, args.weight, args.count,
                   prec if explicit else None)
    residual = (duality_residual(g, args.count, args.count)
                if args.check_duality else None)
    if args.format == "json":
        doc = {
            "N": g.N, "k": g.k,
            "fside": [{"m": m, "series": g.fside.element(m).to_json_dict()}
                      for m in g.fside.indices],
            "gside": [{"n": n, "series": g.gside.element(n).to_json_dict()}
                      for n in g.gside.indices],
        }
        if args.check_duality:
            doc["duality_residual"] = str(residual)
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = [f"weight {g.k} side:"]
        lines += [f"  f_{{{g.k},{m}}} = {g.fside.element(m)}"
                  for m in g.fside.indices]
        lines.append(f"weight {2 - g.k} side:")
        lines += [f"  g_{{{2 - g.k},{n}}} = {g.gside.element(n)}"
                  for n in g.gside.indices]
        if args.check_duality:
            lines.append(f"duality residual: {residual}")
        _emit(args, "\n".join(lines))
    if args.check_duality and residual != 0:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_seed(args, prec) -> int:
    series = synthesize_seed(args.level, args.weight, prec)
    if args.audit_json or args.format == "json":
        doc = {"level": args.level, "weight": args.weight,
               "series": series.to_json_dict()}
        if args.audit_json:
            doc["family"] = family_audit(args.level, args.weight, prec=prec)
        _emit(args, json.dumps(doc, indent=2))
    else:
        _emit(args, _series_text(series))
    return EXIT_OK


def _cmd_trace(args, prec) -> int:
    rep = trace(args.from_level, args.to_level, args.weight, args.space,
                args.index, prec)
    if args.format == "json":
        _emit(args, json.dumps(rep.to_json_dict(), indent=2))
    else:
        if rep.applicable:
            combo = " + ".join(f"({c})*[{i}]" for i, c in rep.combination) \
                or "0"
            _emit(args, f"trace = {rep.expansion}\ncombination: {combo}")
        else:
            _emit(args, f"not determined: {rep.reason}")
    return EXIT_OK if rep.applicable else EXIT_NEGATIVE


def _cmd_classify(args) -> int:
    c = classify(args.from_level, args.to_level, args.weight)
    if args.format == "json":
        _emit(args, json.dumps(c.to_json_dict(), indent=2))
    else:
        _emit(args, "Preserved" if c.preserved
              else f"NotPreserved ({c.case})")
    return EXIT_OK if c.preserved else EXIT_NEGATIVE


def _cmd_obstructions(args, prec) -> int:
    ob = obstructions(args.from_level, args.to_level, args.weight, prec)
    if args.format == "json":
        _emit(args, json.dumps(ob.to_json_dict(), indent=2))
    else:
        if ob.is_empty:
            _emit(args, "no obstruction pairs (duality preserved)")
        else:
            lines = []
            for p in ob.pairs:
                lines.append(
                    f"[{p.side}-side] f_{{{p.f_weight},{p.f_index}}}"
                    f"^({p.f_level}) * g_{{{p.g_weight},{p.g_index}}}"
                    f"^({p.g_level})")
                lines.append(f"    f = {p.f}")
                lines.append(f"    g = {p.g}")
            _emit(args, "\n".join(lines))
    return EXIT_OK if ob.is_empty else EXIT_NEGATIVE


def _cmd_genfun(args) -> int:
    if args.level4_closed_form:
        ok = genfun_level4_closed_form(args.weight, args.max_index)
    else:
        ok = genfun_check(args.from_level, args.to_level, args.weight,
                          args.max_index, side=args.side)
    if args.format == "json":
        _emit(args, json.dumps({"holds": ok}))
    else:
        _emit(args, "identity holds" if ok else "identity FAILS")
    return EXIT_OK if ok else EXIT_NEGATIVE


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        prec = args.prec if args.prec is not None else _default_prec()
        if prec < 10:
            raise UsageError("precision must be >= 10")
        if args.command == "basis":
            return _cmd_basis(args, prec)
        if args.command == "grid":
            return _cmd_grid(args, prec)
        if args.command == "seed":
            return _cmd_seed(args, prec)
        if args.command == "trace":
            return _cmd_trace(args, prec)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "obstructions":
            return _cmd_obstructions(args, prec)
        if args.command == "genfun-check":
            return _cmd_genfun(args)
        if args.command == "registry":
            _emit(args, json.dumps(registry_dump(), indent=2))
            return EXIT_OK
        if args.command == "selftest":
            return EXIT_OK if acceptance.run_all() else EXIT_INTERNAL
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SynthesisError as exc:
        print(f"internal validation failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, IndexError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
