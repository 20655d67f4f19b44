"""Command line front end.

Exit codes: 0 no FAIL verdict, 1 some FAIL verdict, 2 input or validation
error, 3 invariant violation, 4 surgery not large, 5 search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import CuspObsError, InvalidSurface
from .io import load_json, parse_cusps, parse_request, parse_surface
from .lattice import from_preset, require_valid, validate_surface
from .obstruction import check_genus_feasibility, run_check
from .report import ConfigurationReport, Report
from .rfunction import r_table, r_table_findings, witness
from .search import search_report
from .semigroup import CuspDescriptor, alexander_from_gaps, build_semigroup, format_polynomial
from .surgery import SurgeryProblem, d_invariant_table


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit_report(args, report: Report) -> int:
    report.stamp(args.reproducible)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(_report_text(report))
    if args.out:
        Path(args.out).write_text(report.to_json())
    return report.exit_code


def _report_text(report: Report) -> str:
    lines = []
    for f in report.surface_findings:
        lines.append(f"[{'ok' if f.holds else '!!'}] {f.name}: {f.detail}")
    for c in report.configurations:
        cusps = " + ".join(str(CuspDescriptor.from_dict(d)) for d in c.cusps)
        gf = c.genus_feasibility
        lines.append(f"\nconfiguration {cusps}  g={c.g}  genus {gf.status} "
                     f"({gf.config_genus} vs {gf.required_genus})  -> {c.summary}")
        for v in c.verdicts:
            tail = f"  ({v.reason})" if v.reason else ""
            lines.append(f"  D={list(v.D)!s:<12} lhs={v.lhs!s:<4} rhs={v.rhs!s:<4} "
                         f"margin={v.margin!s:<4} {v.status}{tail}")
    if "search" in report.extra:
        st = report.extra["search"]
        lines.append(f"\nsearch: target genus {st['target_genus']}, catalog {st['catalog_size']}, "
                     f"examined {st['candidates_examined']}, feasible {st['feasible']}")
    return "\n".join(lines) + "\n"


def cmd_semigroup(args) -> int:
    given = [(k, v) for k, v in (("gens", args.gens), ("char", args.char), ("gaps", args.gaps))
             if v is not None]
    if len(given) != 1:
        raise CuspObsError("give exactly one of --gens, --char, --gaps")
    (kind, values), = given
    table = build_semigroup(CuspDescriptor(kind, tuple(values)))
    alex = alexander_from_gaps(table.gaps)
    payload = {
        "descriptor": table.descriptor.to_dict(),
        "generators": list(table.generators) if table.generators else None,
        "gaps": list(table.gaps),
        "delta": table.delta,
        "conductor": table.conductor,
        "symmetric": table.symmetric,
        "alexander": list(alex),
    }
    gens = ", ".join(map(str, table.generators)) if table.generators else "(gap-set mode)"
    text = (f"descriptor: {table.descriptor}\n"
            f"generators: {gens}\n"
            f"gaps: {{{', '.join(map(str, table.gaps))}}}\n"
            f"delta: {table.delta}\n"
            f"conductor: {table.conductor}\n"
            f"alexander: {format_polynomial(alex)}\n"
            f"coefficients: {list(alex)}")
    _emit(args, payload, text)
    return 0


def cmd_r_table(args) -> int:
    cfg = parse_cusps(load_json(args.config).get("cusps"))
    table = r_table(cfg, args.max)
    rows = []
    for m, value in enumerate(table.values):
        row = {"m": m, "R": value}
        if args.witness:
            row["witness"] = list(witness(cfg, m))
        rows.append(row)
    findings = [{"name": n, "detail": d} for n, d in r_table_findings(cfg, table)]
    payload = {"cusps": [d.to_dict() for d in cfg.descriptors], "g": cfg.g,
               "horizon": args.max, "rows": rows, "findings": findings}
    lines = [f"configuration {cfg}  g={cfg.g}"]
    for row in rows:
        extra = f"  {tuple(row['witness'])}" if args.witness else ""
        lines.append(f"{row['m']:>5} {row['R']:>5}{extra}")
    for f in findings:
        lines.append(f"note: {f['name']}: {f['detail']}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def cmd_d_invariants(args) -> int:
    cfg = parse_cusps(load_json(args.config).get("cusps"))
    prob = SurgeryProblem(cfg, args.q)
    table = d_invariant_table(prob)
    payload = {"cusps": [d.to_dict() for d in cfg.descriptors], "g": cfg.g, "q": args.q,
               "d": {str(m): _frac(v) for m, v in table.items()}}
    lines = [f"configuration {cfg}  g={cfg.g}  q={args.q}"]
    lines += [f"{m:>5} {_frac(v)}" for m, v in table.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    data = load_json(args.request)
    req = parse_request(data)
    findings = require_valid(req.surface)
    config = ConfigurationReport(
        cusps=[d.to_dict() for d in req.cfg.descriptors], g=req.cfg.g,
        genus_feasibility=check_genus_feasibility(req.surface, req.C, req.cfg),
        verdicts=run_check(req))
    report = Report(command="check", input=data, surface_findings=findings,
                    configurations=[config], extra={"mode": req.mode})
    return _emit_report(args, report)


def cmd_search(args) -> int:
    return _emit_report(args, search_report(load_json(args.spec)))


def cmd_validate_surface(args) -> int:
    if args.preset:
        S = from_preset(args.preset)
    elif args.file:
        data = load_json(args.file)
        S = parse_surface(data.get("surface", data))
    else:
        raise CuspObsError("give a surface file or --preset")
    findings = validate_surface(S)
    payload = {"surface": S.label, "findings": [f.to_dict() for f in findings]}
    text = "\n".join(f"[{'ok' if f.holds else '!!'}] {f.name}: {f.detail}" for f in findings)
    _emit(args, payload, text)
    return 0 if all(f.holds for f in findings) else 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the JSON result to this path")
    common.add_argument("--reproducible", action="store_true",
                        help="omit the timestamp so identical inputs give identical bytes")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="cuspobs", description="Cusp invariants and rational cuspidal curve obstructions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semigroup", parents=[common], help="semigroup, delta, Alexander polynomial")
    p.add_argument("--gens", type=_ints)
    p.add_argument("--char", type=_ints)
    p.add_argument("--gaps", type=_ints)
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("r-table", parents=[common], help="R(0..M) of a configuration")
    p.add_argument("config")
    p.add_argument("--max", "-M", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_r_table)

    p = sub.add_parser("d-invariants", parents=[common], help="d-invariants of q-surgery")
    p.add_argument("config")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_d_invariants)

    p = sub.add_parser("check", parents=[common], help="evaluate an obstruction request")
    p.add_argument("request")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", parents=[common], help="search cusp configurations")
    p.add_argument("spec")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("validate-surface", parents=[common], help="surface lattice findings")
    p.add_argument("file", nargs="?")
    p.add_argument("--preset")
    p.set_defaults(func=cmd_validate_surface)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSurface as exc:
        for f in exc.findings:
            if not f.holds:
                print(f"finding {f.name} failed: {f.detail}", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except CuspObsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, TypeError, KeyError) as exc:
        # malformed values inside otherwise parseable JSON
        print(f"error: bad input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
