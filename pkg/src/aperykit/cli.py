"""Command line: compute invariants, emit them, and sweep-verify closed forms.

Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import core
from . import gamma4 as g4
from . import geo_series as geo
from .binomial_ideal import hq_generators, resolution_matrices
from .errors import AperyError, ConsistencyError
from .report import Discrepancy, _jsonable
from .verify import default_jobs, sweep_gamma4, sweep_geo, verify_gamma4, verify_gamma4_ideal, verify_geo

EXIT_OK, EXIT_MISMATCH, EXIT_PARAMS = 0, 1, 2


class UsageError(AperyError, ValueError):
    pass


@dataclass
class Outcome:
    params: dict[str, Any]
    result: Any
    text: str
    table: core.AperyTable | None = None
    discrepancies: list[Discrepancy] = field(default_factory=list)
    failed: bool = False


def parse_range(spec: str) -> list[int]:
    """``7..50``, ``3`` or ``1,2,5``; bounds inclusive."""
    values: list[int] = []
    try:
        for part in spec.split(","):
            if ".." in part:
                lo, hi = part.split("..", 1)
                values.extend(range(int(lo), int(hi) + 1))
            elif part.strip():
                values.append(int(part))
    except ValueError:
        raise UsageError(f"cannot parse range {spec!r}") from None
    if not values:
        raise UsageError(f"empty range {spec!r}")
    return sorted(set(values))


def parse_gens(spec: str) -> tuple[int, ...]:
    try:
        return tuple(sorted(int(x) for x in spec.split(",") if x.strip()))
    except ValueError:
        raise UsageError(f"cannot parse generators {spec!r}") from None


def _csv_list(values) -> str:
    return ",".join(str(v) for v in values)


def _table_text(table: core.AperyTable) -> str:
    return "\n".join(_csv_list(row) for row in table.rows)


def _poly_json(poly) -> list[dict]:
    return poly.to_json()


# ---------------------------------------------------------------------------
# core


def cmd_core(args) -> Outcome:
    S = core.NumericalSemigroup(parse_gens(args.gens))
    params: dict[str, Any] = {"gens": list(S.generators)}
    what = args.what
    if what == "frobenius":
        f = core.frobenius(S)
        return Outcome(params, f, str(f))
    if what == "pf":
        pf = sorted(core.pseudo_frobenius(S))
        return Outcome(params, pf, _csv_list(pf))
    if what == "apery":
        wrt = args.wrt if args.wrt is not None else S.multiplicity
        params["wrt"] = wrt
        ap = core.apery_set(S, wrt)
        return Outcome(params, list(ap.elements), _csv_list(ap.elements))
    if what == "table":
        table = core.apery_table(S)
        return Outcome(params, [list(r) for r in table.rows], _table_text(table), table=table)
    if args.x is None:
        raise UsageError("factorizations needs --x")
    params["x"] = args.x
    facs = core.factorizations(S, args.x)
    return Outcome(params, [list(f) for f in facs], "\n".join(_csv_list(f) for f in facs))


# ---------------------------------------------------------------------------
# gamma4


def _gamma4_parts(p: g4.Gamma4Params, what: str, unshifted: bool) -> dict[str, tuple[Any, str]]:
    parts: dict[str, tuple[Any, str]] = {}
    if what in ("apery", "all"):
        row = [0] + [e.omega for e in g4.gamma4_apery(p)]
        parts["apery"] = (row, _csv_list(row))
    if what in ("pf", "all"):
        pf = sorted(g4.gamma4_pf(p, unshifted=unshifted))
        parts["pf"] = (pf, _csv_list(pf))
    if what in ("frobenius", "all"):
        f = g4.gamma4_frobenius(p)
        parts["frobenius"] = (f, str(f))
    if what in ("table", "all"):
        table = g4.gamma4_apery_table(p)
        parts["table"] = ([list(r) for r in table.rows], _table_text(table))
    if what in ("hilbert", "all"):
        hs = g4.gamma4_hilbert_series(p)
        parts["hilbert"] = ({"numerator": list(hs.numerator), "denominator": "1-x"}, str(hs))
    if what in ("tk", "all"):
        tk = g4.gamma4_tk(p)
        parts["tk"] = (list(tk), _csv_list(tk))
    if what in ("ideal", "all"):
        gens = hq_generators(p)
        parts["ideal"] = (
            [_poly_json(b.as_polynomial()) for b in gens],
            "\n".join(str(b) for b in gens),
        )
    if what in ("resolution", "all"):
        res = resolution_matrices(p)
        mats = res.matrices()
        text = "\n".join(
            f"{name} ({m.shape[0]}x{m.shape[1]}):\n{m}" for name, m in mats.items()
        )
        parts["resolution"] = (
            {"signature": list(res.signature), **{k: m.to_json() for k, m in mats.items()}},
            f"signature: {_csv_list(res.signature)}\n{text}",
        )
    return parts


def cmd_gamma4(args) -> Outcome:
    p = g4.Gamma4Params(args.a, args.d)
    params = p.as_dict()
    parts = _gamma4_parts(p, args.what, args.unshifted)
    if args.what == "all":
        result = {k: v[0] for k, v in parts.items()}
        text = "\n".join(
            f"{k}:\n{v[1]}" if "\n" in v[1] else f"{k}: {v[1]}" for k, v in parts.items()
        )
    else:
        result, text = parts[args.what]
    table = g4.gamma4_apery_table(p) if args.what == "table" else None
    out = Outcome(params, result, text, table=table)
    if args.verify:
        rep = verify_gamma4(p, gorenstein=True)
        extra = verify_gamma4_ideal(p)
        rep.checks.update(extra.checks)
        rep.discrepancies.extend(extra.discrepancies)
        out.discrepancies = rep.discrepancies
        out.failed = not rep.ok
    return out


# ---------------------------------------------------------------------------
# geo


def cmd_geo(args) -> Outcome:
    p = geo.GeoParams(args.a, args.d, args.r, args.h, args.n)
    params = p.as_dict()
    parts: dict[str, tuple[Any, str]] = {}
    if args.what in ("apery", "all"):
        row = [0] + [w for _, _, w in geo.geo_apery(p)]
        parts["apery"] = (row, _csv_list(row))
    if args.what in ("table", "all"):
        table = geo.geo_apery_table(p)
        parts["table"] = ([list(r) for r in table.rows], _table_text(table))
    if args.what in ("hilbert", "all"):
        hs = geo.geo_hilbert_series(p)
        parts["hilbert"] = ({"numerator": list(hs.numerator), "denominator": "1-x"}, str(hs))
    if args.what == "all":
        result = {k: v[0] for k, v in parts.items()}
        text = "\n".join(
            f"{k}:\n{v[1]}" if "\n" in v[1] else f"{k}: {v[1]}" for k, v in parts.items()
        )
    else:
        result, text = parts[args.what]
    table = geo.geo_apery_table(p) if args.what == "table" else None
    out = Outcome(params, result, text, table=table)
    if args.verify:
        rep = verify_geo(p, gorenstein=True)
        out.discrepancies = rep.discrepancies
        out.failed = not rep.ok
    return out


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args) -> Outcome:
    jobs = args.jobs or default_jobs()
    if args.family == "gamma4":
        params = {"family": "gamma4", "a": args.a, "d": args.d, "ideal": args.ideal}
        res = sweep_gamma4(parse_range(args.a), parse_range(args.d), jobs=jobs,
                           ideal=args.ideal, gorenstein=True)
    else:
        params = {"family": "geo", "a": args.a, "d": args.d, "r": args.r, "h": args.h, "n": args.n}
        d_values = None if args.d == "auto" else parse_range(args.d)
        res = sweep_geo(parse_range(args.a), parse_range(args.r), parse_range(args.h),
                        parse_range(args.n), d_values, jobs=jobs, gorenstein=True)
    summary = res.summary()
    result = {
        "summary": summary,
        "failures": [r.as_dict() for r in res.failures],
        "skipped": [{"params": p, "reason": why} for p, why in res.skipped],
    }
    lines = [
        f"family: {summary['family']}",
        f"instances: {summary['instances']}",
        f"passed: {summary['passed']}",
        f"failed: {summary['failed']}",
        f"skipped: {summary['skipped']}",
    ]
    for claim, count in summary["warnings"].items():
        lines.append(f"warning: {claim}: {count} instances")
    for rep in res.failures:
        bad = sorted(k for k, ok in rep.checks.items() if not ok)
        lines.append(f"FAIL {json.dumps(rep.params, sort_keys=True)}: {', '.join(bad)}")
    return Outcome(params, result, "\n".join(lines), discrepancies=res.discrepancies(),
                   failed=bool(res.failures))


# ---------------------------------------------------------------------------
# output


def render(out: Outcome, fmt: str, text_discrepancies: bool = True) -> str:
    if fmt == "json":
        doc = {
            "params": out.params,
            "result": _jsonable(out.result),
            "discrepancies": [d.as_dict() for d in out.discrepancies],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        if out.table is None:
            raise UsageError("csv output is only available for Apery tables")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["s"] + [f"r{r}" for r in range(out.table.modulus)])
        for s, row in enumerate(out.table.rows):
            writer.writerow([s, *row])
        return buf.getvalue()
    lines = [out.text]
    if text_discrepancies:
        for d in out.discrepancies:
            rec = d.as_dict()
            lines.append(
                f"{rec['severity']}: {d.claim}: computed={json.dumps(rec['computed'])} "
                f"expected={json.dumps(rec['expected'])}"
            )
    return "\n".join(lines) + "\n"


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aperykit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("core", help="invariants of an arbitrary numerical semigroup")
    pc.add_argument("--gens", required=True, help="comma-separated generators")
    pc.add_argument("what", choices=("apery", "frobenius", "pf", "table", "factorizations"))
    pc.add_argument("--wrt", type=int, help="element for the Apery set (default: multiplicity)")
    pc.add_argument("--x", type=int, help="element to factor")
    _common(pc)
    pc.set_defaults(func=cmd_core)

    pg = sub.add_parser("gamma4", help="partial sums of an arithmetic progression")
    pg.add_argument("--a", type=int, required=True)
    pg.add_argument("--d", type=int, required=True)
    pg.add_argument("what", choices=("apery", "pf", "frobenius", "table", "hilbert", "tk",
                                     "ideal", "resolution", "all"))
    pg.add_argument("--verify", action="store_true", help="cross-check against the oracles")
    pg.add_argument("--unshifted-pf", dest="unshifted", action="store_true",
                    help="list PF as omega(a-k) without subtracting a")
    _common(pg)
    pg.set_defaults(func=cmd_gamma4)

    pe = sub.add_parser("geo", help="partial sums of a geometric progression")
    for name in ("a", "d", "r", "h", "n"):
        pe.add_argument(f"--{name}", type=int, required=True)
    pe.add_argument("what", choices=("apery", "table", "hilbert", "all"))
    pe.add_argument("--verify", action="store_true")
    _common(pe)
    pe.set_defaults(func=cmd_geo)

    ps = sub.add_parser("sweep", help="verify closed forms over a parameter grid")
    ps.add_argument("family", choices=("gamma4", "geo"))
    ps.add_argument("--a", required=True, help="range like 7..50")
    ps.add_argument("--d", default="auto", help="range, or auto for geo (h n (r-1) + 1..20)")
    ps.add_argument("--r", default="2")
    ps.add_argument("--h", default="1")
    ps.add_argument("--n", default="1")
    ps.add_argument("--ideal", action="store_true", help="also verify generators and resolution")
    ps.add_argument("--jobs", type=int, default=0, help="worker processes (default: cpu count, max 8)")
    _common(ps)
    ps.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and args.family == "gamma4" and args.d == "auto":
        print("aperykit: error: sweep gamma4 needs an explicit --d range", file=sys.stderr)
        return EXIT_PARAMS
    try:
        out = args.func(args)
        text = render(out, args.format, text_discrepancies=args.command != "sweep")
    except ConsistencyError as exc:
        print(f"aperykit: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (AperyError, ValueError, OverflowError) as exc:
        print(f"aperykit: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_MISMATCH if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
