"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 inadmissible triple (without
``--force``), 3 internal self-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import audit as audit_mod
from .brill_noether import (
    InadmissibleError,
    admissible,
    enumerate_admissible,
    gonality,
    lm_bundle,
    lm_twist,
    rho,
)
from .exact_chow import K3Context, SelfCheckError, format_rational
from .scroll_invariants import (
    hilb_dim_ruled,
    mukai_classification,
    scroll_report,
    sigma_invariants,
)
from .sheaf_calc import SheafData, mukai_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INADMISSIBLE = 2
EXIT_SELF_CHECK = 3

FORMATS = ("json", "csv", "markdown")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}, expected a..b") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _integral(value: Any) -> Any:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise SelfCheckError(f"non-integral final invariant {value}")
        return value.numerator
    return value


# rendering


def _flatten(obj: Any, prefix: str = "") -> dict[str, Any]:
    out: dict[str, Any] = {}
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}{k}."))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            out.update(_flatten(v, f"{prefix}{i}."))
    else:
        out[prefix[:-1]] = obj
    return out


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(format_rational(value))
    return str(value)


def render_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: Sequence[dict[str, Any]]) -> str:
    flat = [_flatten(row) for row in rows]
    header: list[str] = []
    for row in flat:
        for key in row:
            if key not in header:
                header.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in flat:
        writer.writerow([_cell(row.get(key)) for key in header])
    return buf.getvalue()


def render_markdown(rows: Sequence[dict[str, Any]]) -> str:
    flat = [_flatten(row) for row in rows]
    header: list[str] = []
    for row in flat:
        for key in row:
            if key not in header:
                header.append(key)
    cells = [[_cell(row.get(key)).replace("|", "\\|") for key in header] for row in flat]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]

    def line(values: Iterable[str]) -> str:
        return "| " + " | ".join(v.ljust(w) for v, w in zip(values, widths)) + " |"

    out = [line(header), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out.extend(line(r) for r in cells)
    return "\n".join(out) + "\n"


def emit(obj: Any, rows: Sequence[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return render_json(obj)
    if fmt == "csv":
        return render_csv(rows)
    return render_markdown(rows)


# commands


def _bundle_dict(ctx: K3Context, s: SheafData) -> dict[str, Any]:
    v = mukai_vector(ctx, s)
    return {
        "rank": s.rank,
        "c1_mult": s.c1_mult,
        "c2": s.c2_pts,
        "h0": s.h0,
        "mukai": [v.r0, v.c1_mult, _integral(v.s)],
    }


def invariants_payload(g: int, r: int, d: int, force: bool = False) -> dict[str, Any]:
    verdict = admissible(g, r, d)
    if not verdict and not force:
        raise InadmissibleError(g, r, d, verdict.reasons)
    ctx = K3Context(g)
    scroll = scroll_report(g, r, d, force=force)
    ruled = sigma_invariants(g, r, d, force=force)
    flags: dict[str, Any] = {"admissible": verdict.ok, "forced": force}
    if not verdict.ok:
        flags["note"] = "numerically inadmissible: " + "; ".join(verdict.reasons)
    return {
        "params": {"g": g, "r": r, "d": d},
        "bundle_E": _bundle_dict(ctx, lm_bundle(g, r, d, force=force)),
        "bundle_F": _bundle_dict(ctx, lm_twist(g, r, d, force=force)),
        "scroll": {
            "R": scroll.R,
            "delta_symbolic": scroll.delta_symbolic,
            "delta_printed": scroll.delta_printed,
            "rho": scroll.rho,
            "dim_Mv": scroll.dim_Mv,
            "h1_TP": scroll.h1_TP,
            "h0_N": scroll.h0_N,
            "hilb_dim": scroll.hilb_dim,
        },
        "ruled": {
            "h0_restricted": ruled.h0_restricted,
            "degree_sigma": ruled.degree_sigma,
            "n": ruled.n,
            "h": ruled.h,
            "hilb_dim_ruled": ruled.hilb_dim_ruled,
            "kd_bound": ruled.kd_bound,
            "kd_strict": ruled.kd_strict,
            "unisecant_dim": ruled.unisecant_dim,
        },
        "flags": flags,
    }


def cmd_invariants(args: argparse.Namespace) -> tuple[str, int]:
    payload = invariants_payload(args.g, args.r, args.d, force=args.force)
    return emit(payload, [payload], args.format), EXIT_OK


def enumerate_rows(g: int, r_max: int) -> list[dict[str, Any]]:
    rows = []
    for t in enumerate_admissible(g, r_max):
        rep = scroll_report(t.g, t.r, t.d)
        rows.append(
            {
                "r": t.r,
                "d": t.d,
                "rho": t.rho,
                "R": rep.R,
                "delta_symbolic": rep.delta_symbolic,
                "delta_printed": rep.delta_printed,
                "dim_Mv": rep.dim_Mv,
                "hilb_dim": rep.hilb_dim,
            }
        )
    return rows


def cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    if args.g < 3:
        raise UsageError(f"--g must be at least 3, got {args.g}")
    if args.r_max < 1:
        raise UsageError(f"--r-max must be at least 1, got {args.r_max}")
    rows = enumerate_rows(args.g, args.r_max)
    obj = {"g": args.g, "r_max": args.r_max, "rows": rows}
    return emit(obj, rows, args.format), EXIT_OK


def cmd_audit(args: argparse.Namespace) -> tuple[str, int]:
    g_min, g_max = args.g
    if g_min < 3:
        raise UsageError(f"genus range must start at 3 or above, got {g_min}")
    if args.r < 1:
        raise UsageError(f"--r must be at least 1, got {args.r}")
    try:
        report = audit_mod.run_audit(g_min, g_max, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = report.to_dict()
    code = EXIT_SELF_CHECK if report.self_check_failures() else EXIT_OK
    if args.format == "markdown":
        summary = [{"status": k, "count": v} for k, v in data["summary"].items()]
        text = render_markdown(summary) + "\n" + render_markdown(data["records"])
        return text, code
    return emit(data, data["records"], args.format), code


def table_rows(kind: str, g_min: int, g_max: int) -> list[dict[str, Any]]:
    rows: list[dict[str, Any]] = []
    for g in range(g_min, g_max + 1):
        if kind == "gonality":
            gam = gonality(g)
            rows.append({"g": g, "gonality": gam, "rho": rho(g, 1, gam)})
        elif kind == "mukai":
            m = mukai_classification(g)
            rows.append(
                {"g": g, "dominant": m.dominant, "gen_finite": m.gen_finite, "note": m.note}
            )
        elif kind == "ruled":
            n = 6 * g - 6
            rows.append({"g": g, "n": n, "h": 4 * g - 5, "hilb_dim_ruled": hilb_dim_ruled(n, g)})
        else:
            raise UsageError(f"unknown table kind {kind!r}")
    return rows


def cmd_table(args: argparse.Namespace) -> tuple[str, int]:
    g_min, g_max = args.g
    if g_min < 3:
        raise UsageError(f"genus range must start at 3 or above, got {g_min}")
    rows = table_rows(args.kind, g_min, g_max)
    return emit({"kind": args.kind, "rows": rows}, rows, args.format), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k3scroll", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p: argparse.ArgumentParser, default: str = "json") -> None:
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("invariants", help="all invariants of one (g, r, d)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--force", action="store_true", help="evaluate inadmissible triples")
    add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("enumerate", help="admissible triples of a genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r-max", type=int, default=1)
    add_format(p, "markdown")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("audit", help="reconcile printed values over a grid")
    p.add_argument("--g", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--r", "--r-max", dest="r", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("table", help="gonality, mukai or ruled tables")
    p.add_argument("kind")
    p.add_argument("--g", type=parse_range, required=True, metavar="A..B")
    add_format(p, "markdown")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except InadmissibleError as exc:
        print(f"k3scroll: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except SelfCheckError as exc:
        print(f"k3scroll: self-check failed: {exc}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except (UsageError, ValueError) as exc:
        print(f"k3scroll: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    if code == EXIT_SELF_CHECK:
        print("k3scroll: self-check failed: an always-matching claim mismatched",
              file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
