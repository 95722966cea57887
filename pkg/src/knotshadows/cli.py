"""Command-line front end.

Subcommands: enumerate, stats, homfly, identify, census, fertile,
mnfertile, fnumber, variation, verify, table-check.  Every report embeds
the run configuration and the table version, and repeated runs with the
same configuration produce byte-identical output (worker count only
changes wall time).

Exit status: 0 on success, 1 on a domain error (a machine-readable error
object is printed) or a failed verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Mapping, Sequence

from . import codes, diagram, fertility, knotbase, polynomial
from .errors import KnotShadowsError, ResourceLimit

DEFAULT_HOMFLY_CEILING = 12
DEFAULT_SHADOW_CEILING = 7

TABLE_ENV = "KNOTSHADOWS_TABLE"


def _plain(obj):
    """Recursively convert report values into JSON-ready primitives."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, Mapping):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, codes.Shadow):
        return obj.canonical_key
    return obj


def _load_lines(path: str) -> list[str]:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--table", default=None,
                        help=f"knot table file (default ${TABLE_ENV} or the bundled table)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", default=None, help="write the report to this file")
    parser.add_argument("--figures", action="store_true",
                        help="render companion PNG figures next to --out")
    parser.add_argument("--ceiling", type=int, default=DEFAULT_HOMFLY_CEILING,
                        help="crossing ceiling for polynomial computation")
    parser.add_argument("--shadow-ceiling", type=int, default=DEFAULT_SHADOW_CEILING,
                        help="crossing ceiling for shadow sweeps")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for sweeps (results identical)")
    parser.add_argument("--reducible", dest="allow_reducible", action="store_true",
                        default=True, help="include shadows with nugatory crossings")
    parser.add_argument("--no-reducible", dest="allow_reducible", action="store_false")
    parser.add_argument("--include-unknot", dest="include_unknot", action="store_true",
                        default=True, help="admit the unknot as a fertility target")
    parser.add_argument("--exclude-unknot", dest="include_unknot", action="store_false")
    parser.add_argument("--mirror-quotient", action="store_true",
                        help="record shadow keys as reflection-quotiented (code "
                             "classes already absorb reflection; metadata only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotshadows", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate shadow classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--irreducible", action="store_true",
                   help="skip shadows with a nugatory crossing")
    p.add_argument("--count-only", action="store_true")
    _common(p)

    p = sub.add_parser("stats", help="shadow or diagram statistics")
    p.add_argument("--code", help="shadow code string")
    p.add_argument("--bits", help="over/under bit string (makes it a diagram)")
    p.add_argument("--in", dest="infile", help="file with one code per line")
    _common(p)

    p = sub.add_parser("homfly", help="skein polynomial of diagrams")
    p.add_argument("--code", help="shadow code string")
    p.add_argument("--bits", help="over/under bit string")
    p.add_argument("--pd", help="PD code line")
    p.add_argument("--in", dest="infile", help="file with one diagram per line")
    _common(p)

    p = sub.add_parser("identify", help="identify diagrams against the table")
    p.add_argument("--code", help="shadow code string")
    p.add_argument("--bits", help="over/under bit string")
    p.add_argument("--pd", help="PD code line")
    p.add_argument("--in", dest="infile", help="file with one diagram per line")
    _common(p)

    p = sub.add_parser("census", help="support census of shadows")
    p.add_argument("--code", help="shadow code string")
    p.add_argument("--in", dest="infile", help="file with one shadow per line")
    _common(p)

    p = sub.add_parser("fertile", help="fertility of a knot")
    p.add_argument("--knot", required=True)
    _common(p)

    p = sub.add_parser("mnfertile", help="(m,n)-fertility of a knot")
    p.add_argument("--knot", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("fnumber", help="fertility number of a knot")
    p.add_argument("--knot", required=True)
    p.add_argument("--m-max", type=int, default=None)
    _common(p)

    p = sub.add_parser("variation", help="minimum-crossing diagram spreads")
    p.add_argument("--knot", required=True)
    p.add_argument("--chirality", choices=("canonical", "both"), default="canonical")
    _common(p)

    p = sub.add_parser("verify", help="check the inequality suite")
    p.add_argument("--knot")
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-c", type=int, default=None)
    _common(p)

    p = sub.add_parser("table-check", help="validate a knot table file")
    _common(p)

    return parser


def _config_dict(args: argparse.Namespace, base: knotbase.KnotBase) -> dict:
    keys = ("command", "ceiling", "shadow_ceiling", "workers", "allow_reducible",
            "include_unknot", "mirror_quotient", "format")
    cfg = {k: getattr(args, k) for k in keys if hasattr(args, k)}
    for extra in ("n", "m", "knot", "irreducible", "max_c", "m_max", "chirality"):
        if hasattr(args, extra) and getattr(args, extra) is not None:
            cfg[extra] = getattr(args, extra)
    cfg["table_version"] = base.version
    cfg["table_digest"] = base.digest
    return cfg


def _resolve_table(args: argparse.Namespace) -> knotbase.KnotBase:
    path = args.table or os.environ.get(TABLE_ENV)
    if path:
        return knotbase.load_table(path)
    return knotbase.default_table()


def _warn_cost(args: argparse.Namespace) -> None:
    if args.shadow_ceiling > DEFAULT_SHADOW_CEILING:
        n = args.shadow_ceiling
        words = 1
        for k in range(1, 2 * n, 2):
            words *= k
        print(f"warning: shadow ceiling {n} sweeps ~{words} codes times 2^{n} "
              f"assignments; expect a long run", file=sys.stderr)
    if args.ceiling > 16:
        print(f"warning: polynomial ceiling {args.ceiling} can explode the "
              f"skein recursion", file=sys.stderr)


def _input_diagrams(args: argparse.Namespace) -> list[tuple[str, diagram.Diagram]]:
    items: list[tuple[str, diagram.Diagram]] = []
    if args.code is not None:
        shadow = codes.parse_shadow(args.code)
        bits = args.bits if args.bits is not None else "0" * shadow.crossings
        items.append((f"{args.code} | {bits}", diagram.assign(shadow, bits)))
    if getattr(args, "pd", None):
        items.append((args.pd, diagram.parse_pd(args.pd)))
    if args.infile:
        for line in _load_lines(args.infile):
            items.append((line, diagram.parse_diagram(line)))
    if not items:
        raise KnotShadowsError("no input diagram; use --code, --pd or --in")
    return items


def _input_shadows(args: argparse.Namespace) -> list[codes.Shadow]:
    shadows = []
    if args.code is not None:
        shadows.append(codes.parse_shadow(args.code))
    if getattr(args, "infile", None):
        shadows.extend(codes.parse_shadow(line) for line in _load_lines(args.infile))
    if not shadows:
        raise KnotShadowsError("no input shadow; use --code or --in")
    return shadows


# --------------------------------------------------------------------------
# command handlers: each returns (result, rows, text lines, figure painters)

Painter = Callable[[Path], Path]


def cmd_enumerate(args, base):
    if args.n > args.shadow_ceiling:
        raise ResourceLimit(
            f"n={args.n} above the shadow ceiling {args.shadow_ceiling}")
    shadows = codes.enumerate_shadows(args.n, not args.irreducible)
    rows = []
    for sh in shadows:
        st = codes.shadow_stats(sh)
        rows.append({"canonical_key": sh.canonical_key or "-",
                     "c": st.c, "s": st.s, "g": st.g})
    result = {"n": args.n, "irreducible": args.irreducible, "count": len(shadows)}
    if not args.count_only:
        result["shadows"] = [r["canonical_key"] for r in rows]
    text = [str(len(shadows))] if args.count_only else \
        [r["canonical_key"] for r in rows] + [f"count {len(shadows)}"]
    return result, rows, text, []


def cmd_stats(args, base):
    rows = []
    if args.bits is not None:
        for label, d in _input_diagrams(args):
            st = diagram.stats(d)
            rows.append({"input": label, **dataclasses.asdict(st)})
    else:
        for sh in _input_shadows(args):
            st = codes.shadow_stats(sh)
            rows.append({"input": sh.key_word() or "-", **dataclasses.asdict(st)})
    text = [" ".join(f"{k}={v}" for k, v in row.items() if k != "input")
            for row in rows]
    return {"stats": rows}, rows, text, []


def cmd_homfly(args, base):
    rows = []
    for label, d in _input_diagrams(args):
        p = polynomial.homfly(d, ceiling=args.ceiling)
        db = polynomial.bounds(p)
        rows.append({
            "input": label,
            "polynomial": str(p),
            "serialized": p.serialize(),
            "max_deg_z": db.max_deg_z,
            "min_deg_v": db.min_deg_v,
            "max_deg_v": db.max_deg_v,
            "breadth_v": db.breadth_v,
        })
    text = [row["polynomial"] for row in rows]
    return {"polynomials": rows}, rows, text, []


def cmd_identify(args, base):
    rows = [knotbase.identification_report(d, base, ceiling=args.ceiling)
            for _, d in _input_diagrams(args)]
    text = []
    for row in rows:
        matches = ", ".join(row["matches"]) if row["matches"] else "(not in table)"
        text.append(f"{row['input']} -> {matches}")
    return {"identifications": rows}, rows, text, []


def cmd_census(args, base):
    shadows = _input_shadows(args)
    censuses = fertility.census_many(shadows, base, ceiling=args.ceiling,
                                     workers=args.workers)
    rows = []
    result = []
    for cen in censuses:
        entry = {
            "shadow": cen.shadow.canonical_key or "-",
            "names": list(cen.names),
            "witnesses": dict(cen.witnesses),
            "counts": dict(cen.counts),
            "unidentified": list(cen.unidentified),
        }
        result.append(entry)
        for nm in cen.names:
            rows.append({"shadow": entry["shadow"], "name": nm,
                         "count": cen.counts[nm], "witness": cen.witnesses[nm]})
    text = []
    for entry in result:
        text.append(f"{entry['shadow']}: " + (", ".join(entry["names"]) or "(nothing)"))
        if entry["unidentified"]:
            text.append(f"  unidentified fingerprints: {len(entry['unidentified'])}")
    painters = [lambda stem, cen=cen, i=i: _paint_census(cen, stem, i, len(censuses))
                for i, cen in enumerate(censuses)]
    return {"census": result}, rows, text, painters


def _paint_census(cen, stem: Path, index: int, total: int) -> Path:
    from . import plots
    suffix = f"_census{index}" if total > 1 else "_census"
    return plots.census_figure(cen, stem.with_name(stem.name + suffix + ".png"))


def _fertility_rows(rep: fertility.FertilityReport) -> list[dict]:
    rows = []
    for target in rep.targets:
        w = rep.witnesses.get(target)
        rows.append({
            "target": target,
            "supported": w is not None,
            "shadow": w["shadow"] if w else "",
            "bits": w["bits"] if w else "",
        })
    return rows


def cmd_fertile(args, base):
    rep = fertility.is_fertile(args.knot, base, include_unknot=args.include_unknot,
                               ceiling=args.ceiling,
                               shadow_ceiling=args.shadow_ceiling,
                               workers=args.workers)
    rows = _fertility_rows(rep)
    text = [f"{rep.knot} fertile: {str(rep.verdict).lower()}"]
    if rep.obstruction:
        text.append(f"obstruction: no minimal shadow supports {rep.obstruction}")
    for row in rows:
        if row["supported"]:
            text.append(f"  {row['target']}: shadow '{row['shadow']}' bits {row['bits']}")
    return {"report": _plain(rep)}, rows, text, []


def cmd_mnfertile(args, base):
    rep = fertility.is_mn_fertile(args.knot, args.m, args.n, base,
                                  allow_reducible=args.allow_reducible,
                                  include_unknot=args.include_unknot,
                                  ceiling=args.ceiling,
                                  shadow_ceiling=args.shadow_ceiling,
                                  workers=args.workers)
    rows = _fertility_rows(rep)
    text = [f"{rep.knot} {rep.predicate}: {str(rep.verdict).lower()}"]
    if rep.obstruction:
        text.append(f"obstruction: {rep.obstruction}")
    return {"report": _plain(rep)}, rows, text, []


def cmd_fnumber(args, base):
    value, reports = fertility.fertility_number(
        args.knot, base, m_max=args.m_max,
        allow_reducible=args.allow_reducible,
        include_unknot=args.include_unknot, ceiling=args.ceiling,
        shadow_ceiling=args.shadow_ceiling, workers=args.workers)
    rows = [{"m": m, "verdict": rep.verdict, "obstruction": rep.obstruction or ""}
            for m, rep in sorted(reports.items())]
    text = [f"fertility number of {args.knot}: {value}"]
    return {"knot": args.knot, "fertility_number": value, "scan": rows}, rows, text, []


def cmd_variation(args, base):
    mds = fertility.minimal_diagrams(args.knot, base, ceiling=args.ceiling,
                                     shadow_ceiling=args.shadow_ceiling,
                                     chirality=args.chirality)
    gc_lo, gc_hi = fertility.gc_interval(args.knot, base, mds)
    rec = base[args.knot]
    gc_ann = rec.annotation("gc")
    gc_exact = gc_ann if gc_ann is not None else (gc_lo if gc_lo == gc_hi else None)
    stats_obj = None
    if gc_exact is not None and mds:
        stats_obj = fertility.variation_stats(mds, gc_exact)
    rows = [dataclasses.asdict(md) for md in mds]
    result = {
        "knot": args.knot,
        "chirality": args.chirality,
        "gc_interval": [gc_lo, gc_hi],
        "diagrams": rows,
        "variation": _plain(stats_obj) if stats_obj else None,
    }
    text = [f"{args.knot}: {len(mds)} minimum-crossing diagram classes"]
    if stats_obj:
        text.append(f"scv={stats_obj.scv} wv={stats_obj.wv} cgd={stats_obj.cgd}")
    painters = [lambda stem: _paint_variation(args.knot, mds, stem)]
    return result, rows, text, painters


def _paint_variation(name, mds, stem: Path) -> Path:
    from . import plots
    return plots.variation_figure(name, mds, stem.with_name(stem.name + "_variation.png"))


def cmd_verify(args, base):
    if not args.all and not args.knot:
        raise KnotShadowsError("verify needs --knot NAME or --all")
    if args.all:
        limit = args.max_c if args.max_c is not None else min(7, base.max_crossings())
        names = [r.name for r in sorted(base, key=lambda r: (r.crossings, r.name))
                 if r.crossings <= limit]
    else:
        names = [args.knot]
    reports = []
    rows = []
    text = []
    for name in names:
        analysis = fertility.analyze_knot(name, base, ceiling=args.ceiling,
                                          shadow_ceiling=args.shadow_ceiling,
                                          workers=args.workers)
        rep = fertility.verify_bounds(name, base, analysis)
        reports.append(rep)
        for e in rep.entries:
            rows.append({"knot": name, "key": e.key,
                         "left": str(e.left), "right": str(e.right),
                         "holds": e.holds, "tight": e.tight})
            mark = "ok" if e.holds else "VIOLATED"
            tightmark = " (tight)" if e.tight else ""
            text.append(f"{name} {e.key}: {e.left} <= {e.right} {mark}{tightmark}")
    all_hold = all(r.all_hold for r in reports)
    text.append(f"all bounds hold: {str(all_hold).lower()}")
    result = {"reports": [_plain(r) for r in reports], "all_hold": all_hold}
    painters = [lambda stem: _paint_bounds(reports, stem)]
    return result, rows, text, painters


def _paint_bounds(reports, stem: Path) -> Path:
    from . import plots
    return plots.bounds_figure(reports, stem.with_name(stem.name + "_bounds.png"))


def cmd_table_check(args, base):
    rows = []
    for rec in base:
        rows.append({
            "name": rec.name,
            "crossings": rec.crossings,
            "annotations": " ".join(f"{k}={v}" for k, v in sorted(rec.annotations.items())),
            "fingerprint": knotbase.fingerprint_hash(rec.fingerprint),
        })
    result = {
        "records": len(base),
        "version": base.version,
        "digest": base.digest,
        "collisions": [list(g) for g in base.collisions],
        "covers_primes_through": max(
            (c for c in range(3, 10) if base.covers_primes_through(c)), default=0),
    }
    text = [f"{result['records']} records, version {base.version!r}",
            f"fingerprint collisions: {len(base.collisions)}"]
    return result, rows, text, []


_HANDLERS = {
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
    "homfly": cmd_homfly,
    "identify": cmd_identify,
    "census": cmd_census,
    "fertile": cmd_fertile,
    "mnfertile": cmd_mnfertile,
    "fnumber": cmd_fnumber,
    "variation": cmd_variation,
    "verify": cmd_verify,
    "table-check": cmd_table_check,
}


def _render(report: dict, rows: list[dict], text: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    return "\n".join(text) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.figures and not args.out:
        print("error: --figures requires --out", file=sys.stderr)
        return 2
    try:
        _warn_cost(args)
        base = _resolve_table(args)
        result, rows, text, painters = _HANDLERS[args.command](args, base)
        report = {
            "command": args.command,
            "config": _config_dict(args, base),
            "result": result,
        }
        rendered = _render(report, rows, text, args.format)
        if args.out:
            Path(args.out).write_text(rendered)
            if args.figures:
                stem = Path(args.out).with_suffix("")
                for paint in painters:
                    print(f"figure: {paint(stem)}")
        else:
            sys.stdout.write(rendered)
        if args.command == "verify" and not result.get("all_hold", True):
            return 1
        return 0
    except KnotShadowsError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        return 1


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
