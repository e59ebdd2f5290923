"""Command-line front end.

Exit codes: 0 success or SPC verdict, 1 valid run with a negative verdict,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

from . import interchange
from .errors import SPCError
from .families import build, parse_spec
from .labeling import evaluate, format_report_table
from .schemes import HELM_VARIANTS, SCHEME_NAMES, SchemeId, run_scheme
from .search import SearchOptions, search_spc

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _print_report(rep, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(interchange.report_json(rep))
    else:
        print(format_report_table(rep))


def cmd_build(args) -> int:
    g = build(parse_spec(args.spec))
    if args.out:
        interchange.write_graph(g, args.out)
    else:
        sys.stdout.write(interchange.dumps(interchange.graph_to_dict(g)))
    print(f"|V| = {g.num_vertices}, |E| = {g.num_edges}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def _scheme_param(args) -> int | None:
    given = [p for p in (args.n, args.k) if p is not None]
    if len(given) > 1:
        raise SPCError("give either --n or --k, not both")
    return given[0] if given else None


def cmd_scheme(args) -> int:
    out = run_scheme(SchemeId(args.name, _scheme_param(args)), args.variant)
    if args.graph_out:
        interchange.write_graph(out.graph, args.graph_out)
    if args.labeling_out:
        interchange.write_labeling(out.labeling, args.labeling_out)
    if args.json:
        d = {"scheme": str(out.scheme), "variant": out.variant,
             "report": out.report.to_dict(),
             "expected": out.expected.to_dict() if out.expected else None,
             "expected_matches": out.expected.matches(out.report) if out.expected else None,
             "printed": out.printed.to_dict() if out.printed else None,
             "printed_agrees": out.printed_agrees}
        sys.stdout.write(interchange.dumps(d))
    else:
        title = str(out.scheme) + (f" [{out.variant}]" if out.variant else "")
        print(title)
        print(format_report_table(out.report))
        print(out.report.summary())
        if out.printed is not None and not out.printed_agrees:
            p = out.printed
            print(f"note: published counts v(1)={p.v_pos} v(-1)={p.v_neg} e(1)={p.e_pos} "
                  f"e(-1)={p.e_neg} [{p.source}] differ from the computed ones")
    return EXIT_OK if out.report.is_spc else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    g = interchange.read_graph(args.graph)
    rep = evaluate(g, interchange.read_labeling(args.labeling))
    _print_report(rep, args.json)
    return EXIT_OK if rep.is_spc else EXIT_NEGATIVE


def cmd_search(args) -> int:
    g = interchange.read_graph(args.graph)
    mode = "count" if args.count else "collect" if args.collect else "exists"
    fix = False if args.no_fix else (True if args.fix else None)
    res = search_spc(g, SearchOptions(mode, fix, args.max_vertices, not args.no_prune))
    d = {"exists": res.exists, "count": res.count, "nodes_explored": res.nodes_explored,
         "symmetry_factor": res.symmetry_factor,
         "witness": list(res.witness.signs) if res.witness else None}
    if res.labelings is not None:
        d["labelings"] = [list(lab.signs) for lab in res.labelings]
    if args.json:
        sys.stdout.write(interchange.dumps(d))
    else:
        print(f"exists: {str(res.exists).lower()}")
        if res.count is not None:
            print(f"count: {res.count}")
        print(f"nodes explored: {res.nodes_explored} (symmetry factor {res.symmetry_factor})")
        if res.witness:
            print("witness: " + " ".join(f"{s:+d}" for s in res.witness.signs))
    if args.witness_out and res.witness:
        interchange.write_labeling(res.witness, args.witness_out)
    return EXIT_OK if res.exists else EXIT_NEGATIVE


def parse_range(text: str) -> range:
    m = re.fullmatch(r"(\d+)(?:\.\.=?(\d+))?", text.strip())
    if not m:
        raise SPCError(f"bad range {text!r}; use A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise SPCError(f"empty range {text!r}")
    return range(lo, hi + 1)


TABLE_COLUMNS = ["n", "parity", "v_pos", "v_neg", "vertex_delta_abs", "e_pos", "e_neg",
                 "edge_delta_abs", "is_spc", "printed_v_pos", "printed_v_neg",
                 "printed_e_pos", "printed_e_neg", "printed_source", "printed_agrees"]


def table_rows(name: str, ns: range, variant: str | None = None) -> list[dict]:
    rows = []
    for n in ns:
        out = run_scheme(SchemeId(name, n), variant)
        r, p = out.report, out.printed
        rows.append({
            "n": n, "parity": "even" if n % 2 == 0 else "odd",
            "v_pos": r.v_pos, "v_neg": r.v_neg, "vertex_delta_abs": abs(r.vertex_delta),
            "e_pos": r.e_pos, "e_neg": r.e_neg, "edge_delta_abs": abs(r.edge_delta),
            "is_spc": r.is_spc,
            "printed_v_pos": "" if p is None else str(p.v_pos),
            "printed_v_neg": "" if p is None else str(p.v_neg),
            "printed_e_pos": "" if p is None else str(p.e_pos),
            "printed_e_neg": "" if p is None else str(p.e_neg),
            "printed_source": "" if p is None else p.source,
            "printed_agrees": "" if p is None else out.printed_agrees,
        })
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def rows_to_text(rows: list[dict]) -> str:
    headers = ["n", "v_α(1)", "v_α(-1)", "|Δv|", "e_α*(1)", "e_α*(-1)", "|Δe|", "flag", "published"]
    body = []
    for r in rows:
        flag = "" if r["is_spc"] else "!! |delta| > 1"
        note = ""
        if r["printed_agrees"] is False:
            note = (f"v(1)={r['printed_v_pos']} v(-1)={r['printed_v_neg']} "
                    f"e(1)={r['printed_e_pos']} e(-1)={r['printed_e_neg']} "
                    f"[{r['printed_source']}, differs]")
        body.append([r["n"], r["v_pos"], r["v_neg"], r["vertex_delta_abs"], r["e_pos"],
                     r["e_neg"], r["edge_delta_abs"], flag, note])
    widths = [max(len(str(x)) for x in col) for col in zip(headers, *body)]
    fmt = lambda cells: "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()
    return "\n".join([fmt(headers)] + [fmt(b) for b in body]) + "\n"


def cmd_table(args) -> int:
    if args.name == "spltg-bull":
        raise SPCError("spltg-bull is a single graph; use `scheme spltg-bull`")
    rows = table_rows(args.name, parse_range(args.n), args.variant)
    if args.csv:
        Path(args.csv).write_text(rows_to_csv(rows))
    sys.stdout.write(rows_to_csv(rows) if args.format == "csv" else rows_to_text(rows))
    return EXIT_OK if all(r["is_spc"] for r in rows) else EXIT_NEGATIVE


def cmd_export(args) -> int:
    g = interchange.read_graph(args.graph)
    lab = interchange.read_labeling(args.labeling) if args.labeling else None
    _emit(interchange.to_dot(g, lab, name=args.name), args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spclab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a family graph, e.g. 'spltg(star:8)'")
    b.add_argument("spec")
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("scheme", help="apply a labeling scheme and report the counts")
    s.add_argument("name", choices=SCHEME_NAMES)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--variant", choices=HELM_VARIANTS)
    s.add_argument("--graph-out")
    s.add_argument("--labeling-out")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_scheme)

    v = sub.add_parser("verify", help="evaluate a labeling file against a graph file")
    v.add_argument("graph")
    v.add_argument("labeling")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    se = sub.add_parser("search", help="exhaustive search for SPC labelings")
    se.add_argument("graph")
    mode = se.add_mutually_exclusive_group()
    mode.add_argument("--exists", action="store_true")
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--collect", action="store_true")
    fix = se.add_mutually_exclusive_group()
    fix.add_argument("--fix", action="store_true", help="fix vertex 0 to +1 and double")
    fix.add_argument("--no-fix", action="store_true")
    se.add_argument("--no-prune", action="store_true")
    se.add_argument("--max-vertices", type=int, default=28)
    se.add_argument("--witness-out")
    se.add_argument("--json", action="store_true")
    se.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="tabulate scheme counts over a range of n")
    t.add_argument("name", choices=SCHEME_NAMES)
    t.add_argument("--n", required=True, help="range A..B (inclusive)")
    t.add_argument("--variant", choices=HELM_VARIANTS)
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t.add_argument("--csv", help="also write CSV to this path")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("export", help="write a Graphviz DOT rendering")
    e.add_argument("graph")
    e.add_argument("--labeling")
    e.add_argument("--name", default="G")
    e.add_argument("-o", "--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (SPCError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
