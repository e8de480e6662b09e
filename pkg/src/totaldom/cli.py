"""Command-line entry point: ``totaldom <command> ...``.

Exit codes: 0 success / verified, 1 mismatch found, 2 usage or input error,
3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import families as fam
from .domination import InvalidOrientationError, Orientation, OrientationError, gamma_t_with_witness
from .graph import Graph, GraphError, SizeLimitError, parse_edge_list, parse_graph6, to_graph6
from .orientations import EDGE_BUDGET, BudgetExceededError, NotInClassCError, domt_range
from . import verify as ver

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

WORKERS_ENV = "TOTALDOM_WORKERS"


class UsageError(Exception):
    pass


def _int_list(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def _load_graph(args) -> Graph:
    sources = [x for x in (args.graph6, args.edges, args.input) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --input")
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.edges:
        return parse_edge_list(args.edges)
    lines = [ln for ln in Path(args.input).read_text().splitlines() if ln.strip() and not ln.startswith(">>graph6<<")]
    if len(lines) != 1:
        raise UsageError("--input for this command must hold exactly one graph6 line")
    return parse_graph6(lines[0])


def _parse_arcs(text: str) -> list[tuple[int, int]]:
    text = text.strip()
    if text.startswith("["):
        return [tuple(a) for a in json.loads(text)]
    arcs = []
    for tok in text.replace(",", " ").split():
        sep = "->" if "->" in tok else ">" if ">" in tok else "-"
        a, b = tok.split(sep, 1)
        arcs.append((int(a), int(b)))
    return arcs


def _emit(payload: dict, fmt: str, human) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human(payload))


def cmd_solve(args) -> int:
    g = _load_graph(args)
    if not args.orientation:
        raise UsageError("--orientation is required")
    d = Orientation.from_arcs(g, _parse_arcs(args.orientation))
    try:
        value, witness = gamma_t_with_witness(d)
    except InvalidOrientationError as exc:
        print(f"error: no total dominating set exists ({exc})", file=sys.stderr)
        return EXIT_USAGE
    payload = {"graph6": to_graph6(g), "gamma_t": value, "witness": witness.to_list()}
    _emit(payload, args.format, lambda p: f"gamma_t = {p['gamma_t']}\nwitness = {p['witness']}")
    return EXIT_OK


def cmd_range(args) -> int:
    g = _load_graph(args)
    r = domt_range(g, budget=args.budget)
    payload = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "dom_t": r.lower,
        "DOM_t": r.upper,
        "argmin": r.argmin.arcs(),
        "argmax": r.argmax.arcs(),
        "orientations_examined": r.stats.orientations_examined,
    }
    _emit(payload, args.format, lambda p: f"dom_t = {p['dom_t']}\nDOM_t = {p['DOM_t']}\nargmin = {p['argmin']}\nargmax = {p['argmax']}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = _load_graph(args)
    witness = fam.recognize_theorem_class(g)
    disconnected = None
    if witness is None:
        disconnected = fam.recognize_theorem_class_disconnected(g)
    in_r1, reason = fam.recognize_result1_class(g)
    chosen = witness or disconnected
    payload = {
        "graph6": to_graph6(g),
        "family": chosen.family if chosen else "none",
        "witness": chosen.to_json() if chosen else None,
        "result1_class": in_r1,
        "result1_reason": (reason if isinstance(reason, str) else reason.family) if in_r1 else None,
    }
    _emit(payload, args.format, lambda p: f"{p['family']}" + (" (dom_t = n-1 class)" if p["result1_class"] else ""))
    return EXIT_OK


def _source(args):
    if args.input:
        return Path(args.input)
    return ver.Enumeration(max_n=args.max_n, allow_n7=args.allow_n7)


def cmd_verify(args) -> int:
    workers = args.workers
    theorem = args.theorem
    if theorem == "gap":
        rows = ver.gap_survey()
        payload = {"theorem": "gap", "rows": [r.to_json() for r in rows]}
        ok = all(r.dom_t >= 3 and r.DOM_t == r.n - 1 for r in rows)
        payload["holds"] = ok
        if args.out:
            Path(args.out).with_suffix(".json").write_text(json.dumps(payload, sort_keys=True, indent=1))
        _emit(payload, args.format if args.format != "csv" else "json",
              lambda p: "\n".join(f"{r['name']}: n={r['n']} dom_t={r['dom_t']} DOM_t={r['DOM_t']}" for r in p["rows"]))
        return EXIT_OK if ok else EXIT_MISMATCH
    if theorem == "main":
        report = ver.verify_theorem_main(_source(args), workers=workers)
    elif theorem == "result1":
        report = ver.verify_result1(_source(args), workers=workers, budget=args.budget)
    elif theorem == "result2":
        report = ver.verify_result2(_source(args), workers=workers, budget=args.budget)
    elif theorem == "disconnected":
        src = Path(args.input) if args.input else ver.disconnected_compositions(args.max_total_n)
        report = ver.verify_disconnected_main(src, workers=workers)
    elif theorem == "concomp":
        report = ver.verify_concomp(args.trials, args.max_total_n, seed=args.seed, workers=workers)
    else:
        raise UsageError(f"unknown theorem {theorem}")
    if args.out:
        for p in report.write(args.out, csv_too=args.format == "csv", timing=args.timing):
            logging.getLogger(__name__).info("wrote %s", p)
    summary = report.summary(timing=args.timing)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        _emit(summary, args.format, lambda s: (
            f"{s['theorem']}: {s['graph_count']} graphs, {s['positives']} positives, "
            f"{s['mismatch_count']} mismatches -> {'HOLDS' if s['holds'] else 'FAILS'}"
        ))
    return EXIT_OK if report.holds else EXIT_MISMATCH


def cmd_generate(args) -> int:
    family = args.family.lower()
    cycles = _int_list(args.cycles)
    links_raw = _int_list(args.links)
    links = links_raw if len(links_raw) == len(cycles) else (links_raw[0] if len(links_raw) == 1 else None)
    if family == "f2":
        g, w = fam.generate_f2(cycles, links)
    elif family in ("f1", "f3"):
        if args.k is None:
            raise UsageError("--k is required for f1/f3")
        g, w = fam.generate_f1(args.k, cycles, links if cycles else None, _int_list(args.chords))
        if family == "f3":
            targets = _int_list(args.targets)
            case = fam.normalize_case_tag(args.case) if args.case else None
            if not targets:
                options = [t for t, tags in fam.f3_admissible_additions(w) if case is None or case in tags]
                if not options:
                    raise fam.FamilyParameterError("no admissible added edges for this base and case")
                targets = list(options[0])
            g, w = fam.generate_f3(w, targets, case)
    else:
        raise UsageError(f"unknown family {args.family}")
    d = fam.extremal_orientation_for(w)
    value, _ = gamma_t_with_witness(d)
    payload = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "witness": w.to_json(),
        "orientation": d.arcs(),
        "gamma_t": value,
    }
    _emit(payload, args.format, lambda p: f"{p['graph6']}\n{json.dumps(p['witness'])}\n{p['orientation']}")
    return EXIT_OK if value == g.n - 1 else EXIT_MISMATCH


def cmd_fixture(args) -> int:
    g = fam.fixture(args.name, args.param)
    print(to_graph6(g))
    return EXIT_OK


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph in graph6 encoding")
    p.add_argument("--edges", help="edge list such as '0-1 1-2 2-0'")
    p.add_argument("--input", help="file holding a single graph6 line")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "human", "csv"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="totaldom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(parents=[common], name="solve", help="gamma_t of an oriented graph with an optimal set")
    _add_graph_input(p)
    p.add_argument("--orientation", help="arcs as '0>1 1>2' or JSON [[0,1],[1,2]]")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser(parents=[common], name="range", help="exact dom_t and DOM_t by orientation enumeration")
    _add_graph_input(p)
    p.add_argument("--budget", type=int, default=EDGE_BUDGET, help="maximum edge count")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser(parents=[common], name="recognize", help="family membership with witness")
    _add_graph_input(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser(parents=[common], name="verify", help="exhaustive check of a characterisation result")
    p.add_argument("theorem", choices=ver.THEOREMS)
    p.add_argument("--input", help="graph6 file (one graph per line)")
    p.add_argument("--max-n", type=int, default=ver.DEFAULT_MAX_N)
    p.add_argument("--allow-n7", action="store_true", help="permit built-in enumeration at n = 7")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", help="report path prefix; writes <out>.jsonl (and <out>.csv)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-total-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=EDGE_BUDGET)
    p.add_argument("--timing", action="store_true", help="include wall time in the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(parents=[common], name="generate", help="family member with witness and extremal orientation")
    p.add_argument("family", choices=("f1", "f2", "f3"))
    p.add_argument("--k", type=int)
    p.add_argument("--cycles", help="comma-separated cycle lengths")
    p.add_argument("--links", help="attachment count per cycle (or one value for all)")
    p.add_argument("--chords", help="path indices i joined to w_k")
    p.add_argument("--targets", help="f3: vertices joined to s")
    p.add_argument("--case", help="f3 case tag, e.g. dwk3-via-xy")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser(parents=[common], name="fixture", help="print a named fixture graph in graph6")
    p.add_argument("name", choices=fam.FIXTURE_NAMES)
    p.add_argument("param", nargs="?", type=int)
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "workers", 1) is None:
        args.workers = int(os.environ.get(WORKERS_ENV, "1"))
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "command", None) == "verify" and args.max_total_n is None:
        args.max_total_n = 10 if args.theorem == "concomp" else 8
    try:
        return args.func(args)
    except (BudgetExceededError, SizeLimitError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError, OrientationError, NotInClassCError, ValueError, ver.SourceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
