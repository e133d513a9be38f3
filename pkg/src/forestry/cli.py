"""Command-line front end.

Eight subcommands share one input convention: a positional file path,
stdin when the path is absent, or --catalog NAME for a built-in graph.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure (a sweep violation, a catalog mismatch, or a
cross-check disagreement), 2 usage or input errors.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .bounds import (
    Gadget,
    compare,
    min_ratio_check,
    p_bound,
    q_bound,
    table2_check,
    upper_bound_fd,
)
from .catalog import catalog, catalog_entry
from .counting import (
    MemoCache,
    count_forests,
    count_forests_bruteforce,
    count_trees,
)
from .errors import CatalogMismatch, ForestryError, ViolationFound
from .families import DEFAULT_FAMILY_CAPS, enumerate_family
from .formats import format_edge_list, format_graph6, parse_graph
from .lifts import lift_constant
from .multigraph import canonical_key, from_edge_list
from .sweep import THEOREMS, sweep_theorem

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """Plumbing shared by the subcommands, validated up front."""

    subcommand: str
    source: object  # file path, or None for stdin
    catalog_name: object
    output: str
    brute_cap: int
    memo_cap: object  # None defers to FORESTRY_CACHE_CAP / the default
    max_n: object
    threads: int
    store: object

    @classmethod
    def from_args(cls, ns):
        threads = ns.threads if ns.threads is not None else os.cpu_count() or 1
        cfg = cls(
            subcommand=ns.subcommand,
            source=getattr(ns, "path", None),
            catalog_name=getattr(ns, "catalog", None),
            output=ns.output,
            brute_cap=getattr(ns, "brute_cap", 24),
            memo_cap=ns.memo_cap,
            max_n=getattr(ns, "max_n", None),
            threads=threads,
            store=getattr(ns, "store", None),
        )
        for label, cap in (
            ("--brute-cap", cfg.brute_cap),
            ("--memo-cap", cfg.memo_cap),
            ("--max-n", cfg.max_n),
            ("--threads", cfg.threads),
        ):
            if cap is not None and cap < 1:
                raise ValueError(f"{label} must be positive, got {cap}")
        if cfg.source is not None and cfg.catalog_name is not None:
            raise ValueError("give a file path or --catalog, not both")
        if cfg.catalog_name is not None:
            _resolve_catalog(cfg.catalog_name)  # fail before any real work
        return cfg


def _resolve_catalog(name):
    try:
        return catalog_entry(name)
    except KeyError:
        raise ValueError(
            f"unknown catalog graph {name!r}; run the catalog subcommand for names"
        ) from None


def _load_graph(cfg):
    if cfg.catalog_name is not None:
        return _resolve_catalog(cfg.catalog_name).graph
    if cfg.source is not None:
        with open(cfg.source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse_graph(text)


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _count_payload(g, cache):
    return {
        "v": SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "forests": str(count_forests(g, cache)),
        "trees": str(count_trees(g, cache)),
        "cache_hits": cache.hits,
    }


def _cmd_count(cfg, ns):
    cache = MemoCache(max_vertices=cfg.memo_cap)
    g = _load_graph(cfg)
    forests = count_forests(g, cache)
    if ns.cross_check:
        brute = count_forests_bruteforce(g, cap=cfg.brute_cap)
        if brute != forests:
            print(
                f"error: engine counts {forests} forests, brute force {brute}",
                file=sys.stderr,
            )
            return 1
    if cfg.output == "json":
        _emit_json(_count_payload(g, cache))
    else:
        print(forests)
    return 0


def _cmd_trees(cfg, ns):
    cache = MemoCache(max_vertices=cfg.memo_cap)
    g = _load_graph(cfg)
    trees = count_trees(g, cache)
    if cfg.output == "json":
        _emit_json(_count_payload(g, cache))
    else:
        print(trees)
    return 0


def _cmd_bound(cfg, ns):
    cache = MemoCache(max_vertices=cfg.memo_cap)
    g = _load_graph(cfg)
    which = ns.which
    if which == "auto":
        degrees = {g.degree(v) for v in range(g.n)}
        which = "p" if degrees <= {2, 3} else "q"
    expr = (p_bound if which == "p" else q_bound)(g)
    forests = count_forests(g, cache)
    verdict = compare(forests, expr)
    if cfg.output == "json":
        _emit_json(
            {
                "v": SCHEMA_VERSION,
                "n": g.n,
                "m": g.m,
                "forests": str(forests),
                "which": which,
                "bound": str(expr),
                "verdict": verdict,
            }
        )
    else:
        print(f"forests {forests}")
        print(f"bound {expr}")
        print(f"verdict {verdict}")
    return 0


def _key_names():
    names = {}
    for entry in catalog():
        names.setdefault(canonical_key(entry.graph), entry.name)
    return names


def _outcome_list(pairs, names):
    return [
        {"n": n, "key": key.hex(), "name": names.get(key)} for n, key in pairs
    ]


def _outcome_text(pairs, names):
    shown = [
        f"{names.get(key, key.hex())} (n={n})" for n, key in pairs
    ]
    return ", ".join(shown)


def _cmd_verify(cfg, ns):
    theorem = "T" + ns.theorem
    degree_set = THEOREMS[theorem][0]
    n_max = cfg.max_n
    if n_max is None:
        n_max = DEFAULT_FAMILY_CAPS[frozenset(degree_set)]
    cache = MemoCache(max_vertices=cfg.memo_cap)
    summary = sweep_theorem(
        theorem,
        n_max,
        store=cfg.store,
        resume=ns.resume,
        cache=cache,
        cap=ns.family_cap,
    )
    names = _key_names()
    if cfg.output == "json":
        _emit_json(
            {
                "v": SCHEMA_VERSION,
                "theorem": ns.theorem,
                "family": summary.family,
                "n_max": summary.n_max,
                "checked": summary.checked,
                "skipped": summary.skipped,
                "violations": _outcome_list(summary.violations, names),
                "equalities": _outcome_list(summary.equalities, names),
            }
        )
    else:
        print(f"theorem {ns.theorem}  family {summary.family}  max n {summary.n_max}")
        print(f"checked {summary.checked}  skipped {summary.skipped}")
        v = _outcome_text(summary.violations, names)
        e = _outcome_text(summary.equalities, names)
        print(f"violations {len(summary.violations)}" + (f": {v}" if v else ""))
        print(f"equalities {len(summary.equalities)}" + (f": {e}" if e else ""))
    return 0


def _cmd_family(cfg, ns):
    degree_set = {"23": (2, 3), "234": (2, 3, 4)}[ns.degrees]
    members = enumerate_family(ns.n, degree_set, cap=ns.family_cap)
    lines = [format_graph6(g) for g in members]
    if cfg.output == "json":
        _emit_json(
            {
                "v": SCHEMA_VERSION,
                "family": ns.degrees,
                "n": ns.n,
                "count": len(lines),
                "members": lines,
            }
        )
    else:
        for line in lines:
            print(line)
    return 0


def _edges_text(g):
    return " ".join(f"{u}-{v}" for u, v in g.edge_list())


def _radical_text(rb):
    if rb.inner == 1:
        return str(rb.outer)
    root = f"{rb.inner}^(1/{rb.index})"
    return root if rb.outer == 1 else f"{rb.outer} * {root}"


def _cmd_constants(cfg, ns):
    cache = MemoCache(max_vertices=cfg.memo_cap)
    if ns.fd is not None:
        rb = upper_bound_fd(ns.fd, cache=cache)
        if cfg.output == "json":
            _emit_json(
                {
                    "v": SCHEMA_VERSION,
                    "d": ns.fd,
                    "radicand": rb.radicand,
                    "index": rb.index,
                    "outer": rb.outer,
                    "inner": rb.inner,
                    "value": rb.value(),
                }
            )
        else:
            plain = f"{rb.radicand}^(1/{rb.index})"
            factored = _radical_text(rb)
            middle = "" if factored == plain else f" = {plain}"
            print(f"d {ns.fd}  ceiling {factored}{middle} = {rb.value():.10f}")
        return 0
    if ns.max_m < 1:
        raise ValueError(f"--max-m must be positive, got {ns.max_m}")
    kinds = ("forests", "trees") if ns.kind == "both" else (ns.kind,)
    rows = [
        lift_constant(m, kind, cache=cache)
        for m in range(1, ns.max_m + 1)
        for kind in kinds
    ]
    if cfg.output == "json":
        _emit_json(
            {
                "v": SCHEMA_VERSION,
                "constants": [
                    {
                        "m": c.m,
                        "kind": c.kind,
                        "value": str(c.value),
                        "degrees": list(c.degrees),
                        "witness_n": c.witness.n,
                        "witness_edges": [list(e) for e in c.witness.edge_list()],
                    }
                    for c in rows
                ],
            }
        )
    else:
        for c in rows:
            print(
                f"m {c.m}  {c.kind:<7}  value {str(c.value):<6}"
                f"  witness n={c.witness.n} edges {_edges_text(c.witness)}"
            )
    return 0


def _ratio_suites():
    double_star = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    two_edges = from_edge_list(4, [(0, 1), (2, 3)])
    diamond = from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    tailed = from_edge_list(
        5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 2), (4, 3)]
    )
    triangle = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    return {
        "double-star": (
            Gadget(double_star, (2, 3, 4, 5)),
            Gadget(two_edges, (0, 1, 2, 3)),
        ),
        "tailed-diamond": (
            Gadget(tailed, (0, 1, 4)),
            Gadget(triangle, (0, 1, 2)),
        ),
        "diamond": (
            Gadget(diamond, (0, 1, 2)),
            Gadget(triangle, (0, 1, 2)),
        ),
    }


def _partition_text(part):
    return "|".join(",".join(str(i) for i in block) for block in part)


def _partition_list(part):
    return [list(block) for block in part]


def _ratio_payload(name, report):
    return {
        "suite": name,
        "rows": [
            {
                "partition": _partition_list(row.partition),
                "numerator": str(row.numerator),
                "denominator": str(row.denominator),
                "ratio": str(row.ratio),
            }
            for row in report.rows
        ],
        "min": str(report.min_ratio),
        "argmin": _partition_list(report.argmin),
        "zero_rows": [_partition_list(row.partition) for row in report.zero_rows],
    }


def _table2_payload(report):
    return {
        "suite": "table2",
        "rows": [
            {
                "partition": _partition_list(row.partition),
                "computed": [str(x) for x in row.computed],
                "expected": [str(x) for x in row.expected],
                "ok": row.ok,
            }
            for row in report.rows
        ],
        "ok": report.ok,
    }


def _cmd_ratio(cfg, ns):
    cache = MemoCache(max_vertices=cfg.memo_cap)
    suites = _ratio_suites()
    chosen = list(suites) + ["table2"] if ns.suite == "all" else [ns.suite]
    payloads = []
    failed = False
    for name in chosen:
        if name == "table2":
            report = table2_check(cache)
            payloads.append(_table2_payload(report))
            failed = failed or not report.ok
        else:
            a, b = suites[name]
            payloads.append(_ratio_payload(name, min_ratio_check(a, b, cache)))
    if cfg.output == "json":
        _emit_json({"v": SCHEMA_VERSION, "suites": payloads})
    else:
        for payload in payloads:
            print(f"suite {payload['suite']}")
            if payload["suite"] == "table2":
                for row in payload["rows"]:
                    part = _partition_text(row["partition"])
                    cells = " ".join(row["computed"])
                    mark = "ok" if row["ok"] else "MISMATCH"
                    print(f"  {part:<9} {cells:<14} {mark}")
                print(f"  all rows {'match' if payload['ok'] else 'DO NOT match'}")
            else:
                for row in payload["rows"]:
                    part = _partition_text(row["partition"])
                    print(f"  {part:<9} {row['numerator']}/{row['denominator']}")
                where = _partition_text(payload["argmin"])
                print(f"  min {payload['min']} at {where}")
    if failed:
        print("error: table2 expectations failed", file=sys.stderr)
        return 1
    return 0


def _cmd_catalog(cfg, ns):
    entries = catalog()
    if ns.name is not None:
        entries = [_resolve_catalog(ns.name)]
    if cfg.output == "json":
        cache = MemoCache(max_vertices=cfg.memo_cap)
        out = []
        for e in entries:
            obj = {
                "name": e.name,
                "summary": e.summary,
                "n": e.graph.n,
                "m": e.graph.m,
                "forests": str(e.forests),
                "trees": str(count_trees(e.graph, cache)),
                "degree_counts": list(e.degree_counts),
                "bound": str(e.bound),
                "holds": e.holds,
            }
            if ns.emit_edgelist:
                obj["edges"] = [list(p) for p in e.graph.edge_list()]
            out.append(obj)
        _emit_json({"v": SCHEMA_VERSION, "entries": out})
        return 0
    if ns.emit_edgelist:
        for e in entries:
            print(f"# {e.name}")
            sys.stdout.write(format_edge_list(e.graph))
        return 0
    if ns.name is not None:
        e = entries[0]
        cache = MemoCache(max_vertices=cfg.memo_cap)
        print(f"name {e.name}")
        print(f"summary {e.summary}")
        print(f"vertices {e.graph.n}")
        print(f"edges {e.graph.m}")
        print(f"forests {e.forests}")
        print(f"trees {count_trees(e.graph, cache)}")
        n2, n3, n4 = e.degree_counts
        print(f"degrees 2:{n2} 3:{n3} 4:{n4}")
        print(f"bound {e.bound}")
        print(f"holds {'yes' if e.holds else 'no'}")
        return 0
    print(f"{'name':<6} {'n':>2} {'m':>2} {'forests':>8}  {'bound':<18} holds")
    for e in entries:
        print(
            f"{e.name:<6} {e.graph.n:>2} {e.graph.m:>2} {e.forests:>8}"
            f"  {str(e.bound):<18} {'yes' if e.holds else 'no'}"
        )
    return 0


_DISPATCH = {
    "count": _cmd_count,
    "trees": _cmd_trees,
    "bound": _cmd_bound,
    "verify": _cmd_verify,
    "family": _cmd_family,
    "constants": _cmd_constants,
    "ratio": _cmd_ratio,
    "catalog": _cmd_catalog,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="output mode (default: text)",
    )
    common.add_argument(
        "--memo-cap",
        type=int,
        default=None,
        metavar="N",
        help="memoize subgraphs with at most N vertices"
        " (default: FORESTRY_CACHE_CAP or 16)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="N",
        help="worker pool size; reserved, every subcommand currently"
        " runs on one thread (default: available parallelism)",
    )

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument(
        "path",
        nargs="?",
        default=None,
        help="input file (edge list or graph6); stdin when absent",
    )
    graph_in.add_argument(
        "--catalog",
        default=None,
        metavar="NAME",
        help="use the named built-in graph instead of reading input",
    )

    top = argparse.ArgumentParser(
        prog="forestry",
        description="Exact spanning-forest and spanning-tree counts,"
        " lower-bound checks, and exhaustive verification sweeps.",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "count",
        parents=[common, graph_in],
        help="number of spanning forests",
    )
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="also count by brute-force edge-subset enumeration",
    )
    p.add_argument(
        "--brute-cap",
        type=int,
        default=24,
        metavar="M",
        help="refuse --cross-check beyond M edges (default: 24)",
    )

    sub.add_parser(
        "trees",
        parents=[common, graph_in],
        help="number of spanning trees",
    )

    p = sub.add_parser(
        "bound",
        parents=[common, graph_in],
        help="compare the forest count against its lower bound",
    )
    p.add_argument(
        "--which",
        choices=("auto", "p", "q"),
        default="auto",
        help="p needs degrees in {2,3}, q in {2,3,4};"
        " auto picks p when it applies (default: auto)",
    )

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="sweep a whole degree family against its bound",
    )
    p.add_argument(
        "--theorem",
        choices=("1", "2"),
        required=True,
        help="1: {2,3} degrees vs p; 2: {2,3,4} degrees vs q",
    )
    p.add_argument(
        "--max-n",
        type=int,
        default=None,
        metavar="N",
        help="largest order to sweep (default: the family cap)",
    )
    p.add_argument(
        "--store",
        default=None,
        metavar="PATH",
        help="append one JSON line per graph to PATH",
    )
    p.add_argument(
        "--resume",
        action="store_true",
        help="skip graphs already recorded in --store",
    )
    p.add_argument(
        "--family-cap",
        type=int,
        default=None,
        metavar="N",
        help="raise the family order cap (default: 12 for theorem 1, 9 for 2)",
    )

    p = sub.add_parser(
        "family",
        parents=[common],
        help="list the connected graphs of one order in a degree family",
    )
    p.add_argument(
        "--degrees",
        choices=("23", "234"),
        required=True,
        help="allowed vertex degrees",
    )
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument(
        "--family-cap",
        type=int,
        default=None,
        metavar="N",
        help="raise the family order cap",
    )

    p = sub.add_parser(
        "constants",
        parents=[common],
        help="extremal lift-drop constants, or a regular-family growth ceiling",
    )
    p.add_argument(
        "--max-m",
        type=int,
        default=3,
        metavar="M",
        help="compute constants for half-degrees 1..M (default: 3)",
    )
    p.add_argument(
        "--kind",
        choices=("forests", "trees", "both"),
        default="both",
        help="which count the constant governs (default: both)",
    )
    p.add_argument(
        "--fd",
        type=int,
        default=None,
        metavar="D",
        help="print the D-regular per-vertex growth ceiling instead",
    )

    p = sub.add_parser(
        "ratio",
        parents=[common],
        help="worst-case extension-count ratios for the gadget suites",
    )
    p.add_argument(
        "--suite",
        choices=("double-star", "tailed-diamond", "diamond", "table2", "all"),
        default="all",
        help="which suite to run (default: all)",
    )

    p = sub.add_parser(
        "catalog",
        parents=[common],
        help="the built-in named graphs with their counts and bounds",
    )
    p.add_argument("--name", default=None, help="show a single entry")
    p.add_argument(
        "--emit-edgelist",
        action="store_true",
        help="print parseable edge lists",
    )

    return top


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        cfg = RunConfig.from_args(ns)
        return _DISPATCH[ns.subcommand](cfg, ns)
    except (ViolationFound, CatalogMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ForestryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
