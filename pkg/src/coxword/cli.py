"""
Command line front end.

Subcommands: enumerate, graph, stats, verify, list-systems.  Exit codes:
0 on success, 1 when a verification suite fails, 2 on usage errors.
The environment variable COXWORD_CACHE_LIMIT caps the per-system memo
caches (entries per table) after each command.
"""

import argparse
import json
import os
import sys

from .system import CoxeterError, registry_names, resolve_system
from .involutions import (
    hecke_atoms,
    hecke_words,
    involution_words,
    primed_words,
    reduced_hecke_words,
)
from .rewriting import graph_stats, relation_set, to_dot, word_graph
from .harness import Bounds, default_bounds, run_suite, suite_names
from .wordio import format_involution, format_window, format_word, \
    parse_involution

_RESOLVED = []


def _resolve(spec):
    system = resolve_system(spec)
    _RESOLVED.append(system)
    return system


GRAPH_BUNDLES = {
    "inv": "simply-inv",
    "primed": "simply-primed",
    "hecke-red": "simply-hecke",
    "hecke": "hecke-full",
}


def _words_for(z, kind, bound):
    if kind == "inv":
        return involution_words(z)
    if kind == "primed":
        return primed_words(z)
    if kind == "hecke-red":
        return reduced_hecke_words(z)
    if kind == "hecke":
        return hecke_words(z, bound if bound is not None else z.length() + 2)
    if kind == "atoms":
        return hecke_atoms(z)
    raise CoxeterError(f"unknown kind {kind!r}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args):
    system = _resolve(args.system)
    z = parse_involution(system, args.z)
    items = _words_for(z, args.kind, args.bound)
    if args.kind == "atoms":
        texts = sorted(format_window(w.window) if system.backend == "perm"
                       else format_word(w.reduced_word(), system.rank)
                       for w in items)
    else:
        texts = sorted(format_word(w, system.rank) for w in items)
    if args.format == "json":
        _emit(json.dumps({"system": system.name, "z": format_involution(z),
                          "kind": args.kind, "count": len(texts),
                          "words": texts}, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(texts) + "\n", args.out)
    return 0


def _build_graph(args):
    system = _resolve(args.system)
    z = parse_involution(system, args.z)
    if args.kind == "atoms":
        raise CoxeterError("graphs are over words; use kind inv/primed/"
                           "hecke-red/hecke")
    bound = args.bound if args.bound is not None else z.length() + 2
    vertices = _words_for(z, args.kind, args.bound)
    relset = relation_set(system, GRAPH_BUNDLES[args.kind],
                          max_len=bound if args.kind == "hecke" else None)
    graph = word_graph(relset, vertices)
    return system, z, graph


def cmd_graph(args):
    system, z, graph = _build_graph(args)
    if args.format == "json":
        edges = {kind: sorted(sorted(format_word(w, system.rank)
                                     for w in pair) for pair in pairs)
                 for kind, pairs in graph.edges.items()}
        text = json.dumps(
            {"system": system.name, "z": format_involution(z),
             "kind": args.kind,
             "vertices": sorted(format_word(w, system.rank)
                                for w in graph.vertices),
             "edges": edges}, indent=2) + "\n"
    else:
        text = to_dot(graph, label=lambda w: format_word(w, system.rank))
    _emit(text, args.out)
    return 0


def cmd_stats(args):
    system, z, graph = _build_graph(args)
    stats = graph_stats(graph)
    stats = {"system": system.name, "z": format_involution(z),
             "kind": args.kind, **stats}
    if args.format == "json":
        _emit(json.dumps(stats, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in stats.items()), args.out)
    return 0


def cmd_verify(args):
    reports = []
    ok = True
    lines = []
    for name in args.system:
        system = _resolve(name)
        bounds = default_bounds(system)
        if args.bound is not None:
            bounds = Bounds(rho_bound=args.bound, len_bound=args.bound,
                            max_size=bounds.max_size, samples=bounds.samples)
        for suite in args.suite:
            report = run_suite(suite, system, bounds=bounds,
                               fault=args.inject_fault, threads=args.threads)
            reports.append(report)
            ok = ok and report.passed
            status = "pass" if report.passed else "FAIL"
            lines.append(f"{report.suite} {report.system}: {status} "
                         f"({len(report.records)} records, "
                         f"{report.seconds}s)")
    body = "".join(r.to_jsonl() for r in reports)
    if args.out:
        _emit(body, args.out)
        print("\n".join(lines))
    elif args.format == "json":
        sys.stdout.write(body)
    else:
        print("\n".join(lines))
        for r in reports:
            for f in r.failures()[:10]:
                print(f"  failing record: {json.dumps(f, sort_keys=True)}")
    return 0 if ok else 1


def cmd_list_systems(args):
    for name in registry_names():
        print(name)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coxword",
        description="words and word relations for twisted Coxeter systems")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--system", required=True,
                       help="registry name or path to a system JSON file")
        p.add_argument("--z", required=True,
                       help="involution as a word, window, or cycles")
        p.add_argument("--kind", default="inv",
                       choices=["inv", "primed", "hecke", "hecke-red",
                                "atoms"])
        p.add_argument("--bound", type=int, default=None,
                       help="length bound for the truncated Hecke set")
        p.add_argument("--out", default=None)
        p.set_defaults(fn=fn)
        return p

    p = word_cmd("enumerate", cmd_enumerate, "list a word set")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p = word_cmd("graph", cmd_graph, "word graph in DOT or JSON")
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p = word_cmd("stats", cmd_stats, "word graph statistics")
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", required=True,
                   help=f"one of {', '.join(suite_names())} (repeatable)")
    p.add_argument("--system", action="append", required=True,
                   help="registry name or path (repeatable)")
    p.add_argument("--bound", type=int, default=None,
                   help="rho/length bound overriding the defaults")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--inject-fault", default=None, metavar="KIND",
                   help="drop all relations of one edge kind (the matching "
                        "suite must then fail)")
    p.add_argument("--out", default=None, help="write the JSONL report here")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("list-systems", help="names in the built-in registry")
    p.set_defaults(fn=cmd_list_systems)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    limit = os.environ.get("COXWORD_CACHE_LIMIT")
    try:
        code = args.fn(args)
    except (CoxeterError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if limit:
            for system in _RESOLVED:
                system.trim_caches(int(limit))
    return code


if __name__ == "__main__":
    sys.exit(main())
