"""Command line entry point: ``radiolab <command> ...``.

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success, 2 bad
input, 3 verification or certification failure, 4 solver budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import io
from .exact import EXHAUSTED, SolverConfig, exact_radio_number
from .families import FAMILIES, ConstructionError, FamilySpec, build_family, family_graph
from .graph import GraphError, all_pairs_distances
from .labeling import LabelingError, is_radio_labeling
from .layers import DEFAULT_MAX_CENTER_SIZE, best_lower_bound, distance_decomposition_check, lower_bound
from .reductions import check_observation, edge_deletion_sequence, inherited_deletion_sequence, mdst

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_BUDGET = 0, 2, 3, 4


class InputError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj) + "\n")


def _err(msg: str) -> None:
    print(f"radiolab: {msg}", file=sys.stderr)


def _spec(args) -> FamilySpec:
    spec = FamilySpec(args.family, args.m, args.n)
    if not args.outside_hypothesis:
        spec.check()
    elif not spec.within_hypothesis:
        _err(f"{spec.family} ({spec.m}, {spec.n}) is outside theorem hypothesis")
    return spec


def _graph(args):
    if not args.graph:
        raise InputError("--graph is required")
    try:
        g = io.read_edge_list(args.graph)
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return g, all_pairs_distances(g)


def _parse_center(text: str | None, p: int) -> tuple[int, ...]:
    if not text:
        raise InputError("--center is required")
    try:
        vs = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"bad --center {text!r}") from exc
    if not vs or any(not 0 <= v < p for v in vs):
        raise InputError(f"center vertices must lie in [0, {p})")
    return vs


def cmd_gen(args) -> int:
    g = family_graph(_spec(args))
    text = io.format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
        _err(f"wrote {g.p} vertices, {g.num_edges} edges to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_label(args) -> int:
    spec = _spec(args)
    if spec.family == "path-complete":
        raise InputError("path-complete has a closed form only; no construction is available")
    res = build_family(spec, strict=False, literal=args.literal_sigma)
    cert = res.certificate
    out = {
        "family": spec.family, "m": spec.m, "n": spec.n,
        "p": res.graph.p, "closed_form": res.closed_form,
        "within_hypothesis": spec.within_hypothesis,
        "names": {str(v): res.graph.name(v) for v in range(res.graph.p)},
        "certificate": cert.to_dict(),
    }
    if res.labeling is not None:
        out = {**io.labeling_to_dict(res.labeling), **out}
    else:
        out["ordering"] = list(res.ordering)
    _emit(out)
    if not res.certified:
        _err("construction did not certify")
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    g, dm = _graph(args)
    if not args.labeling:
        raise InputError("--labeling is required")
    lab = io.read_labeling(args.labeling, g.p)
    rep = is_radio_labeling(g, dm, lab)
    _emit({"valid": rep.valid, "span": rep.span, "diameter": dm.diameter,
           "num_violations": rep.num_violations,
           "violations": [dict(zip(("u", "v", "required_gap", "actual_gap"), v)) for v in rep.violations]})
    return EXIT_OK if rep.valid else EXIT_FAIL


def cmd_bound(args) -> int:
    g, dm = _graph(args)
    if args.auto:
        if args.max_center_size < 1:
            raise InputError("--max-center-size must be at least 1")
        rep = best_lower_bound(g, dm, args.max_center_size)
    else:
        rep = lower_bound(g, dm, _parse_center(args.center, g.p))
    eq = distance_decomposition_check(g, dm, rep.center)
    out = rep.to_dict()
    out["equality_pairs"] = len(eq.equality_pairs)
    out["total_pairs"] = g.p * (g.p - 1) // 2
    if args.auto:
        out["max_center_size"] = args.max_center_size
    _emit(out)
    return EXIT_OK


def cmd_exact(args) -> int:
    g, dm = _graph(args)
    cfg = SolverConfig(time_budget=args.budget)
    res = exact_radio_number(g, dm, cfg)
    _emit(res.to_dict())
    if res.status == EXHAUSTED:
        _err(f"budget exhausted; rn in [{res.lower}, {res.upper}]")
        return EXIT_BUDGET
    return EXIT_OK


def cmd_mdst(args) -> int:
    g, dm = _graph(args)
    center = _parse_center(args.center, g.p)
    t = mdst(g, dm, center)
    obs = check_observation(g, t, center)
    _emit({"kept_edges": [list(e) for e in t.kept_edges], "center": list(center),
           "observation": {"diameter_preserved": obs.diameter_preserved,
                           "levels_preserved": obs.levels_preserved,
                           "total_preserved": obs.total_preserved,
                           "distances_dominate": obs.distances_dominate,
                           "diameters": list(obs.diameters),
                           "witnesses": {k: list(v) for k, v in obs.witnesses.items()}}})
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.family and args.target in ("path-star", "path-friendship"):
        seq = inherited_deletion_sequence(args.target, args.m, args.n, args.literal_sigma)
    elif args.family:
        res = build_family(_spec(args), strict=False, literal=args.literal_sigma)
        g, center, order = res.graph, res.center.vertices, res.ordering
        seq = edge_deletion_sequence(g, mdst(g, res.distances, center), center, order)
    else:
        g, dm = _graph(args)
        center = _parse_center(args.center, g.p)
        if not args.labeling:
            raise InputError("--labeling with an ordering (or a labeling) is required")
        lab = io.read_labeling(args.labeling, g.p)
        order = lab.ordering or lab.induced_ordering()
        seq = edge_deletion_sequence(g, mdst(g, dm, center), center, order)
    _emit(seq.to_dict())
    return EXIT_OK if seq.all_certified and seq.constant_span else EXIT_FAIL


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}; use LO..HI") from exc


def _grid_row(family: str, m: int, n: int, literal: bool) -> dict:
    spec = FamilySpec(family, m, n)
    res = build_family(spec, strict=False, literal=literal)
    row = {"m": m, "n": n, "closed_form": res.closed_form,
           "within_hypothesis": spec.within_hypothesis}
    if res.certificate is None:
        return {**row, "constructed_span": None, "bound": None, "certified": False}
    lab = res.labeling
    return {**row, "constructed_span": lab.span if lab is not None else None,
            "bound": res.certificate.bound.bound, "certified": res.certified}


def cmd_grid(args) -> int:
    family = args.grid_family or args.family
    if family is None:
        raise InputError("family is required")
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    ms, ns = _parse_range(args.m_range), _parse_range(args.n_range)
    jobs = [(family, m, n, args.literal_sigma) for m in ms for n in ns]
    threads = max(1, int(os.environ.get("RADIOLAB_THREADS", "1") or 1))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda j: _grid_row(*j), jobs))
    ok = all(r["certified"] and r["constructed_span"] == r["closed_form"] == r["bound"] for r in rows)
    _emit({"family": family, "rows": rows, "all_certified": ok})
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen, "label": cmd_label, "verify": cmd_verify, "bound": cmd_bound,
    "exact": cmd_exact, "mdst": cmd_mdst, "reduce": cmd_reduce, "grid": cmd_grid,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radiolab", description="Radio labelings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_opts(sp, required=True):
        sp.add_argument("--family", choices=FAMILIES, required=required)
        sp.add_argument("-m", type=int, required=required)
        sp.add_argument("-n", type=int, required=required)
        sp.add_argument("--outside-hypothesis", action="store_true",
                        help="allow parameters below the proved range")
        sp.add_argument("--literal-sigma", action="store_true",
                        help="use the rim permutation exactly as printed (fails for n = 1, 2 mod 4)")

    def graph_opts(sp):
        sp.add_argument("--graph", metavar="PATH")

    sp = sub.add_parser("gen", help="write a family graph as an edge list")
    family_opts(sp)
    sp.add_argument("--out", metavar="PATH")

    sp = sub.add_parser("label", help="construct and certify a family labeling")
    family_opts(sp)

    sp = sub.add_parser("verify", help="check a labeling against a graph")
    graph_opts(sp)
    sp.add_argument("--labeling", metavar="PATH")

    sp = sub.add_parser("bound", help="layer lower bound for a center set")
    graph_opts(sp)
    sp.add_argument("--center", metavar="IDS")
    sp.add_argument("--auto", action="store_true", help="maximise over connected centers")
    sp.add_argument("--max-center-size", type=int, default=DEFAULT_MAX_CENTER_SIZE, metavar="K")

    sp = sub.add_parser("exact", help="exact radio number of a small graph")
    graph_opts(sp)
    sp.add_argument("--budget", type=float, metavar="SECONDS")

    sp = sub.add_parser("mdst", help="level-preserving spanning tree rooted at a center")
    graph_opts(sp)
    sp.add_argument("--center", metavar="IDS")

    sp = sub.add_parser("reduce", help="re-certify an ordering along an edge-deletion sequence")
    graph_opts(sp)
    sp.add_argument("--center", metavar="IDS")
    sp.add_argument("--labeling", metavar="PATH")
    family_opts(sp, required=False)
    sp.add_argument("--target", choices=("mdst", "path-star", "path-friendship"), default="mdst",
                    help="with --family: delete down to the MDST or to a subfamily product")

    sp = sub.add_parser("grid", help="certify a family over parameter ranges")
    sp.add_argument("grid_family", nargs="?", choices=FAMILIES)
    sp.add_argument("m_range")
    sp.add_argument("n_range")
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--literal-sigma", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InputError, GraphError, LabelingError, ConstructionError, io.FormatError) as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
