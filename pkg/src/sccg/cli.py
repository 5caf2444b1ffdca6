"""Command-line interface: generate, analyze, compare.

Every command is idempotent: identical flags reproduce byte-identical
outputs. Each output directory gets a manifest recording the tool version,
the full parameter set and content hashes of the files written.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .baselines import (
    BaParams,
    ba_generate,
    kronecker_generate,
    parse_kronecker_seed,
    pfsf_generate,
    pfsf_node_count,
    seed_matrix_with_loops,
)
from .corona import corona_graph, corona_node_count
from .graph import DEFAULT_SIZE_CAP, Graph, named_seed
from .io import (
    EdgeListFormatError,
    hubs_from_trace,
    read_edge_list,
    read_trace_json,
    write_edge_list,
    write_meta_csv,
    write_trace_json,
)
from .metrics import ALL_METRICS, compute_report, degree_ccdf
from .selfcoord import SccgParams, sccg_generate
from . import plots

ENV_SIZE_CAP = "SCCG_SIZE_CAP"

MODELS = ("sccg", "corona", "ba", "pfsf", "kronecker")
COMPARE_METRICS = ("density", "diameter", "clustering", "triangles", "assortativity")


def _resolve_size_cap(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_SIZE_CAP)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_SIZE_CAP} must be an integer, got {env!r}")
    return DEFAULT_SIZE_CAP


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(out_dir: Path, command: str, parameters: dict, outputs: list[Path]) -> None:
    manifest = {
        "tool": "sccg-toolkit",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "outputs": {p.name: f"sha256:{_sha256(p)}" for p in sorted(outputs)},
    }
    with (out_dir / "manifest.json").open("w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


def _kronecker_seed_matrix(spec: str) -> np.ndarray:
    path = Path(spec)
    if path.is_file():
        return parse_kronecker_seed(path.read_text(encoding="utf-8"))
    return seed_matrix_with_loops(named_seed(spec).graph)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# ---------------------------------------------------------------- generate


def _cmd_generate(args: argparse.Namespace) -> int:
    size_cap = _resolve_size_cap(args.size_cap)
    out_dir = Path(args.out)
    model = args.model
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; pick one of {', '.join(MODELS)}")
    params: dict = {"model": model, "size_cap": size_cap}

    if model == "sccg":
        if not args.seed or args.steps is None:
            raise ValueError("sccg needs --seed and --steps")
        seed = named_seed(args.seed)
        result = sccg_generate(SccgParams(seed=seed, steps=args.steps, size_cap=size_cap))
        graph = result.graph
        params.update(seed=args.seed, steps=args.steps)
    elif model == "corona":
        if not args.seed or args.steps is None:
            raise ValueError("corona needs --seed and --steps")
        seed = named_seed(args.seed)
        graph = corona_graph(seed, args.steps, size_cap=size_cap).graph
        params.update(seed=args.seed, steps=args.steps)
    elif model == "ba":
        if args.n is None:
            raise ValueError("ba needs --n (target node count)")
        if args.n > size_cap:
            raise ValueError(f"target node count {args.n} exceeds the cap of {size_cap}")
        ba = BaParams(
            initial_nodes=args.links + 1,
            links_per_new_node=args.links,
            target_nodes=args.n,
            rng_seed=args.rng_seed,
        )
        graph = ba_generate(ba)
        params.update(n=args.n, links=args.links, rng_seed=args.rng_seed,
                      initial_nodes=args.links + 1)
    elif model == "pfsf":
        if args.t is None:
            raise ValueError("pfsf needs --t")
        graph = pfsf_generate(args.t, size_cap=size_cap)
        params.update(t=args.t)
    else:  # kronecker
        if not args.seed or args.steps is None:
            raise ValueError("kronecker needs --seed (name or matrix file) and --steps")
        matrix = _kronecker_seed_matrix(args.seed)
        graph = kronecker_generate(matrix, args.steps, size_cap=size_cap)
        params.update(seed=args.seed, steps=args.steps)

    out_dir.mkdir(parents=True, exist_ok=True)
    outputs: list[Path] = []
    edges_path = out_dir / "edges.txt"
    write_edge_list(graph, edges_path)
    outputs.append(edges_path)
    if model == "sccg":
        meta_path = out_dir / "meta.csv"
        write_meta_csv(result.meta, meta_path)
        outputs.append(meta_path)
        trace_path = out_dir / "trace.json"
        write_trace_json(result.trace, trace_path)
        outputs.append(trace_path)
    _write_manifest(out_dir, "generate", params, outputs)
    print(f"wrote {graph.node_count} nodes, {graph.edge_count} edges to {out_dir}")
    return 0


# ----------------------------------------------------------------- analyze


def _report_csv_rows(report) -> list[list]:
    def fmt(value, undefined_word):
        return undefined_word if value is None else value

    return [
        ["node_count", report.node_count],
        ["edge_count", report.edge_count],
        ["density", fmt(report.density, "undefined")],
        ["diameter", fmt(report.diameter, "unreachable" if report.diameter_unreachable else "")],
        ["diameter_method", report.diameter_method or ""],
        ["avg_clustering", fmt(report.avg_clustering, "")],
        ["triangle_count", fmt(report.triangle_count, "")],
        ["assortativity_r", fmt(report.assortativity_r,
                                "undefined" if report.assortativity_undefined else "")],
        ["fitted_gamma", fmt(report.fitted_gamma, "")],
        ["gamma_from_hubs", report.gamma_from_hubs],
    ]


def _cmd_analyze(args: argparse.Namespace) -> int:
    graph = read_edge_list(args.edge_list)
    hubs = None
    if args.hubs_from:
        hubs = hubs_from_trace(read_trace_json(args.hubs_from))
    selection = None
    if args.metrics:
        selection = [m.strip() for m in args.metrics.split(",") if m.strip()]
        if not selection:
            raise ValueError("--metrics given but empty")
    report = compute_report(graph, hubs=hubs, metrics=selection, sample=args.sample)

    if args.format == "json":
        text = json.dumps(report.to_json_dict(), indent=2) + "\n"
    else:
        lines = ["metric,value"]
        lines += [f"{k},{v}" for k, v in _report_csv_rows(report)]
        text = "\n".join(lines) + "\n"

    if not args.out:
        sys.stdout.write(text)
        return 0

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs: list[Path] = []
    report_path = out_dir / ("report.json" if args.format == "json" else "report.csv")
    report_path.write_text(text, encoding="utf-8")
    outputs.append(report_path)
    hist_path = out_dir / "degree_histogram.csv"
    _write_csv(hist_path, ["degree", "count"],
               [[d, c] for d, c in sorted(report.degree_histogram.items())])
    outputs.append(hist_path)
    knn_path = out_dir / "knn_curve.csv"
    _write_csv(knn_path, ["degree", "mean_neighbor_degree"],
               [[d, v] for d, v in sorted(report.knn_curve.items())])
    outputs.append(knn_path)
    ccdf = degree_ccdf(graph, hubs) if hubs is not None else degree_ccdf(graph)
    ccdf_png = out_dir / "degree_ccdf.png"
    plots.render_degree_figure(ccdf, ccdf_png,
                               title="hub degrees" if hubs is not None else "degrees")
    outputs.append(ccdf_png)
    if report.knn_curve:
        knn_png = out_dir / "knn_curve.png"
        plots.render_knn_figure(
            [("graph", graph.node_count, d, v) for d, v in sorted(report.knn_curve.items())],
            knn_png,
        )
        outputs.append(knn_png)
    _write_manifest(out_dir, "analyze", {
        "edge_list": str(args.edge_list),
        "metrics": selection or list(ALL_METRICS),
        "format": args.format,
        "hubs_from": args.hubs_from or None,
        "sample": bool(args.sample),
    }, outputs)
    print(f"wrote report to {out_dir}")
    return 0


# ----------------------------------------------------------------- compare


def _compare_instance(model: str, target: int, seed_name: str, m: int,
                      links: int, rng_seed: int, size_cap: int) -> tuple[Graph, dict]:
    """Build one model instance for one schedule point."""
    if model == "sccg":
        seed = named_seed(seed_name)
        graph = sccg_generate(SccgParams(seed=seed, steps=m, size_cap=size_cap)).graph
        info = {"seed": seed_name, "steps": m}
    elif model == "corona":
        seed = named_seed(seed_name)
        graph = corona_graph(seed, m, size_cap=size_cap).graph
        info = {"seed": seed_name, "steps": m}
    elif model == "ba":
        params = BaParams(initial_nodes=links + 1, links_per_new_node=links,
                          target_nodes=target, rng_seed=rng_seed)
        graph = ba_generate(params)
        info = {"links": links, "rng_seed": rng_seed, "initial_nodes": links + 1}
    elif model == "pfsf":
        t = 0
        while pfsf_node_count(t + 1) <= target:
            t += 1
        graph = pfsf_generate(t, size_cap=size_cap)
        info = {"t": t}
    elif model == "kronecker":
        matrix = seed_matrix_with_loops(named_seed(seed_name).graph)
        dim = matrix.shape[0]
        k = 1
        while dim ** (k + 1) <= target:
            k += 1
        graph = kronecker_generate(matrix, k, size_cap=size_cap)
        info = {"seed": seed_name, "k": k}
    else:
        raise ValueError(f"unknown model {model!r}; pick from {', '.join(MODELS)}")
    return graph, info


def _cmd_compare(args: argparse.Namespace) -> int:
    size_cap = _resolve_size_cap(args.size_cap)
    models = [m.strip() for m in args.model.split(",") if m.strip()]
    if not models:
        raise ValueError("empty model list")
    for m in models:
        if m not in MODELS:
            raise ValueError(f"unknown model {m!r}; pick from {', '.join(MODELS)}")
    seed = named_seed(args.seed)
    schedule = [corona_node_count(seed.n, m) for m in range(1, args.steps + 1)]

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        series: dict[str, list[list]] = {name: [] for name in COMPARE_METRICS}
        knn_rows: list[tuple[str, int, int, float]] = []
        instance_info: list[dict] = []
        for model in models:
            last_graph: Graph | None = None
            for step, target in enumerate(schedule, start=1):
                graph, info = _compare_instance(
                    model, target, args.seed, step, args.links, args.rng_seed, size_cap
                )
                info.update(model=model, target_nodes=target,
                            actual_nodes=graph.node_count, edges=graph.edge_count)
                instance_info.append(info)
                report = compute_report(graph, metrics=COMPARE_METRICS)
                values = {
                    "density": report.density,
                    "diameter": report.diameter,
                    "clustering": report.avg_clustering,
                    "triangles": report.triangle_count,
                    "assortativity": report.assortativity_r,
                }
                for name in COMPARE_METRICS:
                    v = values[name]
                    series[name].append(
                        [model, graph.node_count, "" if v is None else v]
                    )
                last_graph = graph
            if last_graph is not None:
                for d, v in sorted(compute_report(last_graph, metrics=["knn"]).knn_curve.items()):
                    knn_rows.append((model, last_graph.node_count, d, v))

        for name in COMPARE_METRICS:
            path = out_dir / f"{name}.csv"
            _write_csv(path, ["model", "node_count", "value"], series[name])
            written.append(path)
            fig_path = out_dir / f"{name}.png"
            rows = [(m, n, v) for m, n, v in series[name] if v != ""]
            plots.render_series_figure(name, rows, fig_path)
            written.append(fig_path)
        knn_path = out_dir / "knn.csv"
        _write_csv(knn_path, ["model", "node_count", "degree", "mean_neighbor_degree"],
                   [list(r) for r in knn_rows])
        written.append(knn_path)
        knn_fig = out_dir / "knn.png"
        plots.render_knn_figure(knn_rows, knn_fig)
        written.append(knn_fig)
        _write_manifest(out_dir, "compare", {
            "models": models,
            "seed": args.seed,
            "steps": args.steps,
            "schedule": schedule,
            "links": args.links,
            "rng_seed": args.rng_seed,
            "size_cap": size_cap,
            "instances": instance_info,
        }, written)
    except Exception:
        for path in written:
            path.unlink(missing_ok=True)
        (out_dir / "manifest.json").unlink(missing_ok=True)
        raise
    print(f"wrote comparison series for {', '.join(models)} to {out_dir}")
    return 0


# -------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sccg",
        description="Deterministic network generation and analysis toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"sccg-toolkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a graph and write it to a directory")
    gen.add_argument("--model", required=True, help="|".join(MODELS))
    gen.add_argument("--seed", help="seed name (k3, s4, c5, p4, g10...) or matrix file")
    gen.add_argument("--steps", type=int, help="corona steps / Kronecker power")
    gen.add_argument("--t", type=int, help="pseudofractal step count")
    gen.add_argument("--n", type=int, help="target node count (ba)")
    gen.add_argument("--links", type=int, default=2, help="links per new node (ba)")
    gen.add_argument("--rng-seed", type=int, default=0, help="PRNG seed (ba)")
    gen.add_argument("--out", required=True, help="output directory")
    gen.add_argument("--size-cap", type=int, default=None,
                     help=f"node cap (default {DEFAULT_SIZE_CAP}; env {ENV_SIZE_CAP})")
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="compute metrics for an edge-list file")
    ana.add_argument("edge_list", help="edge-list file")
    ana.add_argument("--metrics", help=f"comma list from: {','.join(ALL_METRICS)}")
    ana.add_argument("--format", choices=("json", "csv"), default="json")
    ana.add_argument("--hubs-from", help="trace JSON; restricts the power-law fit to hubs")
    ana.add_argument("--sample", action="store_true",
                     help="sampled diameter lower bound for very large graphs")
    ana.add_argument("--out", help="output directory (default: print to stdout)")
    ana.set_defaults(func=_cmd_analyze)

    cmp_ = sub.add_parser("compare", help="sweep models over a size schedule")
    cmp_.add_argument("--model", required=True, help="comma list of models")
    cmp_.add_argument("--seed", default="k3", help="seed for sccg/corona/kronecker")
    cmp_.add_argument("--steps", type=int, default=4, help="schedule length (corona steps)")
    cmp_.add_argument("--links", type=int, default=2, help="links per new node (ba)")
    cmp_.add_argument("--rng-seed", type=int, default=1, help="PRNG seed (ba)")
    cmp_.add_argument("--out", required=True, help="output directory")
    cmp_.add_argument("--size-cap", type=int, default=None,
                      help=f"node cap (default {DEFAULT_SIZE_CAP}; env {ENV_SIZE_CAP})")
    cmp_.set_defaults(func=_cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EdgeListFormatError as exc:
        source = getattr(args, "edge_list", "input")
        print(f"error: {source}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
