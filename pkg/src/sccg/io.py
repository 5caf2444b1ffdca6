"""File formats: edge lists, metadata sidecars, trace JSON, seed matrices.

All files are UTF-8 with LF line endings and deterministic content for a
given graph, so reruns diff clean and hash equal.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Sequence

from .graph import Graph, NodeMeta, build_graph
from .selfcoord import TraceStep


class EdgeListFormatError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def write_edge_list(graph: Graph, path: str | Path) -> None:
    """Write "u v" lines with u < v in ascending order, node count header."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# nodes={graph.node_count}\n")
        for u, v in graph.iter_edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path: str | Path) -> Graph:
    """Strict edge-list reader.

    Unlike the generators' internal idempotent inserts, user-supplied files
    are validated hard: self-loops, duplicate edges (in either orientation)
    and out-of-range ids are errors reported with their line number.
    """
    path = Path(path)
    node_count: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    with path.open("r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if node_count is None:
                    body = line[1:].strip()
                    if body.startswith("nodes="):
                        try:
                            node_count = int(body[len("nodes=") :])
                        except ValueError:
                            raise EdgeListFormatError(line_no, f"bad node count in {line!r}")
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListFormatError(line_no, f"expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListFormatError(line_no, f"non-integer node id in {line!r}")
            if u == v:
                raise EdgeListFormatError(line_no, f"self-loop ({u},{v})")
            if u < 0 or v < 0:
                raise EdgeListFormatError(line_no, f"negative node id in {line!r}")
            if node_count is not None and (u >= node_count or v >= node_count):
                raise EdgeListFormatError(
                    line_no, f"node id out of range 0..{node_count - 1} in {line!r}"
                )
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise EdgeListFormatError(line_no, f"duplicate edge ({u},{v})")
            seen.add(key)
            edges.append(key)
    if node_count is None:
        node_count = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(edges, node_count)


_META_FIELDS = (
    "node",
    "birth_step",
    "node_class",
    "role",
    "corona_parent",
    "copy_id",
    "ancestor_hubs",
)


def write_meta_csv(metas: Sequence[NodeMeta], path: str | Path) -> None:
    """Column-per-field node metadata keyed by node id."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(_META_FIELDS)
        for node, meta in enumerate(metas):
            writer.writerow(
                [
                    node,
                    meta.birth_step,
                    meta.node_class.value,
                    meta.role.value,
                    "" if meta.corona_parent is None else meta.corona_parent,
                    meta.copy_id,
                    ";".join(str(h) for h in meta.ancestor_hubs),
                ]
            )


def trace_to_json_obj(trace: Sequence[TraceStep]) -> list[dict]:
    return [
        {
            "step": ts.step,
            "hubs": list(ts.hubs),
            "nonhubs": list(ts.nonhubs),
            "sc_links_added": ts.sc_links_added,
            "x_size": ts.x_size,
            "y_size": ts.y_size,
            "deep_offshoot_size": ts.deep_offshoot_size,
        }
        for ts in trace
    ]


def write_trace_json(trace: Sequence[TraceStep], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        json.dump(trace_to_json_obj(trace), fh, indent=2)
        fh.write("\n")


def read_trace_json(path: str | Path) -> list[TraceStep]:
    with Path(path).open("r", encoding="utf-8") as fh:
        data = json.load(fh)
    return [
        TraceStep(
            step=int(obj["step"]),
            hubs=[int(h) for h in obj["hubs"]],
            nonhubs=[int(h) for h in obj["nonhubs"]],
            sc_links_added=int(obj["sc_links_added"]),
            x_size=int(obj["x_size"]),
            y_size=int(obj["y_size"]),
            deep_offshoot_size=int(obj["deep_offshoot_size"]),
        )
        for obj in data
    ]


def hubs_from_trace(trace: Sequence[TraceStep]) -> list[int]:
    hubs: set[int] = set()
    for ts in trace:
        hubs.update(ts.hubs)
    return sorted(hubs)
