"""Graph export to DOT and JSON, with deterministic byte output."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .explicit import materialize
from .graphs import GraphView, Vertex, vertex_label
from .rings import indices_of, render_support

EXPORT_FORMAT = 1


def _graph_name(G: GraphView) -> str:
    qs = "x".join(str(q) for q in G.ring.qs)
    return f"{G.kind}_F{qs}"


def compressed_nodes(G: GraphView) -> list[dict]:
    return [
        {
            "id": i,
            "mask": m,
            "support": render_support(indices_of(m)),
            "weight": G.weights[i],
        }
        for i, m in enumerate(G.classes)
    ]


def compressed_edges(G: GraphView) -> list[list[int]]:
    out = []
    for i, mi in enumerate(G.classes):
        for j in range(i + 1, len(G.classes)):
            if mi & G.classes[j] == 0:
                out.append([i, j])
    return out


def explicit_nodes(G: GraphView, cap: int | None = None) -> list[dict]:
    eg = materialize(G, cap)
    return [
        {
            "id": i,
            "mask": v.mask,
            "copy": v.copy,
            "support": render_support(indices_of(v.mask)),
            "label": vertex_label(G, v),
        }
        for i, v in enumerate(eg.labels)
    ]


def explicit_edges(G: GraphView, cap: int | None = None) -> list[list[int]]:
    eg = materialize(G, cap)
    out = []
    for i in range(eg.n):
        for j in sorted(eg.adj[i]):
            if i < j:
                out.append([i, j])
    return out


def graph_to_json(G: GraphView, compressed: bool = True, cap: int | None = None) -> dict:
    doc = {
        "format": EXPORT_FORMAT,
        "graph": G.kind,
        "ring": G.ring.describe(),
        "compressed": compressed,
    }
    if compressed:
        doc["nodes"] = compressed_nodes(G)
        doc["edges"] = compressed_edges(G)
    else:
        doc["nodes"] = explicit_nodes(G, cap)
        doc["edges"] = explicit_edges(G, cap)
    return doc


def json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(G: GraphView, compressed: bool = True, cap: int | None = None) -> str:
    lines = [f"graph {_graph_name(G)} {{"]
    lines.append("  node [shape=circle];")
    if compressed:
        for node in compressed_nodes(G):
            label = f"S={node['support']} (w={node['weight']})"
            lines.append(f"  n{node['id']} [label={_quote(label)}];")
        for i, j in compressed_edges(G):
            lines.append(f"  n{i} -- n{j};")
    else:
        eg = materialize(G, cap)
        for i, v in enumerate(eg.labels):
            lines.append(f"  n{i} [label={_quote(vertex_label(G, v))}];")
        for i, j in explicit_edges(G, cap):
            lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_bytes_atomic(path: str | Path, data: bytes) -> None:
    """Write via a sibling temp file and rename, so readers never see a torn file."""
    target = Path(path)
    tmp = target.with_name(f".{target.name}.{os.getpid()}.tmp")
    tmp.write_bytes(data)
    os.replace(tmp, target)


def write_text_atomic(path: str | Path, text: str) -> None:
    write_bytes_atomic(path, text.encode("utf-8"))
