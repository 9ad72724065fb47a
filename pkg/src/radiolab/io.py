"""Edge-list and labeling JSON formats.

Edge list::

    # comment
    5                 first non-comment line: vertex count
    name 0 (u_1,v_0)  optional display name
    0 1               one edge per line, 0-based ids

Labeling JSON: ``{"labels": {"0": 0, ...}, "ordering": [...], "span": N}``
with vertex keys in ascending order.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .graph import Graph, build_graph
from .labeling import Labeling


class FormatError(ValueError):
    pass


def parse_edge_list(text: str, require_connected: bool = True) -> Graph:
    p = None
    edges = []
    names: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if p is None:
                if len(parts) != 1:
                    raise FormatError(f"line {lineno}: expected vertex count")
                p = int(parts[0])
            elif parts[0] == "name":
                # the name itself may contain spaces
                names[int(parts[1])] = raw.split(None, 2)[2].split("#", 1)[0].strip()
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise FormatError(f"line {lineno}: cannot parse {raw!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: cannot parse {raw!r}") from exc
    if p is None:
        raise FormatError("empty edge list")
    name_list = None
    if names:
        if set(names) != set(range(p)):
            raise FormatError("name lines must cover every vertex or none")
        name_list = [names[v] for v in range(p)]
    return build_graph(p, edges, names=name_list, require_connected=require_connected)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.p)]
    if g.names is not None:
        lines += [f"name {v} {g.names[v]}" for v in range(g.p)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def labeling_to_dict(lab: Labeling, **extra: Any) -> dict:
    out: dict[str, Any] = {"labels": {str(v): int(x) for v, x in enumerate(lab.labels)}}
    if lab.ordering is not None:
        out["ordering"] = [int(v) for v in lab.ordering]
    out["span"] = lab.span
    out.update(extra)
    return out


def labeling_from_dict(data: dict, p: int | None = None) -> Labeling:
    try:
        raw = {int(k): int(v) for k, v in data["labels"].items()}
    except (KeyError, AttributeError, TypeError, ValueError) as exc:
        raise FormatError("labeling JSON needs a 'labels' object of integer values") from exc
    count = p if p is not None else len(raw)
    missing = [v for v in range(count) if v not in raw]
    if missing:
        raise FormatError(f"labeling is missing vertices {missing[:10]}")
    extra = sorted(set(raw) - set(range(count)))
    if extra:
        raise FormatError(f"labeling names unknown vertices {extra[:10]}")
    ordering = data.get("ordering")
    if ordering is not None:
        ordering = tuple(int(v) for v in ordering)
    try:
        return Labeling(tuple(raw[v] for v in range(count)), ordering)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2)


def read_labeling(path, p: int | None = None) -> Labeling:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return labeling_from_dict(data, p)
