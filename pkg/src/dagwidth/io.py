"""Text formats shared by the CLI and tests.

Edge-list format: optional '#' comment lines, then "n m", then m lines "u v".
Path-cover format: first line "t", then t lines of space-separated vertex ids.
Flow dump (debug): one line per edge, "kind args value".
"""
from __future__ import annotations

from .dag import Dag, PathCover, build_dag
from .errors import ParseError


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]


def parse_edge_list(text: str, want_mapping: bool = False):
    """Parse the edge-list format into a Dag.

    Vertex ids need not be dense: if any id is >= n, all mentioned ids are
    remapped (sorted ascending) onto 0..d-1 and unmentioned vertices fill the
    remaining ids. With want_mapping=True returns (dag, mapping) where
    mapping[new_id] = original id.
    """
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ParseError("negative counts in header")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    raw_edges: list[tuple[int, int]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {ln!r}")
        raw_edges.append((u, v))

    ids = sorted({x for e in raw_edges for x in e})
    if ids and ids[-1] >= n:
        if len(ids) > n:
            raise ParseError(f"{len(ids)} distinct ids but n={n}")
        remap = {old: new for new, old in enumerate(ids)}
        mapping = list(ids)
        nxt = ids[-1] + 1  # fresh labels for unmentioned vertices
        for _ in range(len(ids), n):
            mapping.append(nxt)
            nxt += 1
        edges = [(remap[u], remap[v]) for u, v in raw_edges]
    else:
        mapping = list(range(n))
        edges = raw_edges
    dag = build_dag(n, edges)
    return (dag, mapping) if want_mapping else dag


def format_edge_list(dag: Dag) -> str:
    lines = [f"{dag.n} {dag.m}"]
    lines.extend(f"{u} {v}" for u, v in dag.edges())
    return "\n".join(lines) + "\n"


def parse_path_cover(text: str) -> PathCover:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty cover input")
    try:
        t = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"bad path count {lines[0]!r}") from exc
    if len(lines) - 1 != t:
        raise ParseError(f"expected {t} path lines, found {len(lines) - 1}")
    paths = []
    for ln in lines[1:]:
        try:
            paths.append([int(x) for x in ln.split()])
        except ValueError as exc:
            raise ParseError(f"bad path line {ln!r}") from exc
    return PathCover(paths)


def format_path_cover(cover: PathCover) -> str:
    lines = [str(cover.size)]
    lines.extend(" ".join(map(str, p)) for p in cover.paths)
    return "\n".join(lines) + "\n"


def format_antichain(members) -> str:
    return " ".join(map(str, sorted(members))) + "\n"


def format_flow_dump(net, flow) -> str:
    """Debug dump of a flow, one 'kind args value' line per network edge."""
    n = net.base.n
    values = flow.values
    lines = []
    for v in range(n):
        lines.append(f"split {v} {values[v]}")
    for v in range(n):
        lines.append(f"srcin {v} {values[n + v]}")
    for v in range(n):
        lines.append(f"outsink {v} {values[2 * n + v]}")
    for j, (u, v) in enumerate(net.cross_edges):
        lines.append(f"cross {u} {v} {values[3 * n + j]}")
    return "\n".join(lines) + "\n"
