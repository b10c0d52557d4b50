"""Rewire a path cover until its distinct edges number less than 2|V|.

Cover paths live as doubly linked chains of occurrence nodes; every distinct
directed edge keeps an insertion-ordered registry of the nodes realizing it,
so a path containing a given edge is found in O(1) and splicing reconnects
chains with O(1) pointer work per mismatch.

Vertices of degree at most two in the support are blue, the rest red; an
undirected cycle of red edges lets paths be spliced along one side of the
cycle, draining multiplicity from that side until an edge disappears. The
sum of squared multiplicities grows by at least the cycle length per pass,
which bounds the total splicing work. When no red cycle remains, the red
edges form a forest and the support is provably below 2|V| edges.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dag import Dag, PathCover, build_dag
from .errors import EdgeUncovered, NotACover, NotARedCycle
from .oracle import validate_cover


class _Node:
    __slots__ = ("vertex", "prev", "next", "serial")

    def __init__(self, vertex: int, serial: int):
        self.vertex = vertex
        self.prev: _Node | None = None
        self.next: _Node | None = None
        self.serial = serial

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"_Node({self.vertex}@{self.serial})"


@dataclass
class RedCycle:
    """A cycle of red support edges, as the closed vertex sequence."""

    vertices: list[int]


class SupportGraph:
    """Multiplicity-weighted support of a path cover, as linked path chains.

    occ maps each distinct directed edge to the tail nodes realizing it, in
    insertion order. degree counts distinct incident edges per vertex; a
    vertex is red iff its degree exceeds two. processed edges are those the
    cycle search has exhausted or deleted.
    """

    def __init__(self, cover: PathCover, n: int):
        self.n = n
        self._serial = 0
        self.occ: dict[tuple[int, int], dict[int, _Node]] = {}
        self.degree: dict[int, int] = {}
        self.heads: list[_Node] = []
        self.processed: set[tuple[int, int]] = set()
        for path in cover.paths:
            prev: _Node | None = None
            for v in path:
                node = self._new_node(v)
                if prev is None:
                    self.heads.append(node)
                else:
                    prev.next = node
                    node.prev = prev
                    self._register((prev.vertex, v), prev)
                prev = node

    # ------------------------------------------------------------- plumbing

    def _new_node(self, v: int) -> _Node:
        node = _Node(v, self._serial)
        self._serial += 1
        return node

    def _register(self, edge: tuple[int, int], tail: _Node) -> None:
        entry = self.occ.get(edge)
        if entry is None:
            self.occ[edge] = {tail.serial: tail}
            self.processed.discard(edge)
            for x in edge:
                self.degree[x] = self.degree.get(x, 0) + 1
        else:
            entry[tail.serial] = tail

    def _unregister(self, edge: tuple[int, int], tail: _Node) -> None:
        entry = self.occ[edge]
        del entry[tail.serial]
        if not entry:
            del self.occ[edge]
            self.processed.add(edge)
            for x in edge:
                self.degree[x] -= 1

    def mu(self, edge: tuple[int, int]) -> int:
        entry = self.occ.get(edge)
        return len(entry) if entry else 0

    def is_red(self, v: int) -> bool:
        return self.degree.get(v, 0) > 2

    def phi(self) -> int:
        return sum(len(entry) ** 2 for entry in self.occ.values())

    def to_cover(self) -> PathCover:
        paths = []
        for head in self.heads:
            path = []
            node: _Node | None = head
            while node is not None:
                path.append(node.vertex)
                node = node.next
            paths.append(path)
        return PathCover(paths)

    # -------------------------------------------------------------- splicing

    def splice_chain(self, d: list[int]) -> list[_Node]:
        """Reconnect paths so d is contiguous on one; returns its node chain.

        Per-edge multiplicities are preserved: mismatches only exchange the
        suffixes of two chains through O(1) pointer swaps.
        """
        if len(d) < 2:
            raise EdgeUncovered("splice target must be a proper path")
        first = (d[0], d[1])
        entry = self.occ.get(first)
        if not entry:
            raise EdgeUncovered(f"edge {first} lies on no cover path")
        cur = entry[next(iter(entry))]
        chain = [cur, cur.next]
        for u, v in zip(d[1:], d[2:]):
            x = chain[-1]
            nxt = x.next
            if nxt is not None and nxt.vertex == v:
                chain.append(nxt)
                continue
            entry = self.occ.get((u, v))
            if not entry:
                raise EdgeUncovered(f"edge {(u, v)} lies on no cover path")
            b_u = entry[next(iter(entry))]
            b_v = b_u.next
            # swap the suffix after x with the suffix starting at b_v
            x.next = b_v
            b_v.prev = x
            b_u.next = nxt
            if nxt is not None:
                nxt.prev = b_u
            self._unregister((u, v), b_u)
            self._register((u, v), x)
            if nxt is not None:
                self._unregister((u, nxt.vertex), x)
                self._register((u, nxt.vertex), b_u)
            chain.append(b_v)
        return chain

    # ------------------------------------------------------- cycle machinery

    def find_red_cycle(self) -> RedCycle | None:
        """Depth-first search over red edges for a cycle of red vertices.

        Starts from the lowest-id red vertex owning an unprocessed red edge;
        adjacency follows canonical edge order with processed edges skipped.
        Edges are marked processed when backtracked over, and a detected
        cycle is returned without processing its edges.
        """
        adj: dict[int, list[tuple[int, tuple[int, int]]]] = {}
        for edge in self.occ:
            u, v = edge
            if edge not in self.processed and self.is_red(u) and self.is_red(v):
                adj.setdefault(u, []).append((v, edge))
                adj.setdefault(v, []).append((u, edge))
        for entries in adj.values():
            entries.sort()
        visited: set[int] = set()
        for root in sorted(adj):
            if root in visited:
                continue
            visited.add(root)
            stack = [root]
            pos = {root: 0}
            parent_edge: dict[int, tuple[int, int] | None] = {root: None}
            cursor = {root: 0}
            while stack:
                v = stack[-1]
                entries = adj.get(v, ())
                advanced = False
                while cursor[v] < len(entries):
                    w, edge = entries[cursor[v]]
                    cursor[v] += 1
                    if edge in self.processed or edge == parent_edge[v]:
                        continue
                    if w in pos:
                        return RedCycle(stack[pos[w]:])
                    if w in visited:
                        continue
                    visited.add(w)
                    stack.append(w)
                    pos[w] = len(stack) - 1
                    parent_edge[w] = edge
                    cursor[w] = 0
                    advanced = True
                    break
                if not advanced:
                    stack.pop()
                    del pos[v]
                    pe = parent_edge[v]
                    if pe is not None:
                        self.processed.add(pe)
        return None

    def eliminate_red_cycle(self, cycle: RedCycle, record: list | None = None):
        """Splice along one side of the cycle until a support edge vanishes.

        The side with the smaller multiplicity sum is drained (ties drain the
        backward side); each pass raises the kept side's multiplicities by
        one and lowers the drained side's by one, growing the squared-
        multiplicity potential by at least the cycle length. record, when
        given, receives one (delta_phi, cycle_length, spliced_edges) triple
        per pass.
        """
        cyc = cycle.vertices
        length = len(cyc)
        if length < 3:
            raise NotARedCycle("a red cycle has at least three vertices")
        orient: list[bool] = []  # True = forward along cycle order
        for i in range(length):
            a, b = cyc[i], cyc[(i + 1) % length]
            if (a, b) in self.occ:
                orient.append(True)
            elif (b, a) in self.occ:
                orient.append(False)
            else:
                raise NotARedCycle(f"({a}, {b}) is not a support edge")
        for v in cyc:
            if not self.is_red(v):
                raise NotARedCycle(f"vertex {v} is not red")
        if all(orient) or not any(orient):
            raise NotARedCycle("cycle orientation has no mixed edges")

        sum_f = sum(self.mu((cyc[i], cyc[(i + 1) % length]))
                    for i in range(length) if orient[i])
        sum_b = sum(self.mu((cyc[(i + 1) % length], cyc[i]))
                    for i in range(length) if not orient[i])
        drain_forward = sum_f < sum_b  # ties drain the backward side

        # rotate so position 0 starts a drained-side run
        drained = [o == drain_forward for o in orient]
        start = next(i for i in range(length)
                     if drained[i] and not drained[i - 1])
        cyc = cyc[start:] + cyc[:start]
        drained = drained[start:] + drained[:start]
        orient = orient[start:] + orient[:start]

        def run_vertices(p: int, q: int) -> list[int]:
            """Directed vertex list of the run of edge positions [p, q]."""
            verts = [cyc[i % length] for i in range(p, q + 2)]
            return verts if orient[p] else verts[::-1]

        runs: list[tuple[bool, int, int]] = []
        i = 0
        while i < length:
            j = i
            while j + 1 < length and drained[j + 1] == drained[i]:
                j += 1
            runs.append((drained[i], i, j))
            i = j + 1

        drained_edges = sum(1 for d in drained if d)
        while True:
            phi_before = self.phi() if record is not None else 0
            self._one_pass(runs, run_vertices)
            if record is not None:
                record.append((self.phi() - phi_before, length, drained_edges))
            done = False
            for flag, p, q in runs:
                if not flag:
                    continue
                verts = run_vertices(p, q)
                for e in zip(verts, verts[1:]):
                    if self.mu(e) == 0:
                        done = True
            if done:
                break

    def _one_pass(self, runs, run_vertices) -> None:
        """One splice pass: make every drained run contiguous on some path,
        detach it, and reroute the loose ends through the kept runs."""
        chains: dict[int, list[_Node]] = {}
        start_node: dict[int, _Node] = {}
        end_node: dict[int, _Node] = {}
        for flag, p, q in runs:
            if not flag:
                continue
            verts = run_vertices(p, q)
            chain = self.splice_chain(verts)
            chains[p] = chain
            start_node[verts[0]] = chain[0]
            end_node[verts[-1]] = chain[-1]
        # detach the drained chains; their interior nodes fall out of every
        # path, which is safe because red vertices keep other covered edges
        for flag, p, q in runs:
            if not flag:
                continue
            verts = run_vertices(p, q)
            chain = chains[p]
            for i, e in enumerate(zip(verts, verts[1:])):
                self._unregister(e, chain[i])
        # reconnect through the kept runs: the prefix arriving at a drained
        # run's start continues along the kept run to the suffix leaving the
        # matching drained run's end
        for flag, p, q in runs:
            if flag:
                continue
            verts = run_vertices(p, q)
            left = start_node[verts[0]]
            right = end_node[verts[-1]]
            prev = left
            for v in verts[1:-1]:
                node = self._new_node(v)
                prev.next = node
                node.prev = prev
                self._register((prev.vertex, v), prev)
                prev = node
            prev.next = right
            right.prev = prev
            self._register((prev.vertex, right.vertex), prev)


def eliminate_red_cycle(support: SupportGraph, cycle: RedCycle,
                        record: list | None = None) -> None:
    """Splice the support's cover along one side of a red cycle until an
    edge of that side disappears. Mutates the support in place."""
    support.eliminate_red_cycle(cycle, record=record)


def splice(cover: PathCover, d: list[int]) -> PathCover:
    """Reconnect cover paths so d appears contiguously in one of them.

    Preserves the number of paths and every edge multiplicity. The linked
    rebuild costs the cover's total length; inside thin the same machinery
    runs on the persistent structure at O(|d|) per call.
    """
    n = max((max(p) for p in cover.paths if p), default=-1) + 1
    support = SupportGraph(cover, n)
    support.splice_chain(d)
    return support.to_cover()


def thin(dag: Dag, cover: PathCover, instrument: list | None = None) -> PathCover:
    """Same-size cover whose distinct edges number less than 2|V|.

    instrument, when given, collects one (delta_phi, cycle_length,
    spliced_edges) record per elimination pass.
    """
    report = validate_cover(dag, cover)
    if not report.ok:
        raise NotACover("; ".join(report.violations[:3]))
    support = SupportGraph(cover, dag.n)
    while True:
        cycle = support.find_red_cycle()
        if cycle is None:
            break
        support.eliminate_red_cycle(cycle, record=instrument)
    result = support.to_cover()
    assert result.size == cover.size
    return result


def cover_support(cover: PathCover) -> dict[tuple[int, int], int]:
    """Distinct edges of a cover with their multiplicities."""
    mu: dict[tuple[int, int], int] = {}
    for path in cover.paths:
        for e in zip(path, path[1:]):
            mu[e] = mu.get(e, 0) + 1
    return mu


def width_preserving_sparsify(dag: Dag) -> Dag:
    """Spanning subgraph with fewer than 2|V| edges and unchanged width."""
    from .incremental import solve

    if dag.n == 0:
        return dag
    thinned = thin(dag, solve(dag).cover)
    return build_dag(dag.n, sorted(cover_support(thinned)))
