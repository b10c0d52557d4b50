"""Incremental minimum path cover by topological insertion.

Vertices enter in topological order. The solver keeps a minimum flow of the
reduction of a transitively sparsified prefix graph, plus an integer level
per network vertex. A new vertex first has its in-edges sparsified to at
most the current flow size, then a single decrementing path is searched in
the residual, layer by layer from the highest level downward. Visited
vertices sink to the smallest visited level l, the new split gets levels
(l, l+1), and the demand of the l-th layered cut grows by one; when that
demand ties the cut below, the two layers merge.

Three structural facts drive everything and are checked by the debug
auditor after every insertion:

  A. residual edges never increase the level, so every network edge is
     level-monotone and an edge with slack keeps both ends on one level;
  B. positive sink edges carry one unit and sit above their in-vertex,
     positive source edges enter level 0;
  C. layered-cut demands strictly decrease with the level.

Two bookkeeping variants answer "id of some cover path containing u"
queries for the sparsifier. K3 maintains the flow decomposition explicitly,
re-pairing path suffixes inside the updated region. K2 stores a path id
only on antichain vertices (splits that cross a layered cut) plus flagged
path heads, and a back link from every other vertex to such a vertex
preceding it on its path; after an update, links and ids at levels >= l
are re-derived from backward walks over that region's flow, whose anchors
below the region kept valid ids. Link maintenance also runs after failed
searches: a failure drags visited vertices to level 0 and may demote
back-link targets (failures happen at most width-many times, so this stays
inside the charged budget).

Path and link maintenance always runs on the pre-merge levels; the merge
itself only relabels, except that anchors it demotes from the antichain
structure hand their dependents over to their own predecessors.
"""
from __future__ import annotations

import os
import sys
from dataclasses import dataclass

from .dag import Dag, PathCover
from .errors import InvariantViolation, OrderViolation
from .flow import Flow, FlowNetwork, FlowVertex, decompose
from .sparsify import SurvivorArray

K2 = "k2"
K3 = "k3"

_SENTINEL = -1  # predecessor marker for the first traversal layer


@dataclass
class LevelAssignment:
    """Final levels of the split halves, the cut-demand table and max level."""

    level_in: list[int]
    level_out: list[int]
    cut_demand: list[int]
    max_level: int

    def level(self, x: FlowVertex) -> float:
        if x.kind == "source":
            return float("-inf")
        if x.kind == "sink":
            return float("inf")
        return self.level_in[x.v] if x.kind == "in" else self.level_out[x.v]


class TraversalResult:
    """Outcome of one layered decrementing-path search.

    found tells whether a decrementing path exists; min_level is the
    smallest visited level (0 after a failed search). The visited set and
    the decrementing path are materialized lazily as FlowVertex views.
    """

    __slots__ = ("min_level", "_popped", "_pred", "_last", "_vertex")

    def __init__(self, min_level: int, popped: list[int], pred: dict,
                 last: int, vertex: int):
        self.min_level = min_level
        self._popped = popped
        self._pred = pred
        self._last = last
        self._vertex = vertex

    @property
    def found(self) -> bool:
        return self._last >= 0

    @property
    def visited(self) -> list[FlowVertex]:
        return [_to_flow_vertex(x) for x in self._popped]

    @property
    def decrementing_path(self) -> list[tuple[FlowVertex, FlowVertex]] | None:
        if self._last < 0:
            return None
        path = [(_to_flow_vertex(self._last), FlowVertex.sink())]
        code = self._last
        while code != _SENTINEL:
            prev, _, _ = self._pred[code]
            tail = (FlowVertex.vin(self._vertex) if prev == _SENTINEL
                    else _to_flow_vertex(prev))
            path.append((tail, _to_flow_vertex(code)))
            code = prev
        path.append((FlowVertex.source(), FlowVertex.vin(self._vertex)))
        path.reverse()
        return path

    def __repr__(self) -> str:
        return (f"TraversalResult(found={self.found}, "
                f"min_level={self.min_level}, visited={len(self._popped)})")


@dataclass
class SolveResult:
    cover: PathCover
    flow: Flow
    levels: LevelAssignment
    network: FlowNetwork
    charges: dict


def _to_flow_vertex(code: int) -> FlowVertex:
    return FlowVertex.vout(code >> 1) if code & 1 else FlowVertex.vin(code >> 1)


class SolverState:
    """Incremental solver state; drive it with insert_vertex in topo order."""

    def __init__(self, dag: Dag, variant: str = K2, debug: bool = False,
                 trace: bool = False):
        if variant not in (K2, K3):
            raise ValueError(f"unknown variant {variant!r}")
        n = dag.n
        self.dag = dag
        self.variant = variant
        self.debug = debug
        self.trace = trace
        self.n = n
        self.inserted = bytearray(n)
        self.count = 0
        self.iteration = 0
        # flow values per edge family
        self.split_f = [0] * n
        self.srcin_f = [0] * n
        self.outsink_f = [0] * n
        self.cross_tail: list[int] = []
        self.cross_head: list[int] = []
        self.cross_f: list[int] = []
        self.in_cross: list[list[int]] = [[] for _ in range(n)]
        self.out_pos: list[list[int]] = [[] for _ in range(n)]
        self.f_size = 0
        self.end_set: set[int] = set()
        # levels: network vertex code x (v_in = 2v, v_out = 2v+1) -> level
        self.lv = [0] * (2 * n)
        self.buckets: list[list[int]] = [[]]
        self.cut_demand: list[int] = []
        # traversal scratch, epoch-stamped
        self.enq_epoch = [0] * (2 * n)
        self.epoch = 0
        self.survivors = SurvivorArray(0)
        # K3 bookkeeping
        self.paths: list[list[int]] = []
        self.path_of = [0] * n
        # K2 bookkeeping
        self.path_id = [0] * n
        self.backlink = list(range(n))
        self.newlink = [0] * n
        self.newlink_epoch = [0] * n
        self.updated_epoch = [0] * n
        self.authoritative = bytearray(n)  # id valid even while not antichain
        # instrumentation
        self.charge_units = 0
        self.sparsify_units = 0
        self.visit_count = [0] * n
        self.merges = 0
        self.last_merge = False
        # debug auditor state
        self._anc = [0] * n if debug else None
        self._premerge_out_levels: dict[int, int] = {}
        self._trace_out = sys.stderr

    # ------------------------------------------------------------------ api

    @property
    def max_level(self) -> int:
        return len(self.cut_demand)

    def is_antichain_vertex(self, v: int) -> bool:
        return self.lv[2 * v] < self.lv[2 * v + 1]

    def path_query(self, v: int) -> int:
        """Id in [1, |f*|] of some current cover path containing v."""
        if self.variant == K3:
            return self.path_of[v]
        if self.is_antichain_vertex(v) or self.authoritative[v]:
            return self.path_id[v]
        return self.path_id[self.backlink[v]]

    def insert_vertex(self, v: int, in_neighbors: list[int]) -> TraversalResult:
        """Sparsify v's in-edges, install the tentative flow, search, update."""
        if not (0 <= v < self.n):
            raise OrderViolation(f"vertex {v} out of range")
        if self.inserted[v]:
            raise OrderViolation(f"vertex {v} inserted twice")
        for u in in_neighbors:
            if not self.inserted[u]:
                raise OrderViolation(f"in-neighbor {u} of {v} not yet inserted")
        self.iteration += 1
        prev_end = set(self.end_set) if self.debug else None
        prev_out_levels = ({u: self.lv[2 * u + 1] for u in self.end_set}
                           if self.debug else None)

        survivors = self._sparsify_in(v, in_neighbors)
        self._install(v, survivors)
        result = self._search(v)
        self.apply_updates(result, v)

        if self.debug:
            self._audit(v, result, prev_end, prev_out_levels)
        if self.trace:
            print(f"i={self.count - 1} found={result.found} "
                  f"l={result.min_level} |f|={self.f_size} merge={self.last_merge}",
                  file=self._trace_out)
        return result

    def charge_counters(self) -> dict:
        """Instrumentation snapshot: visit counts and total charged work."""
        return {
            "total_units": self.charge_units + self.sparsify_units,
            "traversal_units": self.charge_units,
            "sparsify_units": self.sparsify_units,
            "visits_per_vertex": list(self.visit_count),
            "merges": self.merges,
        }

    def result(self) -> SolveResult:
        """Freeze the final cover, flow, network and level assignment."""
        from .dag import build_dag
        from .flow import reduce as _reduce

        n = self.n
        edges = [(self.cross_tail[e], v) for v in range(n) for e in self.in_cross[v]]
        sparsified = build_dag(n, edges)
        net = _reduce(sparsified)
        values = [0] * net.num_edges
        for v in range(n):
            values[v] = self.split_f[v]
            values[n + v] = self.srcin_f[v]
            values[2 * n + v] = self.outsink_f[v]
        for e in range(len(self.cross_f)):
            values[net.cross_id[(self.cross_tail[e], self.cross_head[e])]] = \
                self.cross_f[e]
        flow = Flow(values, self.f_size)
        cover = decompose(net, flow) if n else PathCover([])
        levels = LevelAssignment(
            [self.lv[2 * v] for v in range(n)],
            [self.lv[2 * v + 1] for v in range(n)],
            list(self.cut_demand), self.max_level)
        return SolveResult(cover, flow, levels, net, self.charge_counters())

    # ------------------------------------------------------- insertion steps

    def _sparsify_in(self, v: int, in_neighbors: list[int]) -> list[int]:
        t = self.f_size
        self.sparsify_units += len(in_neighbors) + t
        if not in_neighbors:
            return []
        arr = self.survivors
        arr.resize(t)
        arr.begin()
        topo_pos = self.dag.topo_pos
        if self.variant == K3:
            path_of = self.path_of
            for u in in_neighbors:
                arr.offer(path_of[u] - 1, u, topo_pos)
        else:
            for u in in_neighbors:
                arr.offer(self.path_query(u) - 1, u, topo_pos)
        return arr.survivors()

    def _install(self, v: int, survivors: list[int]) -> None:
        for u in survivors:
            eid = len(self.cross_f)
            self.cross_tail.append(u)
            self.cross_head.append(v)
            self.cross_f.append(0)
            self.in_cross[v].append(eid)
        self.split_f[v] = 1
        self.srcin_f[v] = 1
        self.outsink_f[v] = 1
        self.inserted[v] = 1
        self.count += 1
        self.f_size += 1  # tentative; drops back if a decrementing path exists

    def layered_search(self, v: int) -> TraversalResult:
        """Search for a decrementing path, one BFS per layer, highest first."""
        return self._search(v)

    def _search(self, v: int) -> TraversalResult:
        self.epoch += 1
        epoch = self.epoch
        enq = self.enq_epoch
        lv = self.lv
        pred: dict[int, tuple[int, int, bool]] = {}
        popped: list[int] = []
        m = self.max_level
        queues: list[list[int]] = [[] for _ in range(m + 1)]
        qhead = [0] * (m + 1)

        for e in self.in_cross[v]:
            u_out = 2 * self.cross_tail[e] + 1
            if enq[u_out] != epoch:
                enq[u_out] = epoch
                queues[lv[u_out]].append(u_out)
                pred[u_out] = (_SENTINEL, e, True)

        found_last = -1
        cur = m
        while cur >= 0:
            q = queues[cur]
            if qhead[cur] >= len(q):
                cur -= 1
                continue
            x = q[qhead[cur]]
            qhead[cur] += 1
            popped.append(x)
            self.visit_count[x >> 1] += 1
            u = x >> 1
            if x & 1:  # u_out
                if self.outsink_f[u] > 0:
                    found_last = x
                    break
                y = x - 1  # reverse split edge
                if enq[y] != epoch:
                    enq[y] = epoch
                    if self.debug and lv[y] > cur:
                        raise InvariantViolation("residual edge increases level")
                    queues[lv[y]].append(y)
                    pred[y] = (x, -(u + 1), True)
                for e in self.out_pos[u]:  # direct cross edges carrying flow
                    y = 2 * self.cross_head[e]
                    if enq[y] != epoch:
                        enq[y] = epoch
                        if self.debug and lv[y] > cur:
                            raise InvariantViolation("residual edge increases level")
                        queues[lv[y]].append(y)
                        pred[y] = (x, e, False)
            else:  # u_in
                for e in self.in_cross[u]:  # reverse cross edges
                    y = 2 * self.cross_tail[e] + 1
                    if enq[y] != epoch:
                        enq[y] = epoch
                        if self.debug and lv[y] > cur:
                            raise InvariantViolation("residual edge increases level")
                        queues[lv[y]].append(y)
                        pred[y] = (x, e, True)
                if self.split_f[u] > 1:  # direct split edge with slack
                    y = x + 1
                    if enq[y] != epoch:
                        enq[y] = epoch
                        queues[lv[y]].append(y)
                        pred[y] = (x, -(u + 1), False)

        if found_last < 0:
            return TraversalResult(0, popped, pred, -1, v)
        return TraversalResult(lv[found_last], popped, pred, found_last, v)

    def apply_updates(self, result: TraversalResult, v: int) -> None:
        """Flow, level, cut-demand, end-set and variant bookkeeping updates."""
        lv = self.lv
        found = result._last >= 0
        l = result.min_level if found else 0
        if found:
            a = result._last >> 1
            self._apply_flow_deltas(result, v, a)
        else:
            self.end_set.add(v)

        # level updates: visited vertices and the new split sink to (l, l+1)
        for x in result._popped:
            if lv[x] != l:
                lv[x] = l
                self.buckets[l].append(x)
        lv[2 * v] = l
        self.buckets[l].append(2 * v)
        if l + 1 > self.max_level:
            self.buckets.append([])
            self.cut_demand.append(0)
        lv[2 * v + 1] = l + 1
        self.buckets[l + 1].append(2 * v + 1)
        self.cut_demand[l] += 1

        if self.debug:
            self._premerge_out_levels = {u: lv[2 * u + 1] for u in self.end_set}

        # charged region: everything at level l or above, pre-merge
        region = 0
        for j in range(l, len(self.buckets)):
            bucket = self.buckets[j]
            if bucket:
                self.buckets[j] = bucket = [x for x in bucket if lv[x] == j]
                region += len(bucket)
        self.charge_units += (self.f_size + 1) * len(result._popped) + region

        subpaths: list[list[int]] | None = None
        if self.variant == K3:
            if found:
                self._k3_repair(l)
            else:
                self.paths.append([v])
                self.path_of[v] = len(self.paths)
        else:
            # A failed search still drags visited vertices to level 0 and can
            # demote back-link targets, so the layer is re-decomposed either way.
            subpaths = self._decompose_region(l)
            self.maintain_backlinks(l, subpaths)

        # merge of layer l restores strictly decreasing cut demands
        self.last_merge = False
        if l >= 1 and self.cut_demand[l] == self.cut_demand[l - 1]:
            self.last_merge = True
            self.merges += 1
            moved = []
            for j in range(l, len(self.buckets)):
                keep = [x for x in self.buckets[j] if lv[x] == j]
                for x in keep:
                    lv[x] = j - 1
                moved.append(keep)
            self.buckets[l - 1].extend(moved[0])
            for i, keep in enumerate(moved[1:], start=l):
                self.buckets[i] = keep
            del self.buckets[-1]
            del self.cut_demand[l - 1]
            if subpaths is not None:
                self._repair_merged_anchors(subpaths, moved)

    def _repair_merged_anchors(self, subpaths: list[list[int]],
                               moved: list[list[int]]) -> None:
        """Fix back links whose target lost antichain status in the merge.

        Only this iteration's walk anchors (in-half one below, out-half at
        the merged layer) can be demoted by a merge. Their subpath members
        fall back to the anchor's own predecessor; remaining pointers to a
        demoted anchor can only come from the moved region and are rewired
        through the anchor's fresh new link, which points above them.
        """
        lv = self.lv
        it = self.iteration
        for seq in subpaths:
            q = seq[0]
            if lv[2 * q] == lv[2 * q + 1] and not self.authoritative[q]:
                b = self.backlink[q]
                if b == q:
                    raise InvariantViolation(f"demoted anchor {q} has no predecessor")
                for x in seq[1:]:
                    if self.backlink[x] == q:
                        self.backlink[x] = b
        for keep in moved:
            for x in keep:
                if x & 1:
                    u = x >> 1
                    b = self.backlink[u]
                    if lv[2 * b] >= lv[2 * b + 1] and not self.authoritative[b]:
                        if self.newlink_epoch[b] != it:
                            raise InvariantViolation(
                                "demoted anchor without a fresh new link")
                        self.backlink[u] = self.newlink[b]

    def _apply_flow_deltas(self, result: TraversalResult, v: int, a: int) -> None:
        self.f_size -= 1
        self.srcin_f[v] -= 1
        self.outsink_f[a] -= 1
        self.end_set.discard(a)
        self.end_set.add(v)
        code = result._last
        pred = result._pred
        while code != _SENTINEL:
            prev, ekey, is_rev = pred[code]
            delta = 1 if is_rev else -1
            if ekey < 0:
                self.split_f[-ekey - 1] += delta
            else:
                tail = self.cross_tail[ekey]
                before = self.cross_f[ekey]
                self.cross_f[ekey] = before + delta
                if before == 0 and delta == 1:
                    self.out_pos[tail].append(ekey)
                elif before == 1 and delta == -1:
                    self.out_pos[tail].remove(ekey)
            code = prev

    # --------------------------------------------------------- K3 bookkeeping

    def _k3_repair(self, l: int) -> None:
        """Re-decompose the flow on levels >= l and rejoin the cover prefixes."""
        lv = self.lv
        if l == 0:
            self._k3_rebuild_all()
            return
        consumed: dict = {}
        suffix_at: dict[int, list[int]] = {}
        for u in sorted(self.end_set):
            if lv[2 * u + 1] < l:
                continue
            suffix = self._walk_back(u, l, consumed)
            boundary = suffix[0]
            if boundary in suffix_at:
                raise InvariantViolation("two suffixes at one boundary vertex")
            suffix_at[boundary] = suffix
        for pid, path in enumerate(self.paths, start=1):
            if lv[2 * path[-1] + 1] < l:
                continue
            j = len(path) - 1
            while j >= 0 and lv[2 * path[j]] >= l:
                j -= 1
            if j < 0:
                raise InvariantViolation("cover path with empty prefix")
            if path[j] not in suffix_at:
                raise InvariantViolation(f"no flow suffix at boundary {path[j]}")
            suffix = suffix_at.pop(path[j])
            path[j + 1:] = suffix[1:]
            for x in suffix[1:]:
                self.path_of[x] = pid
        if suffix_at:
            raise InvariantViolation("unmatched flow suffixes after repair")

    def _k3_rebuild_all(self) -> None:
        consumed: dict = {}
        self.paths = []
        for u in sorted(self.end_set):
            path = self._walk_back(u, 0, consumed)
            self.paths.append(path)
            pid = len(self.paths)
            for x in path:
                self.path_of[x] = pid

    def _walk_back(self, end: int, l: int, consumed: dict) -> list[int]:
        """Backward flow walk from `end`'s out-vertex down past level l.

        Consumes one unit per edge walked (shared across one repair via
        `consumed`) and returns base vertices in path order. The first entry
        is the vertex whose in-half lies below level l, or the path's head
        vertex when the walk drains into the source (always the case at
        l = 0).
        """
        lv = self.lv
        seq = []
        u = end
        while True:
            key = ("sp", u)
            if self.split_f[u] - consumed.get(key, 0) < 1:
                raise InvariantViolation(f"split flow exhausted at {u}")
            consumed[key] = consumed.get(key, 0) + 1
            seq.append(u)
            if lv[2 * u] < l:
                break
            skey = ("si", u)
            if self.srcin_f[u] - consumed.get(skey, 0) > 0:
                consumed[skey] = consumed.get(skey, 0) + 1
                break
            eid = -1
            for e in self.in_cross[u]:
                if self.cross_f[e] - consumed.get(("cr", e), 0) > 0:
                    eid = e
                    break
            if eid < 0:
                raise InvariantViolation(f"no positive in-edge at {u}")
            consumed[("cr", eid)] = consumed.get(("cr", eid), 0) + 1
            u = self.cross_tail[eid]
        seq.reverse()
        return seq

    # --------------------------------------------------------- K2 bookkeeping

    def _decompose_region(self, l: int) -> list[list[int]]:
        """Decompose the flow on all levels at or above l into walks.

        One backward walk per end vertex in the region, each running from a
        boundary vertex below level l (or the path's head vertex when the
        walk drains into the source, always the case at l = 0) up to its end
        vertex. Walks start from the smallest end vertices and take the
        lowest-id positive in-edge, so the result is deterministic. Flow
        below level l is untouched.

        Decomposing the whole region rather than only layer l is deliberate:
        a single new-link slot per vertex is not enough to redirect every
        stale pointer when a decrementing path pushes a second flow unit
        through a demoted antichain vertex, since its two walks can exit at
        different crossings. Deriving all links in the region from actual
        walks removes the ambiguity.
        """
        lv = self.lv
        consumed: dict = {}
        walks: list[list[int]] = []
        for e in sorted(self.end_set):
            if lv[2 * e + 1] >= l:
                walks.append(self._walk_back(e, l, consumed))
        return walks

    def maintain_backlinks(self, l: int, layer_paths: list[list[int]]) -> None:
        """Rebuild back links, new links and antichain path ids from walks.

        Along each walk the most recent antichain vertex (or the walk's
        anchor) becomes the back-link target of everything after it, and
        every antichain vertex inherits the anchor's path id; anchors that
        drained into the source head a new path and get a fresh id. The new
        link of a vertex is the first antichain vertex strictly after it on
        its walk, which is what merge repair uses to redirect pointers to
        anchors demoted by the merge.
        """
        lv = self.lv
        it = self.iteration
        fresh = 0
        for seq in layer_paths:
            anchor = seq[0]
            if lv[2 * anchor] >= l:
                # walk drained into the source: anchor heads its path
                fresh += 1
                self.path_id[anchor] = fresh
                self.updated_epoch[anchor] = it
                self.backlink[anchor] = anchor
                self.authoritative[anchor] = 1
            pid = self.path_id[anchor]
            carrier = anchor
            for x in seq[1:]:
                self.backlink[x] = carrier
                self.authoritative[x] = 0
                if lv[2 * x] < lv[2 * x + 1]:
                    self.path_id[x] = pid
                    self.updated_epoch[x] = it
                    carrier = x
            nxt = -1
            for x in reversed(seq):
                self.newlink[x] = x if nxt < 0 else nxt
                self.newlink_epoch[x] = it
                if lv[2 * x] < lv[2 * x + 1]:
                    nxt = x

    # ----------------------------------------------------------------- audit

    def _audit(self, v: int, result: TraversalResult, prev_end, prev_out_levels):
        lv = self.lv
        n = self.n
        # ancestor masks over the sparsified prefix, for reachability checks
        anc = self._anc
        mask = 1 << v
        for e in self.in_cross[v]:
            mask |= anc[self.cross_tail[e]]
        anc[v] = mask

        inserted = [u for u in range(n) if self.inserted[u]]
        # Invariant A over every network edge (via its always-present reverse)
        for u in inserted:
            if lv[2 * u] > lv[2 * u + 1]:
                raise InvariantViolation(f"split edge of {u} decreases level")
            if self.split_f[u] > 1 and lv[2 * u] != lv[2 * u + 1]:
                raise InvariantViolation(f"slack split edge of {u} crosses levels")
        for e in range(len(self.cross_f)):
            tu, hv = 2 * self.cross_tail[e] + 1, 2 * self.cross_head[e]
            if lv[tu] > lv[hv]:
                raise InvariantViolation(f"cross edge {e} decreases level")
            if self.cross_f[e] > 0 and lv[tu] != lv[hv]:
                raise InvariantViolation(f"positive cross edge {e} crosses levels")
        # Invariant B
        for u in inserted:
            if self.outsink_f[u] > 0:
                if self.outsink_f[u] != 1:
                    raise InvariantViolation(f"sink edge of {u} above one unit")
                if not lv[2 * u] < lv[2 * u + 1]:
                    raise InvariantViolation(f"end vertex {u} not an antichain vertex")
            if self.srcin_f[u] > 0 and lv[2 * u] != 0:
                raise InvariantViolation(f"source edge of {u} enters level {lv[2*u]}")
        # Invariant C plus cut-demand table consistency
        m = self.max_level
        for i in range(1, m):
            if not self.cut_demand[i - 1] > self.cut_demand[i]:
                raise InvariantViolation("cut demands not strictly decreasing")
        diff = [0] * (m + 1)
        for u in inserted:
            lo, hi = lv[2 * u], lv[2 * u + 1]
            if lo < hi:
                diff[lo] += 1
                diff[min(hi, m)] -= 1
        run = 0
        for i in range(m):
            run += diff[i]
            if run != self.cut_demand[i]:
                raise InvariantViolation(
                    f"cut demand table wrong at {i}: {self.cut_demand[i]} != {run}")
        if self.cut_demand and self.cut_demand[0] != self.f_size:
            raise InvariantViolation("first cut demand differs from flow size")
        top = max((max(lv[2 * u], lv[2 * u + 1]) for u in inserted), default=0)
        if inserted and top != m:
            raise InvariantViolation(f"max level {top} != cut table size {m}")
        # end vertices track the sink edges exactly
        if self.end_set != {u for u in inserted if self.outsink_f[u] > 0}:
            raise InvariantViolation("end vertex set out of sync")
        if prev_end is not None:
            removed = {result._last >> 1} if result._last >= 0 else set()
            if self.end_set != (prev_end | {v}) - removed:
                raise InvariantViolation("end vertex evolution mismatch")
            # surviving end vertices kept their level, judged before the merge
            for u in prev_end - removed - {v}:
                if self._premerge_out_levels.get(u) != prev_out_levels[u]:
                    raise InvariantViolation(f"end vertex {u} changed level")
        # layered antichains: pairwise unreachable, sizes match the demands
        for level in range(m):
            members = [u for u in inserted if lv[2 * u] <= level < lv[2 * u + 1]]
            if len(members) != self.cut_demand[level]:
                raise InvariantViolation(f"antichain size mismatch at level {level}")
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    x, y = (a, b) if self.dag.topo_pos[a] < self.dag.topo_pos[b] \
                        else (b, a)
                    if (anc[y] >> x) & 1:
                        raise InvariantViolation(
                            f"antichain vertices {x}, {y} are comparable")
        # variant bookkeeping must describe a real cover of the right size
        if self.variant == K3:
            if len(self.paths) != self.f_size:
                raise InvariantViolation("stored path count differs from flow size")
            self._audit_k3_flow()
            for u in inserted:
                pid = self.path_of[u]
                if not (1 <= pid <= len(self.paths)) or u not in self.paths[pid - 1]:
                    raise InvariantViolation(f"path id of {u} is wrong")
        else:
            ids = set()
            groups: dict[int, list[int]] = {}
            for u in inserted:
                pid = self.path_query(u)
                if not (1 <= pid <= self.f_size):
                    raise InvariantViolation(f"path id {pid} of {u} out of range")
                ids.add(pid)
                groups.setdefault(pid, []).append(u)
                b = self.backlink[u]
                if b != u and not (anc[u] >> b) & 1:
                    raise InvariantViolation(f"back link {b} does not reach {u}")
            if len(ids) != self.f_size:
                raise InvariantViolation("path ids do not span the cover")
            for pid, members in groups.items():
                members.sort(key=self.dag.topo_pos.__getitem__)
                for x, y in zip(members, members[1:]):
                    if not (anc[y] >> x) & 1:
                        raise InvariantViolation(
                            f"id class {pid} is not a chain: {x} !-> {y}")

    def _audit_k3_flow(self) -> None:
        split = [0] * self.n
        srcin = [0] * self.n
        outsink = [0] * self.n
        cross: dict[tuple[int, int], int] = {}
        for path in self.paths:
            srcin[path[0]] += 1
            outsink[path[-1]] += 1
            for x in path:
                split[x] += 1
            for uv in zip(path, path[1:]):
                cross[uv] = cross.get(uv, 0) + 1
        if split != self.split_f or srcin != self.srcin_f or outsink != self.outsink_f:
            raise InvariantViolation("stored paths do not decompose the flow")
        for e in range(len(self.cross_f)):
            uv = (self.cross_tail[e], self.cross_head[e])
            if cross.get(uv, 0) != self.cross_f[e]:
                raise InvariantViolation(f"cross flow mismatch on {uv}")


def solve(dag: Dag, variant: str = K2, debug: bool | None = None,
          trace: bool | None = None) -> SolveResult:
    """Compute an MPC of dag by inserting vertices in topological order.

    variant selects the cover bookkeeping: "k2" maintains back links and
    antichain path ids, "k3" the full flow decomposition. Both return covers
    of identical size. debug/trace default to the DAGWIDTH_DEBUG environment
    variable and enable the per-insertion invariant auditor and trace lines.
    """
    env = os.environ.get("DAGWIDTH_DEBUG") == "1"
    state = SolverState(dag, variant,
                        debug=env if debug is None else debug,
                        trace=env if trace is None else trace)
    for v in dag.topo:
        state.insert_vertex(v, dag.in_adj[v])
    return state.result()
