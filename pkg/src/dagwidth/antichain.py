"""Maximum antichains from minimum flows, and minimum chain covers from MPCs.

The split edges crossing the maximum one-way cut of the reduction, read off
as the vertices whose in-half is residually reachable from the source while
the out-half is not, form a maximum antichain.
"""
from __future__ import annotations

from .dag import Dag, PathCover
from .errors import InvariantViolation, NotACover, NotMinimum
from .flow import Flow, FlowNetwork, flow_from_cover, reduce, source_side_vertices
from .oracle import validate_cover


def max_antichain_from_flow(net: FlowNetwork, f_min: Flow) -> set[int]:
    """Extract a maximum antichain of the base DAG from a minimum flow.

    Raises NotMinimum if the residual still contains a source-to-sink path
    (detected during the same reachability sweep).
    """
    reached, sink_reached = source_side_vertices(net, f_min)
    if sink_reached:
        raise NotMinimum("flow admits a decrementing path")
    return {v for v in range(net.base.n)
            if 2 * v in reached and 2 * v + 1 not in reached}


def max_antichain(dag: Dag, cover: PathCover) -> set[int]:
    """Maximum antichain from an MPC; raises NotMinimum if the cover is not
    minimum."""
    report = validate_cover(dag, cover)
    if not report.ok:
        raise NotACover("; ".join(report.violations[:3]))
    net = reduce(dag)
    return max_antichain_from_flow(net, flow_from_cover(net, cover))


def chain_cover_from_mpc(dag: Dag, cover: PathCover) -> PathCover:
    """Minimum chain cover: keep each vertex only in the first path listing it.

    The chains are vertex-disjoint, cover every vertex, and consecutive
    elements remain reachable (they were adjacent on a cover path). A chain
    that empties would contradict the cover being minimum, so that case is
    flagged rather than silently rebalanced.
    """
    report = validate_cover(dag, cover)
    if not report.ok:
        raise NotACover("; ".join(report.violations[:3]))
    seen = bytearray(dag.n)
    chains: list[list[int]] = []
    for path in cover.paths:
        chain = [v for v in path if not seen[v]]
        for v in chain:
            seen[v] = 1
        if not chain:
            raise InvariantViolation(
                "a cover path emptied while dropping repeats; cover was not minimum")
        chains.append(chain)
    return PathCover(chains)
