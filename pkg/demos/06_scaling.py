"""Timing sweep: near-linear growth for a fixed chain parameter.

Equivalent to `dagwidth bench`; kept small so the demo finishes quickly.
"""
import statistics
import time

from dagwidth import gen_random_dag
from dagwidth.incremental import SolverState

print(f"{'n':>7} {'m':>7} {'k':>3} {'median ms':>10} {'charges':>9}")
for n in (2000, 4000, 8000, 16000):
    dag = gen_random_dag(n, 4, 2.0, seed=1)
    times = []
    charges = 0
    for _ in range(3):
        state = SolverState(dag, "k2")
        t0 = time.perf_counter()
        for v in dag.topo:
            state.insert_vertex(v, dag.in_adj[v])
        times.append((time.perf_counter() - t0) * 1000)
        charges = state.charge_counters()["total_units"]
    print(f"{n:>7} {dag.m:>7} {state.f_size:>3} "
          f"{statistics.median(times):>10.1f} {charges:>9}")
