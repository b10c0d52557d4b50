"""Driving a cover's distinct edges below 2|V| by splicing along red cycles.

First a redundant cover of a random DAG is thinned, showing the eliminated
cycles and the growth of the squared-multiplicity potential. Then the
tightness family shows the factor 2 cannot be improved: its ratio
approaches 2 from below as the family grows.
"""
from fractions import Fraction

from dagwidth import PathCover, gen_random_dag, remark_family, solve, thin
from dagwidth.thinning import cover_support

dag = gen_random_dag(30, 5, 3.0, seed=4)
# a deliberately wasteful cover: every maximal greedy path from each vertex
paths = []
for v in range(dag.n):
    path = [v]
    while dag.out_adj[path[-1]]:
        path.append(dag.out_adj[path[-1]][0])
    while dag.in_adj[path[0]]:
        path.insert(0, dag.in_adj[path[0]][-1])
    paths.append(path)
cover = PathCover(paths)

before = len(cover_support(cover))
record = []
thinned = thin(dag, cover, instrument=record)
after = len(cover_support(thinned))
print(f"cover of size {cover.size} on {dag.n} vertices")
print(f"distinct edges: {before} -> {after} (bound {2 * dag.n})")
print(f"elimination passes: {len(record)}")
for delta_phi, cycle_len, drained in record[:6]:
    print(f"  cycle of length {cycle_len}: potential +{delta_phi}, "
          f"{drained} edges drained")

print("\ntightness family (every edge of an MPC is required):")
print(f"{'n':>3} {'|V|':>5} {'|E|':>5} {'distinct/|V|':>14}")
for n in range(2, 8):
    fam = remark_family(n)
    t = thin(fam, solve(fam).cover)
    ratio = Fraction(len(cover_support(t)), fam.n)
    print(f"{n:>3} {fam.n:>5} {fam.m:>5} {str(ratio):>14}  (= 2 - 4/{n + 2})")
