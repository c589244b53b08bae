"""
The supporting lemmas as executable checks
==========================================

Each lemma is a function that checks its hypotheses, builds the promised
object, and raises if the conclusion fails. The suites run them over every
small graph or over seeded random graphs.
"""

from ramsey_goodness import (
    Graph, brooks_coloring, erdos_gallai_path, min_degree_long_path, path_free_partition,
)
from ramsey_goodness.sweeps import brooks_suite, erdos_gallai_suite, partition_suite, path_length_suite

print(min_degree_long_path(Graph.complete(4), 1))
print(erdos_gallai_path(Graph.cycle(5)))
for part in path_free_partition(Graph.disjoint_union(Graph.complete(4), Graph.complete(4)), 5):
    print(part)
col = brooks_coloring(Graph.petersen())
print("Petersen graph coloured with", col.num_colors, "colours")

for rep in [path_length_suite(7), erdos_gallai_suite(7), partition_suite(7), brooks_suite(300, seed=7)]:
    print(rep.title, "->", "pass" if rep.passed else "FAIL", list(rep.checks.values())[0]["detail"])
