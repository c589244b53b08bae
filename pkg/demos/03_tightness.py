"""
The threshold is tight
======================

At n = (r-1)(t-1)(k+1) there is a host one degree short of the threshold
with a colouring that has neither a red K_r nor a blue P_t: r-1 parts, each
made of k+1 blue cliques on t-1 vertices, and red edges between parts.
"""

from ramsey_goodness import build_extremal, check_coloring, degree_threshold, validate_extremal

e = build_extremal(3, 3, 1)
print("parts:  ", e.parts)
print("cliques:", e.cliques)
print("delta =", e.graph.min_degree(), " threshold =", degree_threshold(e.params))
print("witness in the colouring:", check_coloring(e.coloring, 3, 3))

print("\n r  t  k   n  delta  threshold  valid")
for r in range(2, 5):
    for t in range(3, 6):
        for k in (1, 2):
            if (r - 1) * (t - 1) * (k + 1) > 64:
                continue
            e = build_extremal(r, t, k)
            rep = validate_extremal(e)
            print(f"{r:2d} {t:2d} {k:2d} {e.graph.n:3d} {e.graph.min_degree():6d} "
                  f"{degree_threshold(e.params):10d}  {rep.passed}")

# the JSON sidecar written next to the graph6 file by the command-line tool
print("\n" + build_extremal(2, 3, 1).sidecar_json())
