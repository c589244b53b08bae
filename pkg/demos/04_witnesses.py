"""
Following the induction to a witness
====================================

Given a host above the threshold and any colouring, ``extract`` walks the
argument: it descends into a red neighbourhood while some red degree is
large, and otherwise looks for a blue path inside a red-independent set.
Each returned witness is re-checked against plain edge sets.
"""

import random

from ramsey_goodness import GoodnessParams, Graph, TwoColoring, case2_diagnostics, extract
from ramsey_goodness.sweeps import proven_params, random_instance

g = Graph.complete(5)
ex = extract(g, TwoColoring.all_red(g), 3, 3)
print(ex.witness, "via", ex.step)
for f in ex.frames:
    print("  ", f.as_dict())

rng = random.Random(1)
params = proven_params(12)
steps = {}
for i in range(300):
    p, host, c = random_instance(rng, i, params)
    ex = extract(host, c, p.r, p.t)
    assert ex.witness.verify(c, p.r, p.t)
    steps[ex.step] = steps.get(ex.step, 0) + 1
print("\nsteps taken over 300 random instances:", dict(sorted(steps.items())))

# the Case 2 inequality chain, evaluated on an all-blue K_8 for (3,3): the blue
# path link is the one that breaks
g = Graph.complete(8)
rep = case2_diagnostics(g, TwoColoring.all_blue(g), GoodnessParams(3, 3, 1, 8))
for name, check in rep.checks.items():
    print(f"  {name:36s} {'ok ' if check['passed'] else 'BROKEN'} {check['detail']}")
