"""
Deciding G -> (K_r, P_t)
========================

The search colours edges clique by clique and propagates forced colours.
A "not_arrows" answer comes with the blue edges of a good colouring, which
anyone can re-check; an "arrows" answer is re-checked by running the search
again or by an unpruned enumeration on small hosts.
"""

import time

from ramsey_goodness import Graph, arrows, arrows_exhaustive, goodness_value, verify_certificate

for r, t in [(3, 3), (3, 4), (4, 3)]:
    print(f"r={r} t={t}: predicted smallest complete host K_{goodness_value(r, t)}")
    for m in range(3, 8):
        start = time.perf_counter()
        cert = arrows(Graph.complete(m), r, t)
        spent = time.perf_counter() - start
        line = f"  K_{m}: {cert.verdict:10s} nodes={cert.stats['nodes']:4d} {spent * 1000:7.1f} ms"
        if not cert.arrows:
            line += f"  blue={cert.blue_edges}"
        print(line)
        assert verify_certificate(cert)

# the pruned search against plain enumeration of all 2^10 colourings of K_5
print("\nK_5, (3,3): exhaustive oracle says", arrows_exhaustive(Graph.complete(5), 3, 3)[0])

# certificates are plain JSON
print(arrows(Graph.complete(4), 3, 3).to_json())
