"""
Checking the theorem on every small host
========================================

Exhaustive sweeps walk all unlabelled graphs with the required minimum
degree; sampled sweeps draw seeded hosts. A single "not_arrows" line would be
a counterexample, dumped as a certificate.
"""

from ramsey_goodness import sweep_verify

for r, t, k, n in [(2, 3, 3, 7), (2, 4, 1, 6), (3, 3, 1, 6)]:
    res = sweep_verify(r, t, k, n)
    s = res.summary
    print(f"exhaustive r={r} t={t} k={k} n={n}: {s['count']} hosts with delta >= {s['threshold']}, "
          f"{s['counterexamples']} counterexamples")

res = sweep_verify(3, 3, 1, 8, "sample", count=500, seed=42)
print("sampled (3,3,1,8):", res.summary)
print("first line of the JSONL report:", res.to_jsonl().splitlines()[0])
