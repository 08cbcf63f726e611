"""Per-document differences between two extractors and a one-sided z-test.

Run: python demos/06_significance.py
"""

import random

from pampo import diff_stats, normal_cdf, ztest_mean_greater

# Invented per-document recall for two systems over 200 documents.
rng = random.Random(3)
docs = [f"doc{i:03d}" for i in range(200)]
system_b = {d: rng.uniform(0.3, 0.8) for d in docs}
system_a = {d: min(1.0, v + rng.gauss(0.05, 0.1)) for d, v in system_b.items()}

stats = diff_stats(system_a, system_b)
print(f"a better on {stats.count_positive}, tied on {stats.count_zero}, worse on {stats.count_negative}")
print(f"mean difference {stats.mean:.4f}, sd {stats.sd:.4f}, n {stats.n}")

# Is the mean difference larger than mu0?
for mu0 in (0.0, 0.03, 0.05, 0.08):
    z, p = ztest_mean_greater(stats, mu0)
    print(f"  H1: mean > {mu0:.2f}   z = {z:7.3f}   p = {p:.3g}")

# The test also takes summary statistics directly.
z, p = ztest_mean_greater(mean=0.284, sd=0.127, n=881, mu0=0.25)
print(f"\nsummary input: z = {z:.2f}, p = {p:.2e}")
print(f"Phi(1.96) = {normal_cdf(1.96):.10f}")
