# Bound rows across the generated corpus.
#
# Builds the default corpus (Fibonacci, Thue-Morse, unary powers, the worked
# example and 200 seeded random strings), verifies every text and prints the
# tightest ratio per row.  Takes about a minute.

# %%
import numpy as np

from repmeasure.bounds import ROWS, verify_corpus
from repmeasure.corpus import default_corpus

corpus = default_corpus()
lengths = np.array([len(t) for _, t in corpus])
print(len(corpus), "texts, lengths", lengths.min(), "to", lengths.max())

# %%
agg = verify_corpus(corpus)
print("failed to run:", agg.failures or "none")

# %%
# Largest measured/bound ratio per row and where it occurs.
for spec in ROWS:
    print(f"{spec.name:<4} {agg.max_ratio.get(spec.name, float('nan')):8.4f}  "
          f"{agg.argmax_ratio.get(spec.name, '-'):<28} {spec.formula}")

# %%
# Texts where some row does not hold.  B10 (four classes per compatible pair
# of runs) exceeds its bound on a few random ternary strings; see the README.
for text_id, name in agg.violations:
    rep = next(r for r in agg.reports if r.text_id == text_id)
    row = rep.row(name)
    print(text_id, name, row.measured, ">", row.bound)

# %%
# z against r over the corpus, on a log scale.
z = np.array([r.z for r in agg.reports])
r = np.array([r.r for r in agg.reports])
print("median r / z:", float(np.median(r / z)))
print("max r / (z * log2 N):", float(np.max(r / (z * np.log2([x.length for x in agg.reports])))))
