# A walk through the measures on one small string.
#
# The string b a^10 b a^20 b is short enough to print every intermediate
# result, and its two runs of a's carry all the fourth-power structure.

# %%
from repmeasure import oracles
from repmeasure.bounds import verify
from repmeasure.bwt import bwt
from repmeasure.correspondence import check_injectivity, run_boundary_pairs
from repmeasure.corpus import EXAMPLE
from repmeasure.lz77 import lz77
from repmeasure.periodicity import fourth_power_runs
from repmeasure.repeats import cdawg_stats, copy_classes, enumerate_maximal_pairs
from repmeasure.taxonomy import extension_pairs, pairs_from_extension_pair
from repmeasure.text import Text, render

t = Text(EXAMPLE)
print(len(t), EXAMPLE)

# %%
# LZ77: five factors, the last ones copying from themselves.
parse = lz77(t)
print("z =", parse.z)
print(" | ".join(render(c) for c in parse.contents(t)))
assert parse.z == len(oracles.lz77(t))

# %%
# BWT of S$ and its runs.
profile = bwt(t)
print(render(profile.bwt), "r =", profile.r)

# %%
# Maximal pairs group into copy classes by their padded occurrences.
pairs = enumerate_maximal_pairs(t)
classes = copy_classes(pairs)
print(len(pairs), "maximal pairs in", len(classes), "classes")
cd = cdawg_stats(t)
print("maximal repeats", cd.maximal_repeat_count, "CDAWG arcs", cd.arc_total)

# %%
# Fourth-power runs and the classes each compatible pair of runs produces.
runs = fourth_power_runs(t)
for e in runs:
    print("run", e.core, "period", e.delta, "exponent", e.exponent)
for e1, e2 in extension_pairs(t, runs):
    found = pairs_from_extension_pair(t, e1, e2)
    print(e1.core, e2.core, "->", [p.triple for p in found])

# %%
# Every BWT run boundary but the L = 0 ones names a distinct maximal pair.
for b in run_boundary_pairs(t):
    print(b.boundary_index, b.lcp, b.pair.triple if b.pair else None)
print(check_injectivity(t))

# %%
# All twelve bound rows, with how much room each one leaves.
rep = verify(t, text_id="worked-example")
for row in rep.bounds:
    print(f"{row.name:<4} {row.measured:>4} <= {row.bound:10.2f}  ratio {row.ratio:.4f}  {row.anchor}")
