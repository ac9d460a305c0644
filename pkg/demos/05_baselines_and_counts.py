"""Is the construction actually good?  Race it against random codes.

A random binning code is a uniform shuffle of all words cut into equal
bins.  This demo samples a few hundred of them, compares their
equivocation rates with the constructed family, the LP ceiling, and
the infinite-blocklength bound, then counts how large the code spaces
really are (spoiler: far too large to search).
"""

from wiretap.baselines import (
    binning_code_count,
    compare_form,
    enumerate_binnings,
    sample_binning,
)
from wiretap.equivocation import total_equivocation
from wiretap.lp_limit import appendix_count
from wiretap.ni_code import path_count, standard_table

l, k = 2, 3
record = compare_form(l, k, [0.05, 0.15, 0.25, 0.35, 0.45], samples=300, seed=11)
print("form (%d,%d), %d random codes, seed %d, %s stream" % (
    l, k, record["samples"], record["seed"], record["algorithm"]))
print("   p     family      LP limit    h2-bound    rand max    rand mean   rand min")
for row in record["rows"]:
    print("  %.2f  %.6f   %.6f   %.6f   %.6f   %.6f   %.6f" % (
        row["p"], row["ni_rate"], row["lp_limit"], row["inf_limit"],
        row["rand_max"], row["rand_mean"], row["rand_min"]))
print()
print("the family rides between the best random draw and the LP ceiling.")
print()

print("for the tiny form (2,1) we can enumerate the whole space instead:")
tables = list(enumerate_binnings(2, 1))
p = 0.25
best = max(total_equivocation(t, p) for t in tables)
ours = total_equivocation(standard_table(2, 1), p)
print("  %d ordered tables; best at p = %.2f gives %.9f bits, the family %.9f"
      % (len(tables), p, best, ours))
print()

print("sampling is reproducible per index: sample 3 of seed 5 is always")
a = list(sample_binning(2, 2, seed=5, count=4))[3]
b = list(sample_binning(2, 2, seed=5, count=9))[3]
print("  the same table: %s" % (a.bins == b.bins))
print()

print("why sampling: the spaces explode fast (bins unordered)")
for form in ((1, 1), (2, 1), (1, 4), (2, 3), (3, 2), (4, 1)):
    count = binning_code_count(*form)
    print("  form %s: %d codes (%.2e)" % (form, count, count))
print()

print("the LP stays tractable because its unknowns are distance histograms,")
print("not codes; candidate rows for the n = 5 forms:")
for form in ((1, 4), (2, 3), (3, 2), (4, 1)):
    n, e = form[0] + form[1], 1 << form[0]
    print("  form %s: %d rows, %d growth orderings from (1,1)" % (
        form, appendix_count(n, e), path_count((1, 1), form)))
