"""Growing binning codes one bit at a time, and all at once.

Two moves grow a table: RASBA appends a message bit (bins double,
words interleave 0/1 suffixes) and RAHBA appends a randomization bit
(bin size doubles by reshuffling pairs of bins).  Starting from the
two-word base table, l RAHBA steps then k-1 RASBA steps give form
(l, k).  The same tables also come straight out of a flipped Gray
code, no recursion involved.
"""

from wiretap.bitcore import format_table, tables_equal_ordered
from wiretap.ni_code import (
    base_table,
    closed_form_table,
    gray_matrix,
    opposite_pairing_check,
    path_count,
    rahba,
    rasba,
    standard_table,
)

t = base_table()
print("base table (0,1):")
print(format_table(t))

t = rahba(t)
print("after one RAHBA step, form (1,1):")
print(format_table(t))

t = rasba(t)
print("after one RASBA step, form (1,2):")
print(format_table(t))

print("every bin of an l = 1 table pairs a word with its complement:")
for k in (1, 2, 3, 4):
    print("  form (1,%d): opposite pairing %s" % (k, opposite_pairing_check(standard_table(1, k))))
print()

print("the flipped Gray code on 3 bits (rows are codewords in counter order):")
for row in gray_matrix(3):
    print("  " + "".join(str(b) for b in row))
print()

print("closed form vs recursion, checked bin for bin:")
for form in ((1, 3), (2, 2), (3, 2), (4, 1)):
    same = tables_equal_ordered(closed_form_table(*form), standard_table(*form))
    print("  form %s: identical = %s" % (form, same))
print()

print("how many growth orders reach a form from (1,1)?")
for form in ((1, 4), (3, 1), (2, 2), (3, 3)):
    print("  (1,1) -> %s: %d orderings" % (form, path_count((1, 1), form)))
print()
print("different orderings generally give different partitions with slightly")
print("different curves; the standard path (all RAHBA first) is the reference.")
