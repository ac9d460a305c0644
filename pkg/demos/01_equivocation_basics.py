"""How much does an eavesdropper still not know?

Walks the exact equivocation computation on the smallest interesting
code: two bins of two words each (form (1,1)).  The eavesdropper sees
the transmitted word through a binary symmetric channel with crossover
p; we enumerate her observations, form the posterior over bins, and
average the posterior entropy.
"""

from wiretap.bitcore import CodeTable, format_table, word_str, xor_translate
from wiretap.equivocation import (
    bin_posteriors,
    conditional_equivocation,
    distance_profile,
    total_equivocation,
)

table = CodeTable(1, 1, [[0b00, 0b11], [0b01, 0b10]])
print("the code table (one message bit, one randomization bit):")
print(format_table(table))

p = 0.1
print("crossover p = %.2f" % p)
print()

for z in range(4):
    profile = distance_profile(table, z)
    post = bin_posteriors(table, z, p)
    h = conditional_equivocation(table, z, p)
    print(
        "observed %s: distance rows %s, posterior (%.4f, %.4f), entropy %.6f bits"
        % (word_str(z, table.n), profile.tolist(), post[0], post[1], h)
    )

print()
print("every observation is equally likely, so the equivocation is the average:")
print("  H(M|Z) = %.6f bits" % total_equivocation(table, p))
print()

print("three sanity properties, checked numerically:")
print("  p = 0   -> %.1f bits (a noiseless tap reveals the message)" % total_equivocation(table, 0.0))
print("  p = 1/2 -> %.1f bits (pure noise hides the whole message bit)" % total_equivocation(table, 0.5))
shifted = xor_translate(table, 0b11)
print(
    "  XOR-translating the code moves nothing: %.15f vs %.15f"
    % (total_equivocation(table, p), total_equivocation(shifted, p))
)
print()

print("equivocation grows with channel noise:")
for p in (0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5):
    h = total_equivocation(table, p)
    print("  p = %.2f  H(M|Z) = %.6f bits  (rate %.6f bits/symbol)" % (p, h, h / table.n))
