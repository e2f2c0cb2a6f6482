"""Monomial-group averages: definitional sum versus closed form.

The brute-force route averages the joint enumerator over all
(q-1)^n * n! monomial images of the first code.  The closed form predicts
the same polynomial from the two composition censuses via a multinomial
ratio.  For binary codes they agree everywhere; over F_3 they can differ,
and the comparator records exactly where.
"""

from weightenum import (
    FieldSpec,
    LinearCode,
    all_codes,
    avg_cjwe_bruteforce,
    avg_cjwe_closedform,
    avg_macwilliams,
    check_lemma42,
    compare,
)

f2 = FieldSpec(2, 1)
f3 = FieldSpec(3, 1)

# Binary regime: the two routes agree for every pair (here: all of n = 3).
codes = list(all_codes(f2, 3))
agreed = sum(
    compare(avg_cjwe_closedform(a, b), avg_cjwe_bruteforce(a, b)).agreed
    for a in codes
    for b in codes
)
print(f"binary n=3: closed form matches brute force on {agreed}/{len(codes)**2} pairs")

# The F_3 witness pair where the closed form diverges.
span = LinearCode(f3, 2, [(1, 1)])
zero = LinearCode(f3, 2, [])
brute = avg_cjwe_bruteforce(span, zero)
closed = avg_cjwe_closedform(span, zero)
print("\nF_3 witness pair (span{(1,1)}, zero code):")
print("  brute force:", brute.pretty())
print("  closed form:", closed.pretty())
report = compare(closed, brute)
print("  comparator report:")
print(report.to_text())

# The discrepancy traces to the diagonal-scaling census: summing the count
# of composition (0,2,0) over all 4 scalings of the code gives 2, not
# (q-1)^n * A = 4 -- scaling moves codewords between compositions.
res = check_lemma42(span, (0, 2, 0))
print(f"scaling census at r=(0,2,0): lhs={res.lhs}, rhs={res.rhs}, equal={res.equal}")

# The averaged transform identities hold regardless (whole-group sums):
base = avg_cjwe_bruteforce(span, span)
out = avg_macwilliams(base, "first", (span.size, span.size))
print("\naveraged transform equals average of dualized pair:",
      out == avg_cjwe_bruteforce(span.dual(), span))
