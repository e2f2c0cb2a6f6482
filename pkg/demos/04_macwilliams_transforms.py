"""Character-sum transforms: the dual enumerator without the dual code.

Substituting each variable by its character-weighted combination and
rescaling by 1/|C| turns the enumerator of a pair into the enumerator of
the pair with chosen slots dualized.  Everything is exact, so the check is
literal polynomial equality against independently computed duals.
"""

from weightenum import FieldSpec, LinearCode, all_codes, cjwe, macwilliams_transform

f3 = FieldSpec(3, 1)

c1 = LinearCode(f3, 2, [(1, 1)])
c2 = LinearCode(f3, 2, [(1, 2)])
base = cjwe(c1, c2)
sizes = (c1.size, c2.size)

print("base enumerator:", base.pretty())
for variant, expected in [
    ("first", cjwe(c1.dual(), c2)),
    ("second", cjwe(c1, c2.dual())),
    ("both", cjwe(c1.dual(), c2.dual())),
]:
    got = macwilliams_transform(base, variant, sizes)
    print(f"variant {variant!r}: transform equals dualized enumerator -> {got == expected}")

# Applying the first-slot transform twice (with the dual's size the second
# time) walks back to the original polynomial.
once = macwilliams_transform(base, "first", sizes)
twice = macwilliams_transform(once, "first", (c1.dual().size, c2.size))
print("\ndouble transform returns the original:", twice == base)

# An exhaustive sweep over every pair of codes of length 2 over F_3.
codes = list(all_codes(f3, 2))
checked = mismatches = 0
for a in codes:
    for b in codes:
        t = macwilliams_transform(cjwe(a, b), "both", (a.size, b.size))
        checked += 1
        if t != cjwe(a.dual(), b.dual()):
            mismatches += 1
print(f"\nexhaustive F_3, n=2 sweep: {checked} pairs, {mismatches} mismatches")
