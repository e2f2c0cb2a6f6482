"""g-fold averages and their reduction to the pairwise case.

The g-fold average applies the monomial group to the first code and keeps
the remaining g-1 codes fixed.  Its closed form reduces each fold-g
profile to the composition of the first coordinate plus the fold-(g-1)
profile of the rest; at g = 2 this is exactly the pairwise formula.
"""

from weightenum import (
    FieldSpec,
    LinearCode,
    all_codes,
    avg_cjwe_bruteforce,
    avg_cjwe_closedform,
    avg_gfold_bruteforce,
    avg_gfold_closedform,
    compare,
)

f2 = FieldSpec(2, 1)

rep = LinearCode(f2, 2, [(1, 1)])
zero = LinearCode(f2, 2, [])

# g = 3 with two zero codes: only the first coordinate varies.
triple = avg_gfold_bruteforce([rep, zero, zero])
print("3-fold average of ({00,11}, 0, 0):", triple.pretty())
print("closed form agrees:", avg_gfold_closedform([rep, zero, zero]) == triple)

# g = 2 collapses to the pairwise operations, term for term.
pairs = [(rep, zero), (zero, rep), (rep, rep)]
for a, b in pairs:
    same_brute = avg_gfold_bruteforce([a, b]) == avg_cjwe_bruteforce(a, b)
    same_closed = avg_gfold_closedform([a, b]) == avg_cjwe_closedform(a, b)
    print(f"g=2 reduction on ({a.generators}, {b.generators}):",
          f"brute {same_brute}, closed {same_closed}")

# Exhaustive binary sweep at g = 3, n = 2: the closed form is exact at q = 2.
codes = list(all_codes(f2, 2))
bad = 0
for a in codes:
    for b in codes:
        for c in codes:
            if not compare(avg_gfold_closedform([a, b, c]), avg_gfold_bruteforce([a, b, c])).agreed:
                bad += 1
print(f"\nexhaustive g=3 sweep over F_2, n=2: {len(codes)**3} triples, {bad} mismatches")
