"""Linear codes, duals and the monomial matrix action.

Parses a code from its text format, computes the dual by exact Gaussian
elimination, and shows how a scale-and-permute map transports a code.
"""

from weightenum import (
    FieldSpec,
    LinearCode,
    MonomialMatrix,
    apply_monomial_code,
    format_code_file,
    monomial_group,
    parse_code_file,
)

text = """\
# binary repetition code of length 3
field p=2 m=1
n=3
gen 1 1 1
"""
rep3 = parse_code_file(text)
print("parsed:", rep3, "words:", sorted(rep3.codeword_list()))

dual = rep3.dual()
print("\ndual (the even-weight code), canonical file:")
print(format_code_file(dual), end="")
print("double dual equals the original:", dual.dual() == rep3)
print("size product is q^n:", rep3.size * dual.size == 2**3)

# A monomial matrix is a permutation with nonzero column scales.
f3 = FieldSpec(3, 1)
code = LinearCode(f3, 2, [(1, 1)])
M = MonomialMatrix(f3, 2, perm=(1, 0), diag=(1, 2))
print("\nover F_3, span{(1,1)} has words", sorted(code.codeword_list()))
print("applying (swap, scale-by-(1,2)):", sorted(apply_monomial_code(code, M).codeword_list()))
print("undoing with the inverse:", apply_monomial_code(apply_monomial_code(code, M), M.inverse()) == code)

# The full group has (q-1)^n * n! elements in a fixed enumeration order.
group = list(monomial_group(f3, 2))
print(f"\n|monomial group| over F_3, n=2: {len(group)} (= 2^2 * 2!)")
orbit = sorted({apply_monomial_code(code, M) for M in group}, key=lambda c: c.generators)
print("orbit of span{(1,1)}:", [c.generators for c in orbit])
