"""Small finite fields and their additive characters.

Builds F_4 and F_9, walks through the canonical element order, exact
arithmetic, and the character values chi(a) = zeta_p ** a_0, ending with
the orthogonality relation that powers every transform identity.
"""

from weightenum import CyclotomicNumber, FieldSpec, chi

# F_4 = F_2[x] / (x^2 + x + 1).  Elements are coefficient vectors (a0, a1)
# with canonical index a0 + 2*a1: 0, 1, lam, lam+1.
f4 = FieldSpec(2, 2)
print("F_4 canonical order:")
for e in f4.element_order():
    print(f"  index {e.index}: coeffs {e.coeffs}")

lam = f4.element(2)
print("\nlam * lam =", (lam * lam).coeffs, "(the reduction of x^2 mod x^2+x+1)")
print("lam^-1    =", lam.inverse().coeffs)

# The character only sees the constant coordinate, so chi(lam) = 1:
print("\nchi(lam)   =", chi(f4, lam).to_strings())
print("chi(1)     =", chi(f4, f4.one).to_strings())

# F_9 with the default polynomial x^2 + x + 2; characters land in Q(zeta_3).
f9 = FieldSpec(3, 2)
print("\nF_9 character values (coordinates in the basis 1, zeta_3):")
for e in f9.element_order():
    print(f"  chi(index {e.index}) = {chi(f9, e).to_strings()}")

# Orthogonality: summing chi(omega * alpha) over all omega gives q when
# alpha = 0 and cancels to exactly zero otherwise.
print("\nOrthogonality over F_9:")
for alpha in f9.element_order()[:4]:
    total = CyclotomicNumber.zero(f9.p)
    for omega in f9.element_order():
        total = total + chi(f9, omega * alpha)
    print(f"  alpha index {alpha.index}: sum = {total.to_strings()}")
