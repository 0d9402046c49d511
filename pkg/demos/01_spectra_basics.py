"""Tour of the core objects: modules, submodules, colon ideals, radicals,
and the prime/primary predicates.

Run: python demos/01_spectra_basics.py
"""

from gpspec import (
    BaseRing,
    GradedModule,
    GradingGroup,
    graded_radical,
    in_primary_spectrum,
    is_graded_primary,
    is_graded_prime,
    spectrum_points,
)

Z = BaseRing(0)
Z2 = GradingGroup((2,))

# The integers as a module over themselves, graded by Z2 with everything in
# degree 0.  Submodules are dZ; the interesting one is 4Z.
M = GradedModule(Z, Z2, [(0, (0,))])
four = M.submodule([(4,)])
two = M.submodule([(2,)])

print("M =", M.text())
print("  (4Z : M) =", four.colon().text())
print("  4Z graded prime?   ", is_graded_prime(four))
print("  4Z graded primary? ", is_graded_primary(four))
print("  4Z in the primary spectrum?", in_primary_spectrum(four))
print("  graded radical of 4Z =", graded_radical(four).require().text())
print("  2Z graded prime?   ", is_graded_prime(two))
print()

# 4Z witnesses that the primary spectrum is strictly larger than the prime
# spectrum: it is primary, its radical 2Z is prime, but 4Z itself is not.

# Z6 over itself: two primary points, both prime.
M6 = GradedModule(BaseRing(6), Z2, [(6, (0,))])
print("M =", M6.text())
for Q in spectrum_points(M6, "primary"):
    print(
        f"  point {Q.text():4} elements={sorted(v[0] for v in Q.element_set())}"
        f"  prime={is_graded_prime(Q)}"
    )
print("  zero submodule primary?", is_graded_primary(M6.zero_submodule))
print()

# Z8 over itself: three primary points but a single prime.
M8 = GradedModule(BaseRing(8), Z2, [(8, (0,))])
print("M =", M8.text())
print("  primary spectrum:", [Q.text() for Q in spectrum_points(M8, "primary")])
print("  prime spectrum:  ", [Q.text() for Q in spectrum_points(M8, "prime")])
print("  radical of 0:", graded_radical(M8.zero_submodule).require().text())
