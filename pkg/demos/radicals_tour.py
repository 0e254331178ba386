"""Tour of the invariant machinery on a few small rings.

Run with: python demos/radicals_tour.py
"""

from ringlab import (all_left_ideals, idempotents, jacobson_radical,
                     mask_indices, matrix_ring, nilpotents, quotient,
                     units, upper_triangular, zmod)

for R in (zmod(12), upper_triangular(zmod(2), 2), matrix_ring(zmod(3), 2)):
    print(f"== {R.name} (order {R.order})")
    print("  units      ", mask_indices(units(R)))
    print("  nilpotents ", mask_indices(nilpotents(R)))
    print("  idempotents", mask_indices(idempotents(R)))
    jac = jacobson_radical(R)
    print("  J(R)       ", mask_indices(jac))
    lattice = all_left_ideals(R)
    print("  left ideals", len(lattice.ideals))

    Q, pi = quotient(R, jac, ideal_name="J")
    print(f"  R/J has order {Q.order}; projection kernel",
          mask_indices(pi.kernel()))
    print()
