"""Mutually orthogonal Latin squares from finite fields.

Walks through the basic construction: for a prime power q, the maps
x -> lam*x + y over GF(q) give q-1 squares that are pairwise orthogonal,
and products of families cover composite orders up to the MacNeish bound.
Run as a script; everything prints.
"""

import numpy as np

from induced_decomp import galois_field, macneish, mols, mols_prime_power

print("=" * 64)
print("GF(4) arithmetic tables")
print("=" * 64)
f = galois_field(4)
print("reduction polynomial coefficients (ascending):", f.modulus)
print("addition:")
print(f.add_table)
print("multiplication:")
print(f.mul_table)

print()
print("=" * 64)
print("The full MOLS family of order 4")
print("=" * 64)
fam = mols_prime_power(4, 3)
for i, sq in enumerate(fam):
    print(f"square {i + 1}:")
    print(sq.grid)

print()
print("superimposing squares 1 and 2; every ordered pair appears once:")
joint = np.stack([fam[0].grid, fam[1].grid], axis=-1)
for row in joint:
    print("  ".join(f"({a},{b})" for a, b in row))
pairs = {(int(a), int(b)) for row in joint for a, b in row}
print(f"distinct pairs: {len(pairs)} out of {4 * 4}")

print()
print("=" * 64)
print("Composite orders via products")
print("=" * 64)
for n in (6, 10, 12, 15, 20):
    print(f"order {n}: MacNeish bound {macneish(n)}")

fam12 = mols(12, 2)
print()
print("two orthogonal squares of order 12 exist; here is the first row of each:")
print(fam12[0].grid[0])
print(fam12[1].grid[0])

print()
print("orders with no second square reachable this way are refused:")
try:
    mols(6, 2)
except Exception as exc:
    print(f"  mols(6, 2) raised {type(exc).__name__}: {exc}")
