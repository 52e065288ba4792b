"""The brute-force oracle: enumeration, exact cover, minimum deletions.

Small graphs fit in bitmask rows, so induced copies can be enumerated
outright and decompositions found by backtracking over an exact cover.
That gives ground truth for the constructive modules and exact values
of the minimum number of edges one must delete from K_n before an
induced decomposition appears.
"""

from induced_decomp.blowup import PatternSignature
from induced_decomp.oracle import (
    SmallGraph,
    cex_exact,
    enumerate_copies,
    exact_cover_decompose,
)

pat = PatternSignature((1, 2))

print("the 4-cycle contains these induced copies of the two-edge path:")
c4 = SmallGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
for copy in enumerate_copies(c4, pat, induced=True):
    print("  ", copy)

d = exact_cover_decompose(c4, pat, induced=True)
print("and the backtracker picks this exact cover:")
for copy in d.copies:
    print("  ", copy.classes)

print()
print("minimum deletions from K_n before an induced cover exists:")
for n in (3, 4, 5, 6):
    value, witness = cex_exact(n, pat)
    print(f"  n = {n}: delete {value} of {n * (n - 1) // 2}; "
          f"a witness keeps {witness.edges()}")

print()
print("patterns with every class doubled need many deletions (at least n/2):")
for parts, ns in (((2, 2), (4, 5, 6)), ((2, 3), (5, 6))):
    p = PatternSignature(parts)
    for n in ns:
        value, _ = cex_exact(n, p)
        print(f"  pattern {parts}, n = {n}: {value} deletions (n/2 = {n / 2})")
