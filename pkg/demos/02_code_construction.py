#!/usr/bin/env python3
"""Construct every designed-distance-3 code of length q+1 for q = 9.

The generator polynomial is the lcm of the minimal polynomials of beta^h and
beta^(h+1).  Because the q-cyclotomic cosets mod q+1 are {0}, {i, q+1-i} and
(for odd q) {(q+1)/2}, the degree of g lands in {2, 3, 4} and the dimension
follows a small case table in h.
"""

from bchlab import build_bch, build_field
from bchlab.bch import expanded_parity_matrix, generator_matrix
from bchlab import gflin, theory
from bchlab.cosets import all_cosets

ctx = build_field(3, 2)
q = ctx.q

print("cyclotomic cosets mod", q + 1, "under multiplication by", q)
for c in all_cosets(q + 1, q):
    print("  ", c.members)

print(f"\n{'h':>3} {'deg g':>6} {'k':>3} {'predicted':>9}  generator g(x)")
for h in range(q + 1):
    code = build_bch(ctx, 3, h)
    pred = theory.predict_dimension(q, h)
    assert code.k == pred
    print(f"{h:>3} {code.g.degree:>6} {code.k:>3} {pred:>9}  {code.g}")

# The parity view: two rows [(beta^h)^i], [(beta^(h+1))^i] over GF(q^2)
# expand to a 4-row matrix over GF(q) whose kernel is the code.
code = build_bch(ctx, 3, 2)
mat = expanded_parity_matrix(code)
print("\nexpanded parity matrix for h = 2 (compact GF(q) labels):")
print(mat)
print("rank =", gflin.rank(ctx, mat), " kernel dimension =", code.k)

gen = generator_matrix(code)
print("generator matrix shape:", gen.shape, " rank =", gflin.rank(ctx, gen))
