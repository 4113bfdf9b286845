"""
Computing the quadratic dual
============================

The quadratic relations of B(n) span a subspace R of the tensor square of
the generator space.  The Koszul dual algebra is presented by the
orthogonal complement of R under the canonical pairing.  Nothing here is
taken on faith: the structured presentation (squares, anticommutators,
and the loop relation x_1 d_1 + .. + x_n d_n + z^2) is recomputed from R
and certified to span the complement exactly.
"""

from weylkit import AlgebraKind, dual_presentation, orthogonal_complement, pairing, relations_of
from weylkit.quadratic import relation_text

B, C = AlgebraKind.B, AlgebraKind.C

for n in (1, 2):
    primal = relations_of(B, n)
    print(f"B({n}) has {len(primal.relations)} relations (2n^2+n):")
    for r in primal.relations:
        print("   ", relation_text(r, primal.generators))

    complement = orthogonal_complement(primal)
    print(f"its dual relation space has dimension {len(complement.basis)} (2n^2+3n+1)")

    # every complement vector pairs to zero with every relation
    assert all(pairing(r, s) == 0 for r in primal.relations for s in complement.basis)

    dual = dual_presentation(B, n)
    print(f"structured dual presentation of B({n})!:")
    for r in dual.relations:
        print("   ", relation_text(r, dual.generators))
    print()

# The polynomial algebra dualizes to the exterior algebra on 2n+1
# generators: all squares vanish, all distinct pairs anticommute.
dual_c = dual_presentation(C, 1)
print("C(1)! relations:", [relation_text(r, dual_c.generators) for r in dual_c.relations])
