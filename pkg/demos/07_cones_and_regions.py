"""
Cones, faces and regions
========================

A cone with chosen faces splits into the origin, the interior, the relative
interiors of the faces, and the rest of the boundary.  Interior points
absorb sums, and points of two different faces add up to interior points.
"""

from initalg.cones import ConeWithFaces, check_closure_laws, facet_normals, fourier_motzkin, gordan_decompose

cone = ConeWithFaces(((2, 1), (1, 2)), ((-1, 2), (2, -1)))
for a in [(0, 0), (2, 1), (4, 2), (1, 2), (3, 3), (1, 0), (5, 4)]:
    print(a, cone.classify(a))

print(check_closure_laws(cone, samples=500, seed=0))

# halfspaces two ways
print("facets:", facet_normals(cone.generators, 2).inequalities)
print("elimination:", fourier_motzkin(cone.generators, 2).inequalities)

# <2,3> is finitely generated over 2N; the monoid {0} + Z>0 e1 + (Z>0)^2 is not
S = {(0,)} | {(k,) for k in range(2, 21)}
print("numerical semigroup F:", sorted(gordan_decompose(S, [(2,)], 20).F))
D = 8
T = {(0, 0)} | {(i, 0) for i in range(1, D + 1)} | {(i, j) for i in range(1, D) for j in range(1, D) if i + j <= D}
res = gordan_decompose(T, [(1, 0), (1, 1)], D)
print("F keeps growing:", sorted(res.F), res.notes)
