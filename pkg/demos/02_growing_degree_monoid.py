"""
A degree monoid that needs ever more generators
===============================================

The algebra k[x1 + x2] + J, with J the ideal generated by x1*x2 in k[x1, x2],
is finitely generated, but under lex its degree monoid is
{0} + Z>0 e1 + (Z>0)^2, which is not.
"""

from initalg import algebra_min_generators, degree_monoid, lex, load_fixture, validate

c = validate(load_fixture("rs"))
order = lex(2)

# the full report at a small bound, as a table
print(degree_monoid(c, order, 5).render_text())

# minimal monoid generators grow with the bound: (1,0), (1,1), ..., (1,D-1)
for D in range(3, 11):
    rep = degree_monoid(c, order, D, with_generators=False)
    print(f"D={D:2d}  degrees={len(rep.degrees):3d}  minimal generators={len(rep.monoid_min_gens)}")

# the algebra itself needs only three generators, and nothing new appears after grade 3
for grade, reps in algebra_min_generators(c, order, 6):
    print("grade", grade, [f.pretty() for f in reps])
