"""
Where the missing degrees go
============================

Order the plane with e2 above e1.  Every element of the non-unital part of
k[x] then shows its x2-side degree, so the degrees l*e1 coming from the
x1-side never enter the degree set.  The map a -> mu(a) pairs each hidden
degree with a visible one, and the complement keeps growing.
"""

from initalg import lex, load_fixture, validate
from initalg.analysis import classify_I, complement_scan, completeness_report, mu_map
from initalg.laurent import LaurentPoly

c = validate(load_fixture("rs"))
order = lex(2, [1, 0])
x = LaurentPoly.variable(1, 0)

print("x is led by embedding", classify_I(c, x, order))

mm = mu_map(c, order, 5)
for rec in mm:
    print(f"mu{rec.a} = {rec.mu}   in degree set: {rec.in_deg_psi_I}")
print("injective:", mm.injective)

scan = complement_scan(c, order, 8)
for grade, new, total in scan.rows:
    print(f"grade {grade}: {new} new missing degree(s), {total} in total")

print("completeness under e1 > e2:", completeness_report(c, lex(2), 6).verdict)
