"""
Two orders, two initial algebras
================================

On Z^2 x Z^2 the weight (1, 0, 0, lam) with lam > 1 makes y1*y2 lead
x1*x2 + y1*y2; with lam < 1 the x-block wins.  The truncated degree sets
differ accordingly.
"""

from fractions import Fraction

from initalg import doubled_order, load_fixture, validate
from initalg.analysis import fingerprint_orders
from initalg.construction import phi_apply
from initalg.laurent import LaurentPoly
from initalg.sagbi import degree_monoid

c = validate(load_fixture("doubled"))
t1, t2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
f11 = phi_apply(c, t1 * t2)
print("f_(1,1) =", f11.pretty(["x1", "x2", "y1", "y2"]))

orders = [doubled_order(2, 2), doubled_order(2, Fraction(1, 2))]
sets = []
for o in orders:
    rep = degree_monoid(c, o, 4, with_generators=False)
    sets.append(rep.degrees)
    print(f"{o}: leading exponent {f11.degree(o)}, {len(rep.degrees)} degrees up to grade 4")

print("only under the first:", sorted(sets[0] - sets[1])[:6])
print("only under the second:", sorted(sets[1] - sets[0])[:6])
print("classes:", fingerprint_orders(c, orders, 4).count)
