"""
A finitely generated degree set
===============================

With generators x^2 + x and x^3 + x^2 embedded by x -> -x1 - 1 and x -> x2,
an order below the origin on both axes makes e1 and e2 degrees of the
algebra, so its degree set is all of (Z>=0)^2.
"""

from initalg import load_fixture, validate, weight_order
from initalg.construction import phi_apply
from initalg.analysis import check_main_hypothesis, completeness_report
from initalg.sagbi import degree_monoid

c = validate(load_fixture("quadratic"))
order = weight_order([-2, -3])
r1, r2 = c.spec.source_gens

# two explicit witnesses of filtration degree 3
for name, p in (("phi(r2)", r2), ("phi(r1 + r2)", r1 + r2)):
    f = phi_apply(c, p)
    print(f"{name:14s} = {f.pretty():40s} degree {f.degree(order)}")

rep = degree_monoid(c, order, 3, with_generators=False)
print("e1, e2 in truncated degree set:", (1, 0) in rep.degrees, (0, 1) in rep.degrees)
print("notes:", rep.notes)

# both embeddings put their generators below 0, so the non-finiteness criterion does not apply
for v in check_main_hypothesis(c, order):
    print("embedding", v.embedding, v.verdict, "-", v.witness)

report = completeness_report(c, order, 8)
print("completeness:", report.verdict, "at bounds", [str(b) for b in report.bounds])
