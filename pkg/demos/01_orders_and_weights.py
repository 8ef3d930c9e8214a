"""
Orders on Z^n and weight vectors
================================

A total group order on Z^n is stored as a rational weight matrix.  Any such
order can be replaced, on a finite set of exponents, by a single weight.
"""

from initalg.orders import (
    agrees_on,
    doubled_order,
    find_generic_weight,
    is_monomial_order,
    lex,
    weight_order,
)

# lex with x1 most significant; (1,0) beats (0,1)
o = lex(2)
print(o, o.compare((1, 0), (0, 1)))

# a weight order that is not a monomial order: e1 and e2 both sit below 0
neg = weight_order([-2, -3])
print(neg, "monomial order:", is_monomial_order(neg), "e1 < 0:", neg.less((1, 0), (0, 0)))

# the doubled family on (x1, x2, y1, y2): the weight (1, 0, 0, lam) decides x1*x2 vs y1*y2
for lam in (2, "1/2"):
    d = doubled_order(2, lam)
    winner = max([(1, 1, 0, 0), (0, 0, 1, 1)], key=d.key)
    print(d, "prefers", winner)

# replace lex by one weight on a finite set; epsilon is computed from the set
F = [(0, 0), (1, -100), (0, 1), (3, 2)]
w = find_generic_weight(F, o)
print("weight", [str(x) for x in w], "agrees on F:", agrees_on(w, F, o))
