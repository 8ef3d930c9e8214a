"""
How many initial algebras?
==========================

Embedding k[x] along the rays through (2,1) and (1,2) gives an algebra whose
initial algebra depends only on which ray the order favours.  Sampling
orders that favour each ray finds exactly two classes.
"""

import random
from fractions import Fraction

from initalg import lex, load_fixture, validate
from initalg.analysis import face_favoring_order, fingerprint_orders

c = validate(load_fixture("hanoi"))
rng = random.Random(1)

orders = [lex(2), lex(2, [1, 0])]
for face in (1, 2):
    for _ in range(3):
        base = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)]
        order, lam = face_favoring_order(c, face, base, 1)
        print(f"face {face}: base {[str(b) for b in base]} needed lambda = {lam}")
        orders.append(order)

fp = fingerprint_orders(c, orders, 9)
print("classes:", fp.count)
for degs, members in fp.classes:
    print(" ", [str(orders[k]) for k in members])
    print("   ", sorted(degs))
