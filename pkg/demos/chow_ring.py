"""Chow ring of a smooth quadric.

The ring is generated by the hyperplane class H, and H^n has degree 2.
For odd n = 2k+1 the middle class P = H^{k+1}/2 is a class on its own.
"""

from fractions import Fraction

from quadricfano import QuadricContext, degree, hyperplane, middle_relations_check
from quadricfano.chow import middle_class

ctx = QuadricContext(5)
H = hyperplane(ctx)

print("H^5 has degree", degree(H**5))
print("H^6 vanishes:", (H**6).as_map() == {})

# the middle class on Q^5 lives in codimension 3
P = middle_class(ctx)
print("P =", P.as_map())
print("H^2 * P has degree", degree(H**2 * P))
print("relations hold:", middle_relations_check(ctx))

# exact rationals go straight in
print("(1 + H/2)^2 =", ((1 + Fraction(1, 2) * H) ** 2).as_map())

for n in range(3, 13):
    ctx = QuadricContext(n)
    print(f"Q^{n}: deg H^{n} = {degree(hyperplane(ctx) ** n)}")
