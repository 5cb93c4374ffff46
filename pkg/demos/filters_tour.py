"""Each numeric filter in isolation."""

from fractions import Fraction

from quadricfano import (
    ChernData, anticanonical_degree, nef_c2_bound, sin_incompatibility, sine_gap, splitting_criterion, twist,
)
from quadricfano.filters import (
    alpha, anticanonical_degree_expanded, bogomolov_verdict, rr_integrality, segre_nef_obstruction,
    sine_gap_limit,
)

# Bogomolov just picks the branch
for d in (ChernData(0, 0), ChernData(-1, 1)):
    print(bogomolov_verdict(d).reason)

# unstable data: E(n-1) meets the splitting bound
f = twist(ChernData(-1, 1), 4)
v = splitting_criterion(5, f)
print(v.status, dict(v.witnesses))

# alpha(n) are quadratic irrationals compared exactly
for n in range(5, 12):
    print(n, alpha(n), "c2 <=", nef_c2_bound(n, 0))

# Q^6 with c2 = 3 survives the alpha bound but not Segre
v = segre_nef_obstruction(6, ChernData(0, 3))
print(v.status, v.witnesses["s6"])

# Riemann-Roch on Q^5
print(rr_integrality(ChernData(0, 2)).witnesses)

# certified sine bound
print("f(1/11) =", sine_gap(11).render(20))
print("limit  =", sine_gap_limit().render(20))
print(sin_incompatibility(12).status, sin_incompatibility(200).status)

# bigness of -K on P(Cayley)
d = ChernData(-1, 1)
print(anticanonical_degree(5, d), anticanonical_degree_expanded(5, d))
