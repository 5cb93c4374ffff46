"""Segre numbers, twists and Euler characteristics of rank-2 Chern data."""

from fractions import Fraction

from quadricfano import (
    ChernData, QuadricContext, chi_hrr, chi_line_oracle, chi_q5, s6_closed_form_q6, segre_inversion,
    segre_recurrence, split, twist,
)

d = ChernData(-1, 3)
print(d, "discriminant", d.discriminant)

# two independent routes to s_i
print(" ".join(map(str, segre_recurrence(d, 8))))
print(segre_inversion(d, 8) == segre_recurrence(d, 8))

# twisting by a half-integer is fine, the data just become rational
e0 = twist(d, Fraction(7, 2))
print("E(7/2):", e0)
print("s6 on Q^6:", s6_closed_form_q6(e0))

q5 = QuadricContext(5)

# a split bundle is a sum of line bundles, chi adds up
a, b = 2, -3
print(chi_hrr(q5, split(a, b)), "=", chi_line_oracle(q5, a) + chi_line_oracle(q5, b))

# the printed closed form and HRR differ in the quadratic term
for c1, c2 in [(0, 1), (0, 2), (-1, 1), (-1, 2)]:
    x = ChernData(c1, c2)
    print(f"({c1}, {c2})  printed {chi_q5(x, 'printed')!s:>8}  hrr {chi_q5(x, 'hrr')!s:>8}")

# only (-1, 1) is integral under HRR
