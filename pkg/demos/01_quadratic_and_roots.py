"""
Exact roots in Q[sqrt D]
========================

The characteristic polynomial t^2 - ab t - ab has roots alpha, beta that live
in the ring Q[sqrt D] with D = a^2 b^2 + 4ab.  Everything below is exact.
"""

from fractions import Fraction

from biperiodic import Params, QuadraticContext, binet_constants, roots, w_binet

# golden ratio setting: a = b = 1, D = 5
p = Params(1, 1, 0, 1)
alpha, beta = roots(p)
print("D =", p.D)
print("alpha =", alpha, "  beta =", beta)
print("alpha*beta =", alpha * beta, "  alpha-beta =", alpha - beta)

# inversion goes through the conjugate norm
print("1/alpha =", alpha.inverse(), "  check:", alpha * alpha.inverse())

# rational parameters are fine too
q = Params(Fraction(1, 2), 3, 1, 4)
A, B = binet_constants(q)
print("\na=1/2, b=3: D =", q.D)
print("A =", A)
print("B =", B)
print("w_0..w_9 via Binet:", [str(w_binet(n, q)) for n in range(10)])

# D can be a perfect square; then the ring has zero divisors and
# inverting one fails loudly instead of returning garbage
ctx = QuadraticContext(9)
try:
    ctx.element(3, 1).inverse()
except ArithmeticError as exc:
    print("\nD = 9:", exc)
