"""
Quaternion and octonion products
================================

Both algebras are driven by a sign/index multiplication table.  The octonion
table is parsed from a text literal and checked when the module is imported.
"""

from biperiodic import OCTONION_TABLE, Octonion, Quaternion, hc_conj, hc_mul, hc_norm

# the octonion table, one row per basis element
names = [f"e{k}" for k in range(8)]
for i in range(8):
    row = []
    for j in range(8):
        s, k = OCTONION_TABLE.product(i, j)
        row.append(("-" if s < 0 else " ") + names[k])
    print(" ".join(row))

e = Octonion.basis
left = hc_mul(hc_mul(e(1), e(2)), e(4))
right = hc_mul(e(1), hc_mul(e(2), e(4)))
print("\n(e1 e2) e4 =", left)
print("e1 (e2 e4) =", right)

# the norm is multiplicative even without associativity
u = Octonion([1, 2, 0, -1, 3, 0, 1, 1])
v = Octonion([0, 1, 1, 1, -2, 5, 0, 2])
print("\nNr(u v) =", hc_norm(hc_mul(u, v)), "  Nr(u) Nr(v) =", hc_norm(u) * hc_norm(v))

q = Quaternion([1, 2, 3, 4])
print("q * conj(q) =", hc_mul(q, hc_conj(q)))
