"""
Generating functions
====================

The quaternion generating function is assembled one basis component at a
time: a rational part over 1 - b t - t^2 plus (a - b) times a correction
series built from the odd-index generating function.
"""

from biperiodic import Params, SequenceEngine, W, f_series, genfunc_oct, genfunc_quat

p = Params(2, 1, 0, 1)
f = f_series(p, 11)
print("f(t) coefficients:", [str(f[k]) for k in range(12)])

eng = SequenceEngine(p)
coeffs = genfunc_quat(p, 8)
for n, c in enumerate(coeffs):
    print(f"[t^{n}] G = {c}", "== W_n" if c == W(n, eng) else "!= W_n")

octs = genfunc_oct(Params(1, 2, 2, 1), 3)
print("\noctonion coefficients:")
for c in octs:
    print(" ", c)
