"""
Hypercomplex sequences and their Binet forms
============================================

W_n packs four consecutive terms of the bi-periodic sequence into a
quaternion (eight for the octonion OW_n).  The closed forms use the star
constants, computed here over Q[sqrt D] and then checked to be rational.
"""

from biperiodic import OW, W, OW_binet, Params, SequenceEngine, W_binet, lucas_params, star_constants

p = Params(2, 1, 0, 1)
eng = SequenceEngine(p)
print("w_-4..w_8:", [str(eng.w(n)) for n in range(-4, 9)])

for n in range(5):
    print(f"W_{n} = {W(n, eng)}   Binet: {W_binet(n, p)}")

st = star_constants(p)
print("\nalpha*  =", st.alpha_star)
print("alpha** =", st.alpha_dstar)

# the Lucas seeds (w0, w1) = (2, a) with a and b swapped in the recurrence
lp = lucas_params(2, 1)
leng = SequenceEngine(lp)
print("\nLucas octonions:")
for n in range(3):
    print(f"OW_{n} = {OW(n, leng)}", "ok" if OW(n, leng) == OW_binet(n, lp) else "MISMATCH")
