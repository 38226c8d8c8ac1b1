"""The canonical module of the twisted cubic: CME, but Tor against omega does not vanish."""

from linkage import ext, is_cme, is_seq_cm_ext, quotient_ring, tensor, tor

R = quotient_ring("a b c d", ["a*c - b^2", "b*d - c^2", "a*d - b*c"])
W = R.canonical_module
print("omega =", W.minimal().presentation)
print("CME:", is_cme(W).verdict)
print("omega (x) omega seq-CM:", is_seq_cm_ext(tensor(W, W)).verdict)
for i in range(1, 4):
    T = tor(i, W, W)
    print(f"Tor_{i}(omega, omega): dim {T.dim if not T.is_zero() else '-'}, hilbert function {T.hilbert_series.graded_function()}")
for i in range(1, 5):
    E = ext(i, W, R.as_module())
    print(f"Ext^{i}(omega, R) zero:", E.is_zero())
