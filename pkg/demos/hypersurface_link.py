"""Walk through a horizontal link over k[x,y]/(xy) and a module that is not linked."""

from linkage import PresentedModule, betti_table, is_horizontally_linked, lambda_, quotient_ring, transpose

R = quotient_ring("x y", ["x*y"])
M = PresentedModule.quotient(R, ["x"])
print("M =", M.presentation)
print("Tr M =", transpose(M).presentation)

L = lambda_(M)
print("lambda M =", L.minimal().presentation)
print("lambda^2 M same as M:", lambda_(L).same_fingerprint(M))

cert = is_horizontally_linked(M)
print("linked:", cert.verdict)

# over a polynomial ring the residue field is never linked
S = quotient_ring("x y")
k = PresentedModule.quotient(S, ["x", "y"])
cert = is_horizontally_linked(k)
print("k linked:", cert.verdict, "obstruction:", cert.obstruction)
print(betti_table(k))
