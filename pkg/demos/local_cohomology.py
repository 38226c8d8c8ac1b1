"""Local cohomology of two skew lines, read off from Ext into the canonical module."""

from linkage import PresentedModule, depth, lambda_, local_cohomology_function, quotient_ring

R = quotient_ring("x y z w", ["x*z", "y*w"])
M = PresentedModule.quotient(R, ["x*w", "y*z"])
print("dim", M.dim, "depth", depth(M))
for i in range(M.dim + 1):
    h = local_cohomology_function(i, M)
    print(f"H^{i}_m(M):", "infinite" if h is None else h)

L = lambda_(M)
for i in range(L.dim + 1):
    h = local_cohomology_function(i, L)
    print(f"H^{i}_m(lambda M):", "infinite" if h is None else h)
