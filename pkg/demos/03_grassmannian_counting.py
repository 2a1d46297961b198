"""Counting points of quiver Grassmannians over several prime fields.

A generic Kronecker module of dimension (2,2) is two distinct points of the
projective line; its (1,1)-subrepresentations are exactly those two points,
at every prime.  Subspace sweeps interpolate to integer counting
polynomials, whose q -> t^2 reading gives Poincare polynomials and whose
value at 1 is the Euler number.
"""

from clusterq import (count_subreps, counting_polynomial, euler_number,
                      generic_rep, poincare_from_count)
from clusterq.graphs import builtin_setting

kron = builtin_setting("kronecker", (["1"], ["2"]))
quiver = kron.z_principal()
print("Kronecker principal quiver:", quiver.arrows)

for p in (3, 5, 7):
    rep = generic_rep(quiver, {"1": 2, "2": 2}, p, rng=11)
    n = count_subreps(rep, {"1": 1, "2": 1})
    print(f"   #Gr_(1,1) over F_{p}: {n}")

print("\ncounting polynomials of the generic (2,2) module:")
for v in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    c = counting_polynomial(quiver, {"1": 2, "2": 2},
                            {"1": v[0], "2": v[1]}, rng=0)
    print(f"   v={v}: {c}   Euler = {euler_number(c)}")

c = counting_polynomial(quiver, {"1": 2, "2": 2}, {"1": 1, "2": 0}, rng=0)
print("\nPoincare reading of the projective line:", poincare_from_count(c))

# classical sanity checks on a single vertex
from clusterq.quiver import Quiver, Vertex

point = Quiver([Vertex("1")], [])
print("\nlines in a plane: ",
      counting_polynomial(point, {"1": 2}, {"1": 1}, rng=0))
print("lines in 3-space: ",
      counting_polynomial(point, {"1": 3}, {"1": 1}, rng=0))
