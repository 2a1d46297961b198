"""Factorizations: KR pairs peel off, then the canonical decomposition.

Matched (i, i') weight pairs split off as Kirillov-Reshetikhin factors; the
principal remainder factors along the canonical decomposition of its
dimension vector.  On the Kronecker quiver the isotropic root delta is
imaginary: (2,2) decomposes as delta + delta, the square identity holds for
the almost simple classes, and the reality condition fails.
"""

from clusterq import (canonical_decomposition, condition_c, is_real_schur,
                      is_schur_root, kr_factor, tensor_factorize,
                      truncated_character)
from clusterq.graphs import builtin_setting
from clusterq.replab import GradedDim

a3 = builtin_setting("a3", (["1", "3"], ["2"]))

w = GradedDim.from_w_slots(a3, {"1": (2, 1), "2": (1, 2), "3": (1, 1)})
phi, mults = kr_factor(a3, w)
print("A3 weight with slots (2,1),(1,2),(1,1):")
print("   KR multiplicities:", mults)
print("   reduced weight:", phi.to_dict())
print("   factors:", [f.to_dict() for f in tensor_factorize(a3, w, rng=1)])
print("   reality condition holds:", condition_c(a3, w, rng=2))

kron = builtin_setting("kronecker", (["1"], ["2"]))
quiver = kron.z_principal()
print("\nKronecker (2,2):")
cd = canonical_decomposition(quiver, {"1": 2, "2": 2}, samples=9, rng=3)
print("   canonical decomposition:", cd)
delta = {"1": 1, "2": 1}
print("   delta is Schur:", is_schur_root(quiver, delta, rng=4),
      " real:", is_real_schur(quiver, delta, rng=4))

d1 = GradedDim.from_w_slots(kron, {"1": (1, 0), "2": (1, 0)})
d2 = GradedDim.from_w_slots(kron, {"1": (2, 0), "2": (2, 0)})
chi1 = truncated_character(kron, d1, "one", rng=5)
chi2 = truncated_character(kron, d2, "one", rng=6)
print("   chi(2 delta) == chi(delta)^2 at t=1:", chi2 == chi1 * chi1)
print("   condition (C) for 2 delta:", condition_c(kron, d2, rng=7))
