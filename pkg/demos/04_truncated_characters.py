"""Truncated q-characters from Grassmannian point counts.

The character of the class attached to a weight W is the sum over
subdimensions V of the Poincare polynomial of Gr_V of the reflected module,
times the monomial e^W e^V.  The three families of fundamental classes have
one-line characters, and multiplying the x and x' characters reproduces the
T-system relation.
"""

from clusterq import truncated_character
from clusterq.graphs import builtin_setting
from clusterq.qchar import pretty_character
from clusterq.replab import GradedDim, kr_weight, simple_w, simple_w_frozen

setting = builtin_setting("a3", (["1", "3"], ["2"]))

print("fundamental characters on A3 (t-analog, normalized):")
for i in setting.vertices():
    chi_f = truncated_character(setting, kr_weight(setting, i), "t", rng=1)
    chi_x = truncated_character(setting, simple_w_frozen(setting, i), "t", rng=2)
    chi_xp = truncated_character(setting, simple_w(setting, i), "t", rng=3)
    print(f"   f_{i}: {pretty_character(chi_f)}")
    print(f"   x_{i}: {pretty_character(chi_x)}")
    print(f"   x'_{i}: {pretty_character(chi_xp)}")

print("\nT-system at vertex 1: x_1 * x'_1 - x_2 = f_1 ?")
lhs = truncated_character(setting, simple_w_frozen(setting, "1"), "one", rng=4) \
    * truncated_character(setting, simple_w(setting, "1"), "one", rng=5)
x2 = truncated_character(setting, simple_w_frozen(setting, "2"), "one", rng=6)
f1 = truncated_character(setting, kr_weight(setting, "1"), "one", rng=7)
print("   ", lhs - x2 == f1)

print("\na bigger weight, with its t-coefficients:")
w = GradedDim.from_w_slots(setting, {"1": (1, 0), "2": (2, 0), "3": (1, 0)})
chi = truncated_character(setting, w, "t", rng=8)
print(f"   W = (1,2,1) principal: {chi.num_terms()} monomials")
print("   ", pretty_character(chi))
