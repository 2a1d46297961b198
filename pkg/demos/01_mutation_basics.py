"""Seeds and mutation, from the exchange matrix up.

Build the three quivers attached to the A3 diagram with bipartition
I0 = {1,3}, I1 = {2}, mutate a few seeds, and enumerate the whole mutation
class of the coefficient-free A2 algebra (the classical pentagon).
"""

from clusterq import Seed, Quiver, Vertex, enumerate_clusters
from clusterq.graphs import builtin_setting

setting = builtin_setting("a3", (["1", "3"], ["2"]))

print("decorated quiver (sinks at I0, one frozen copy per vertex):")
for s, t in setting.decorated().arrows:
    print(f"   {s} -> {t}")

print("\nx-quiver (the initial cluster seed; principal part reversed):")
for s, t in setting.x_quiver().arrows:
    print(f"   {s} -> {t}")

print("\nz-quiver (x-quiver mutated at every source vertex):")
for s, t in setting.z_quiver().arrows:
    print(f"   {s} -> {t}")

# one mutation: the exchange relation divides exactly (Laurent phenomenon)
seed = Seed.initial(setting.x_quiver())
mutated = seed.mutate("1")
print("\nmutating the x-seed at 1:")
print("   new variable:", mutated.pretty("1"))
print("   mutating again restores the seed:",
      mutated.mutate("1") == seed)

# the coefficient-free A2 pentagon: 5 variables, 5 clusters
a2 = Quiver([Vertex("1"), Vertex("2")], [("1", "2")])
census = enumerate_clusters(Seed.initial(a2), max_seeds=50)
print(f"\ncoefficient-free A2: {census.cluster_count()} clusters, "
      f"{census.variable_count()} variables, closed={census.closed}")
for v in sorted(census.variables):
    print("   ", v)
