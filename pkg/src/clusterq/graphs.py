"""Bipartite graphs, built-in Dynkin diagrams, and the derived quivers.

Starting from a finite graph with a bipartition I = I0 | I1, four quivers
drive everything downstream:

* decorated quiver: edges oriented I1 -> I0 (I0 sinks, I1 sources), plus a
  frozen copy i' of each vertex with i' -> i for i in I0 and i -> i' for
  i in I1;
* x-quiver: same underlying graph, but edges oriented I0 -> I1 and frozen
  arrows f_i -> x_i (i in I0), x_i -> f_i (i in I1) -- the principal
  orientation is opposite to the decorated quiver;
* z-quiver: the x-quiver mutated at every vertex of I1 (pairwise
  non-adjacent, so the order does not matter);
* principally decorated quiver: the decorated quiver with the frozen arrows
  at I0 reversed, so i -> i' for every i.  Quiver Grassmannians for
  truncated characters live on representations of this quiver.

Frozen copies carry the id suffix "'".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .quiver import ExchangeMatrix, Quiver, QuiverError, Vertex


class OddCycleError(QuiverError):
    """The graph has no bipartition."""


def frozen_id(vid: str) -> str:
    return vid + "'"


@dataclass(frozen=True)
class Graph:
    """Finite undirected multigraph without loops."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise QuiverError(f"edge loop at {u!r}")
            if u not in vs or v not in vs:
                raise QuiverError(f"edge {u!r}-{v!r} endpoint missing")

    @staticmethod
    def make(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        norm = tuple(sorted(tuple(sorted((str(u), str(v)))) for u, v in edges))
        return Graph(tuple(str(v) for v in vertices), norm)

    def adjacency(self, u: str, v: str) -> int:
        return sum(1 for a, b in self.edges if {a, b} == {u, v})

    def neighbors(self, u: str) -> list[str]:
        out: list[str] = []
        for a, b in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return out


def bipartition(graph: Graph) -> tuple[frozenset[str], frozenset[str]]:
    """2-color the graph by BFS; raises OddCycleError when impossible."""
    color: dict[str, int] = {}
    for start in graph.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in graph.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise OddCycleError(
                        f"graph has an odd cycle through {u!r}-{w!r}")
    i0 = frozenset(v for v in graph.vertices if color[v] == 0)
    i1 = frozenset(v for v in graph.vertices if color[v] == 1)
    return i0, i1


class Bipartite:
    """A graph together with a fixed bipartition and its derived quivers."""

    def __init__(self, graph: Graph, parts: tuple[Iterable[str], Iterable[str]] | None = None):
        self.graph = graph
        if parts is None:
            i0, i1 = bipartition(graph)
        else:
            i0, i1 = frozenset(map(str, parts[0])), frozenset(map(str, parts[1]))
            if i0 | i1 != set(graph.vertices) or (i0 & i1):
                raise QuiverError("bipartition must split the vertex set")
            for u, v in graph.edges:
                if (u in i0) == (v in i0):
                    raise QuiverError(f"edge {u!r}-{v!r} stays inside one part")
        self.i0 = i0
        self.i1 = i1
        self._cache: dict[str, Quiver] = {}

    # -- combinatorial data --------------------------------------------------

    def vertices(self) -> list[str]:
        return list(self.graph.vertices)

    def xi(self, v: str) -> int:
        return 0 if v in self.i0 else 1

    def eps(self, v: str) -> int:
        return 1 if v in self.i0 else -1

    def a(self, u: str, v: str) -> int:
        return self.graph.adjacency(u, v)

    def cartan(self, u: str, v: str) -> int:
        if u == v:
            return 2
        return -self.graph.adjacency(u, v)

    def key(self) -> tuple:
        return (self.graph.vertices, self.graph.edges,
                tuple(sorted(self.i0)), tuple(sorted(self.i1)))

    # -- derived quivers -------------------------------------------------------

    def _vertexes(self, with_frozen: bool) -> list[Vertex]:
        out = [Vertex(v, False, self.xi(v)) for v in self.graph.vertices]
        if with_frozen:
            out += [Vertex(frozen_id(v), True, None) for v in self.graph.vertices]
        return out

    def decorated(self) -> Quiver:
        """I0 sinks / I1 sources, frozen arrows i'->i (I0) and i->i' (I1)."""
        if "decorated" not in self._cache:
            arrows: list[tuple[str, str]] = []
            for u, v in self.graph.edges:
                s, t = (u, v) if u in self.i1 else (v, u)
                arrows.append((s, t))
            for v in self.graph.vertices:
                if v in self.i0:
                    arrows.append((frozen_id(v), v))
                else:
                    arrows.append((v, frozen_id(v)))
            self._cache["decorated"] = Quiver(self._vertexes(True), arrows)
        return self._cache["decorated"]

    def x_quiver(self) -> Quiver:
        """Principal arrows I0 -> I1; f_i -> x_i (I0), x_i -> f_i (I1)."""
        if "x" not in self._cache:
            arrows: list[tuple[str, str]] = []
            for u, v in self.graph.edges:
                s, t = (u, v) if u in self.i0 else (v, u)
                arrows.append((s, t))
            for v in self.graph.vertices:
                if v in self.i0:
                    arrows.append((frozen_id(v), v))
                else:
                    arrows.append((v, frozen_id(v)))
            self._cache["x"] = Quiver(self._vertexes(True), arrows)
        return self._cache["x"]

    def z_quiver(self) -> Quiver:
        """The x-quiver mutated at every I1 vertex."""
        if "z" not in self._cache:
            m = ExchangeMatrix.from_quiver(self.x_quiver())
            for v in sorted(self.i1):
                m = m.mutate(v)
            self._cache["z"] = m.to_quiver()
        return self._cache["z"]

    def principal_decorated(self) -> Quiver:
        """Decorated quiver with all frozen arrows pointing i -> i'."""
        if "pdec" not in self._cache:
            arrows: list[tuple[str, str]] = []
            for u, v in self.graph.edges:
                s, t = (u, v) if u in self.i1 else (v, u)
                arrows.append((s, t))
            for v in self.graph.vertices:
                arrows.append((v, frozen_id(v)))
            self._cache["pdec"] = Quiver(self._vertexes(True), arrows)
        return self._cache["pdec"]

    def z_principal(self) -> Quiver:
        """Principal part shared by the decorated and z-quivers (I1 -> I0)."""
        if "zp" not in self._cache:
            arrows = []
            for u, v in self.graph.edges:
                s, t = (u, v) if u in self.i1 else (v, u)
                arrows.append((s, t))
            self._cache["zp"] = Quiver(self._vertexes(False), arrows)
        return self._cache["zp"]

    def x_principal(self) -> Quiver:
        if "xp" not in self._cache:
            arrows = []
            for u, v in self.graph.edges:
                s, t = (u, v) if u in self.i0 else (v, u)
                arrows.append((s, t))
            self._cache["xp"] = Quiver(self._vertexes(False), arrows)
        return self._cache["xp"]


def build_decorated(graph: Graph, parts=None) -> Quiver:
    return Bipartite(graph, parts).decorated()


def build_x_quiver(graph: Graph, parts=None) -> Quiver:
    return Bipartite(graph, parts).x_quiver()


def build_z_quiver(graph: Graph, parts=None) -> Quiver:
    return Bipartite(graph, parts).z_quiver()


# -- built-in graph library ---------------------------------------------------


def _path(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.make(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


@lru_cache(maxsize=None)
def builtin_graph(name: str) -> Graph:
    name = name.lower()
    if name == "a1":
        return Graph.make(["1"], [])
    if name == "a2":
        return _path(2)
    if name == "a3":
        return _path(3)
    if name == "a4":
        return _path(4)
    if name == "d4":
        return Graph.make(["1", "2", "3", "4"],
                          [("1", "2"), ("2", "3"), ("2", "4")])
    if name == "d5":
        return Graph.make(["1", "2", "3", "4", "5"],
                          [("1", "2"), ("2", "3"), ("3", "4"), ("3", "5")])
    if name == "e6":
        return Graph.make(["1", "2", "3", "4", "5", "6"],
                          [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"),
                           ("3", "6")])
    if name == "kronecker":
        return Graph.make(["1", "2"], [("1", "2"), ("1", "2")])
    raise QuiverError(f"unknown graph {name!r}")


def builtin_setting(name: str, parts: Sequence[Iterable[str]] | None = None) -> Bipartite:
    graph = builtin_graph(name)
    if parts is not None:
        i0 = frozenset(map(str, parts[0]))
        i1 = frozenset(v for v in graph.vertices if v not in i0)
        return Bipartite(graph, (i0, i1))
    return Bipartite(graph)


def graph_from_dict(data: Mapping) -> Graph:
    return Graph.make([str(v) for v in data["vertices"]],
                      [(str(u), str(v)) for u, v in data["edges"]])
