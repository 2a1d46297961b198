"""Quivers with frozen vertices and exchange-matrix mutation.

A quiver here is a finite directed multigraph without loops or 2-cycles,
whose vertices split into principal (mutable) and frozen ones; arrows never
join two frozen vertices.  The equivalent integer matrix B, indexed by
(all vertices) x (principal vertices), has

    b[i][j] = #(arrows j -> i) - #(arrows i -> j),

i.e. a positive entry counts arrows INTO the row vertex from the column
vertex.  Sign conventions vary in the literature; everything in this package
uses this one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    frozen: bool = False
    parity: int | None = None  # 0 / 1 for bipartite principal parts


class Quiver:
    """Immutable directed multigraph with frozen vertices.

    Arrows are stored as a sorted tuple of (source, target) pairs; a repeated
    pair encodes multiplicity.
    """

    __slots__ = ("vertices", "arrows", "_index", "_mult")

    def __init__(self, vertices: Sequence[Vertex], arrows: Iterable[tuple[str, str]]):
        verts = tuple(vertices)
        ids = [v.id for v in verts]
        if len(set(ids)) != len(ids):
            raise QuiverError("duplicate vertex ids")
        index = {v.id: v for v in verts}
        arr = tuple(sorted((str(s), str(t)) for s, t in arrows))
        mult: dict[tuple[str, str], int] = {}
        for s, t in arr:
            if s not in index or t not in index:
                raise QuiverError(f"arrow endpoint {s!r}->{t!r} not a vertex")
            if s == t:
                raise QuiverError(f"loop at vertex {s!r}")
            if index[s].frozen and index[t].frozen:
                raise QuiverError(f"arrow {s!r}->{t!r} joins two frozen vertices")
            mult[(s, t)] = mult.get((s, t), 0) + 1
        for (s, t) in mult:
            if (t, s) in mult:
                raise QuiverError(f"2-cycle between {s!r} and {t!r}")
        for s, t in arr:
            ps, pt = index[s].parity, index[t].parity
            if ps is not None and pt is not None and ps == pt:
                raise QuiverError(f"arrow {s!r}->{t!r} joins equal parities")
        self.vertices = verts
        self.arrows = arr
        self._index = index
        self._mult = mult

    # -- structure ----------------------------------------------------------

    def vertex(self, vid: str) -> Vertex:
        return self._index[vid]

    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def principal_ids(self) -> list[str]:
        return [v.id for v in self.vertices if not v.frozen]

    def frozen_ids(self) -> list[str]:
        return [v.id for v in self.vertices if v.frozen]

    def is_frozen(self, vid: str) -> bool:
        return self._index[vid].frozen

    def parity(self, vid: str) -> int | None:
        return self._index[vid].parity

    def arrow_mult(self, src: str, tgt: str) -> int:
        return self._mult.get((src, tgt), 0)

    def arrow_list(self) -> tuple[tuple[str, str], ...]:
        """All arrows with multiplicity, in a deterministic order."""
        return self.arrows

    def out_arrows(self, vid: str) -> list[int]:
        return [i for i, (s, _t) in enumerate(self.arrows) if s == vid]

    def in_arrows(self, vid: str) -> list[int]:
        return [i for i, (_s, t) in enumerate(self.arrows) if t == vid]

    def neighbors_out(self, vid: str) -> list[str]:
        return [t for s, t in self.arrows if s == vid]

    def neighbors_in(self, vid: str) -> list[str]:
        return [s for s, t in self.arrows if t == vid]

    def is_sink(self, vid: str) -> bool:
        return not self.neighbors_out(vid)

    def is_source(self, vid: str) -> bool:
        return not self.neighbors_in(vid)

    def topological_order(self) -> list[str]:
        """Vertex order with every arrow going forward; error on cycles."""
        indeg = {v.id: 0 for v in self.vertices}
        for _s, t in self.arrows:
            indeg[t] += 1
        queue = sorted(v for v, d in indeg.items() if d == 0)
        order: list[str] = []
        while queue:
            v = queue.pop(0)
            order.append(v)
            seen: set[str] = set()
            for t in self.neighbors_out(v):
                if t in seen:
                    continue
                seen.add(t)
                indeg[t] -= self.arrow_mult(v, t)
                if indeg[t] == 0:
                    queue.append(t)
            queue.sort()
        if len(order) != len(self.vertices):
            raise QuiverError("quiver has an oriented cycle")
        return order

    def key(self) -> tuple:
        return (tuple((v.id, v.frozen, v.parity) for v in self.vertices), self.arrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver({', '.join(self.vertex_ids())}; {arrows})"

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "frozen": v.frozen,
                 **({"parity": v.parity} if v.parity is not None else {})}
                for v in self.vertices
            ],
            "arrows": [[s, t] for s, t in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: Mapping) -> "Quiver":
        vertices = [Vertex(str(v["id"]), bool(v.get("frozen", False)),
                           v.get("parity"))
                    for v in data["vertices"]]
        arrows = [(str(s), str(t)) for s, t in data["arrows"]]
        return Quiver(vertices, arrows)

    @staticmethod
    def from_json(text: str) -> "Quiver":
        return Quiver.from_dict(json.loads(text))


class ExchangeMatrix:
    """Integer matrix indexed by (all vertices) x (principal vertices)."""

    __slots__ = ("ids", "principal", "frozen", "parities", "b")

    def __init__(self, ids: Sequence[str], frozen: Mapping[str, bool],
                 b: np.ndarray, parities: Mapping[str, int | None] | None = None):
        self.ids = list(ids)
        self.frozen = {v: bool(frozen[v]) for v in self.ids}
        self.principal = [v for v in self.ids if not self.frozen[v]]
        self.parities = {v: (parities or {}).get(v) for v in self.ids}
        mat = np.asarray(b, dtype=np.int64)
        if mat.shape != (len(self.ids), len(self.principal)):
            raise QuiverError(f"matrix shape {mat.shape} does not match "
                              f"{len(self.ids)}x{len(self.principal)}")
        self.b = mat
        pb = self.principal_block()
        if not np.array_equal(pb, -pb.T):
            raise QuiverError("principal block is not skew-symmetric")

    def row(self, vid: str) -> int:
        return self.ids.index(vid)

    def col(self, vid: str) -> int:
        return self.principal.index(vid)

    def entry(self, i: str, j: str) -> int:
        return int(self.b[self.row(i), self.col(j)])

    def principal_block(self) -> np.ndarray:
        rows = [self.row(v) for v in self.principal]
        return self.b[rows, :]

    def mutate(self, k: str) -> "ExchangeMatrix":
        """Matrix mutation in direction of a principal vertex k."""
        if self.frozen.get(k, True):
            raise QuiverError(f"cannot mutate at frozen or unknown vertex {k!r}")
        kk = self.col(k)
        krow = self.row(k)
        b = self.b
        new = b.copy()
        for i in range(b.shape[0]):
            for j in range(b.shape[1]):
                if i == krow or j == kk:
                    new[i, j] = -b[i, j]
                else:
                    bik = b[i, kk]
                    bkj = b[krow, j]
                    new[i, j] = b[i, j] + np.sign(bik) * max(bik * bkj, 0)
        # mutation does not preserve bipartiteness; drop parity metadata
        return ExchangeMatrix(self.ids, self.frozen, new)

    def to_quiver(self) -> Quiver:
        vertices = [Vertex(v, self.frozen[v], self.parities.get(v))
                    for v in self.ids]
        arrows: list[tuple[str, str]] = []
        for i, vi in enumerate(self.ids):
            for j, vj in enumerate(self.principal):
                n = int(self.b[i, j])
                if n > 0:
                    arrows.extend([(vj, vi)] * n)
                elif n < 0 and self.frozen[vi]:
                    # frozen rows have no skew partner column
                    arrows.extend([(vi, vj)] * (-n))
        return Quiver(vertices, arrows)

    @staticmethod
    def from_quiver(q: Quiver) -> "ExchangeMatrix":
        ids = q.vertex_ids()
        principal = q.principal_ids()
        b = np.zeros((len(ids), len(principal)), dtype=np.int64)
        for i, vi in enumerate(ids):
            for j, vj in enumerate(principal):
                b[i, j] = q.arrow_mult(vj, vi) - q.arrow_mult(vi, vj)
        return ExchangeMatrix(ids, {v.id: v.frozen for v in q.vertices}, b,
                              {v.id: v.parity for v in q.vertices})

    def key(self) -> tuple:
        return (tuple(self.ids), tuple(sorted(self.frozen.items())),
                self.b.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def to_dict(self) -> dict:
        return {
            "rows": self.ids,
            "cols": self.principal,
            "frozen": [v for v in self.ids if self.frozen[v]],
            "b": self.b.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: Mapping) -> "ExchangeMatrix":
        ids = [str(v) for v in data["rows"]]
        frozen_set = {str(v) for v in data.get("frozen", [])}
        return ExchangeMatrix(ids, {v: v in frozen_set for v in ids},
                              np.array(data["b"], dtype=np.int64))

    @staticmethod
    def from_json(text: str) -> "ExchangeMatrix":
        return ExchangeMatrix.from_dict(json.loads(text))


def to_matrix(q: Quiver) -> ExchangeMatrix:
    return ExchangeMatrix.from_quiver(q)


def from_matrix(b: ExchangeMatrix) -> Quiver:
    return b.to_quiver()


def mutate_matrix(b: ExchangeMatrix, k: str) -> ExchangeMatrix:
    return b.mutate(k)


def mutate_quiver(q: Quiver, k: str) -> Quiver:
    return ExchangeMatrix.from_quiver(q).mutate(k).to_quiver()
