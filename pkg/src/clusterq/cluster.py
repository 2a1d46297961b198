"""Seeds, seed mutation, cluster enumeration, F-polynomials and g-vectors.

A seed is an exchange matrix together with one Laurent polynomial per
vertex, written in the variables of the initial seed.  Mutation replaces the
variable at a mutable vertex through the exchange relation

    x_k * x_k^new = prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik},

computed by exact Laurent division; the division failing would falsify the
Laurent phenomenon, so it raises.

Every cluster variable of the algebra with principal coefficients is
homogeneous for the grading deg u_i = e_i, deg f_j = -sum_i b_ij e_i; the
degree is its g-vector, and specializing u = 1 gives its F-polynomial.  The
pair (F, g) reconstructs the variable in any coefficient system via the
separation formula (substitute y-hat monomials, divide by the tropical
evaluation, multiply by x^g).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

import numpy as np

from .graphs import frozen_id
from .laurent import InexactDivision, LaurentPoly, TropicalMonomial, tropical_eval
from .quiver import ExchangeMatrix, Quiver, Vertex


class ClusterError(ValueError):
    pass


def default_namer(vid: str, frozen: bool) -> str:
    if frozen:
        return "f" + (vid[:-1] if vid.endswith("'") else vid)
    return "x" + vid


def principal_namer(vid: str, frozen: bool) -> str:
    if frozen:
        return "f" + (vid[:-1] if vid.endswith("'") else vid)
    return "u" + vid


class Seed:
    """Exchange matrix plus the current cluster variables."""

    __slots__ = ("matrix", "variables", "names")

    def __init__(self, matrix: ExchangeMatrix,
                 variables: Mapping[str, LaurentPoly],
                 names: Mapping[str, str]):
        self.matrix = matrix
        self.variables = {v: variables[v] for v in matrix.ids}
        self.names = {v: names[v] for v in matrix.ids}

    # -- construction ---------------------------------------------------------

    @staticmethod
    def initial(quiver: Quiver,
                namer: Callable[[str, bool], str] = default_namer) -> "Seed":
        matrix = ExchangeMatrix.from_quiver(quiver)
        names = {v.id: namer(v.id, v.frozen) for v in quiver.vertices}
        variables = {vid: LaurentPoly.variable(name) for vid, name in names.items()}
        return Seed(matrix, variables, names)

    # -- mutation ---------------------------------------------------------------

    def mutate(self, k: str) -> "Seed":
        mat = self.matrix
        if k not in mat.principal:
            raise ClusterError(f"cannot mutate at frozen or unknown vertex {k!r}")
        m_plus = LaurentPoly.one()
        m_minus = LaurentPoly.one()
        for vid in mat.ids:
            b = mat.entry(vid, k)
            if b > 0:
                m_plus = m_plus * (self.variables[vid] ** b)
            elif b < 0:
                m_minus = m_minus * (self.variables[vid] ** (-b))
        try:
            new_var = (m_plus + m_minus).exact_div(self.variables[k])
        except InexactDivision as exc:
            raise ClusterError(
                "exchange relation left a remainder; this contradicts the "
                f"Laurent phenomenon at vertex {k!r}") from exc
        variables = dict(self.variables)
        variables[k] = new_var
        return Seed(mat.mutate(k), variables, self.names)

    def replay(self, path: Iterable[str]) -> "Seed":
        seed = self
        for k in path:
            seed = seed.mutate(k)
        return seed

    # -- views -------------------------------------------------------------------

    def variable_strings(self) -> dict[str, str]:
        return {v: str(poly) for v, poly in self.variables.items()}

    def cluster_key(self) -> tuple[str, ...]:
        """Canonical form of the cluster: sorted principal variable strings."""
        return tuple(sorted(str(self.variables[v]) for v in self.matrix.principal))

    def pretty(self, vid: str) -> str:
        """Numerator / denominator display form."""
        poly = self.variables[vid]
        denom_exps = {v: -poly.min_exponent(v) for v in poly.variables()
                      if poly.min_exponent(v) < 0}
        if not denom_exps:
            return str(poly)
        denom = LaurentPoly.monomial(denom_exps)
        numer = poly * denom
        denom_str = str(denom)
        if denom.num_terms() == 1 and len(denom_exps) > 1:
            denom_str = f"({denom_str})"
        return f"({numer})/{denom_str}"

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "names": self.names,
            "variables": {v: str(p) for v, p in self.variables.items()},
        }

    @staticmethod
    def from_dict(data: Mapping) -> "Seed":
        matrix = ExchangeMatrix.from_dict(data["matrix"])
        names = {str(k): str(v) for k, v in data["names"].items()}
        variables = {str(k): LaurentPoly.parse(v)
                     for k, v in data["variables"].items()}
        return Seed(matrix, variables, names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (self.matrix == other.matrix
                and self.variable_strings() == other.variable_strings())

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}={p}" for v, p in self.variable_strings().items())
        return f"Seed({inner})"


def principal_seed(principal_quiver: Quiver,
                   namer: Callable[[str, bool], str] = principal_namer) -> Seed:
    """Seed of the algebra with principal coefficients over a principal quiver.

    Adds one frozen copy i' per vertex and sets the frozen block of the
    exchange matrix to the identity.
    """
    if principal_quiver.frozen_ids():
        raise ClusterError("principal coefficients start from a quiver "
                           "without frozen vertices")
    ids = principal_quiver.vertex_ids()
    vertices = list(principal_quiver.vertices) + \
        [Vertex(frozen_id(v), True, None) for v in ids]
    base = ExchangeMatrix.from_quiver(principal_quiver)
    b = np.concatenate([base.b, np.eye(len(ids), dtype=np.int64)], axis=0)
    frozen = {v: False for v in ids} | {frozen_id(v): True for v in ids}
    matrix = ExchangeMatrix([*ids, *map(frozen_id, ids)], frozen, b)
    names = {v: namer(v, False) for v in ids} | \
        {frozen_id(v): namer(frozen_id(v), True) for v in ids}
    variables = {vid: LaurentPoly.variable(name) for vid, name in names.items()}
    return Seed(matrix, variables, names)


# -- cluster enumeration ---------------------------------------------------------


@dataclass
class ClusterCensus:
    """Closure of the seed set under mutation, up to a seed budget."""

    seeds: list[tuple[tuple[str, ...], Seed]]
    clusters: list[tuple[str, ...]]
    variables: dict[str, tuple[tuple[str, ...], str]]
    adjacency: list[tuple[int, int, str]]
    closed: bool

    def variable_count(self) -> int:
        return len(self.variables)

    def cluster_count(self) -> int:
        return len(self.clusters)


def enumerate_clusters(seed: Seed, max_seeds: int = 1000) -> ClusterCensus:
    """Breadth-first closure of mutation, deduplicated by canonical cluster.

    Two seeds count as equal when their principal variable multisets agree
    (frozen variables never change).  ``closed`` reports whether the
    exploration exhausted the mutation class within the budget.
    """
    if max_seeds < 1:
        raise ClusterError("max_seeds must be at least 1")
    start_key = seed.cluster_key()
    index: dict[tuple[str, ...], int] = {start_key: 0}
    records: list[tuple[tuple[str, ...], Seed]] = [((), seed)]
    edges: set[tuple[int, int, str]] = set()
    variables: dict[str, tuple[tuple[str, ...], str]] = {}
    for v in seed.matrix.principal:
        variables.setdefault(str(seed.variables[v]), ((), v))
    closed = True
    cursor = 0
    while cursor < len(records):
        path, current = records[cursor]
        for k in current.matrix.principal:
            child = current.mutate(k)
            key = child.cluster_key()
            j = index.get(key)
            if j is None:
                if len(records) >= max_seeds:
                    closed = False
                    continue
                j = len(records)
                index[key] = j
                records.append(((*path, k), child))
                for v in child.matrix.principal:
                    variables.setdefault(str(child.variables[v]),
                                         ((*path, k), v))
            edges.add((min(cursor, j), max(cursor, j), k))
        cursor += 1
    clusters = sorted({rec.cluster_key() for _p, rec in records})
    return ClusterCensus(records, clusters, variables, sorted(edges), closed)


# -- F-polynomials and g-vectors ---------------------------------------------------


def f_polynomial(variable: LaurentPoly, seed0: Seed) -> LaurentPoly:
    """Specialize the principal initial variables to 1.

    The result is a genuine polynomial in the frozen variables with constant
    term 1; anything else signals an internal inconsistency.
    """
    principal_names = [seed0.names[v] for v in seed0.matrix.principal]
    f = variable.specialize_ones(principal_names)
    for v in f.variables():
        if f.min_exponent(v) < 0:
            raise ClusterError(f"F-polynomial has a negative power of {v}")
    if f.constant_term() != 1:
        raise ClusterError("F-polynomial constant term is not 1")
    return f


def g_vector(variable: LaurentPoly, seed0: Seed) -> dict[str, int]:
    """Common degree under deg u_i = e_i, deg f_j = -sum_i b_ij e_i."""
    mat = seed0.matrix
    principal = mat.principal
    name_to_vertex = {seed0.names[v]: v for v in mat.ids}
    result: dict[str, int] | None = None
    for key, _coeff in variable.terms.items():
        g = {v: 0 for v in principal}
        for var_name, exp in key:
            vid = name_to_vertex.get(var_name)
            if vid is None:
                raise ClusterError(f"unknown variable {var_name!r}")
            if vid in g:
                g[vid] += exp
            else:
                # frozen vertex of the principal-coefficient seed: j' <-> j
                j = vid[:-1]
                for i in principal:
                    g[i] -= exp * mat.entry(i, j)
        if result is None:
            result = g
        elif result != g:
            raise ClusterError("variable is not homogeneous; g-vector undefined")
    if result is None:
        raise ClusterError("zero polynomial has no g-vector")
    return result


def reconstruct_variable(f_poly: LaurentPoly, g: Mapping[str, int],
                         target_seed: Seed,
                         f_names: Mapping[str, str]) -> LaurentPoly:
    """Rebuild the cluster variable of the target algebra from (F, g).

    ``f_names`` maps each principal vertex to the frozen-variable name used
    in ``f_poly``.  The formula substitutes the y-hat monomials of the target
    exchange matrix into F, divides by the tropical evaluation of F at the
    y monomials, and multiplies by the initial-cluster monomial x^g.
    """
    if not f_poly.is_subtraction_free():
        raise ClusterError("F-polynomial must be subtraction-free")
    if f_poly.constant_term() != 1:
        raise ClusterError("F-polynomial must have constant term 1")
    mat = target_seed.matrix
    y_exps: dict[str, dict[str, int]] = {}
    yhat: dict[str, LaurentPoly] = {}
    for j in mat.principal:
        exps = {}
        for fr in mat.ids:
            if not mat.frozen[fr]:
                continue
            b = mat.entry(fr, j)
            if b:
                exps[target_seed.names[fr]] = b
        y_exps[j] = exps
        full = dict(exps)
        for i in mat.principal:
            b = mat.entry(i, j)
            if b:
                full[target_seed.names[i]] = full.get(target_seed.names[i], 0) + b
        yhat[j] = LaurentPoly.monomial(full)
    substitution = {f_names[j]: yhat[j] for j in mat.principal}
    numerator = f_poly.substitute(substitution)
    tropical = tropical_eval(
        f_poly, {f_names[j]: TropicalMonomial(y_exps[j]) for j in mat.principal})
    g_monomial = LaurentPoly.monomial(
        {target_seed.names[i]: int(g.get(i, 0)) for i in mat.principal})
    return (numerator * g_monomial).exact_div(tropical.as_poly())
