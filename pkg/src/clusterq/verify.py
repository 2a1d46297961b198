"""Machine checks of the headline identities, with reproducible witnesses.

Suites:

* ``verify_t_system``       -- f_i = x_i x_i' - prod of neighbor x's, symbolically;
* ``verify_hl_correspondence`` -- every non-initial cluster variable of the
  principal-coefficient algebra over the source-mutated (z) seed matches a
  rigid module: its F-polynomial is the Euler generating function of the
  module's quiver Grassmannians, its g-vector is -sum w_i eps_i e_i, and the
  reconstructed variable maps onto the truncated character;
* ``verify_common_cluster`` -- two variables lie in a common cluster exactly
  when generic ext^1 vanishes both ways between the matched modules;
* ``verify_odd_vanishing``  -- counting polynomials of rigid modules exist and
  have nonnegative integer coefficients (even Betti numbers only).

Every suite is deterministic in its root seed, and failures carry the inputs
needed to replay them.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cluster import (ClusterError, Seed, enumerate_clusters, f_polynomial,
                      g_vector, principal_seed, reconstruct_variable)
from .graphs import Bipartite, frozen_id
from .grassmann import (NonPolynomialCount, count_table, default_primes,
                        degree_bound_for, interpolate_integer_polynomial)
from .laurent import LaurentPoly
from .qchar import char_f, char_z, truncated_character
from .replab import (GradedDim, as_rng, child_rng, generic_ext,
                     generic_self_ext, is_real_schur, simple_w_frozen)


@dataclass
class CaseResult:
    name: str
    status: str  # "pass" | "fail" | "info"
    details: dict = field(default_factory=dict)

    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class Report:
    suite: str
    seed: int
    cases: list[CaseResult]
    elapsed: float

    def passed(self) -> bool:
        return all(c.passed() for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed(),
            "elapsed": round(self.elapsed, 3),
            "cases": [{"name": c.name, "status": c.status, **c.details}
                      for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def format_table(self) -> str:
        width = max([len(c.name) for c in self.cases] + [4])
        lines = [f"suite: {self.suite}   (seed {self.seed}, "
                 f"{round(self.elapsed, 2)}s)"]
        for c in self.cases:
            mark = {"pass": "PASS", "fail": "FAIL", "info": "info"}[c.status]
            extra = ""
            if c.status == "fail" and c.details:
                extra = "   " + json.dumps(c.details, sort_keys=True)
            lines.append(f"  [{mark}] {c.name:<{width}}{extra}")
        lines.append(f"result: {'PASS' if self.passed() else 'FAIL'}")
        return "\n".join(lines)


# -- T-system ---------------------------------------------------------------------


def verify_t_system(setting: Bipartite, seed: int = 0,
                    chi_override: Mapping[str, LaurentPoly] | None = None) -> Report:
    """Check f_i = x_i x_i' - prod_j x_j^{a_ij} symbolically at every vertex.

    ``chi_override`` substitutes specific characters (used as a negative
    control in tests); keys are "x:i", "xp:i", "f:i".
    """
    t0 = time.time()
    gen = as_rng(seed)
    override = chi_override or {}
    cases = []
    for i in setting.vertices():
        chi_x = override.get(f"x:{i}") or truncated_character(
            setting, simple_w_frozen(setting, i), "one", rng=child_rng(gen, 1))
        chi_xp = override.get(f"xp:{i}") or truncated_character(
            setting, GradedDim.from_w_slots(setting, {i: (1, 0)}), "one",
            rng=child_rng(gen, 2))
        chi_fi = override.get(f"f:{i}") or truncated_character(
            setting, GradedDim.from_w_slots(setting, {i: (1, 1)}), "one",
            rng=child_rng(gen, 3))
        prod = LaurentPoly.one()
        for j in sorted(set(setting.graph.neighbors(i))):
            chi_xj = override.get(f"x:{j}") or truncated_character(
                setting, simple_w_frozen(setting, j), "one", rng=child_rng(gen, 4))
            prod = prod * (chi_xj ** setting.a(i, j))
        ok = chi_x * chi_xp == chi_fi + prod
        details = {} if ok else {
            "lhs": str(chi_x * chi_xp), "rhs": str(chi_fi + prod)}
        cases.append(CaseResult(f"vertex {i}", "pass" if ok else "fail", details))
    return Report("t-system", seed, cases, time.time() - t0)


# -- the correspondence between cluster variables and rigid modules -----------------


def _z_reflection(setting: Bipartite, sigma_w: Mapping[str, int]) -> dict[str, int]:
    """Invert the source-side reflection on dimension vectors: I0 fixed,
    I1 entries replaced by (neighbor sum) - value."""
    out = {}
    for i in setting.vertices():
        if i in setting.i0:
            out[i] = int(sigma_w.get(i, 0))
        else:
            out[i] = sum(setting.a(i, j) * int(sigma_w.get(j, 0))
                         for j in set(setting.graph.neighbors(i))) \
                - int(sigma_w.get(i, 0))
    return out


def _euler_generating_function(setting: Bipartite, sigma_w: Mapping[str, int],
                               f_names: Mapping[str, str], rng,
                               primes: Sequence[int] | None = None) -> LaurentPoly:
    """sum_V e(Gr_V(M)) prod f_i^{v_i} for a generic module M of dim sigma_w
    over the shared principal quiver."""
    quiver = setting.z_principal()
    verts = setting.vertices()
    v_list = [dict(zip(verts, combo))
              for combo in itertools.product(*[range(int(sigma_w.get(i, 0)) + 1)
                                               for i in verts])]
    bound_max = max(degree_bound_for(sigma_w, v) for v in v_list)
    if primes is None:
        primes = default_primes(bound_max)
    table = count_table(quiver, sigma_w, v_list, primes, rng)
    total = LaurentPoly.zero()
    for v in v_list:
        key = tuple(v[x] for x in quiver.vertex_ids())
        points = sorted(table[key].items())
        coeffs = interpolate_integer_polynomial(
            points, degree_bound_for(sigma_w, v))
        if coeffs is None:
            raise NonPolynomialCount(f"non-polynomial count at V={v}",
                                     {p: [y] for p, y in points})
        euler = sum(coeffs)
        if euler:
            total = total + LaurentPoly.monomial(
                {f_names[i]: v[i] for i in verts if v[i]}, euler)
    return total


def _real_variable_character(setting: Bipartite, z_seed: Seed,
                             variable: LaurentPoly) -> LaurentPoly:
    """Push a Laurent polynomial in the z-seed variables through the
    character homomorphism (every image is a single monomial)."""
    images: dict[str, LaurentPoly] = {}
    for v in z_seed.matrix.ids:
        name = z_seed.names[v]
        if z_seed.matrix.frozen[v]:
            images[name] = char_f(setting, v[:-1])
        else:
            images[name] = char_z(setting, v)
    return variable.substitute(images)


class ModuleMatch:
    """The module side of one cluster variable: (F, g), the reflected
    dimensions read off the maximal F-monomial, and the matched weight."""

    __slots__ = ("f_poly", "g", "sigma_w", "kind", "w_graded", "vertex")

    def __init__(self, f_poly, g, sigma_w, kind, w_graded, vertex):
        self.f_poly = f_poly
        self.g = g
        self.sigma_w = sigma_w
        self.kind = kind  # "initial" | "regular" | "source-simple"
        self.w_graded = w_graded
        self.vertex = vertex  # set for the two special kinds

    def expected_g(self, setting: Bipartite) -> dict[str, int]:
        if self.kind == "regular":
            return {i: -self.w_graded.w(setting, i) * setting.eps(i)
                    for i in setting.vertices()}
        if self.kind == "source-simple":
            return {j: (-1 if j == self.vertex else 0)
                    for j in setting.vertices()}
        return {j: (1 if j == self.vertex else 0)
                for j in setting.vertices()}


def match_module(setting: Bipartite, pr_seed: Seed,
                 poly: LaurentPoly) -> ModuleMatch:
    """Classify a principal-coefficient variable and match its weight.

    Initial variables carry the frozen-slot simple (sink parity) or the
    principal-slot simple (source parity); otherwise the maximal F-monomial
    gives the reflected dimensions, whose source-side reflection is the
    weight -- except for the source simples, where that reflection goes
    negative and the weight sits on the frozen slot instead.
    """
    f_poly = f_polynomial(poly, pr_seed)
    g = g_vector(poly, pr_seed)
    f_names = {i: pr_seed.names[frozen_id(i)] for i in setting.vertices()}
    name_to_vertex = {f_names[i]: i for i in setting.vertices()}
    top = f_poly.divisible_max_term()
    if top is None:
        raise ClusterError("F-polynomial has no divisible maximal term")
    sigma_w = {i: 0 for i in setting.vertices()}
    for fname, e in top.items():
        sigma_w[name_to_vertex[fname]] = e
    w = _z_reflection(setting, sigma_w)
    initial_vertex = next((i for i in pr_seed.matrix.principal
                           if poly == pr_seed.variables[i]), None)
    if initial_vertex is not None:
        if initial_vertex in setting.i0:
            w_graded = simple_w_frozen(setting, initial_vertex)
        else:
            w_graded = GradedDim.from_w_slots(setting,
                                              {initial_vertex: (1, 0)})
        return ModuleMatch(f_poly, g, sigma_w, "initial", w_graded,
                           initial_vertex)
    if all(x >= 0 for x in w.values()):
        w_graded = GradedDim.from_w_slots(
            setting, {i: (w[i], 0) for i in setting.vertices()})
        return ModuleMatch(f_poly, g, sigma_w, "regular", w_graded, None)
    support = [i for i in setting.vertices()
               if sigma_w[i] and i in setting.i1]
    if len(support) != 1 or sum(sigma_w.values()) != 1:
        raise ClusterError(f"no module matches sigma dims {sigma_w}")
    return ModuleMatch(f_poly, g, sigma_w, "source-simple",
                       simple_w_frozen(setting, support[0]), support[0])


def variable_profile(setting: Bipartite, pr_seed: Seed, poly: LaurentPoly,
                     rng=None, with_character: bool = True) -> dict:
    """JSON-safe profile of one variable (used by the exploration service):
    F-polynomial, g-vector, matched weight, and its truncated character."""
    gen = as_rng(rng)
    match = match_module(setting, pr_seed, poly)
    profile = {
        "kind": match.kind,
        "f_polynomial": str(match.f_poly),
        "g_vector": match.g,
        "sigma_w": match.sigma_w,
        "w": match.w_graded.to_dict(),
    }
    if with_character:
        profile["character"] = str(truncated_character(
            setting, match.w_graded, "one", rng=child_rng(gen, 1)))
    return profile


def verify_hl_correspondence(setting: Bipartite, max_seeds: int = 600,
                             seed: int = 0) -> Report:
    """Match every non-initial cluster variable with its rigid module."""
    t0 = time.time()
    gen = as_rng(seed)
    zp = setting.z_principal()
    pr_seed = principal_seed(zp)
    census = enumerate_clusters(pr_seed, max_seeds)
    z_seed = Seed.initial(setting.z_quiver())
    f_names = {i: pr_seed.names[frozen_id(i)] for i in setting.vertices()}
    seeds_by_path = {path: s for path, s in census.seeds}
    initial = {str(pr_seed.variables[v]) for v in pr_seed.matrix.principal}

    cases = [CaseResult("census closed" if census.closed else "census truncated",
                        "pass" if census.closed else "info",
                        {"clusters": census.cluster_count(),
                         "variables": census.variable_count()})]
    for var_str in sorted(census.variables):
        if var_str in initial:
            continue
        path, vertex = census.variables[var_str]
        poly = seeds_by_path[path].variables[vertex]
        name = f"variable at {vertex} via {'.'.join(path) or 'initial'}"
        details: dict = {"variable": var_str}
        try:
            match = match_module(setting, pr_seed, poly)
            details["sigma_w"] = match.sigma_w
            details["w"] = match.w_graded.to_dict()
            schur_ok = is_real_schur(zp, match.sigma_w, rng=child_rng(gen, 21))
            f_expected = _euler_generating_function(
                setting, match.sigma_w, f_names, child_rng(gen, 22))
            f_ok = f_expected == match.f_poly
            g_expected = match.expected_g(setting)
            g_ok = match.g == g_expected
            x_alpha = reconstruct_variable(match.f_poly, match.g, z_seed,
                                           f_names)
            char_lhs = _real_variable_character(setting, z_seed, x_alpha)
            char_rhs = truncated_character(setting, match.w_graded, "one",
                                           rng=child_rng(gen, 23))
            char_ok = char_lhs == char_rhs
            ok = schur_ok and f_ok and g_ok and char_ok
            details.update({"schur_ok": schur_ok, "f_ok": f_ok,
                            "g_ok": g_ok, "char_ok": char_ok})
            if not f_ok:
                details["f"] = str(match.f_poly)
                details["f_expected"] = str(f_expected)
            if not g_ok:
                details["g"] = match.g
                details["g_expected"] = g_expected
            if not char_ok:
                details["char"] = str(char_lhs)
                details["char_expected"] = str(char_rhs)
            cases.append(CaseResult(name, "pass" if ok else "fail", details))
        except (ClusterError, NonPolynomialCount) as exc:
            details["error"] = str(exc)
            cases.append(CaseResult(name, "fail", details))
    return Report("hl-correspondence", seed, cases, time.time() - t0)


# -- common clusters vs ext vanishing ------------------------------------------------


def verify_common_cluster(setting: Bipartite, pair_budget: int = 60,
                          max_seeds: int = 600, seed: int = 0) -> Report:
    """(live in a common cluster) <=> (generic ext^1 vanishes both ways)."""
    t0 = time.time()
    gen = as_rng(seed)
    zp = setting.z_principal()
    pr_seed = principal_seed(zp)
    census = enumerate_clusters(pr_seed, max_seeds)
    z_seed = Seed.initial(setting.z_quiver())
    seeds_by_path = {path: s for path, s in census.seeds}

    # real-algebra clusters, and per-variable module data keyed by the real string
    real_census = enumerate_clusters(z_seed, max_seeds)
    clusters = [frozenset(c) for c in real_census.clusters]
    records: dict[str, ModuleMatch] = {}
    for var_str, (path, vertex) in census.variables.items():
        real_str = str(z_seed.replay(path).variables[vertex])
        records[real_str] = match_module(setting, pr_seed,
                                         seeds_by_path[path].variables[vertex])

    def module_side(a: ModuleMatch, b: ModuleMatch) -> bool:
        # an initial variable pairs with anything whose reflected module
        # vanishes at its vertex; otherwise generic ext must die both ways
        for first, second in ((a, b), (b, a)):
            if first.kind == "initial":
                return second.sigma_w.get(first.vertex, 0) == 0
        da, db = a.sigma_w, b.sigma_w
        return (generic_ext(zp, da, db, rng=child_rng(gen, 31)) == 0
                and generic_ext(zp, db, da, rng=child_rng(gen, 32)) == 0)

    strings = sorted(records)
    pairs = list(itertools.combinations(strings, 2))
    if len(pairs) > pair_budget:
        idx = sorted(gen.choice(len(pairs), size=pair_budget, replace=False))
        pairs = [pairs[i] for i in idx]
    cases = []
    for sa, sb in pairs:
        in_common = any(sa in c and sb in c for c in clusters)
        by_modules = module_side(records[sa], records[sb])
        ok = in_common == by_modules
        label = f"{records[sa].kind} / {records[sb].kind}"
        details = {"pair": [sa, sb], "common_cluster": in_common,
                   "ext_vanishes": by_modules}
        cases.append(CaseResult(f"{label}: {sa[:24]} | {sb[:24]}",
                                "pass" if ok else "fail",
                                details if not ok else
                                {"common_cluster": in_common}))
    # frozen variables sit in every cluster; record one informational case
    cases.append(CaseResult("frozen variables trivially common", "info", {}))
    return Report("common-cluster", seed, cases, time.time() - t0)


# -- odd cohomology vanishing ---------------------------------------------------------


def verify_odd_vanishing(setting: Bipartite, dim_budget: int = 1,
                         primes: Sequence[int] | None = None,
                         seed: int = 0) -> Report:
    """Counting polynomials of rigid dimension vectors must be integer with
    nonnegative coefficients (so only even Betti numbers occur)."""
    t0 = time.time()
    gen = as_rng(seed)
    quiver = setting.z_principal()
    verts = setting.vertices()
    cases = []
    for combo in itertools.product(*[range(dim_budget + 1) for _ in verts]):
        d = dict(zip(verts, combo))
        if sum(combo) == 0:
            continue
        name = "d=" + ",".join(str(d[v]) for v in verts)
        if generic_self_ext(quiver, d, rng=child_rng(gen, 41)) != 0:
            cases.append(CaseResult(name, "info", {"rigid": False}))
            continue
        v_list = [dict(zip(verts, vc))
                  for vc in itertools.product(*[range(d[v] + 1) for v in verts])]
        bound_max = max(degree_bound_for(d, v) for v in v_list)
        use = primes if primes is not None else default_primes(bound_max)
        bad: list[dict] = []
        table = count_table(quiver, d, v_list, use, child_rng(gen, 42))
        for v in v_list:
            key = tuple(v[x] for x in quiver.vertex_ids())
            points = sorted(table[key].items())
            coeffs = interpolate_integer_polynomial(points,
                                                    degree_bound_for(d, v))
            if coeffs is None:
                bad.append({"v": v, "reason": "non-polynomial",
                            "points": points})
            elif any(c < 0 for c in coeffs):
                bad.append({"v": v, "reason": "negative coefficient",
                            "coeffs": coeffs})
        cases.append(CaseResult(name, "pass" if not bad else "fail",
                                {"failures": bad} if bad else
                                {"subdims": len(v_list)}))
    return Report("odd-vanishing", seed, cases, time.time() - t0)


def run_all(setting: Bipartite, seed: int = 0,
            hl_max_seeds: int = 600) -> list[Report]:
    return [
        verify_t_system(setting, seed),
        verify_hl_correspondence(setting, hl_max_seeds, seed),
        verify_common_cluster(setting, seed=seed),
        verify_odd_vanishing(setting, seed=seed),
    ]
