import json

from clusterq.graphs import Bipartite, Graph, builtin_setting
from clusterq.laurent import LaurentPoly as L
from clusterq.verify import (verify_common_cluster, verify_hl_correspondence,
                             verify_odd_vanishing, verify_t_system)

A2 = builtin_setting("a2", (["1"], ["2"]))
A3 = builtin_setting("a3", (["1", "3"], ["2"]))


def test_t_system_small_graphs():
    for name in ("a2", "a3", "d4"):
        report = verify_t_system(builtin_setting(name))
        assert report.passed(), report.format_table()


def test_t_system_edgeless_graph():
    # empty neighbor product: f_i = x_i x_i' - 1
    g = Graph.make(["1", "2"], [])
    report = verify_t_system(Bipartite(g, (["1"], ["2"])))
    assert report.passed()


def test_t_system_negative_control():
    corrupted = {"f:1": L.variable("Y[1,0]") * L.variable("Y[1,2]") + 7}
    report = verify_t_system(A2, chi_override=corrupted)
    assert not report.passed()
    failing = [c for c in report.cases if c.status == "fail"]
    assert failing and "lhs" in failing[0].details  # witness present


def test_hl_a2_three_variables():
    report = verify_hl_correspondence(A2, seed=1)
    assert report.passed(), report.format_table()
    variable_cases = [c for c in report.cases if c.name.startswith("variable")]
    assert len(variable_cases) == 3  # roots alpha1, alpha2, alpha1+alpha2


def test_hl_a3_six_variables():
    report = verify_hl_correspondence(A3, seed=1)
    assert report.passed(), report.format_table()
    variable_cases = [c for c in report.cases if c.name.startswith("variable")]
    assert len(variable_cases) == 6


def test_hl_a4_and_d5():
    # beyond the acceptance graphs: 10 and 20 positive roots respectively
    for name, expected in (("a4", 10), ("d5", 20)):
        report = verify_hl_correspondence(builtin_setting(name),
                                          max_seeds=1200, seed=1)
        assert report.passed(), report.format_table()
        cases = [c for c in report.cases if c.name.startswith("variable")]
        assert len(cases) == expected


def test_common_cluster_a2_exhaustive():
    report = verify_common_cluster(A2, seed=2)
    assert report.passed(), report.format_table()
    # the pair {x_i-variable, x_i'-variable} is never in a common cluster
    negative = [c for c in report.cases
                if c.details.get("common_cluster") is False]
    assert negative, "expected at least one non-common pair"


def test_common_cluster_a3():
    report = verify_common_cluster(A3, pair_budget=36, seed=2)
    assert report.passed(), report.format_table()


def test_common_cluster_d4_sampled():
    report = verify_common_cluster(builtin_setting("d4"), pair_budget=30,
                                   seed=4)
    assert report.passed(), report.format_table()


def test_hl_reports_byte_stable():
    r1 = verify_hl_correspondence(A3, seed=7).to_dict()
    r2 = verify_hl_correspondence(A3, seed=7).to_dict()
    r1.pop("elapsed"), r2.pop("elapsed")
    assert r1 == r2


def test_odd_vanishing_a3_all_roots():
    report = verify_odd_vanishing(A3, dim_budget=1,
                                  primes=(2, 3, 5, 7, 11, 13), seed=3)
    assert report.passed(), report.format_table()
    assert sum(c.status == "pass" for c in report.cases) == 7


def test_odd_vanishing_kronecker_excludes_imaginary():
    kr = builtin_setting("kronecker", (["1"], ["2"]))
    report = verify_odd_vanishing(kr, dim_budget=3, seed=3)
    assert report.passed(), report.format_table()
    skipped = {c.name for c in report.cases if c.status == "info"}
    assert {"d=1,1", "d=2,2", "d=3,3"} <= skipped  # delta multiples
    passed = {c.name for c in report.cases if c.status == "pass"}
    assert {"d=1,2", "d=2,3", "d=2,1", "d=3,2"} <= passed  # real roots


def test_tropical_evaluation_of_f_polynomials():
    # at the y monomials of the z-based seed, F evaluates tropically to
    # prod_{i in I0} f_i^{-w_i}
    from clusterq.cluster import enumerate_clusters, f_polynomial, principal_seed
    from clusterq.graphs import frozen_id
    from clusterq.laurent import TropicalMonomial, tropical_eval
    from clusterq.quiver import ExchangeMatrix
    from clusterq.verify import _z_reflection

    zp = A3.z_principal()
    ps = principal_seed(zp)
    census = enumerate_clusters(ps, 300)
    z_seed_matrix = ExchangeMatrix.from_quiver(A3.z_quiver())
    f_names = {i: ps.names[frozen_id(i)] for i in A3.vertices()}
    name_to_vertex = {v: k for k, v in f_names.items()}
    y_assign = {}
    for j in z_seed_matrix.principal:
        exps = {}
        for fr in z_seed_matrix.ids:
            if z_seed_matrix.frozen[fr]:
                b = z_seed_matrix.entry(fr, j)
                if b:
                    exps[f"f{fr[:-1]}"] = b
        y_assign[f_names[j]] = TropicalMonomial(exps)
    seeds_by_path = {path: s for path, s in census.seeds}
    checked = 0
    for var_str, (path, vertex) in census.variables.items():
        poly = seeds_by_path[path].variables[vertex]
        f = f_polynomial(poly, ps)
        top = f.divisible_max_term()
        if top is None:
            continue
        sigma_w = {i: 0 for i in A3.vertices()}
        for fname, e in top.items():
            sigma_w[name_to_vertex[fname]] = e
        w = _z_reflection(A3, sigma_w)
        if any(x < 0 for x in w.values()):
            continue
        trop = tropical_eval(f, y_assign)
        expected = TropicalMonomial({f"f{i}": -w[i] for i in A3.i0})
        assert trop == expected, (var_str, trop, expected)
        checked += 1
    assert checked >= 4  # the four sink-rooted modules of A3


def test_count_table_deterministic_under_threads(monkeypatch):
    from clusterq.grassmann import count_table

    quiver = A3.z_principal()
    d = {"1": 1, "2": 1, "3": 1}
    v_list = [{"1": a, "2": b, "3": c}
              for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    monkeypatch.setenv("CQ_THREADS", "1")
    base = count_table(quiver, d, v_list, (2, 3, 5), rng=9)
    monkeypatch.setenv("CQ_THREADS", "3")
    threaded = count_table(quiver, d, v_list, (2, 3, 5), rng=9)
    assert base == threaded


def test_reports_deterministic_and_json():
    r1 = verify_t_system(A2, seed=5)
    r2 = verify_t_system(A2, seed=5)
    d1, d2 = r1.to_dict(), r2.to_dict()
    d1.pop("elapsed"), d2.pop("elapsed")
    assert d1 == d2
    parsed = json.loads(r1.to_json())
    assert parsed["suite"] == "t-system" and parsed["passed"]
