import numpy as np
import pytest

from clusterq.graphs import builtin_setting
from clusterq.quiver import Quiver, Vertex
from clusterq.replab import (CanonicalDecompositionError, FpRep, GradedDim,
                             RepError, canonical_decomposition,
                             decompose_indecomposables, direct_sum, dualize,
                             end_basis, euler_form, ext1_dim,
                             ext1_dim_cokernel, generic_ext, generic_rep,
                             generic_self_ext, hom_dim, is_real_schur,
                             is_schur_root, kr_weight, phi_dim, random_rep,
                             reflect, sigma_dim, sigma_rep, simple_w,
                             simple_w_frozen, w_to_decorated_dims, zero_rep)

A2 = Quiver([Vertex("1"), Vertex("2")], [("1", "2")])


def a2_simple(i, p=5):
    dims = {"1": 1 if i == "1" else 0, "2": 1 if i == "2" else 0}
    return FpRep(A2, p, dims, [np.zeros((dims["2"], dims["1"]))])


def test_random_rep_zero_and_determinism():
    z = random_rep(A2, {}, 101, 0)
    assert z.total_dim() == 0
    a = random_rep(A2, {"1": 2, "2": 2}, 101, 42)
    b = random_rep(A2, {"1": 2, "2": 2}, 101, 42)
    assert all(np.array_equal(x, y) for x, y in zip(a.maps, b.maps))


def test_random_kronecker_scalars_generically_nonzero():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    hits = 0
    for seed in range(40):
        rep = random_rep(kr, {"1": 1, "2": 1}, 101, seed)
        if all(m[0, 0] for m in rep.maps):
            hits += 1
    assert hits > 30


def test_euler_form_examples():
    assert euler_form(A2, {"1": 1}, {"2": 1}) == -1
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    delta = {"1": 1, "2": 1}
    assert euler_form(kr, delta, delta) == 0
    rng = np.random.default_rng(1)
    for _ in range(20):
        d1 = {v: int(rng.integers(0, 4)) for v in ["1", "2"]}
        d2 = {v: int(rng.integers(0, 4)) for v in ["1", "2"]}
        d3 = {v: int(rng.integers(0, 4)) for v in ["1", "2"]}
        lhs = euler_form(A2, {v: d1[v] + d2[v] for v in d1}, d3)
        assert lhs == euler_form(A2, d1, d3) + euler_form(A2, d2, d3)


def test_hom_ext_on_a2_simples():
    s1, s2 = a2_simple("1"), a2_simple("2")
    assert hom_dim(s1, s2) == 0 and ext1_dim(s1, s2) == 1
    assert hom_dim(s2, s1) == 0 and ext1_dim(s2, s1) == 0
    assert hom_dim(s1, s1) == 1


def test_identity_endomorphism():
    rng = np.random.default_rng(2)
    m = random_rep(A2, {"1": 2, "2": 1}, 101, rng)
    assert hom_dim(m, m) >= 1
    assert len(end_basis(m)) == hom_dim(m, m)


def test_generic_ext_kronecker_independent_pairs():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    delta = {"1": 1, "2": 1}
    assert generic_ext(kr, delta, delta, p=101, samples=20, rng=0) == 0
    assert generic_ext(A2, {"1": 1}, {"2": 1}, rng=0) == 1
    assert generic_ext(A2, {"1": 1, "2": 1}, {}, rng=0) == 0


def test_decompose_generic_21():
    rng = np.random.default_rng(0)
    m = random_rep(A2, {"1": 2, "2": 1}, 101, rng)
    dims = sorted(tuple(sorted(p.dims.items()))
                  for p in decompose_indecomposables(m, rng))
    assert dims == [(("1", 1), ("2", 0)), (("1", 1), ("2", 1))]


def test_decompose_indecomposable_and_zero():
    ind = FpRep(A2, 101, {"1": 1, "2": 1}, [np.array([[1]])])
    assert [p.dims for p in decompose_indecomposables(ind, 3)] == [ind.dims]
    assert decompose_indecomposables(zero_rep(A2, 101), 3) == []


def test_decompose_deterministic_across_rngs():
    m = random_rep(A2, {"1": 3, "2": 2}, 101, 9)
    reference = None
    for seed in range(5):
        dims = sorted(tuple(sorted(p.dims.items()))
                      for p in decompose_indecomposables(m, seed))
        if reference is None:
            reference = dims
        assert dims == reference


def test_decompose_requires_odd_prime():
    m = random_rep(A2, {"1": 1, "2": 1}, 2, 0)
    with pytest.raises(RepError):
        decompose_indecomposables(m, 0)


def test_canonical_decomposition_examples():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    cd = canonical_decomposition(kr, {"1": 2, "2": 2}, samples=9, rng=3)
    assert sorted(tuple(sorted(f.items())) for f in cd) == \
        [(("1", 1), ("2", 1)), (("1", 1), ("2", 1))]
    assert canonical_decomposition(A2, {"1": 1, "2": 1}, rng=1) == \
        [{"1": 1, "2": 1}]
    cd = canonical_decomposition(A2, {"1": 2, "2": 1}, rng=1)
    assert sorted(tuple(sorted(f.items())) for f in cd) == \
        [(("1", 1), ("2", 0)), (("1", 1), ("2", 1))]
    assert canonical_decomposition(A2, {}, rng=1) == []


def test_schur_tests():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    delta = {"1": 1, "2": 1}
    assert is_schur_root(kr, delta, rng=0)
    assert not is_real_schur(kr, delta, rng=0)
    assert is_real_schur(A2, {"1": 1, "2": 1}, rng=0)
    assert not is_schur_root(A2, {"1": 2, "2": 0}, rng=0)  # End contains 2x2
    assert not is_schur_root(A2, {}, rng=0)


def test_reflect_simple_at_sink_dies():
    s2 = a2_simple("2", p=101)
    out = reflect(s2, "2", "+")
    assert out.dims == {"1": 0, "2": 0}


def test_reflect_a2_11_at_sink():
    ind = FpRep(A2, 101, {"1": 1, "2": 1}, [np.array([[1]])])
    out = reflect(ind, "2")
    assert out.dims == {"1": 1, "2": 0}
    assert out.quiver.arrows == (("2", "1"),)


def test_reflect_round_trip_off_simple():
    # Phi^- Phi^+ is the identity on modules without the simple at the sink
    rng = np.random.default_rng(4)
    for _ in range(10):
        m = random_rep(A2, {"1": 2, "2": 1}, 101, rng)
        back = reflect(reflect(m, "2", "+"), "2", "-")
        assert back.dims == m.dims
        assert back.quiver.arrows == m.quiver.arrows
        # isomorphic: an invertible hom exists; equal End dimension suffices
        # at this scale plus equal hom both ways
        assert hom_dim(m, back) == hom_dim(m, m)
        assert ext1_dim(m, back) == ext1_dim(m, m)


def test_reflect_rejects_middle_vertex():
    line = Quiver([Vertex("1"), Vertex("2"), Vertex("3")],
                  [("1", "2"), ("2", "3")])
    m = random_rep(line, {"1": 1, "2": 1, "3": 1}, 101, 0)
    with pytest.raises(RepError):
        reflect(m, "2")


def test_sigma_dim_examples():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    # KR weight at a source vertex: the reflected slot vanishes
    assert sigma_dim(s, kr_weight(s, "2"))["2"] == 0
    # direct max formula: W_i = 0, W_i' = 1, one I0 neighbor with weight 1
    w = GradedDim.from_w_slots(s, {"2": (0, 1), "1": (1, 0)})
    assert sigma_dim(s, w)["2"] == 2
    # I0 slots unchanged
    w = GradedDim.from_w_slots(s, {"1": (2, 1), "3": (1, 0)})
    sd = sigma_dim(s, w)
    assert sd["1"] == 2 and sd["3"] == 1 and sd["1'"] == 1


def test_sigma_rep_matches_sigma_dim_generically():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    rng = np.random.default_rng(8)
    for _ in range(10):
        pairs = {i: (int(rng.integers(0, 3)), int(rng.integers(0, 3)))
                 for i in ["1", "2", "3"]}
        w = GradedDim.from_w_slots(s, pairs)
        m = random_rep(s.decorated(), w_to_decorated_dims(s, w), 101, rng)
        out = sigma_rep(s, m)
        assert out.dims == sigma_dim(s, w)
        assert out.quiver.arrows == s.principal_decorated().arrows


def test_phi_examples():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    w = GradedDim.from_w_slots(s, {"1": (2, 1)})
    phi, mult = phi_dim(s, w)
    assert phi.w(s, "1") == 1 and phi.w_prime(s, "1") == 0 and mult["1"] == 1
    phi, mult = phi_dim(s, kr_weight(s, "2"))
    assert phi.is_zero() and mult["2"] == 1
    rng = np.random.default_rng(5)
    for _ in range(10):
        pairs = {i: (int(rng.integers(0, 4)), int(rng.integers(0, 4)))
                 for i in ["1", "2", "3"]}
        w = GradedDim.from_w_slots(s, pairs)
        phi, _ = phi_dim(s, w)
        again, _ = phi_dim(s, phi)
        assert again == phi  # idempotent


def test_graded_dim_star1_checked():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    bad = GradedDim({("1", 1): 1})  # slot 1 is not in {0, 2} for a sink
    with pytest.raises(RepError):
        bad.check_star1(s)


def test_graded_dim_json():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    w = GradedDim.from_w_slots(s, {"1": (1, 2), "2": (0, 1)})
    assert GradedDim.from_dict(w.to_dict()) == w
    assert w.to_dict() == {"1:0": 1, "1:2": 2, "2:1": 1}


def test_generic_rep_certified_split():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    for p in (2, 3, 5):
        rep = generic_rep(kr, {"1": 2, "2": 2}, p, rng=7)
        assert hom_dim(rep, rep) == 2  # two distinct rational points
    assert generic_self_ext(kr, {"1": 2, "2": 2}, rng=1) == 2


def test_rep_json_round_trip():
    m = random_rep(A2, {"1": 2, "2": 1}, 101, 3)
    back = FpRep.from_dict(A2, m.to_dict())
    assert back.dims == m.dims
    assert all(np.array_equal(a, b) for a, b in zip(back.maps, m.maps))


def test_direct_sum_and_dualize():
    m = random_rep(A2, {"1": 1, "2": 1}, 101, 1)
    s = direct_sum(m, m)
    assert s.dims == {"1": 2, "2": 2}
    d = dualize(m)
    assert d.quiver.arrows == (("2", "1"),)
    assert dualize(d).quiver.arrows == m.quiver.arrows
