import numpy as np
import pytest

from clusterq.graphs import (Bipartite, Graph, OddCycleError, builtin_graph,
                             builtin_setting, build_decorated, build_x_quiver,
                             build_z_quiver)
from clusterq.quiver import (ExchangeMatrix, Quiver, QuiverError, Vertex,
                             from_matrix, mutate_matrix, to_matrix)


def a2_quiver():
    return Quiver([Vertex("1"), Vertex("2")], [("1", "2")])


def test_b_sign_convention():
    m = to_matrix(a2_quiver())
    assert m.entry("2", "1") == 1
    assert m.entry("1", "2") == -1


def test_round_trip_on_a3_x_quiver():
    q = builtin_setting("a3", (["1", "3"], ["2"])).x_quiver()
    assert from_matrix(to_matrix(q)).arrows == q.arrows


def test_skew_violation_rejected():
    with pytest.raises(QuiverError):
        ExchangeMatrix(["1", "2"], {"1": False, "2": False},
                       np.array([[0, 1], [1, 0]]))


def test_mutation_sign_flip_a2():
    m = ExchangeMatrix(["1", "2"], {"1": False, "2": False},
                       np.array([[0, -1], [1, 0]]))
    assert m.mutate("1").b.tolist() == [[0, 1], [-1, 0]]


def test_mutation_composition_rule():
    # i -> k, k -> j, no arrows i -> j: after mu_k one new i -> j and the
    # two arrows through k reversed
    q = Quiver([Vertex("i"), Vertex("k"), Vertex("j")],
               [("i", "k"), ("k", "j")])
    out = from_matrix(to_matrix(q).mutate("k"))
    assert out.arrows == (("i", "j"), ("j", "k"), ("k", "i"))


def test_mutation_involution_random():
    rng = np.random.default_rng(0)
    for _ in range(50):
        b = rng.integers(-3, 4, size=(4, 4))
        b = b - b.T
        m = ExchangeMatrix(list("abcd"), {v: False for v in "abcd"}, b)
        k = str(rng.choice(list("abcd")))
        assert np.array_equal(m.mutate(k).mutate(k).b, m.b)


def test_mutation_at_frozen_rejected():
    q = builtin_setting("a3", (["1", "3"], ["2"])).x_quiver()
    with pytest.raises(QuiverError):
        to_matrix(q).mutate("1'")


def test_no_loops_or_two_cycles():
    with pytest.raises(QuiverError):
        Quiver([Vertex("1")], [("1", "1")])
    with pytest.raises(QuiverError):
        Quiver([Vertex("1"), Vertex("2")], [("1", "2"), ("2", "1")])
    with pytest.raises(QuiverError):
        Quiver([Vertex("1", frozen=True), Vertex("2", frozen=True)],
               [("1", "2")])


def test_decorated_a3_display():
    q = build_decorated(builtin_graph("a3"), (["1", "3"], ["2"]))
    assert set(q.arrows) == {("2", "1"), ("2", "3"), ("1'", "1"),
                             ("2", "2'"), ("3'", "3")}


def test_decorated_single_vertex():
    q = build_decorated(Graph.make(["i"], []), (["i"], []))
    assert q.arrows == (("i'", "i"),)


def test_triangle_rejected():
    triangle = Graph.make(["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")])
    with pytest.raises(OddCycleError):
        Bipartite(triangle)


def test_x_quiver_a3_display_and_reversed_orientation():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    x = s.x_quiver()
    assert set(x.arrows) == {("1", "2"), ("3", "2"), ("1'", "1"),
                             ("2", "2'"), ("3'", "3")}
    dec = s.decorated()
    # principal orientation is opposite to the decorated quiver
    assert ("2", "1") in dec.arrows and ("1", "2") in x.arrows


def test_x_quiver_a1():
    q = build_x_quiver(builtin_graph("a1"), (["1"], []))
    assert q.arrows == (("1'", "1"),)


def test_z_quiver_a3_display():
    z = build_z_quiver(builtin_graph("a3"), (["1", "3"], ["2"]))
    assert set(z.arrows) == {("2", "1"), ("2", "3"), ("1", "2'"), ("3", "2'"),
                             ("1'", "1"), ("2'", "2"), ("3'", "3")}


def test_z_quiver_edgeless():
    g = Graph.make(["1", "2"], [])
    z = build_z_quiver(g, (["1"], ["2"]))
    x = build_x_quiver(g, (["1"], ["2"]))
    assert set(x.arrows) == {("1'", "1"), ("2", "2'")}
    assert set(z.arrows) == {("1'", "1"), ("2'", "2")}


def test_z_quiver_matches_textual_rule_on_d4():
    s = builtin_setting("d4")
    z = s.z_quiver()
    expected = set()
    for u, w in s.graph.edges:  # principal arrows reversed: I1 -> I0
        src, tgt = (u, w) if u in s.i1 else (w, u)
        expected.add((src, tgt))
    for i in s.graph.vertices:
        if i in s.i1:
            expected.add((i + "'", i))  # frozen arrow reversed
        else:
            expected.add((i + "'", i))  # unchanged for sinks
    for u, w in s.graph.edges:  # new arrows i -> j' for i in I0 adjacent j in I1
        i, j = (u, w) if u in s.i0 else (w, u)
        expected.add((i, j + "'"))
    assert set(z.arrows) == expected


def test_quiver_json_round_trip():
    q = builtin_setting("a3", (["1", "3"], ["2"])).x_quiver()
    assert Quiver.from_json(q.to_json()).arrows == q.arrows
    m = to_matrix(q)
    m2 = ExchangeMatrix.from_json(m.to_json())
    assert np.array_equal(m.b, m2.b) and m.ids == m2.ids


def test_matrix_mutation_keeps_skew_and_simple():
    rng = np.random.default_rng(3)
    s = builtin_setting("d4")
    m = to_matrix(s.x_quiver())
    for _ in range(40):
        k = str(rng.choice(list(s.graph.vertices)))
        m = m.mutate(k)
        pb = m.principal_block()
        assert np.array_equal(pb, -pb.T)
        m.to_quiver()  # raises on loops/2-cycles
