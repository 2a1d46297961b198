import itertools

import numpy as np
import pytest

from clusterq.graphs import builtin_setting
from clusterq.grassmann import (BudgetExceeded, NonPolynomialCount,
                                count_subreps, counting_polynomial,
                                default_primes, euler_number,
                                gaussian_binomial, poincare_from_count,
                                CountingPolynomial)
from clusterq.quiver import Quiver, Vertex
from clusterq.replab import FpRep, generic_rep, random_rep

POINT = Quiver([Vertex("1")], [])


def test_gaussian_binomials():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(3, 0, 5) == 1
    assert gaussian_binomial(2, 3, 5) == 0


def test_single_vertex_counts_are_gaussian():
    m = FpRep(POINT, 2, {"1": 2}, [])
    assert count_subreps(m, {"1": 1}) == 3
    for n, k, p in [(3, 1, 2), (3, 2, 3), (4, 2, 3)]:
        m = FpRep(POINT, p, {"1": n}, [])
        assert count_subreps(m, {"1": k}) == gaussian_binomial(n, k, p)


def test_kronecker_generic_11_counts():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    rep = generic_rep(kr, {"1": 1, "2": 1}, 2, rng=5)
    got = {v: count_subreps(rep, {"1": v[0], "2": v[1]})
           for v in [(0, 0), (1, 0), (0, 1), (1, 1)]}
    # the source slot (vertex 2) cannot carry a line: it would have to map
    # into the zero space under two injective scalars
    assert got == {(0, 0): 1, (1, 0): 1, (0, 1): 0, (1, 1): 1}


def test_kronecker_two_delta_two_points():
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    for p in (3, 5, 7):
        rep = generic_rep(kr, {"1": 2, "2": 2}, p, rng=11)
        assert count_subreps(rep, {"1": 1, "2": 1}) == 2


def test_extreme_subdims_count_one():
    rng = np.random.default_rng(0)
    a3 = builtin_setting("a3", (["1", "3"], ["2"])).z_principal()
    for _ in range(5):
        d = {v: int(rng.integers(0, 3)) for v in ["1", "2", "3"]}
        m = random_rep(a3, d, 5, rng)
        assert count_subreps(m, {v: 0 for v in d}) == 1
        assert count_subreps(m, d) == 1


def test_count_rejects_oversized_target():
    m = FpRep(POINT, 3, {"1": 1}, [])
    with pytest.raises(ValueError):
        count_subreps(m, {"1": 2})


def test_budget_guard():
    m = FpRep(POINT, 101, {"1": 4}, [])
    # a lone vertex has no incoming arrows, so add one to force enumeration
    q = Quiver([Vertex("1"), Vertex("2")], [("1", "2")])
    m = random_rep(q, {"1": 4, "2": 4}, 101, 0)
    with pytest.raises(BudgetExceeded):
        count_subreps(m, {"1": 2, "2": 2}, budget=10)


def test_lines_in_plane_and_space():
    assert str(counting_polynomial(POINT, {"1": 2}, {"1": 1}, rng=0)) == "q + 1"
    assert str(counting_polynomial(POINT, {"1": 3}, {"1": 1}, rng=0)) == \
        "q^2 + q + 1"


def test_a3_full_sweep_polynomial_over_six_primes():
    s = builtin_setting("a3", (["1", "3"], ["2"]))
    quiver = s.z_principal()
    roots = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)]
    primes = (2, 3, 5, 7, 11, 13)
    for root in roots:
        d = dict(zip(["1", "2", "3"], root))
        for combo in itertools.product(*[range(x + 1) for x in root]):
            v = dict(zip(["1", "2", "3"], combo))
            c = counting_polynomial(quiver, d, v, primes, rng=1)
            assert all(x >= 0 for x in c.coeffs)


def test_polynomial_law_at_fresh_prime():
    c = counting_polynomial(POINT, {"1": 2}, {"1": 1}, rng=0)
    m = FpRep(POINT, 17, {"1": 2}, [])
    assert count_subreps(m, {"1": 1}) == c.evaluate(17)
    kr = builtin_setting("kronecker", (["1"], ["2"])).z_principal()
    c = counting_polynomial(kr, {"1": 2, "2": 2}, {"1": 1, "2": 1},
                            (3, 5, 7), rng=2)
    rep = generic_rep(kr, {"1": 2, "2": 2}, 11, rng=3)
    assert count_subreps(rep, {"1": 1, "2": 1}) == c.evaluate(11)


def test_poincare_and_euler():
    c = counting_polynomial(POINT, {"1": 2}, {"1": 1}, rng=0)
    p = poincare_from_count(c)
    assert p.coeffs == (1, 0, 1)  # 1 + t^2
    assert euler_number(c) == 2
    const = CountingPolynomial((2,), 0, ((3, 2), (5, 2)))
    assert poincare_from_count(const).coeffs == (2,)
    assert euler_number(const) == 2
    empty = CountingPolynomial((), 0, ((3, 0),))
    assert poincare_from_count(empty).coeffs == ()
    assert euler_number(empty) == 0


def test_poincare_rejects_negative():
    bad = CountingPolynomial((1, -1), 1, ((2, -1),))
    with pytest.raises(NonPolynomialCount):
        poincare_from_count(bad)


def test_counting_needs_enough_primes():
    with pytest.raises(ValueError):
        counting_polynomial(POINT, {"1": 3}, {"1": 1}, primes=(2, 3), rng=0)


def test_default_primes():
    assert default_primes(0) == (2, 3, 5)
    assert default_primes(2)[:3] == (2, 3, 5)
    assert len(default_primes(2)) == 5
