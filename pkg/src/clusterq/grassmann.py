"""Exact point counts of quiver Grassmannians over F_p, and their polynomials.

``count_subreps`` enumerates invariant subspace tuples directly.  Vertices
are processed sinks-first (reverse topological order): by the time a vertex
comes up, the subspaces at all its arrow targets are fixed, so its own
subspace is constrained to the intersection T of arrow preimages.  A source
then contributes a closed-form Gaussian-binomial factor without any
enumeration; only vertices with incoming arrows are enumerated.  On the
bipartite quivers used for characters the enumerated side has tiny
dimensions, which keeps the sweeps fast.

Counting polynomials are fitted by exact rational Lagrange interpolation
through counts at several primes (fresh certified-generic representation per
prime), verified on the left-over primes, and required to have integer
coefficients.  When the counts refuse to fit a polynomial of the ambient
degree bound, a diagnostic error carries the sample table; nothing is ever
force-fitted.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import fpmat
from .quiver import Quiver
from .replab import DimVector, FpRep, as_rng, child_rng, generic_rep

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 79, 83, 89, 97)


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, budget: int):
        super().__init__(f"enumeration estimate {estimate} exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget


class NonPolynomialCount(RuntimeError):
    """Counts across primes are inconsistent with a single integer polynomial."""

    def __init__(self, message: str, samples: Mapping[int, list[int]]):
        super().__init__(f"{message}: {dict(samples)}")
        self.samples = dict(samples)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n, exact."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def _rref_rows(t: int, k: int, p: int) -> Iterable[np.ndarray]:
    """All reduced row-echelon k x t matrices of rank k over F_p."""
    if k == 0:
        yield np.zeros((0, t), dtype=np.int64)
        return
    for pivots in itertools.combinations(range(t), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, t)
                if c not in pivots]
        base = np.zeros((k, t), dtype=np.int64)
        for r, c in enumerate(pivots):
            base[r, c] = 1
        if not free:
            yield base.copy()
            continue
        for values in itertools.product(range(p), repeat=len(free)):
            mat = base.copy()
            for (r, c), val in zip(free, values):
                mat[r, c] = val
            yield mat


def subspaces_of(basis: np.ndarray, k: int, p: int) -> Iterable[np.ndarray]:
    """All k-dimensional subspaces of the column span of ``basis``."""
    t = basis.shape[1]
    for rows in _rref_rows(t, k, p):
        yield fpmat.matmul(basis, rows.T % p, p)


def count_subreps(rep: FpRep, v: DimVector, budget: int = 4_000_000) -> int:
    """Exact number of subrepresentation tuples of dimension vector v."""
    q = rep.quiver
    p = rep.p
    dims = rep.dims
    want = {vid: int(v.get(vid, 0)) for vid in q.vertex_ids()}
    for vid, k in want.items():
        if k < 0 or k > dims[vid]:
            raise ValueError(f"target dimension {k} at {vid!r} outside "
                             f"[0, {dims[vid]}]")
    order = list(reversed(q.topological_order()))
    estimate = 1
    for vid in order:
        if q.in_arrows(vid):
            estimate *= gaussian_binomial(dims[vid], want[vid], p)
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)

    chosen: dict[str, np.ndarray] = {}
    arrow_list = q.arrow_list()

    def constrained_space(vid: str) -> np.ndarray:
        space = np.eye(dims[vid], dtype=np.int64)
        for k in q.out_arrows(vid):
            _s, t = arrow_list[k]
            pre = fpmat.preimage(rep.maps[k], chosen[t], p)
            space = fpmat.intersect(space, pre, p)
            if space.shape[1] < want[vid]:
                break
        return space

    def recurse(idx: int) -> int:
        if idx == len(order):
            return 1
        vid = order[idx]
        space = constrained_space(vid)
        if want[vid] > space.shape[1]:
            return 0
        if not q.in_arrows(vid):
            factor = gaussian_binomial(space.shape[1], want[vid], p)
            return factor * recurse(idx + 1) if factor else 0
        total = 0
        for x in subspaces_of(space, want[vid], p):
            chosen[vid] = x
            total += recurse(idx + 1)
        del chosen[vid]
        return total

    return recurse(0)


# -- interpolation --------------------------------------------------------------


def interpolate_integer_polynomial(points: Sequence[tuple[int, int]],
                                   degree_bound: int) -> list[int] | None:
    """Fit an integer polynomial of degree <= degree_bound through the first
    bound+1 points and verify it on the rest.  None when impossible."""
    if len(points) < degree_bound + 1:
        raise ValueError("not enough sample points for the degree bound")
    fit = points[: degree_bound + 1]
    coeffs = [Fraction(0)] * (degree_bound + 1)
    for i, (xi, yi) in enumerate(fit):
        li = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _yj) in enumerate(fit):
            if i == j:
                continue
            li = [Fraction(0)] + li  # multiply by x
            for k in range(len(li) - 1):
                li[k] -= Fraction(xj) * li[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(li)):
            coeffs[k] += scale * li[k]
    out: list[int] = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    for x, y in points:
        if _poly_eval(out, x) != y:
            return None
    return out


def _poly_eval(coeffs: Sequence[int], x: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


@dataclass(frozen=True)
class CountingPolynomial:
    """Integer polynomial in q reproducing Grassmannian counts at primes."""

    coeffs: tuple[int, ...]
    degree_bound: int
    samples: tuple[tuple[int, int], ...]

    def evaluate(self, x: int) -> int:
        return _poly_eval(self.coeffs, x)

    def euler(self) -> int:
        return self.evaluate(1)

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*q" if c != 1 else "q")
            else:
                parts.append(f"{c}*q^{k}" if c != 1 else f"q^{k}")
        return " + ".join(parts)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Polynomial in t with nonnegative coefficients; ``shift`` is the opt-in
    normalization exponent (P * t^-shift)."""

    coeffs: tuple[int, ...]
    shift: int = 0

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            e = k - self.shift
            if e == 0:
                parts.append(str(c))
            else:
                body = "t" if e == 1 else f"t^{e}"
                parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def poincare_from_count(c: CountingPolynomial,
                        shift: int = 0) -> PoincarePolynomial:
    """Betti reading q = t^2; requires nonnegative integer coefficients."""
    if any(x < 0 for x in c.coeffs):
        raise NonPolynomialCount(
            "negative interpolated coefficient; even-cohomology reading invalid",
            {x: [y] for x, y in c.samples})
    out: list[int] = []
    for k, coeff in enumerate(c.coeffs):
        out.extend([coeff, 0] if k < len(c.coeffs) - 1 else [coeff])
    return PoincarePolynomial(tuple(out), shift)


def euler_number(c: CountingPolynomial) -> int:
    return c.euler()


def degree_bound_for(dims: DimVector, v: DimVector) -> int:
    """Ambient product-of-Grassmannians dimension sum v_i (d_i - v_i)."""
    total = 0
    for vid, d in dims.items():
        k = int(v.get(vid, 0))
        total += k * (int(d) - k)
    return total


def default_primes(bound: int, extra: int = 2) -> tuple[int, ...]:
    need = bound + 1 + extra
    if need > len(PRIMES):
        raise ValueError(f"degree bound {bound} too large for the prime table")
    return PRIMES[:need]


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("CQ_THREADS", "1")))
    except ValueError:
        return 1


def count_table(quiver: Quiver, dims: DimVector,
                v_list: Sequence[Mapping[str, int]],
                primes: Sequence[int], rng=None,
                budget: int = 4_000_000) -> dict[tuple[int, ...], dict[int, int]]:
    """Counts for many subdimension vectors, one generic module per prime.

    Work items fan out over primes when CQ_THREADS > 1; the merged result is
    a pure function of (inputs, rng seed) either way.
    """
    gen = as_rng(rng)
    verts = quiver.vertex_ids()
    keys = [tuple(int(v.get(x, 0)) for x in verts) for v in v_list]
    table: dict[tuple[int, ...], dict[int, int]] = {k: {} for k in keys}
    seeds = {p: child_rng(gen, i) for i, p in enumerate(primes)}

    def work(p: int) -> dict[tuple[int, ...], int]:
        rep = generic_rep(quiver, dims, p, seeds[p])
        out = {}
        for key, v in zip(keys, v_list):
            out[key] = count_subreps(rep, v, budget)
        return out

    threads = min(_thread_count(), len(primes))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, primes))
    else:
        results = [work(p) for p in primes]
    for p, res in zip(primes, results):
        for key, count in res.items():
            table[key][p] = count
    return table


def counting_polynomial(quiver: Quiver, d: DimVector, v: DimVector,
                        primes: Sequence[int] | None = None, rng=None,
                        budget: int = 4_000_000,
                        retries: int = 2) -> CountingPolynomial:
    """Interpolated counting polynomial for Gr_v of a generic d-module."""
    gen = as_rng(rng)
    bound = degree_bound_for({x: d.get(x, 0) for x in quiver.vertex_ids()}, v)
    if primes is None:
        primes = default_primes(bound)
    if len(primes) <= bound:
        raise ValueError(f"need more than {bound} primes, got {len(primes)}")
    tallies: dict[int, list[int]] = {p: [] for p in primes}
    for attempt in range(retries + 1):
        table = count_table(quiver, d, [v], primes, child_rng(gen, attempt),
                            budget)
        points = sorted(next(iter(table.values())).items())
        for p, y in points:
            tallies[p].append(y)
        coeffs = interpolate_integer_polynomial(points, bound)
        if coeffs is not None:
            return CountingPolynomial(tuple(coeffs), bound, tuple(points))
    raise NonPolynomialCount(
        "counts do not fit an integer polynomial within the degree bound",
        tallies)
