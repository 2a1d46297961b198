"""Quiver representations over prime fields.

Genericity is Monte-Carlo: a "generic" value of hom/ext between dimension
vectors is the minimum over independent random draws (the true generic value
is attained on a dense open set, and dimensions are upper semicontinuous).
Decompositions use a randomized Krull-Schmidt: primary components of random
endomorphisms, recursively.

A subtlety worth remembering: over a small field a random representation of
the right total dimension can be a Galois-twisted form of the generic one
(two conjugate points instead of two rational points, say) and then its
subrepresentation counts are wrong.  ``generic_rep`` therefore assembles the
generic representative summand by summand from the canonical decomposition
and certifies it by hom/ext dimensions before returning it.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from typing import Mapping, Sequence

import numpy as np

from . import fpmat
from .graphs import Bipartite, frozen_id
from .quiver import Quiver

DimVector = Mapping[str, int]


class RepError(ValueError):
    pass


class CanonicalDecompositionError(RepError):
    def __init__(self, message: str, tallies: Mapping):
        super().__init__(f"{message}: {dict(tallies)}")
        self.tallies = dict(tallies)


class GenericityError(RepError):
    pass


def as_rng(rng: "np.random.Generator | int | None") -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def child_rng(rng: np.random.Generator, *tags: int) -> np.random.Generator:
    seed = [int(rng.integers(0, 2 ** 31))] + [int(t) % (2 ** 31) for t in tags]
    return np.random.default_rng(seed)


class FpRep:
    """A representation of a quiver over F_p: one matrix per arrow.

    ``maps[k]`` belongs to ``quiver.arrow_list()[k]`` and has shape
    (dim target, dim source).
    """

    __slots__ = ("quiver", "p", "dims", "maps")

    def __init__(self, quiver: Quiver, p: int, dims: DimVector,
                 maps: Sequence[np.ndarray]):
        if p < 2:
            raise RepError("p must be at least 2")
        self.quiver = quiver
        self.p = int(p)
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertex_ids()}
        if any(d < 0 for d in self.dims.values()):
            raise RepError("negative dimension")
        arrows = quiver.arrow_list()
        if len(maps) != len(arrows):
            raise RepError(f"{len(arrows)} arrows but {len(maps)} maps")
        fixed = []
        for (s, t), m in zip(arrows, maps):
            m = np.asarray(m, dtype=np.int64) % p
            if m.shape != (self.dims[t], self.dims[s]):
                raise RepError(f"map for {s}->{t} has shape {m.shape}, "
                               f"expected {(self.dims[t], self.dims[s])}")
            fixed.append(m)
        self.maps = tuple(fixed)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> dict[str, int]:
        return dict(self.dims)

    def map_for(self, index: int) -> np.ndarray:
        return self.maps[index]

    def to_dict(self) -> dict:
        return {"p": self.p, "dims": self.dims,
                "maps": {str(i): m.tolist() for i, m in enumerate(self.maps)}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(quiver: Quiver, data: Mapping) -> "FpRep":
        p = int(data["p"])
        dims = {str(k): int(v) for k, v in data["dims"].items()}
        n = len(quiver.arrow_list())
        maps = []
        for i in range(n):
            (s, t) = quiver.arrow_list()[i]
            raw = data["maps"].get(str(i))
            if raw is None:
                maps.append(np.zeros((dims.get(t, 0), dims.get(s, 0)),
                                     dtype=np.int64))
            else:
                maps.append(np.array(raw, dtype=np.int64))
        return FpRep(quiver, p, dims, maps)


def zero_rep(quiver: Quiver, p: int) -> FpRep:
    dims = {v: 0 for v in quiver.vertex_ids()}
    maps = [np.zeros((0, 0), dtype=np.int64) for _ in quiver.arrow_list()]
    return FpRep(quiver, p, dims, maps)


def random_rep(quiver: Quiver, d: DimVector, p: int,
               rng: "np.random.Generator | int | None" = None) -> FpRep:
    """Uniformly random matrices; deterministic for a fixed rng seed."""
    gen = as_rng(rng)
    dims = {v: int(d.get(v, 0)) for v in quiver.vertex_ids()}
    maps = [gen.integers(0, p, size=(dims[t], dims[s]), dtype=np.int64)
            for s, t in quiver.arrow_list()]
    return FpRep(quiver, p, dims, maps)


def direct_sum(a: FpRep, b: FpRep) -> FpRep:
    if a.quiver.key() != b.quiver.key() or a.p != b.p:
        raise RepError("direct sum needs matching quivers and primes")
    dims = {v: a.dims[v] + b.dims[v] for v in a.dims}
    maps = []
    for i, (s, t) in enumerate(a.quiver.arrow_list()):
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        m[: a.dims[t], : a.dims[s]] = a.maps[i]
        m[a.dims[t]:, a.dims[s]:] = b.maps[i]
        maps.append(m)
    return FpRep(a.quiver, a.p, dims, maps)


# -- Euler form, Hom and Ext ---------------------------------------------------


def euler_form(quiver: Quiver, d: DimVector, e: DimVector) -> int:
    """chi(d, e) = sum_i d_i e_i - sum_{arrows s->t} d_s e_t."""
    total = sum(int(d.get(v, 0)) * int(e.get(v, 0)) for v in quiver.vertex_ids())
    for s, t in quiver.arrow_list():
        total -= int(d.get(s, 0)) * int(e.get(t, 0))
    return total


def _hom_system(m: FpRep, n: FpRep) -> tuple[np.ndarray, dict[str, int], int]:
    """Matrix of (phi_i) -> (phi_t M_h - N_h phi_s)_h, with unknown offsets."""
    if m.quiver.key() != n.quiver.key() or m.p != n.p:
        raise RepError("hom needs matching quivers and primes")
    p = m.p
    offsets: dict[str, int] = {}
    pos = 0
    for v in m.quiver.vertex_ids():
        offsets[v] = pos
        pos += n.dims[v] * m.dims[v]
    ncols = pos
    nrows = sum(n.dims[t] * m.dims[s] for s, t in m.quiver.arrow_list())
    sys = np.zeros((nrows, ncols), dtype=np.int64)
    row = 0
    for k, (s, t) in enumerate(m.quiver.arrow_list()):
        mh = m.maps[k]
        nh = n.maps[k]
        nt, ms_, mt, ns = n.dims[t], m.dims[s], m.dims[t], n.dims[s]
        for r in range(nt):
            for c in range(ms_):
                # phi_t[r, c'] * mh[c', c]
                for c2 in range(mt):
                    sys[row, offsets[t] + r * mt + c2] += mh[c2, c]
                # - nh[r, r'] * phi_s[r', c]
                for r2 in range(ns):
                    sys[row, offsets[s] + r2 * ms_ + c] -= nh[r, r2]
                row += 1
    return sys % p, offsets, ncols


def hom_dim(m: FpRep, n: FpRep) -> int:
    sys, _offsets, ncols = _hom_system(m, n)
    if ncols == 0:
        return 0
    if sys.shape[0] == 0:
        return ncols
    return ncols - fpmat.rank(sys, m.p)


def ext1_dim(m: FpRep, n: FpRep) -> int:
    """dim Ext^1 for an acyclic quiver: hom - euler form (always >= 0)."""
    value = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if value < 0:
        raise RepError("negative ext; quiver not acyclic?")
    return value


def ext1_dim_cokernel(m: FpRep, n: FpRep) -> int:
    """dim Ext^1 computed independently, as the cokernel of the hom system."""
    sys, _offsets, ncols = _hom_system(m, n)
    if sys.shape[0] == 0:
        return 0
    if ncols == 0:
        return sys.shape[0]
    return sys.shape[0] - fpmat.rank(sys, m.p)


def end_basis(m: FpRep) -> list[dict[str, np.ndarray]]:
    """Basis of End(m) as per-vertex matrix tuples."""
    sys, offsets, ncols = _hom_system(m, m)
    if ncols == 0:
        return []
    ns = fpmat.nullspace(sys, m.p) if sys.shape[0] else np.eye(ncols, dtype=np.int64)
    out = []
    for k in range(ns.shape[1]):
        vec = ns[:, k]
        mats = {}
        for v in m.quiver.vertex_ids():
            dv = m.dims[v]
            mats[v] = vec[offsets[v]: offsets[v] + dv * dv].reshape(dv, dv)
        out.append(mats)
    return out


# -- generic values over F_p ---------------------------------------------------


def generic_hom(quiver: Quiver, d: DimVector, e: DimVector, p: int = 101,
                samples: int = 7, rng=None) -> int:
    gen = as_rng(rng)
    return min(hom_dim(random_rep(quiver, d, p, child_rng(gen, i, 0)),
                       random_rep(quiver, e, p, child_rng(gen, i, 1)))
               for i in range(max(1, samples)))


def generic_ext(quiver: Quiver, d: DimVector, e: DimVector, p: int = 101,
                samples: int = 7, rng=None) -> int:
    """Minimum of ext^1 over independent random pairs."""
    if samples < 1:
        raise RepError("need at least one sample")
    gen = as_rng(rng)
    return min(ext1_dim(random_rep(quiver, d, p, child_rng(gen, i, 0)),
                        random_rep(quiver, e, p, child_rng(gen, i, 1)))
               for i in range(samples))


def generic_self_ext(quiver: Quiver, d: DimVector, p: int = 101,
                     samples: int = 7, rng=None) -> int:
    gen = as_rng(rng)
    vals = []
    for i in range(max(1, samples)):
        m = random_rep(quiver, d, p, child_rng(gen, i))
        vals.append(ext1_dim(m, m))
    return min(vals)


def is_schur_root(quiver: Quiver, d: DimVector, p: int = 101,
                  samples: int = 7, rng=None) -> bool:
    """True when a general representation has only scalar endomorphisms."""
    if sum(int(x) for x in d.values()) == 0:
        return False
    gen = as_rng(rng)
    best = min(hom_dim(*(random_rep(quiver, d, p, child_rng(gen, i)),) * 2)
               for i in range(max(1, samples)))
    return best == 1


def is_real_schur(quiver: Quiver, d: DimVector, p: int = 101,
                  samples: int = 7, rng=None) -> bool:
    return euler_form(quiver, d, d) == 1 and is_schur_root(quiver, d, p, samples, rng)


# -- randomized Krull-Schmidt ---------------------------------------------------


def _subrep(m: FpRep, bases: Mapping[str, np.ndarray]) -> FpRep:
    """Restrict m to invariant subspaces given by column bases."""
    dims = {v: bases[v].shape[1] for v in m.quiver.vertex_ids()}
    maps = []
    for k, (s, t) in enumerate(m.quiver.arrow_list()):
        rhs = fpmat.matmul(m.maps[k], bases[s], m.p)
        if dims[t] == 0:
            if rhs.size and rhs.any():
                raise RepError("subspaces not invariant")
            sol = np.zeros((0, dims[s]), dtype=np.int64)
        else:
            sol = fpmat.solve(bases[t], rhs, m.p)
            if sol is None:
                raise RepError("subspaces not invariant")
        maps.append(sol)
    return FpRep(m.quiver, m.p, dims, maps)


def decompose_indecomposables(m: FpRep, rng=None, tries: int = 12) -> list[FpRep]:
    """Split into indecomposable summands (randomized; odd p required).

    Strategy: a random endomorphism of a decomposable module almost surely
    has a characteristic polynomial with at least two coprime irreducible
    factors; its primary components are invariant subspaces.  An
    indecomposable module has local endomorphism ring, so every
    characteristic polynomial there is a prime power and no split exists.
    """
    if m.p == 2:
        raise RepError("decomposition needs an odd prime (default 101)")
    if m.total_dim() == 0:
        return []
    gen = as_rng(rng)
    basis = end_basis(m)
    if len(basis) == 1:
        return [m]
    verts = m.quiver.vertex_ids()
    for _ in range(tries):
        coeffs = gen.integers(0, m.p, size=len(basis))
        phi = {v: np.zeros((m.dims[v], m.dims[v]), dtype=np.int64) for v in verts}
        for c, mats in zip(coeffs, basis):
            for v in verts:
                phi[v] = (phi[v] + int(c) * mats[v]) % m.p
        # charpoly of the block-diagonal action is the product over vertices
        cp = [1]
        for v in verts:
            if m.dims[v]:
                cp = fpmat.pmul(cp, fpmat.charpoly_mod(phi[v], m.p), m.p)
        factors = fpmat.factor_poly(cp, m.p, gen)
        if len(factors) < 2:
            continue
        parts: list[FpRep] = []
        for f, mult in factors:
            bases = {}
            for v in verts:
                if m.dims[v] == 0:
                    bases[v] = np.zeros((0, 0), dtype=np.int64)
                    continue
                fm = fpmat.poly_eval_matrix(f, phi[v], m.p)
                power = np.eye(m.dims[v], dtype=np.int64)
                for _k in range(mult):
                    power = fpmat.matmul(power, fm, m.p)
                bases[v] = fpmat.nullspace(power, m.p)
            if sum(b.shape[1] for b in bases.values()) in (0, m.total_dim()):
                continue  # factor did not separate anything at this vertex split
            parts.append(_subrep(m, bases))
        if sum(x.total_dim() for x in parts) == m.total_dim() and len(parts) >= 2:
            out: list[FpRep] = []
            for part in parts:
                out.extend(decompose_indecomposables(part, child_rng(gen), tries))
            return out
    return [m]


def _dims_key(quiver: Quiver, d: DimVector) -> tuple:
    return tuple(int(d.get(v, 0)) for v in quiver.vertex_ids())


def canonical_decomposition(quiver: Quiver, d: DimVector, p: int = 101,
                            samples: int = 7, rng=None,
                            validate: bool = True) -> list[dict[str, int]]:
    """Summand dimension vectors of a general representation.

    Random draws over F_p are decomposed; candidate multisets are then
    validated against the characterization of the canonical decomposition
    (every factor a Schur root, pairwise generic ext^1 = 0 both ways), which
    filters out Galois-merged draws.
    """
    if samples < 1:
        raise RepError("need at least one sample")
    verts = quiver.vertex_ids()
    if sum(int(d.get(v, 0)) for v in verts) == 0:
        return []
    gen = as_rng(rng)
    tallies: Counter = Counter()
    for i in range(samples):
        m = random_rep(quiver, d, p, child_rng(gen, i))
        summands = decompose_indecomposables(m, child_rng(gen, i, 7))
        key = tuple(sorted(_dims_key(quiver, s.dims) for s in summands))
        tallies[key] += 1
    candidates = sorted(tallies, key=lambda k: (-tallies[k], -len(k)))
    for key in candidates:
        factors = [dict(zip(verts, vec)) for vec in key]
        if not validate:
            return factors
        ok = all(is_schur_root(quiver, f, p, rng=child_rng(gen, 101, j))
                 for j, f in enumerate(factors))
        if ok:
            for j, k in itertools.combinations(range(len(factors)), 2):
                if generic_ext(quiver, factors[j], factors[k], p,
                               rng=child_rng(gen, 202, j, k)) != 0:
                    ok = False
                    break
                if generic_ext(quiver, factors[k], factors[j], p,
                               rng=child_rng(gen, 203, j, k)) != 0:
                    ok = False
                    break
        if ok:
            return factors
    raise CanonicalDecompositionError(
        "no sampled decomposition passed the Schur/ext validation",
        {k: v for k, v in tallies.items()})


# -- certified generic representatives -----------------------------------------

_GENERIC_CACHE: dict[tuple, tuple[list[dict[str, int]], int]] = {}


def _generic_profile(quiver: Quiver, d: DimVector, p_ref: int,
                     rng) -> tuple[list[dict[str, int]], int]:
    """Canonical factors of d plus the generic value of dim End(d).

    Each factor is a Schur root, so its own endomorphisms contribute 1;
    cross terms are generic hom dimensions between independent summands.
    """
    key = (quiver.key(), _dims_key(quiver, d), p_ref)
    if key in _GENERIC_CACHE:
        return _GENERIC_CACHE[key]
    gen = as_rng(rng)
    factors = canonical_decomposition(quiver, d, p_ref, rng=child_rng(gen, 1))
    total = len(factors)
    for j, k in itertools.permutations(range(len(factors)), 2):
        total += generic_hom(quiver, factors[j], factors[k], p_ref,
                             rng=child_rng(gen, 3, j, k))
    _GENERIC_CACHE[key] = (factors, total)
    return factors, total


def generic_rep(quiver: Quiver, d: DimVector, p: int, rng=None,
                p_ref: int = 101, retries: int = 80) -> FpRep:
    """A representative over F_p with the generic decomposition behaviour.

    Built as a direct sum of random representatives of the canonical
    factors, accepted only when dim End matches the generic profile (which
    forces the factors generic and pairwise in general position).
    """
    gen = as_rng(rng)
    verts = quiver.vertex_ids()
    if sum(int(d.get(v, 0)) for v in verts) == 0:
        return zero_rep(quiver, p)
    factors, target_end = _generic_profile(quiver, d, p_ref, child_rng(gen, 11))
    for attempt in range(retries):
        total = zero_rep(quiver, p)
        ok = True
        for j, f in enumerate(factors):
            m = None
            for sub in range(20):
                cand = random_rep(quiver, f, p, child_rng(gen, attempt, j, sub))
                if hom_dim(cand, cand) == 1:  # canonical factors are Schur
                    m = cand
                    break
            if m is None:
                ok = False
                break
            total = direct_sum(total, m)
        if not ok:
            continue
        if hom_dim(total, total) == target_end:
            return total
    raise GenericityError(
        f"could not certify a generic representative of {dict(d)} over F_{p}")


# -- BGP reflection functors -----------------------------------------------------


def _reversed_quiver_at(q: Quiver, i: str) -> Quiver:
    arrows = [(t, s) if s == i or t == i else (s, t) for s, t in q.arrow_list()]
    return Quiver(q.vertices, arrows)


def reflect(m: FpRep, i: str, direction: str | None = None) -> FpRep:
    """BGP reflection at a sink (kernel construction) or source (cokernel).

    The vertex dimension becomes (sum of adjacent dims) - dim_i plus the
    kernel/cokernel defect; all arrows at i are reversed.
    """
    q = m.quiver
    if i not in q.vertex_ids():
        raise RepError(f"unknown vertex {i!r}")
    in_idx = q.in_arrows(i)
    out_idx = q.out_arrows(i)
    if direction is None:
        if not out_idx:
            direction = "+"
        elif not in_idx:
            direction = "-"
        else:
            raise RepError(f"vertex {i!r} is neither sink nor source")
    p = m.p
    new_quiver = _reversed_quiver_at(q, i)
    pairs: list[tuple[tuple[str, str], np.ndarray]] = []
    if direction == "+":
        if out_idx:
            raise RepError(f"vertex {i!r} is not a sink")
        blocks = [(k, q.arrow_list()[k][0]) for k in in_idx]
        widths = [m.dims[s] for _k, s in blocks]
        if blocks:
            xi = np.concatenate([m.maps[k] for k, _s in blocks], axis=1) \
                if sum(widths) else np.zeros((m.dims[i], 0), dtype=np.int64)
        else:
            xi = np.zeros((m.dims[i], 0), dtype=np.int64)
        kernel = fpmat.nullspace(xi, p) if xi.shape[1] else \
            np.zeros((0, 0), dtype=np.int64)
        new_dim = kernel.shape[1]
        offset = 0
        for (k, s), w in zip(blocks, widths):
            block = kernel[offset: offset + w, :]
            pairs.append(((i, s), block))
            offset += w
        for k, (s, t) in enumerate(q.arrow_list()):
            if k not in in_idx:
                pairs.append(((s, t), m.maps[k]))
    elif direction == "-":
        if in_idx:
            raise RepError(f"vertex {i!r} is not a source")
        blocks = [(k, q.arrow_list()[k][1]) for k in out_idx]
        heights = [m.dims[t] for _k, t in blocks]
        total = sum(heights)
        if blocks and total:
            eta = np.concatenate([m.maps[k] for k, _t in blocks], axis=0)
        else:
            eta = np.zeros((total, m.dims[i]), dtype=np.int64)
        image = fpmat.column_space(eta, p)
        r = image.shape[1]
        new_dim = total - r
        if total == 0:
            proj = np.zeros((0, 0), dtype=np.int64)
        else:
            # complete the image to a basis; quotient coords = the added part
            cur = image
            for j in range(total):
                if cur.shape[1] == total:
                    break
                e = np.zeros((total, 1), dtype=np.int64)
                e[j, 0] = 1
                cand = np.concatenate([cur, e], axis=1)
                if fpmat.rank(cand, p) > cur.shape[1]:
                    cur = cand
            inv = fpmat.solve(cur, np.eye(total, dtype=np.int64), p)
            assert inv is not None
            proj = inv[r:, :]
        offset = 0
        for (k, t), h in zip(blocks, heights):
            block = proj[:, offset: offset + h]
            pairs.append(((t, i), block))
            offset += h
        for k, (s, t) in enumerate(q.arrow_list()):
            if k not in out_idx:
                pairs.append(((s, t), m.maps[k]))
    else:
        raise RepError("direction must be '+' or '-'")
    dims = dict(m.dims)
    dims[i] = new_dim
    pairs.sort(key=lambda it: it[0])
    return FpRep(new_quiver, p, dims, [mat for _pair, mat in pairs])


def dualize(m: FpRep) -> FpRep:
    """Reverse all arrows and transpose all matrices (standard-basis duality)."""
    arrows = [(t, s) for s, t in m.quiver.arrow_list()]
    new_q = Quiver(m.quiver.vertices, arrows)
    order = sorted(range(len(arrows)), key=lambda k: arrows[k])
    maps = [m.maps[k].T for k in order]
    return FpRep(new_q, m.p, m.dims, maps)


# -- graded dimensions, sigma and phi -------------------------------------------


class GradedDim:
    """Nonnegative dimensions on (vertex, n) slots, n the power of q."""

    __slots__ = ("slots",)

    def __init__(self, slots: Mapping[tuple[str, int], int] | None = None):
        self.slots: dict[tuple[str, int], int] = {}
        for (v, n), d in (slots or {}).items():
            d = int(d)
            if d < 0:
                raise RepError("negative graded dimension")
            if d:
                self.slots[(str(v), int(n))] = d

    def get(self, v: str, n: int) -> int:
        return self.slots.get((v, n), 0)

    def support(self) -> list[tuple[str, int]]:
        return sorted(self.slots)

    def total(self) -> int:
        return sum(self.slots.values())

    def is_zero(self) -> bool:
        return not self.slots

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedDim):
            return NotImplemented
        return self.slots == other.slots

    def __hash__(self) -> int:
        return hash(frozenset(self.slots.items()))

    def __add__(self, other: "GradedDim") -> "GradedDim":
        out = dict(self.slots)
        for k, v in other.slots.items():
            out[k] = out.get(k, 0) + v
        return GradedDim(out)

    def scale(self, c: int) -> "GradedDim":
        return GradedDim({k: c * v for k, v in self.slots.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}:{n}->{d}" for (v, n), d in sorted(self.slots.items()))
        return f"GradedDim({inner})"

    def to_dict(self) -> dict[str, int]:
        return {f"{v}:{n}": d for (v, n), d in sorted(self.slots.items())}

    @staticmethod
    def from_dict(data: Mapping[str, int]) -> "GradedDim":
        slots = {}
        for key, d in data.items():
            v, _, n = key.rpartition(":")
            slots[(v, int(n))] = int(d)
        return GradedDim(slots)

    # (*_1) structure relative to a bipartite setting ------------------------

    @staticmethod
    def from_w_slots(setting: Bipartite, pairs: Mapping[str, tuple[int, int]]) -> "GradedDim":
        """Build W from {vertex: (w_i, w_i')} in the two-window convention."""
        slots = {}
        for v, (w, wp) in pairs.items():
            xi = setting.xi(v)
            slots[(v, 3 * xi)] = int(w)
            slots[(v, 2 - xi)] = int(wp)
        return GradedDim(slots)

    @staticmethod
    def from_v_slots(setting: Bipartite, v_dims: Mapping[str, int]) -> "GradedDim":
        return GradedDim({(v, setting.xi(v) + 1): d for v, d in v_dims.items()})

    def w(self, setting: Bipartite, v: str) -> int:
        return self.get(v, 3 * setting.xi(v))

    def w_prime(self, setting: Bipartite, v: str) -> int:
        return self.get(v, 2 - setting.xi(v))

    def v_slot(self, setting: Bipartite, v: str) -> int:
        return self.get(v, setting.xi(v) + 1)

    def check_star1(self, setting: Bipartite) -> None:
        """W may only occupy n in {xi_i, xi_i + 2}."""
        for (v, n) in self.slots:
            xi = setting.xi(v)
            if n not in (xi, xi + 2):
                raise RepError(f"slot {v}:{n} violates the one-window condition")

    def check_v_window(self, setting: Bipartite) -> None:
        for (v, n) in self.slots:
            if n != setting.xi(v) + 1:
                raise RepError(f"V slot {v}:{n} outside the mid window")


def kr_weight(setting: Bipartite, i: str, mult: int = 1) -> GradedDim:
    """W with W_i = W_i' = mult: the Kirillov-Reshetikhin weight at i."""
    return GradedDim.from_w_slots(setting, {i: (mult, mult)})


def simple_w(setting: Bipartite, i: str) -> GradedDim:
    """W = S_i (one dimension on the principal slot of i)."""
    return GradedDim.from_w_slots(setting, {i: (1, 0)})


def simple_w_frozen(setting: Bipartite, i: str) -> GradedDim:
    """W = S_{i'} (one dimension on the frozen slot of i)."""
    return GradedDim.from_w_slots(setting, {i: (0, 1)})


def w_to_decorated_dims(setting: Bipartite, w: GradedDim) -> dict[str, int]:
    """Dimension vector of W on the decorated quiver (i and i' vertices)."""
    dims = {}
    for v in setting.vertices():
        dims[v] = w.w(setting, v)
        dims[frozen_id(v)] = w.w_prime(setting, v)
    return dims


def sigma_dim(setting: Bipartite, w: GradedDim) -> dict[str, int]:
    """Dimensions of the reflected module on the principally decorated quiver.

    Only the I1 principal slots change:
        new_i = max(w_i' + sum_j a_ij w_j - w_i, 0).
    """
    w.check_star1(setting)
    dims: dict[str, int] = {}
    for v in setting.vertices():
        if v in setting.i0:
            dims[v] = w.w(setting, v)
        else:
            neighbor_sum = sum(setting.a(v, u) * w.w(setting, u)
                               for u in set(setting.graph.neighbors(v)))
            dims[v] = max(w.w_prime(setting, v) + neighbor_sum - w.w(setting, v), 0)
        dims[frozen_id(v)] = w.w_prime(setting, v)
    return dims


def sigma_rep(setting: Bipartite, m: FpRep) -> FpRep:
    """Dualize, then reflect at every I1 vertex (pairwise non-adjacent).

    Input lives on the decorated quiver, output on the principally decorated
    quiver.  The output dimensions equal ``sigma_dim`` exactly when the
    combined map into each I1 slot is surjective, which holds generically.
    """
    if m.quiver.key() != setting.decorated().key():
        raise RepError("sigma expects a representation of the decorated quiver")
    out = dualize(m)
    for i in sorted(setting.i1):
        out = reflect(out, i, "+")
    target = setting.principal_decorated()
    if out.quiver.arrow_list() != target.arrow_list():
        raise RepError("reflection did not produce the principally decorated quiver")
    return FpRep(target, out.p, out.dims, out.maps)


def phi_dim(setting: Bipartite, w: GradedDim) -> tuple[GradedDim, dict[str, int]]:
    """Strip matched (i, i') pairs: returns the reduced weight and the
    multiplicity min(w_i, w_i') removed at each vertex."""
    w.check_star1(setting)
    pairs = {}
    mults = {}
    for v in setting.vertices():
        wi, wpi = w.w(setting, v), w.w_prime(setting, v)
        pairs[v] = (max(wi - wpi, 0), max(wpi - wi, 0))
        mults[v] = min(wi, wpi)
    return GradedDim.from_w_slots(setting, pairs), mults
