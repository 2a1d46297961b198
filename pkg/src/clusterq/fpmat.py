"""Dense linear algebra over prime fields F_p, on numpy int64 arrays.

Matrices act on column vectors; a subspace is a matrix whose columns form a
basis.  Entries always live in [0, p).  p stays small (default 101), so
int64 products never overflow.

Also contains characteristic polynomials (exact integer Faddeev-LeVerrier,
then reduced mod p) and univariate factorization over F_p (square-free split,
distinct-degree, Cantor-Zassenhaus equal-degree), which back the randomized
Krull-Schmidt decomposition in ``replab``.
"""

from __future__ import annotations

import numpy as np


def modinv(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for rr in range(r, rows):
            if a[rr, c] % p:
                pivot = rr
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * modinv(a[r, c], p)) % p
        for rr in range(rows):
            if rr != r and a[rr, c]:
                a[rr] = (a[rr] - a[rr, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a % p, pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : mat x = 0}."""
    rows, cols = mat.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, fc]) % p
    return basis


def column_space(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (column-echelon) of the column span."""
    if mat.size == 0:
        return np.zeros((mat.shape[0], 0), dtype=np.int64)
    r, pivots = rref(mat.T % p, p)
    return (r[: len(pivots)].T) % p


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution X of A X = B, or None when inconsistent."""
    rows, cols = a.shape
    b = b.reshape(rows, -1) % p
    aug = np.concatenate([a % p, b], axis=1)
    r, pivots = rref(aug, p)
    if any(c >= cols for c in pivots):
        return None
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, cols:]
    return x % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def intersect(u: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Basis of col(u) & col(v)."""
    if u.shape[1] == 0 or v.shape[1] == 0:
        return np.zeros((u.shape[0], 0), dtype=np.int64)
    stacked = np.concatenate([u, (-v) % p], axis=1)
    ns = nullspace(stacked, p)
    coords = ns[: u.shape[1], :]
    return column_space(matmul(u, coords, p), p)


def preimage(m: np.ndarray, u: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : m x in col(u)}."""
    src = m.shape[1]
    if u.shape[1] == 0:
        return nullspace(m, p)
    stacked = np.concatenate([m % p, (-u) % p], axis=1)
    ns = nullspace(stacked, p)
    return column_space(ns[:src, :], p)


def same_space(u: np.ndarray, v: np.ndarray, p: int) -> bool:
    cu = column_space(u, p)
    cv = column_space(v, p)
    return cu.shape == cv.shape and np.array_equal(cu, cv)


# -- characteristic polynomials ----------------------------------------------


def charpoly_mod(mat: np.ndarray, p: int) -> list[int]:
    """Coefficients (ascending, monic) of det(xI - mat) over F_p.

    Computed exactly over the integers by Faddeev-LeVerrier, then reduced;
    the intermediate divisions are exact, so the result is correct for any p.
    """
    n = mat.shape[0]
    if n == 0:
        return [1]
    a = [[int(x) for x in row] for row in np.asarray(mat).tolist()]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    c = 1
    for k in range(1, n + 1):
        am = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
        m = [[am[i][j] + (c if i == j else 0) for j in range(n)]
             for i in range(n)]
    return [x % p for x in coeffs]


# -- univariate polynomial arithmetic over F_p ---------------------------------
# Polynomials are lists of ints (ascending powers) with entries in [0, p).


def ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def pmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return ptrim(out)


def pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = ptrim([x % p for x in f])
    g = ptrim([x % p for x in g])
    if not g:
        raise ZeroDivisionError
    inv = modinv(g[-1], p)
    f = list(f)
    while len(f) >= len(g):
        c = (f[-1] * inv) % p
        shift = len(f) - len(g)
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = ptrim(f)
    return f


def pdivmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = ptrim([x % p for x in f])
    g = ptrim([x % p for x in g])
    inv = modinv(g[-1], p)
    q = [0] * max(0, len(f) - len(g) + 1)
    f = list(f)
    while len(f) >= len(g):
        c = (f[-1] * inv) % p
        shift = len(f) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = ptrim(f)
    return ptrim(q), f


def pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = ptrim(f), ptrim(g)
    while g:
        f, g = g, pmod(f, g, p)
    if f:
        inv = modinv(f[-1], p)
        f = [(x * inv) % p for x in f]
    return f


def pderiv(f: list[int], p: int) -> list[int]:
    return ptrim([(i * f[i]) % p for i in range(1, len(f))])


def ppow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        base = pmod(pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Yield (squarefree factor, multiplicity) pairs, Yun-style with the
    char-p fixup f = g(x^p) => p-th powers."""
    out: list[tuple[list[int], int]] = []

    def recurse(f: list[int], mult: int):
        f = ptrim(f)
        if len(f) <= 1:
            return
        d = pderiv(f, p)
        if not d:
            # f = g(x^p); over the prime field coefficients are p-th powers
            g = [f[i] for i in range(0, len(f), p)]
            recurse(g, mult * p)
            return
        w = pgcd(f, d, p)
        sf, _ = pdivmod(f, w, p)
        # sf = product of distinct irreducible factors of f
        i = 1
        while len(sf) > 1:
            y = pgcd(sf, w, p)
            fi, _ = pdivmod(sf, y, p)
            if len(fi) > 1:
                out.append((fi, mult * i))
            sf = y
            w, _ = pdivmod(w, y, p)
            i += 1
        if len(w) > 1:
            recurse(w, mult)

    recurse(f, 1)
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a squarefree monic f into (product-of-irreducibles, degree) parts."""
    out = []
    x = [0, 1]
    h = list(x)
    d = 0
    rest = list(f)
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = ppow_mod(h, p, rest, p)
        g = pgcd(ptrim([(a - b) % p for a, b in
                        zip(h + [0] * len(x), x + [0] * len(h))]), rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest, _ = pdivmod(rest, g, p)
            h = pmod(h, rest, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree(f: list[int], d: int, p: int, rng) -> list[list[int]]:
    """Cantor-Zassenhaus split of a squarefree product of degree-d irreducibles.

    Needs p odd; the decomposition routines keep p >= 3.
    """
    n = len(f) - 1
    if n == d:
        return [f]
    if p == 2:
        raise ValueError("equal-degree splitting requires an odd prime")
    while True:
        a = [int(rng.integers(0, p)) for _ in range(n)]
        a = ptrim(a)
        if len(a) <= 1:
            continue
        g = pgcd(a, f, p)
        if len(g) > 1:
            part = g
        else:
            b = ppow_mod(a, (p ** d - 1) // 2, f, p)
            b = ptrim([(c - (1 if i == 0 else 0)) % p for i, c in
                       enumerate(b + [0])])
            part = pgcd(b, f, p)
        if 1 < len(part) < len(f):
            rest, _ = pdivmod(f, part, p)
            return _equal_degree(part, d, p, rng) + _equal_degree(rest, d, p, rng)


def factor_poly(f: list[int], p: int, rng) -> list[tuple[list[int], int]]:
    """Full factorization over F_p into monic irreducibles with multiplicity."""
    f = ptrim([x % p for x in f])
    if len(f) <= 1:
        return []
    inv = modinv(f[-1], p)
    f = [(x * inv) % p for x in f]
    out: list[tuple[list[int], int]] = []
    for sf, mult in _squarefree_parts(f, p):
        for prod, d in _distinct_degree(sf, p):
            for irr in _equal_degree(prod, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def poly_eval_matrix(f: list[int], mat: np.ndarray, p: int) -> np.ndarray:
    """f(mat) over F_p, Horner."""
    n = mat.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in reversed(f):
        out = (out @ mat) % p
        out = (out + c * np.eye(n, dtype=np.int64)) % p
    return out
