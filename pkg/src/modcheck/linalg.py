"""Exact linear algebra over prime fields.

Everything here works on immutable row-major matrices: tuples of tuples of
ints in ``range(p)``.  Module elements are row vectors and maps act on the
right (``v -> v @ A``), matching the right-module convention used by the
rest of the package.

The sizes involved are tiny (dimension <= 8, p a small prime), so the
routines favour exactness and canonicity over asymptotic speed.  The one
bulk operation, enumerating all points of a subspace, is vectorized with
numpy.
"""

from __future__ import annotations

import numpy as np

Mat = tuple[tuple[int, ...], ...]
Vec = tuple[int, ...]


def zeros(rows: int, cols: int) -> Mat:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_from_rows(rows) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def vec_add(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_scale(c: int, v: Vec, p: int) -> Vec:
    c %= p
    return tuple((c * a) % p for a in v)


def mat_add(A: Mat, B: Mat, p: int) -> Mat:
    return tuple(vec_add(ra, rb, p) for ra, rb in zip(A, B))


def mat_scale(c: int, A: Mat, p: int) -> Mat:
    return tuple(vec_scale(c, row, p) for row in A)


def mat_mul(A: Mat, B: Mat, p: int) -> Mat:
    """Product A @ B mod p.  A is (m x k), B is (k x n)."""
    if A and B and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch: {len(A[0])} vs {len(B)}")
    if not B:
        return tuple(() for _ in A)
    cols = list(zip(*B))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
        for row in A
    )


def vec_mat(v: Vec, A: Mat, p: int) -> Vec:
    return mat_mul((v,), A, p)[0]


def transpose(A: Mat) -> Mat:
    return tuple(zip(*A)) if A else ()


def rref(rows, p: int) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form over F_p.

    Returns the nonzero rows (a canonical basis of the row space) and the
    pivot columns.  Two generating sets of the same subspace always reduce
    to identical output, which is what makes submodule bases canonical.
    """
    work = [list(r) for r in rows if any(x % p for x in r)]
    for row in work:
        for j, x in enumerate(row):
            row[j] = x % p
    ncols = len(rows[0]) if rows else 0
    if work and len(work) * ncols >= 4096:
        # reduced echelon form is unique for a given row space, so the
        # vectorized route returns exactly what the scalar loop would
        return _rref_numpy(work, ncols, p)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(inv * x) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def _rref_numpy(work, ncols: int, p: int):
    A = np.array(work, dtype=np.int64)
    r = 0
    pivots = []
    nrows = A.shape[0]
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        mask = A[:, c] != 0
        mask[r] = False
        if mask.any():
            A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        pivots.append(c)
        r += 1
    return (
        tuple(tuple(int(x) for x in A[i]) for i in range(r)),
        tuple(pivots),
    )


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[0])


def reduce_against(v: Vec, basis: Mat, pivots, p: int) -> Vec:
    """Residual of v after elimination against an rref basis."""
    w = list(x % p for x in v)
    for row, c in zip(basis, pivots):
        if w[c]:
            f = w[c]
            w = [(x - f * y) % p for x, y in zip(w, row)]
    return tuple(w)


def in_span(v: Vec, basis: Mat, pivots, p: int) -> bool:
    return not any(reduce_against(v, basis, pivots, p))


def express(v: Vec, basis: Mat, pivots, p: int):
    """Coefficients c with c @ basis == v, or None if v is not in the span."""
    w = list(x % p for x in v)
    coeffs = []
    for row, c in zip(basis, pivots):
        f = w[c]
        coeffs.append(f)
        if f:
            w = [(x - f * y) % p for x, y in zip(w, row)]
    if any(w):
        return None
    return tuple(coeffs)


def left_kernel(A: Mat, p: int) -> Mat:
    """Canonical basis of {v : v @ A == 0}."""
    m = len(A)
    if m == 0:
        return ()
    aug = tuple(tuple(A[i]) + tuple(1 if j == i else 0 for j in range(m)) for i in range(m))
    red, _ = rref(aug, p)
    ncols = len(A[0])
    ker = [row[ncols:] for row in red if not any(row[:ncols])]
    # rows of the augmented rref with zero left part are already independent,
    # but re-reduce for the canonical form.
    return rref(ker, p)[0] if ker else ()


def intersect_rows(A: Mat, B: Mat, p: int) -> Mat:
    """Canonical basis of rowspace(A) ∩ rowspace(B).

    A vector in both spaces is x @ A = -y @ B for some (x, y) in the left
    kernel of the stacked matrix, so the kernel rows hand over a spanning
    set of the intersection directly.
    """
    if not A or not B:
        return ()
    stacked = tuple(A) + tuple(B)
    ker = left_kernel(stacked, p)
    na = len(A)
    spanning = [
        tuple(sum(row[i] * A[i][j] for i in range(na)) % p for j in range(len(A[0])))
        for row in ker
    ]
    return rref(spanning, p)[0] if spanning else ()


def solve_row(A: Mat, b: Vec, p: int):
    """One solution x of x @ A == b, or None.

    The full solution set is x + left_kernel(A).
    """
    m = len(A)
    if m == 0:
        return () if not any(x % p for x in b) else None
    aug = tuple(tuple(A[i]) + tuple(1 if j == i else 0 for j in range(m)) for i in range(m))
    red, _ = rref(aug, p)
    ncols = len(A[0])
    left = tuple(row[:ncols] for row in red)
    piv = []
    seen = 0
    for row in left:
        nz = next((j for j, x in enumerate(row) if x), None)
        piv.append(nz)
        seen += 1
    w = list(x % p for x in b)
    coeffs = [0] * len(red)
    for i, (row, c) in enumerate(zip(left, piv)):
        if c is None:
            continue
        f = w[c]
        coeffs[i] = f
        if f:
            w = [(x - f * y) % p for x, y in zip(w, row)]
    if any(w):
        return None
    x = [0] * m
    for f, row in zip(coeffs, red):
        if f:
            for j in range(m):
                x[j] = (x[j] + f * row[ncols + j]) % p
    return tuple(x)


def inverse(A: Mat, p: int) -> Mat | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    if n == 0:
        return ()
    aug = tuple(tuple(A[i]) + tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    red, pivots = rref(aug, p)
    if len(red) < n or pivots[:n] != tuple(range(n)):
        return None
    return tuple(row[n:] for row in red)


def is_invertible(A: Mat, p: int) -> bool:
    return len(A) == len(A[0] if A else ()) and rank(A, p) == len(A)


# -- point enumeration -------------------------------------------------------

def vector_index(v: Vec, p: int) -> int:
    """Index of a vector in the 0 .. p^n - 1 enumeration (little-endian)."""
    idx = 0
    for x in reversed(v):
        idx = idx * p + (x % p)
    return idx


def index_vector(idx: int, n: int, p: int) -> Vec:
    out = []
    for _ in range(n):
        out.append(idx % p)
        idx //= p
    return tuple(out)


def span_point_bits(basis: Mat, n: int, p: int) -> int:
    """Bitset (python int) of the point indices of the span of `basis`.

    Bit i is set iff the vector with index i lies in the row space.  Used
    as the canonical identity of a subspace during lattice work: subset
    and intersection of subspaces become bit operations.
    """
    npoints = p ** n
    k = len(basis)
    if k == 0:
        return 1  # just the zero vector, index 0
    arr = np.array(basis, dtype=np.int64)
    coeffs = np.arange(p ** k, dtype=np.int64)
    digits = np.empty((p ** k, k), dtype=np.int64)
    for j in range(k):
        digits[:, j] = coeffs % p
        coeffs //= p
    pts = digits @ arr % p
    powers = p ** np.arange(n, dtype=np.int64)
    idx = pts @ powers
    mask = np.zeros(npoints, dtype=bool)
    mask[idx] = True
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")
