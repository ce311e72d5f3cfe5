"""Hom-space computation and elementary operations on module maps.

hom_space solves the commuting-matrix equations A_i H = H B_i exactly,
returning a basis of the solution space; enumerate_homs walks every
F_p-combination of that basis (capped, since the count is p^dim).
"""

from __future__ import annotations

from itertools import product

from .errors import ShapeMismatch, TooLarge
from .linalg import Mat, left_kernel, mat_mul, rank, rref
from .modules import ModuleHom, RepModule, Submodule, _as_rep, make_submodule


def hom_space(A, B) -> tuple:
    """Basis of Hom(A, B) as a tuple of matrices, canonically ordered.

    Unknown entries of H are flattened row-major; each algebra basis
    element contributes the linear conditions A_i H - H B_i = 0.  The
    basis is the reduced echelon basis of the solution space, so the
    result is deterministic for fixed inputs.
    """
    src = _as_rep(A)
    tgt = _as_rep(B)
    if src.algebra != tgt.algebra:
        raise ShapeMismatch("hom endpoints live over different algebras")
    p = src.field.p
    na, nb = src.dim, tgt.dim
    if na == 0 or nb == 0:
        return ()
    n_unknowns = na * nb
    n_equations = src.algebra.dim * na * nb
    # coeff[u][e]: coefficient of unknown u in equation e, so solutions
    # are the left kernel of this matrix.
    coeff = [[0] * n_equations for _ in range(n_unknowns)]
    e = 0
    for i in range(src.algebra.dim):
        Ai = src.actions[i]
        Bi = tgt.actions[i]
        for r in range(na):
            for c in range(nb):
                # (A_i H)[r][c] - (H B_i)[r][c] = 0
                for s in range(na):
                    if Ai[r][s]:
                        coeff[s * nb + c][e] = (coeff[s * nb + c][e] + Ai[r][s]) % p
                for t in range(nb):
                    if Bi[t][c]:
                        coeff[r * nb + t][e] = (coeff[r * nb + t][e] - Bi[t][c]) % p
                e += 1
    sols = left_kernel(tuple(tuple(row) for row in coeff), p)
    basis = []
    for flat in sols:
        basis.append(tuple(tuple(flat[r * nb + c] for c in range(nb)) for r in range(na)))
    return tuple(basis)


def hom_space_dim(A, B) -> int:
    return len(hom_space(A, B))


def enumerate_homs(A, B, cap: int = 1 << 20):
    """Yield every hom A -> B.  Raises TooLarge when p^dim exceeds cap."""
    src = _as_rep(A)
    tgt = _as_rep(B)
    p = src.field.p
    basis = hom_space(A, B)
    count = p ** len(basis)
    if count > cap:
        raise TooLarge("hom enumeration", count, cap)
    na, nb = src.dim, tgt.dim
    for coeffs in product(range(p), repeat=len(basis)):
        H = [[0] * nb for _ in range(na)]
        for c, Hb in zip(coeffs, basis):
            if c:
                for r in range(na):
                    for s in range(nb):
                        H[r][s] = (H[r][s] + c * Hb[r][s]) % p
        yield ModuleHom(A, B, tuple(tuple(row) for row in H))


def hom_from_coords(A, B, basis: tuple, coeffs) -> ModuleHom:
    """Assemble the hom with the given coordinates in a hom_space basis."""
    src = _as_rep(A)
    tgt = _as_rep(B)
    p = src.field.p
    H = [[0] * tgt.dim for _ in range(src.dim)]
    for c, Hb in zip(coeffs, basis):
        if c % p:
            for r in range(src.dim):
                for s in range(tgt.dim):
                    H[r][s] = (H[r][s] + c * Hb[r][s]) % p
    return ModuleHom(A, B, tuple(tuple(row) for row in H))


def kernel(h: ModuleHom) -> Submodule:
    """Kernel as a submodule of the source (in intrinsic coordinates)."""
    p = h.source_module.field.p
    null_rows = left_kernel(h.matrix, p)
    return make_submodule(h.source_module, null_rows)


def image(h: ModuleHom) -> Submodule:
    """Image as a submodule of the target (in intrinsic coordinates)."""
    return make_submodule(h.target_module, h.matrix)


def is_mono(h: ModuleHom) -> bool:
    return rank(h.matrix, h.source_module.field.p) == h.source_module.dim


def is_epi(h: ModuleHom) -> bool:
    return rank(h.matrix, h.source_module.field.p) == h.target_module.dim


def is_iso(h: ModuleHom) -> bool:
    return h.source_module.dim == h.target_module.dim and is_mono(h)


def compose(g: ModuleHom, f: ModuleHom) -> ModuleHom:
    """g after f.  Endpoints must match as values, not just dimensions."""
    if f.target != g.source:
        raise ShapeMismatch("cannot compose: inner endpoints differ")
    p = f.source_module.field.p
    return ModuleHom(f.source, g.target, mat_mul(f.matrix, g.matrix, p))


def restrict(h: ModuleHom, N: Submodule) -> ModuleHom:
    """Restriction to a submodule of the source."""
    if not isinstance(h.source, RepModule) or N.parent != h.source:
        raise ShapeMismatch("restriction domain is not a submodule of the source")
    rows = tuple(h.apply(b) for b in N.basis)
    return ModuleHom(N, h.target, rows)


def corestrict(h: ModuleHom, T: Submodule) -> ModuleHom:
    """Retarget onto a submodule of the target that contains the image."""
    if not isinstance(h.target, RepModule) or T.parent != h.target:
        raise ShapeMismatch("corestriction target is not a submodule of the target")
    p = h.source_module.field.p
    rows = []
    from .linalg import express

    piv = T.pivots
    for row in h.matrix:
        co = express(row, T.basis, piv, p)
        if co is None:
            raise ShapeMismatch("image is not contained in the corestriction target")
        rows.append(co)
    return ModuleHom(h.source, T, tuple(rows))


def invert(h: ModuleHom) -> ModuleHom:
    if not is_iso(h):
        raise ShapeMismatch("only isomorphisms invert")
    from .linalg import inverse

    p = h.source_module.field.p
    return ModuleHom(h.target, h.source, inverse(h.matrix, p))


def map_submodule(h: ModuleHom, rows: Mat) -> Submodule:
    """Image of the span of `rows` (source coordinates) under h."""
    p = h.source_module.field.p
    imgs = tuple(h.apply(r) for r in rows)
    return make_submodule(h.target_module, rref(imgs, p)[0] if imgs else ())
