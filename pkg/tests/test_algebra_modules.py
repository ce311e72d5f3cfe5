"""Algebra and module construction: validation and the basic operations."""

import pytest

from modcheck.algebra import algebra_from_structure_constants, shaped_matrix_algebra
from modcheck.corpus import truncated_poly_algebra, truncated_poly_module
from modcheck.errors import (
    AlgebraMismatch,
    NotAssociative,
    NotClosed,
    NoUnity,
    ShapeMismatch,
)
from modcheck.field import PrimeField
from modcheck.modules import (
    RepModule,
    direct_sum,
    make_submodule,
    quotient_module,
    row_module,
    submodule_generated,
    zero_submodule,
)

F2 = PrimeField(2)


def test_shaped_algebra_requires_multiplicative_closure():
    # (1,2)·(2,3) lands at (1,3): leaving that cell out breaks closure
    with pytest.raises(NotClosed):
        shaped_matrix_algebra(F2, ((1, 1, 0), (0, 1, 1), (0, 0, 1)))
    alg = shaped_matrix_algebra(F2, ((1, 1, 1), (0, 1, 1), (0, 0, 1)))
    assert alg.dim == 6


def test_shaped_algebra_requires_diagonal():
    with pytest.raises(NoUnity):
        shaped_matrix_algebra(F2, ((0, 1), (0, 1)))


def test_structure_constants_must_associate():
    # F4 = F2[x]/(x² + x + 1) is fine
    constants = [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 1]],
    ]
    algebra_from_structure_constants(F2, 2, constants, (1, 0))
    # basis (e, a, b) with a·a = b, a·b = e, b·a = b·b = 0:
    # (a·a)·a = 0 but a·(a·a) = e
    e, a, b, zero = (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)
    bad = [
        [e, a, b],
        [a, b, e],
        [b, zero, zero],
    ]
    with pytest.raises(NotAssociative):
        algebra_from_structure_constants(F2, 3, bad, (1, 0, 0))


def test_rep_module_checks_the_product_rule():
    alg = truncated_poly_algebra(2, 2)
    good = truncated_poly_module(alg, 2)
    assert good.dim == 2
    broken = (
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),  # x² should act as 0, this squares to identity
    )
    with pytest.raises(ShapeMismatch):
        RepModule(alg, 2, broken)


def test_row_module_width_must_match():
    alg = shaped_matrix_algebra(F2, ((1, 1), (0, 1)))
    with pytest.raises(ShapeMismatch):
        row_module(alg, 3)
    M = row_module(alg, 2)
    assert M.dim == 2
    zero = row_module(alg, 0)
    assert zero.dim == 0


def test_submodule_generated_is_idempotent_and_monotone():
    alg = truncated_poly_algebra(3, 4)
    M = truncated_poly_module(alg, 4)
    N = submodule_generated(M, ((0, 1, 2, 0),))
    again = submodule_generated(M, N.basis)
    assert N == again
    bigger = submodule_generated(M, N.basis + ((1, 0, 0, 0),))
    assert bigger.contains_submodule(N)
    assert bigger.dim == 4


def test_quotient_has_complementary_dimension():
    alg = truncated_poly_algebra(2, 4)
    M = truncated_poly_module(alg, 4)
    N = submodule_generated(M, ((0, 0, 1, 0),))
    Q, pi = quotient_module(M, N)
    assert Q.dim == M.dim - N.dim
    for b in N.basis:
        assert not any(pi.apply(b))


def test_direct_sum_rejects_mixed_algebras():
    A = truncated_poly_module(truncated_poly_algebra(2, 4), 2)
    B = truncated_poly_module(truncated_poly_algebra(3, 4), 2)
    with pytest.raises(AlgebraMismatch):
        direct_sum(A, B)


def test_direct_sum_projections_and_injections_compose_correctly():
    alg = truncated_poly_algebra(2, 4)
    A = truncated_poly_module(alg, 3)
    B = truncated_poly_module(alg, 2)
    ds = direct_sum(A, B)
    assert ds.module.dim == 5
    v = (1, 0, 1)
    assert ds.proj1.apply(ds.inj1.apply(v)) == v
    assert ds.proj2.apply(ds.inj1.apply(v)) == (0, 0)
    assert ds.left_copy().dim == 3 and ds.right_copy().dim == 2


def test_submodule_canonical_basis_is_rref():
    alg = truncated_poly_algebra(2, 4)
    M = truncated_poly_module(alg, 4)
    N1 = make_submodule(M, ((0, 0, 1, 1), (0, 0, 0, 1)))
    N2 = make_submodule(M, ((0, 0, 1, 0), (0, 0, 0, 1)))
    assert N1 == N2  # same span, same canonical value
    assert zero_submodule(M).dim == 0
