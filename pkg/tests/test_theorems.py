"""Square criteria: the two case-analysis variants versus the definition."""

import pytest

from modcheck.corpus import truncated_poly_algebra, truncated_poly_module
from modcheck.errors import NotHollowUniform
from modcheck.modules import direct_sum
from modcheck.properties import is_extending, is_lifting
from modcheck.theorems import square_extending_criterion, square_lifting_criterion


def test_criteria_agree_with_definitional_scan_on_small_bases(fixtures_by_name):
    for name in ("chain_f2_k2", "chain_f3_k2", "mat2_simple_f2", "tri4_f2"):
        U = fixtures_by_name[name].module
        square = direct_sum(U, U).module
        assert (
            is_lifting(square).verdict
            == square_lifting_criterion(U, "b").verdict
            == square_lifting_criterion(U, "c").verdict
        ), name
        assert (
            is_extending(square).verdict
            == square_extending_criterion(U, "b").verdict
            == square_extending_criterion(U, "c").verdict
        ), name


def test_criteria_reject_components_that_are_not_hollow_uniform(fixtures_by_name):
    S = fixtures_by_name["semisimple2_f2"].module
    with pytest.raises(NotHollowUniform):
        square_lifting_criterion(S, "b")
    with pytest.raises(NotHollowUniform):
        square_extending_criterion(S, "c")


def test_criterion_outcomes_name_their_branches():
    alg = truncated_poly_algebra(2, 4)
    U = truncated_poly_module(alg, 2)
    rep = square_lifting_criterion(U, "b")
    assert rep.verdict
    assert rep.outcomes  # at least the zero triple is discharged
    assert all(o.branch in ("i", "ii") for o in rep.outcomes)
    assert rep.failing() is None


def test_variant_flag_is_validated():
    alg = truncated_poly_algebra(2, 4)
    U = truncated_poly_module(alg, 2)
    with pytest.raises(Exception):
        square_lifting_criterion(U, "d")
