"""End-to-end checks of the localization example: U² lifting, End(U) not local."""

from fractions import Fraction

import pytest

from modcheck.errors import (
    CertificateFailed,
    NotWellDefined,
    UnresolvedDivision,
    WrongBranch,
    ZeroInput,
)
from modcheck.exact.counterexample import (
    GeneratedSubmodule,
    default_x_submodule,
    f_of,
    fiep_failure_report,
    verify_direct_case,
    verify_graph_decomposition,
    verify_partial_case,
)
from modcheck.exact.endos import (
    PartialHom,
    endo_is_unit,
    mult_endo,
    nonlocal_witness,
)
from modcheck.exact.ring import RElement, UElement, sample_uelements
from modcheck.exact.zext import brute_route_scan, z_extension_routes

DIRECT_XS = (Fraction(1), Fraction(3, 5), Fraction(7, 5))
PARTIAL_XS = (Fraction(4, 3), Fraction(10, 9), Fraction(8, 3))


@pytest.mark.parametrize("x", DIRECT_XS, ids=str)
def test_direct_case_verifies(x):
    report = verify_direct_case(x, 2, 3)
    assert report.case == "direct"
    assert bool(report) and not report.unresolved
    assert all(ok for (_, ok, _) in report.checks)


@pytest.mark.parametrize("x", PARTIAL_XS, ids=str)
def test_partial_case_verifies(x):
    report = verify_partial_case(x, 2, 3)
    assert report.case == "partial"
    assert bool(report) and not report.unresolved
    names = [n for (n, _, _) in report.checks]
    assert "h_epi_samples" in names and "fh_equals_projection_on_samples" in names


@pytest.mark.parametrize("x", PARTIAL_XS, ids=str)
def test_graph_decomposition_verifies(x):
    report = verify_graph_decomposition(x, 2, 3)
    assert report.case == "graph"
    assert bool(report) and not report.unresolved


def test_branch_routing_is_strict():
    with pytest.raises(WrongBranch):
        verify_direct_case(Fraction(4, 3), 2, 3)  # v_3 < 0 belongs to partial
    with pytest.raises(WrongBranch):
        verify_direct_case(Fraction(1, 2), 2, 3)  # not in Z_(2) at all
    with pytest.raises(WrongBranch):
        verify_partial_case(Fraction(3, 5), 2, 3)  # v_3 >= 0 belongs to direct


def test_case_report_serialization_contract():
    doc = verify_direct_case(Fraction(3, 5), 2, 3).to_json()
    assert doc["case"] == "direct" and doc["x"] == "3/5"
    assert doc["verdict"] is True and doc["unresolved"] == []
    assert {"name", "passed", "detail"} <= set(doc["checks"][0])


def test_f_is_additive_modulo_x():
    p, q = 2, 3
    X = default_x_submodule(p, q)
    us = sample_uelements(p, q)[:8]
    for x in (Fraction(7, 5), Fraction(4, 3)):
        for u in us:
            for v in us:
                diff = f_of(x, u + v) - f_of(x, u) - f_of(x, v)
                member, _ = X.contains(diff)
                assert member


def test_membership_solver_on_the_standing_x():
    p, q = 2, 3
    X = default_x_submodule(p, q)
    ok, detail = X.contains(UElement.of(p, q, 4, Fraction(5, 9)))
    assert ok and "r_a" in detail
    ok, _ = X.contains(UElement.of(p, q, 0, Fraction(1, 27)))
    assert ok  # a nonzero first-component generator reaches every class
    ok, detail = X.contains(UElement.generator(p, q))
    assert not ok and "outside the reachable ideal" in detail
    ok, _ = X.contains(UElement.zero(p, q))
    assert ok


def test_membership_solver_on_pruefer_only_generators():
    p, q = 2, 3
    X = GeneratedSubmodule(p, q, (UElement.of(p, q, 0, Fraction(1, 3)),))
    ok, _ = X.contains(UElement.of(p, q, 0, Fraction(2, 3)))
    assert ok
    ok, detail = X.contains(UElement.of(p, q, 0, Fraction(1, 9)))
    assert not ok and "exceeds generator order" in detail
    ok, detail = X.contains(UElement.of(p, q, 1))
    assert not ok and "Prüfer-only" in detail


def test_mult_endo_requires_both_localizations():
    with pytest.raises(NotWellDefined):
        mult_endo(Fraction(1, 2), 2, 3)
    with pytest.raises(NotWellDefined):
        mult_endo(Fraction(4, 3), 2, 3)
    h = mult_endo(Fraction(3, 5), 2, 3)
    u = UElement.of(2, 3, 2, Fraction(1, 9))
    assert h.apply(u) == UElement.of(2, 3, Fraction(6, 5), Fraction(1, 15))


def test_unit_certificates_carry_element_evidence():
    cert = endo_is_unit(mult_endo(Fraction(5), 2, 3))
    assert cert.is_unit and cert.missed_element is None and cert.kernel_element is None

    cert = endo_is_unit(mult_endo(Fraction(2), 2, 3))
    assert not cert.is_unit and cert.vp == 1
    assert cert.missed_element == UElement.generator(2, 3)

    e = mult_endo(Fraction(3), 2, 3)
    cert = endo_is_unit(e)
    assert not cert.is_unit and cert.vq == 1
    assert cert.kernel_element is not None
    assert not cert.kernel_element.is_zero()
    assert e.apply(cert.kernel_element).is_zero()

    cert = endo_is_unit(mult_endo(Fraction(0), 2, 3))
    assert not cert.is_unit
    assert cert.missed_element is not None and cert.kernel_element is not None


def test_nonlocal_witness_sums_to_identity():
    x, y = nonlocal_witness(2, 3)
    assert x + y == 1
    cx = endo_is_unit(mult_endo(x, 2, 3))
    cy = endo_is_unit(mult_endo(y, 2, 3))
    assert not cx.is_unit and not cy.is_unit
    total = mult_endo(x, 2, 3).plus(mult_endo(y, 2, 3))
    assert total.is_identity_on(sample_uelements(2, 3))


def test_nonlocal_witness_other_prime_pairs():
    for p, q in ((2, 5), (3, 5), (5, 7)):
        x, y = nonlocal_witness(p, q)
        assert x + y == 1
        assert not endo_is_unit(mult_endo(x, p, q)).is_unit
        assert not endo_is_unit(mult_endo(y, p, q)).is_unit


def test_partial_hom_certificates():
    # image must be killed by the annihilator of the source generator
    with pytest.raises(CertificateFailed):
        PartialHom(2, 3, 1, UElement.of(2, 3, 0, Fraction(1, 9)))
    # valuation shortfall in the preimage solve surfaces, never guesses
    h = PartialHom(2, 3, 1, UElement.of(2, 3, 4))
    with pytest.raises(UnresolvedDivision):
        h.preimage_of(UElement.generator(2, 3))


def test_partial_hom_preimage_round_trip():
    h = PartialHom(2, 3, 1, UElement.of(2, 3, Fraction(9, 5)))
    for target in sample_uelements(2, 3)[:12]:
        r = h.preimage_of(target)
        assert h.apply_to_multiple(r) == target
        assert h.in_source(h.source_generator().act(r))


def test_fiep_failure_report_is_premise_checked_and_labeled():
    report = fiep_failure_report(2, 3)
    assert "does not satisfy the finite internal exchange property" in report.verdict
    assert report.label == "CITED-IMPLICATION"
    assert report.citation  # the implication is quoted, not re-proved
    x, y = report.witness_pair
    assert x + y == 1
    assert all(not c.is_unit for c in report.certificates)
    doc = report.to_json()
    assert doc["premise"] == "End(U) is not local"
    assert doc["label"] == "CITED-IMPLICATION"
    assert len(doc["certificates"]) == 2


def test_z_routes_for_the_headline_pair():
    report = z_extension_routes(2, 3)
    assert report.neither
    assert "does not divide" in report.i_certificate
    assert "does not divide" in report.ii_certificate


def test_z_routes_divisibility_table():
    assert z_extension_routes(2, 4).i_holds and not z_extension_routes(2, 4).ii_holds
    assert z_extension_routes(4, 2).ii_holds and not z_extension_routes(4, 2).i_holds
    both = z_extension_routes(3, 3)
    assert both.i_holds and both.ii_holds
    with pytest.raises(ZeroInput):
        z_extension_routes(0, 5)
    with pytest.raises(ZeroInput):
        brute_route_scan(5, 0)


def test_z_routes_agree_with_brute_scan():
    for a in range(-12, 13):
        for b in range(-12, 13):
            if a == 0 or b == 0:
                continue
            report = z_extension_routes(a, b)
            assert (report.i_holds, report.ii_holds) == brute_route_scan(a, b)
