"""Exact-arithmetic backend: the localization module U = R/L and the
infinite-module checks that the finite backend cannot express."""

from .counterexample import (
    CaseReport,
    FiepFailureReport,
    GeneratedSubmodule,
    default_x_submodule,
    f_of,
    fiep_failure_report,
    representing_r,
    verify_direct_case,
    verify_graph_decomposition,
    verify_partial_case,
)
from .endos import (
    MultEndo,
    PartialHom,
    UnitCertificate,
    endo_is_unit,
    mult_endo,
    nonlocal_witness,
)
from .pruefer import PrueferElement
from .rationals import (
    LocalizedRational,
    as_fraction,
    decompose_x,
    in_localization,
    valuation,
    xgcd,
)
from .ring import (
    RElement,
    SAMPLE_SEED,
    SAMPLE_SIZE,
    UElement,
    sample_relements,
    sample_uelements,
    u_action,
)
from .zext import RouteReport, brute_route_scan, z_extension_routes

__all__ = [
    "CaseReport",
    "FiepFailureReport",
    "GeneratedSubmodule",
    "LocalizedRational",
    "MultEndo",
    "PartialHom",
    "PrueferElement",
    "RElement",
    "RouteReport",
    "SAMPLE_SEED",
    "SAMPLE_SIZE",
    "UElement",
    "UnitCertificate",
    "as_fraction",
    "brute_route_scan",
    "decompose_x",
    "default_x_submodule",
    "endo_is_unit",
    "f_of",
    "fiep_failure_report",
    "in_localization",
    "mult_endo",
    "nonlocal_witness",
    "representing_r",
    "sample_relements",
    "sample_uelements",
    "u_action",
    "valuation",
    "verify_direct_case",
    "verify_graph_decomposition",
    "verify_partial_case",
    "xgcd",
    "z_extension_routes",
]
