"""modcheck: decision procedures for module-theoretic properties.

Finite backend: modules over finite-dimensional algebras over prime
fields, with exhaustive submodule lattices, property verdicts carrying
witnesses, and executable characterization checks for squares of
hollow-and-uniform modules.  Exact backend (modcheck.exact): arbitrary
precision arithmetic for the localization counterexample and the integer
extension checker.
"""

from .algebra import Algebra, algebra_from_structure_constants, shaped_matrix_algebra
from .errors import (
    AlgebraMismatch,
    CardinalityVacuous,
    CertificateFailed,
    ModcheckError,
    NonPrime,
    NotAssociative,
    NotClosed,
    NotEpi,
    NotHollowUniform,
    NotMono,
    NotUnital,
    NotWellDefined,
    NoUnity,
    SchemaError,
    ShapeMismatch,
    TooLarge,
    UnresolvedDivision,
    WrongBranch,
    ZeroInput,
    ZeroModule,
)
from .field import PrimeField, make_prime_field
from .homs import (
    enumerate_homs,
    hom_from_coords,
    hom_space,
    image,
    is_epi,
    is_iso,
    is_mono,
    kernel,
    restrict,
)
from .lattice import SubmoduleLattice, enumerate_submodules
from .modules import (
    DirectSum,
    ModuleHom,
    RepModule,
    Submodule,
    direct_sum,
    quotient_module,
    row_module,
    submodule_generated,
)
from .properties import (
    PropertyReport,
    is_coessential,
    is_essential,
    is_extending,
    is_hollow,
    is_indecomposable,
    is_lifting,
    is_small,
    is_uniform,
    is_uniserial,
    lattice_of,
    property_report,
    radical,
    radical_index,
    socle,
    socle_index,
)
from .summands import (
    Decomposition,
    all_decompositions,
    all_summands,
    has_fiep,
    is_direct_summand,
    summand_indices,
)
from .endring import EndRing, endomorphism_ring, is_local
from .graphs import graph_complement, graph_laws, graph_of
from .theorems import TheoremReport, square_extending_criterion, square_lifting_criterion
from .io import load_module, module_from_json, module_to_json, save_module, validate_module_json
from .corpus import Fixture, corpus, fixture_by_name, generate_golden, hollow_uniform_fixtures
from .verify import Manifest, VerifyConfig, verify_claims

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraMismatch",
    "CardinalityVacuous",
    "CertificateFailed",
    "Decomposition",
    "DirectSum",
    "EndRing",
    "Fixture",
    "Manifest",
    "ModcheckError",
    "ModuleHom",
    "NoUnity",
    "NonPrime",
    "NotAssociative",
    "NotClosed",
    "NotEpi",
    "NotHollowUniform",
    "NotMono",
    "NotUnital",
    "NotWellDefined",
    "PrimeField",
    "PropertyReport",
    "RepModule",
    "SchemaError",
    "ShapeMismatch",
    "Submodule",
    "SubmoduleLattice",
    "TheoremReport",
    "TooLarge",
    "UnresolvedDivision",
    "VerifyConfig",
    "WrongBranch",
    "ZeroInput",
    "ZeroModule",
    "algebra_from_structure_constants",
    "all_decompositions",
    "all_summands",
    "corpus",
    "direct_sum",
    "endomorphism_ring",
    "enumerate_homs",
    "enumerate_submodules",
    "fixture_by_name",
    "generate_golden",
    "graph_complement",
    "graph_laws",
    "graph_of",
    "has_fiep",
    "hollow_uniform_fixtures",
    "hom_from_coords",
    "hom_space",
    "image",
    "is_coessential",
    "is_direct_summand",
    "is_epi",
    "is_essential",
    "is_extending",
    "is_hollow",
    "is_indecomposable",
    "is_iso",
    "is_lifting",
    "is_local",
    "is_mono",
    "is_small",
    "is_uniform",
    "is_uniserial",
    "kernel",
    "lattice_of",
    "load_module",
    "make_prime_field",
    "module_from_json",
    "module_to_json",
    "property_report",
    "quotient_module",
    "radical",
    "radical_index",
    "restrict",
    "row_module",
    "save_module",
    "shaped_matrix_algebra",
    "socle",
    "socle_index",
    "square_extending_criterion",
    "square_lifting_criterion",
    "submodule_generated",
    "summand_indices",
    "validate_module_json",
    "verify_claims",
]
