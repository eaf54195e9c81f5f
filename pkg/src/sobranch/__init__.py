"""Exact symmetry-breaking calculator for the rank-one orthogonal pairs
SO(n+1,1) > SO(n,1).

The package computes, with exact rational arithmetic throughout:

* multiplicities of principal series restrictions and their piecewise
  case structure (``multiplicity``),
* the finite family of irreducibles sharing the trivial infinitesimal
  character, with classification, central characters, Levi data, and
  theta-stable parameters (``irreps``),
* infinitesimal characters and composition series of the principal
  series (``principal_series``),
* the branching graph between the two families (``branching``),
* Vogan packets over pure inner forms and the Gross-Prasad
  distinguished-pair selection (``gross_prasad``).
"""

__version__ = "0.1.0"

from .branching import BranchingGraph, branching_graph, hom_dim, node_id, theta_arrow
from .gross_prasad import (
    CONJECTURE_I,
    CONJECTURE_II,
    KIND_DS_ODD,
    KIND_TEMPERED_EVEN,
    PROFILE_CALIBRATED,
    PROFILE_LITERAL,
    DistinguishedPair,
    GpResolution,
    LanglandsCoefficients,
    PacketMember,
    VoganPacket,
    expected_pq,
    gp_characters,
    gp_distinguished_pair,
    gp_resolution,
    langlands_coefficients,
    vogan_packet,
)
from .irreps import (
    Classification,
    IrrepRho,
    ThetaParam,
    canonical_irrep,
    central_character_nontrivial,
    classify_irrep,
    half_sum_nilradical_roots,
    irreps_with_rho,
    levi_factors,
    principal_series_subquotient,
    theta_stable_parameter,
)
from .multiplicity import (
    LatticePoint,
    MultiplicityResult,
    case_labels,
    in_exceptional_lattice,
    in_punctured_exceptional_lattice,
    multiplicity_support,
    principal_series_multiplicity,
)
from .principal_series import (
    CompositionSeries,
    PsrDescriptor,
    composition_series_at_rho,
    has_rho_infchar,
    infinitesimal_character,
    normalize_degree,
    rho_vector,
    weyl_equivalent_orthogonal,
    weyl_equivalent_type_d,
)
from .scalars import (
    GENERIC,
    MINUS,
    PLUS,
    DomainError,
    ExactScalar,
    GenericScalar,
    GroupDescriptor,
    ScalarParam,
    Sign,
    UnsupportedScalarError,
    exact,
    format_scalar,
    parse_scalar,
    scalar_equals_integer,
    scalar_is_integer,
    so,
)

__all__ = [
    "BranchingGraph",
    "CONJECTURE_I",
    "CONJECTURE_II",
    "Classification",
    "CompositionSeries",
    "DistinguishedPair",
    "DomainError",
    "ExactScalar",
    "GENERIC",
    "GenericScalar",
    "GpResolution",
    "GroupDescriptor",
    "IrrepRho",
    "KIND_DS_ODD",
    "KIND_TEMPERED_EVEN",
    "LanglandsCoefficients",
    "LatticePoint",
    "MINUS",
    "MultiplicityResult",
    "PLUS",
    "PROFILE_CALIBRATED",
    "PROFILE_LITERAL",
    "PacketMember",
    "PsrDescriptor",
    "ScalarParam",
    "Sign",
    "ThetaParam",
    "UnsupportedScalarError",
    "VoganPacket",
    "branching_graph",
    "canonical_irrep",
    "case_labels",
    "central_character_nontrivial",
    "classify_irrep",
    "composition_series_at_rho",
    "exact",
    "expected_pq",
    "format_scalar",
    "gp_characters",
    "gp_distinguished_pair",
    "gp_resolution",
    "half_sum_nilradical_roots",
    "has_rho_infchar",
    "hom_dim",
    "in_exceptional_lattice",
    "in_punctured_exceptional_lattice",
    "infinitesimal_character",
    "irreps_with_rho",
    "langlands_coefficients",
    "levi_factors",
    "multiplicity_support",
    "node_id",
    "normalize_degree",
    "parse_scalar",
    "principal_series_multiplicity",
    "principal_series_subquotient",
    "rho_vector",
    "scalar_equals_integer",
    "scalar_is_integer",
    "so",
    "theta_arrow",
    "theta_stable_parameter",
    "vogan_packet",
    "weyl_equivalent_orthogonal",
    "weyl_equivalent_type_d",
]
