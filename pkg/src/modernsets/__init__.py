"""Sets valued in weak Boolean algebras, with a lattice-law checking engine.

The carrier of truth values can differ from point to point: classical {O, I},
the rational unit interval, a finite lattice, or a normalized matrix algebra
whose operations do not even commute. Union and intersection act pointwise,
laws are checked by evaluation rather than assumed, and families of sets are
classified into the hierarchy classical, fuzzy-like, generalized-fuzzy,
L-fuzzy, modern.
"""

from .algebra import (
    AlgebraHandle,
    AxiomReport,
    Element,
    FiniteAlgebraTable,
    IdentityViolation,
    apply_complement,
    apply_vee,
    apply_wedge,
    check_wba_axioms,
    enumerate_elements,
)
from .errors import (
    DomainError,
    EvalError,
    ExpressionSyntaxError,
    FileFormatError,
    IncompatibleFamilyError,
    ModernSetError,
    NotALatticeError,
    NotAPosetError,
    PreconditionError,
    ShapeError,
    StructuralError,
    UnsupportedOperationError,
)
from .expressions import (
    Complement as ComplementExpr,
    Expression,
    Ident,
    Intersection as IntersectionExpr,
    Union as UnionExpr,
    eval_expression,
    format_expression,
    parse_expression,
)
from .fileformat import Workspace, load_file, load_text, parse_matrix_literal
from .instances import (
    chain_algebra,
    classical_algebra,
    find_noncommuting_witness,
    fuzzy_algebra,
    lattice_algebra,
    matrix_algebra,
    matrix_vee,
    matrix_wedge,
    normalize_matrix,
)
from .lattice import (
    FiniteLattice,
    LatticeCertificate,
    check_boolean,
    check_cha,
    check_distributive,
    check_lattice_laws,
    join,
    lattice_from_hasse,
    m3_lattice,
    meet,
    n5_lattice,
    powerset_lattice,
)
from .laws import (
    LAW_NAMES,
    LAWS,
    FamilyClassification,
    GfRingReport,
    Law,
    LiftReport,
    check_all_laws,
    check_family_law,
    check_gf_ring_conditions,
    check_law,
    classify_family,
    get_law,
    lift_check,
    lift_point_value,
    lift_point_witness,
)
from .matrix import RationalMatrix
from .reporting import LawReport, Verdict, Witness, render_element
from .sets import (
    AlgebraFamily,
    ModernSet,
    Universe,
    complement,
    constant_family,
    contains,
    embed_crisp,
    empty_set,
    equals,
    full_set,
    intersection,
    is_empty,
    modern_set,
    union,
    verify_crisp_restriction,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFamily",
    "AlgebraHandle",
    "AxiomReport",
    "ComplementExpr",
    "DomainError",
    "Element",
    "EvalError",
    "Expression",
    "ExpressionSyntaxError",
    "FamilyClassification",
    "FileFormatError",
    "FiniteAlgebraTable",
    "FiniteLattice",
    "GfRingReport",
    "Ident",
    "IdentityViolation",
    "IncompatibleFamilyError",
    "IntersectionExpr",
    "LatticeCertificate",
    "Law",
    "LawReport",
    "LAW_NAMES",
    "LAWS",
    "LiftReport",
    "ModernSet",
    "ModernSetError",
    "NotALatticeError",
    "NotAPosetError",
    "PreconditionError",
    "RationalMatrix",
    "ShapeError",
    "StructuralError",
    "Universe",
    "UnionExpr",
    "UnsupportedOperationError",
    "Verdict",
    "Witness",
    "Workspace",
    "apply_complement",
    "apply_vee",
    "apply_wedge",
    "chain_algebra",
    "check_all_laws",
    "check_boolean",
    "check_cha",
    "check_distributive",
    "check_family_law",
    "check_gf_ring_conditions",
    "check_law",
    "check_lattice_laws",
    "check_wba_axioms",
    "classical_algebra",
    "classify_family",
    "complement",
    "constant_family",
    "contains",
    "embed_crisp",
    "empty_set",
    "enumerate_elements",
    "equals",
    "eval_expression",
    "find_noncommuting_witness",
    "format_expression",
    "full_set",
    "fuzzy_algebra",
    "get_law",
    "intersection",
    "is_empty",
    "join",
    "lattice_algebra",
    "lattice_from_hasse",
    "lift_check",
    "lift_point_value",
    "lift_point_witness",
    "load_file",
    "load_text",
    "m3_lattice",
    "matrix_algebra",
    "matrix_vee",
    "matrix_wedge",
    "meet",
    "modern_set",
    "n5_lattice",
    "normalize_matrix",
    "parse_expression",
    "parse_matrix_literal",
    "powerset_lattice",
    "render_element",
    "union",
    "verify_crisp_restriction",
]
