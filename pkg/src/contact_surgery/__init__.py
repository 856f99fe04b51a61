"""Exact invariants of Legendrian knots in contact (+-1)-surgery diagrams."""

from .catalog import (
    ExpectedRow,
    FamilyId,
    VerificationReport,
    build,
    expected_table,
    family,
    tight_family,
    verify_classification,
)
from .diagram import (
    ContactSurgeryDiagram,
    HomologyReport,
    LegendrianComponent,
    MarkedDiagram,
    extended_matrix,
    homology,
    linking_matrix,
    order_r,
    reverse_orientation,
    stabilize,
)
from .diagram_io import format_diagram, load_diagram, parse_diagram
from .errors import SurgeryError
from .exact_linalg import IntMatrix, det, signature, smith_normal_form, solve
from .invariants import (
    ClassicalInvariants,
    D3Report,
    a0_crosscheck,
    bennequin_violated,
    classical_invariants,
    d3,
    rot_q,
    tb_q,
)
from .torus import (
    GluingMap,
    NegCFE,
    Slope,
    complement_slope,
    dehn_twist,
    lens_gluing,
    neg_cfe,
    normalize_slope,
    realization_count,
    tight_count,
)

__version__ = "0.1.0"

__all__ = [
    "ClassicalInvariants", "ContactSurgeryDiagram", "D3Report", "ExpectedRow", "FamilyId",
    "GluingMap", "HomologyReport", "IntMatrix", "LegendrianComponent", "MarkedDiagram",
    "NegCFE", "Slope", "SurgeryError", "VerificationReport",
    "a0_crosscheck", "bennequin_violated", "build", "classical_invariants", "complement_slope",
    "d3", "dehn_twist", "det", "expected_table", "extended_matrix", "family", "format_diagram",
    "homology", "lens_gluing", "linking_matrix", "load_diagram", "neg_cfe", "normalize_slope",
    "order_r", "parse_diagram", "realization_count", "reverse_orientation", "rot_q", "signature",
    "smith_normal_form", "solve", "stabilize", "tb_q", "tight_count", "tight_family",
    "verify_classification",
]  # fmt: skip
