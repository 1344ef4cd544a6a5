"""Dynkin, Vogan and double Vogan superdiagrams of basic classical Lie superalgebras."""
from .algebra_catalog import A, B, C, D, D21, F4, G3, FAMILY_INFO, FamilyId, parse_family
from .double_vogan import (
    DoubleVoganSuperdiagram,
    classify,
    double_classes,
    enumerate_almost_double,
    enumerate_double,
    enumerate_pairs,
    hermitian_split,
)
from .dynkin import AffineDiagram, DiagramMap, DynkinDiagram, affine_diagram, compute_marks, finite_diagram
from .errors import ParameterError, ParseError, StructuralError, SuperVoganError
from .kernels import BACKEND
from .render import from_json, to_dot, to_json, to_text, to_tikz
from .verify import verify_family
from .vogan import VoganSuperdiagram, canonicalize, enumerate_vogan, real_form_label, vogan_classes

__all__ = [
    "A", "B", "C", "D", "D21", "F4", "G3", "FAMILY_INFO", "FamilyId", "parse_family",
    "DynkinDiagram", "AffineDiagram", "DiagramMap", "finite_diagram", "affine_diagram", "compute_marks",
    "VoganSuperdiagram", "enumerate_vogan", "canonicalize", "vogan_classes", "real_form_label",
    "DoubleVoganSuperdiagram", "enumerate_almost_double", "enumerate_double", "double_classes",
    "classify", "enumerate_pairs", "hermitian_split",
    "to_json", "from_json", "to_text", "to_dot", "to_tikz", "verify_family",
    "SuperVoganError", "ParameterError", "StructuralError", "ParseError", "BACKEND",
]
__version__ = "0.1.0"
