"""Link invariants from per-crossing transfer matrices and resolution state sums."""

from .bracket import ambient_normalized, homfly_eval, homfly_poly, jones, kauffman_bracket, su2_pipeline_bracket
from .coupling import Coupling, SkeinCoeffs, gln_matrices, gln_resolution_coeffs, homfly_params, su2_coeffs, traceless_exp
from .diagram import (
    Crossing,
    DiagramError,
    LinkDiagram,
    apply_reidemeister,
    components,
    linking_matrix,
    parse_diagram,
    parse_pd,
    resolve,
    validate,
    writhe,
)
from .expectation import GaugeSpec, gauge_expectation, u1_expectation
from .goldman import CurveSystem, FormalSum, TorusCurve, goldman_gl, goldman_su2, torus_bracket
from .laurent import LaurentPoly, LaurentPoly2

__version__ = "0.1.0"

__all__ = [
    "ambient_normalized", "homfly_eval", "homfly_poly", "jones", "kauffman_bracket", "su2_pipeline_bracket",
    "Coupling", "SkeinCoeffs", "gln_matrices", "gln_resolution_coeffs", "homfly_params", "su2_coeffs",
    "traceless_exp",
    "Crossing", "DiagramError", "LinkDiagram", "apply_reidemeister", "components", "linking_matrix",
    "parse_diagram", "parse_pd", "resolve", "validate", "writhe",
    "GaugeSpec", "gauge_expectation", "u1_expectation",
    "CurveSystem", "FormalSum", "TorusCurve", "goldman_gl", "goldman_su2", "torus_bracket",
    "LaurentPoly", "LaurentPoly2",
]
