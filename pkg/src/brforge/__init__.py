"""Exact commutative algebra over small prime fields: Groebner bases,
syzygies, free resolutions, Hilbert series, and randomized constructions of
arithmetically Gorenstein subschemes as kernel sections, with Gorenstein
liaison on top.
"""

from .ring import DEGREVLEX, Monomial, PrimeField, Rng
from .poly import FreeModuleElement, Polynomial, PolyRing
from .ideals import (
    ConstructionError,
    Ideal,
    affine_dimension,
    groebner_basis,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    normal_form,
    saturation,
    top_dimensional_part,
)
from .hilbert import (
    HilbertReport,
    HVectorChecks,
    h_vector_checks,
    hilbert_function_values,
    hilbert_numerator,
    hilbert_polynomial_value,
    hilbert_report,
)
from .resolution import (
    BettiTable,
    GorensteinCertificate,
    GradedMatrix,
    Resolution,
    free_resolution,
    gorenstein_certificate,
    regularity,
    syzygy_matrix,
)
from .chern import (
    ChernReport,
    ExpectedShape,
    GenBRSpec,
    TwistSpec,
    chern_coefficients,
    degree_formula_r3,
    elementary_symmetric,
    expected_resolution,
    expected_resolution_aci,
    expected_resolution_r3,
)
from .construct import (
    ConstructionSpec,
    ConstructionReport,
    KernelSectionRun,
    SectionResult,
    check_expected_codim,
    combine_columns,
    construction_matrix,
    gorenstein_from_kernel_section,
    is_good_position,
    kernel_section_run,
    minors_ideal,
    pfaffian,
    pfaffian_ideal,
    random_graded_matrix,
    section,
    verify_construction,
)
from .liaison import (
    GenBRRun,
    LinkRecord,
    common_section,
    generalized_br_run,
    gorenstein_link,
    module_intersection,
)
from .io import (
    ideal_text,
    matrix_text,
    read_ideal,
    read_matrix,
    write_ideal,
    write_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "DEGREVLEX",
    "Monomial",
    "PrimeField",
    "Rng",
    "FreeModuleElement",
    "Polynomial",
    "PolyRing",
    "ConstructionError",
    "Ideal",
    "affine_dimension",
    "groebner_basis",
    "ideal_intersection",
    "ideal_product",
    "ideal_quotient",
    "ideal_sum",
    "normal_form",
    "saturation",
    "top_dimensional_part",
    "HilbertReport",
    "HVectorChecks",
    "h_vector_checks",
    "hilbert_function_values",
    "hilbert_numerator",
    "hilbert_polynomial_value",
    "hilbert_report",
    "BettiTable",
    "GorensteinCertificate",
    "GradedMatrix",
    "Resolution",
    "free_resolution",
    "gorenstein_certificate",
    "regularity",
    "syzygy_matrix",
    "ChernReport",
    "ExpectedShape",
    "GenBRSpec",
    "TwistSpec",
    "chern_coefficients",
    "degree_formula_r3",
    "elementary_symmetric",
    "expected_resolution",
    "expected_resolution_aci",
    "expected_resolution_r3",
    "ConstructionSpec",
    "ConstructionReport",
    "KernelSectionRun",
    "SectionResult",
    "check_expected_codim",
    "combine_columns",
    "construction_matrix",
    "gorenstein_from_kernel_section",
    "is_good_position",
    "kernel_section_run",
    "minors_ideal",
    "pfaffian",
    "pfaffian_ideal",
    "random_graded_matrix",
    "section",
    "verify_construction",
    "GenBRRun",
    "LinkRecord",
    "common_section",
    "generalized_br_run",
    "gorenstein_link",
    "module_intersection",
    "ideal_text",
    "matrix_text",
    "read_ideal",
    "read_matrix",
    "write_ideal",
    "write_matrix",
    "main",
]


def main(argv=None) -> int:
    from .cli import main as _main

    return _main(argv)
