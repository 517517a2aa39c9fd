"""Brute-force oracles: explicit groups whose element orders are counted."""

from .fields import FieldElement, FiniteField, build_field, field_of_order
from .frobenius import (
    FrobeniusGroup,
    FrobeniusPair,
    UnrecognizabilityReport,
    build_witness_groups,
    verify_unrecognizability,
)
from .j1 import (
    GeneratorFileError,
    check_standard_generators,
    closure,
    enumerate_j1,
    load_generator_file,
    load_j1_generators,
)
from .linear import Enumeration, enumerate_psl2, sl2_elements
from .matrices import MatrixElement, batch_orders, element_order

__all__ = [
    "Enumeration",
    "FieldElement",
    "FiniteField",
    "FrobeniusGroup",
    "FrobeniusPair",
    "GeneratorFileError",
    "MatrixElement",
    "UnrecognizabilityReport",
    "batch_orders",
    "build_field",
    "build_witness_groups",
    "check_standard_generators",
    "closure",
    "element_order",
    "enumerate_j1",
    "enumerate_psl2",
    "field_of_order",
    "load_generator_file",
    "load_j1_generators",
    "sl2_elements",
    "verify_unrecognizability",
]
