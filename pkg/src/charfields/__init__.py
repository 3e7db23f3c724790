"""Exact character fields of GL_m(F_q) and SL_2(F_q)."""

from .cyclotomic import Cyclotomic, cyclo_root, cyclotomic_polynomial, galois_apply, root_sum
from .galois import FieldDescriptor, field_of, fixed_field, named_field, unique_subfield
from .glm import class_types, exists_order, k_ellr_glm, k_glm, lemma31_check, omega
from .limits import BoundExceeded, IndeterminateField, NoElementOfOrder, bounds
from .tables import field_generated, gl2_table, sl2_table, table
from .theorems import CLAIMS, VerificationResult, predict, sweep, verify

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "cyclo_root", "cyclotomic_polynomial", "galois_apply", "root_sum",
    "FieldDescriptor", "field_of", "fixed_field", "named_field", "unique_subfield",
    "class_types", "exists_order", "k_ellr_glm", "k_glm", "lemma31_check", "omega",
    "BoundExceeded", "IndeterminateField", "NoElementOfOrder", "bounds",
    "field_generated", "gl2_table", "sl2_table", "table",
    "CLAIMS", "VerificationResult", "predict", "sweep", "verify",
]
