"""Essential pseudoconcavity of minimal orbits in complex flag manifolds, decided exactly."""

from .classifier import (
    Decision,
    Verdict,
    closed_form_table,
    decide,
    decide_lemma_iii,
    decide_proposition,
    diagonal_certificate,
    enumerate_and_crosscheck,
)
from .cralg import CRAlgebraSpec, alpha_pairs, build_spec, is_fundamental
from .leviform import (
    FormClass,
    HermitianForm,
    Signature,
    build_real_structure,
    hermitian_parts,
    hermitian_signature,
    levi_matrix,
)
from .rootsys import RootSystem, build_doubled_system, build_root_system
from .satake import SatakeDiagram, catalog, conjugation, omega_set, resolve

__all__ = [
    "CRAlgebraSpec", "Decision", "FormClass", "HermitianForm", "RootSystem", "SatakeDiagram",
    "Signature", "Verdict", "alpha_pairs", "build_doubled_system", "build_real_structure",
    "build_root_system", "build_spec", "catalog", "closed_form_table", "conjugation", "decide",
    "decide_lemma_iii", "decide_proposition", "diagonal_certificate", "enumerate_and_crosscheck",
    "hermitian_parts", "hermitian_signature", "is_fundamental", "levi_matrix", "omega_set", "resolve",
]
