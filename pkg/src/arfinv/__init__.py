"""Arf invariants of quadratic forms in characteristic 2.

Binary fields GF(2^n), the field F2(t) with its perfect-closure tower,
quadratic forms with symplectic bases, Wu vectors and Witt classes.
"""

from .arf import (
    Lagrangian,
    WittClass,
    WuVector,
    arf_diagram_check,
    arf_invariant,
    common_wu_vector,
    find_lagrangian,
    hyperbolic,
    lemma1_class,
    parf,
    q_lambda,
    witt_class,
    witt_decompose,
    wu_vector,
)
from .cokernel import ASClass
from .formats import load_form, parse_field_spec
from .func_field import RatFunc, TowerElem, TowerField, as_member, lemma0_descend, lemma0_forward
from .gf2n import BinaryField, binary_field
from .quadform import QuadForm, qf_base_change, qf_eval, qf_orth_sum, qf_polar, symplectic_basis

__version__ = "0.1.0"
