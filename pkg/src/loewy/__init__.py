"""Exact arithmetic for a family of semiartinian algebras indexed by
ordinals: elements, quasi-inverses, Loewy depth, dimension sequences,
multiplicative bases, a Frobenius-twisted variant, and a symbolic
injectivity checker."""

from .ordinals import Ordinal, ZERO, ONE, OMEGA, parse_ordinal, ord_cmp
from .fields import Field, FieldValue, FieldMismatch, DivisionByZero, UnsupportedField
from .algebra import (Algebra, Element, TupleElement, DimensionSequence,
                      dimension_sequence, factor_equivalent, inject, one, zero,
                      quasi_inverse, unit_idempotent_factorization, loewy_depth,
                      tuple_loewy_depth, swallow_forward, swallow_backward,
                      random_element)
from .basis import (BasisIndex, BasisBudget, basis_element, basis_membership,
                    basis_product, enumerate_basis, to_basis_coords,
                    augmentation, socle_idempotent, closure_check,
                    conormed_check, cayley_table, finite_product_basis,
                    finite_field_mult_basis_search)
from .twisted import (TwistedElement, t_quasi_inverse, t_membership,
                      psi_embed, psi_preimage, t_dimension_sequence)
from .injectivity import (SymbolicCardinal, SupportDescriptor, MElement,
                          IdealDescriptor, HomDescriptor, Verdict, card_cmp,
                          m_membership, gamma, baer_extend, strictness_witness)
from .expr import parse, print_expr, evaluate, ParseError, ExprTypeError

__version__ = "0.1.0"
