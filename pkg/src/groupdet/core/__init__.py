"""
Core module for groupdet
Contains groups, cyclotomic arithmetic, determinant evaluators and the factorization engine
"""
from .errors import (ExpansionLimitError, FactorizationLimitError, GroupDetError, GroupError, HypothesisError,
                     IntegralityError, MissingVariableError, RepresentationNotFoundError, RingMismatchError,
                     SearchCapError, UsageError, VerificationError)
from .cyclotomic import Cyclo, CycloRing, cyclotomic_polynomial, get_ring
from .groups import (CayleyGroup, Character, Group, Quotient, Subgroup, all_subgroups, cayley,
                     character_decomposition, dihedral_group, make_group, parse_group_spec, quotient,
                     subgroup_closure)
from .graded_poly import GradedPoly, Monomial
from .determinant import (Assignment, bareiss_determinant, character_product, convolve, eval_bareiss,
                          eval_dedekind, group_matrix)
from .factorization import FactorReport, block_determinant, eval_via_subgroup, factor_report_text, symbolic_z
from .oracle import OracleReport, cross_check

__all__ = [
    'GroupDetError',
    'GroupError',
    'RingMismatchError',
    'IntegralityError',
    'VerificationError',
    'ExpansionLimitError',
    'MissingVariableError',
    'FactorizationLimitError',
    'HypothesisError',
    'RepresentationNotFoundError',
    'SearchCapError',
    'UsageError',
    'Cyclo',
    'CycloRing',
    'cyclotomic_polynomial',
    'get_ring',
    'Group',
    'Character',
    'Subgroup',
    'Quotient',
    'CayleyGroup',
    'make_group',
    'subgroup_closure',
    'all_subgroups',
    'quotient',
    'character_decomposition',
    'cayley',
    'dihedral_group',
    'parse_group_spec',
    'GradedPoly',
    'Monomial',
    'Assignment',
    'bareiss_determinant',
    'group_matrix',
    'eval_bareiss',
    'character_product',
    'eval_dedekind',
    'convolve',
    'FactorReport',
    'eval_via_subgroup',
    'symbolic_z',
    'block_determinant',
    'factor_report_text',
    'OracleReport',
    'cross_check'
]
