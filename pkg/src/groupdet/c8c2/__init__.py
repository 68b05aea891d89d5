"""
C8 x C2 module for groupdet
Closed forms, congruence filters, witnesses and the value classifier for C8 x C2
"""
from .transform import (BCDE, AlphaBetaGamma, alpha_beta_gamma, bcde, d4, d4_tilde, d8, d8x2,
                        two_adic_valuation, vec16)
from .number_theory import factorize, rep_class, two_squares
from .classifier import Clause, Verdict, check_certificate, classify, filter_even, filter_odd
from .witnesses import (find_prime_parameters, prime_family_witness, small_family_witness, witness_for_value,
                        zero_witness)
from .residues import ResidueReport, residue_check, residue_suite, rotation_symmetry_check

__all__ = [
    'BCDE',
    'AlphaBetaGamma',
    'vec16',
    'bcde',
    'd4',
    'd4_tilde',
    'd8',
    'd8x2',
    'alpha_beta_gamma',
    'two_adic_valuation',
    'factorize',
    'two_squares',
    'rep_class',
    'Clause',
    'Verdict',
    'filter_odd',
    'filter_even',
    'classify',
    'check_certificate',
    'small_family_witness',
    'find_prime_parameters',
    'prime_family_witness',
    'witness_for_value',
    'zero_witness',
    'ResidueReport',
    'residue_check',
    'residue_suite',
    'rotation_symmetry_check'
]
