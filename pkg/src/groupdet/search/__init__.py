"""
Search module for groupdet
Bounded value enumeration, JSONL tables and subset probes
"""
from .enumeration import SearchSpec, ValueTable, check_table, enumerate_values, sample_values
from .subsets import (PREDICATES, LinkResult, MembershipPredicate, ProbeLink, SubsetReport, predicate_for,
                      strictness_probe, verify_subset)

__all__ = [
    'SearchSpec',
    'ValueTable',
    'enumerate_values',
    'sample_values',
    'check_table',
    'MembershipPredicate',
    'PREDICATES',
    'predicate_for',
    'SubsetReport',
    'verify_subset',
    'ProbeLink',
    'LinkResult',
    'strictness_probe'
]
