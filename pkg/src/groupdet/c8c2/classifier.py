"""
C8 x C2 Classifier
Decides membership of an integer in the value set of the C8 x C2 group determinant,
with a certificate for every verdict
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from .number_theory import (DEFAULT_CLASSIFY_BOUND, DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT, a_set_pair,
                            check_bound, factorize, is_prime, split_two_power, two_squares)

logger = logging.getLogger(__name__)


class Clause(Enum):
    """Which clause of the classification a value falls under"""
    ODD_1MOD16 = "odd-1mod16"
    ODD_A = "odd-A"
    EVEN_2_10 = "even-2^10"
    EVEN_2_12 = "even-2^12"
    EVEN_2_11_P5MOD8 = "even-2^11-p5mod8"
    EVEN_2_11_P1MOD8_REP3 = "even-2^11-p1mod8-rep3"
    EVEN_2_11_P3MOD8_SQUARED = "even-2^11-p3mod8-squared"
    EXCLUDED_ODD = "excluded-odd"
    EXCLUDED_EVEN_VALUATION = "excluded-even-valuation"
    EXCLUDED_2_11_SHAPE = "excluded-2^11-shape"

    @property
    def is_member(self) -> bool:
        return not self.value.startswith("excluded")


@dataclass(frozen=True)
class FilterResult:
    """Outcome of a congruence filter: a candidate clause or an exclusion"""
    candidate: bool
    clause: Clause
    certificate: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    """Membership verdict with a re-checkable certificate"""
    value: int
    member: bool
    clause: Clause
    certificate: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'value': self.value,
            'member': self.member,
            'clause': self.clause.value,
            'certificate': self.certificate,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Verdict':
        return cls(
            value=int(data['value']),
            member=bool(data['member']),
            clause=Clause(data['clause']),
            certificate=dict(data.get('certificate', {})),
        )

    def summary(self) -> str:
        status = "member" if self.member else "non-member"
        return f"{self.value}: {status} ({self.clause.value})"


def filter_odd(n: int, bound: int = DEFAULT_CLASSIFY_BOUND) -> FilterResult:
    """Odd values must be 1 mod 16 or lie in A = {(8k-3)(8l-3) : k = l mod 2}"""
    if n % 2 == 0:
        raise ValueError(f"filter_odd needs an odd integer, got {n}")
    if n % 16 == 1:
        return FilterResult(True, Clause.ODD_1MOD16, {'m': (n - 1) // 16})
    check_bound(n, bound)
    pair = a_set_pair(n)
    if pair is not None:
        u, v = pair
        return FilterResult(True, Clause.ODD_A, {'u': u, 'v': v, 'k': (u + 3) // 8, 'l': (v + 3) // 8})
    return FilterResult(False, Clause.EXCLUDED_ODD, {'residue_mod_16': n % 16})


def filter_even(n: int, bound: int = DEFAULT_CLASSIFY_BOUND,
                brute_force_limit: int = DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT) -> FilterResult:
    """Even values need 2^10; at exactly 2^11 the odd part needs a suitable prime"""
    if n % 2:
        raise ValueError(f"filter_even needs an even integer, got {n}")
    if n == 0:
        return FilterResult(True, Clause.EVEN_2_12, {'t': None, 'm': 0})
    t, u = split_two_power(n)
    if t < 10:
        return FilterResult(False, Clause.EXCLUDED_EVEN_VALUATION, {'t': t, 'odd_part': u})
    if t == 10:
        return FilterResult(True, Clause.EVEN_2_10, {'t': t, 'odd_part': u, 'm': (u - 1) // 2})
    if t >= 12:
        return FilterResult(True, Clause.EVEN_2_12, {'t': t, 'm': n // 2 ** 12})

    factors = factorize(u, bound) if abs(u) > 1 else {}
    for p in sorted(factors):
        k = factors[p]
        if p % 8 == 5:
            return FilterResult(True, Clause.EVEN_2_11_P5MOD8, {'p': p, 'cofactor': u // p})
        if p % 8 == 1:
            a, b = two_squares(p, brute_force_limit)
            if (a + b) % 8 in (3, 5):
                return FilterResult(True, Clause.EVEN_2_11_P1MOD8_REP3,
                                    {'p': p, 'a': a, 'b': b, 'cofactor': u // p})
        if p % 8 == 3 and k >= 2:
            return FilterResult(True, Clause.EVEN_2_11_P3MOD8_SQUARED, {'p': p, 'cofactor': u // (p * p)})

    shape = {
        'sign': 1 if u > 0 else -1,
        'split_primes': [],
        'minus_one_primes': [],
        'three_primes': [],
    }
    for p in sorted(factors):
        k = factors[p]
        if p % 8 == 1:
            a, b = two_squares(p, brute_force_limit)
            shape['split_primes'].append({'p': p, 'k': k, 'a': a, 'b': b})
        elif p % 8 == 7:
            shape['minus_one_primes'].append({'p': p, 'k': k})
        else:
            shape['three_primes'].append(p)
    return FilterResult(False, Clause.EXCLUDED_2_11_SHAPE, shape)


def classify(n: int, bound: int = DEFAULT_CLASSIFY_BOUND,
             brute_force_limit: int = DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT) -> Verdict:
    """Membership of n in the value set of the C8 x C2 group determinant"""
    n = int(n)
    check_bound(n, bound)
    if n % 2:
        result = filter_odd(n, bound)
    else:
        result = filter_even(n, bound, brute_force_limit)
    logger.debug("classified %d as %s", n, result.clause.value)
    return Verdict(n, result.candidate, result.clause, result.certificate)


def _odd_cofactor(n: int, head: int, cofactor: int) -> bool:
    return cofactor % 2 == 1 and n == head * cofactor


def check_certificate(verdict: Verdict) -> bool:
    """Re-check a verdict's certificate by direct arithmetic"""
    n, cert, clause = verdict.value, verdict.certificate, verdict.clause
    if verdict.member != clause.is_member:
        return False

    if clause is Clause.ODD_1MOD16:
        return n == 16 * cert['m'] + 1
    if clause is Clause.ODD_A:
        u, v, k, l = cert['u'], cert['v'], cert['k'], cert['l']
        return u * v == n and u == 8 * k - 3 and v == 8 * l - 3 and (k - l) % 2 == 0
    if clause is Clause.EVEN_2_10:
        return n == 2 ** 10 * (2 * cert['m'] + 1)
    if clause is Clause.EVEN_2_12:
        return n == 2 ** 12 * cert['m']
    if clause is Clause.EVEN_2_11_P5MOD8:
        p = cert['p']
        return is_prime(p) and p % 8 == 5 and _odd_cofactor(n, 2 ** 11 * p, cert['cofactor'])
    if clause is Clause.EVEN_2_11_P1MOD8_REP3:
        p, a, b = cert['p'], cert['a'], cert['b']
        return (is_prime(p) and p % 8 == 1 and a * a + b * b == p and (a + b) % 8 in (3, 5)
                and _odd_cofactor(n, 2 ** 11 * p, cert['cofactor']))
    if clause is Clause.EVEN_2_11_P3MOD8_SQUARED:
        p = cert['p']
        return is_prime(p) and p % 8 == 3 and _odd_cofactor(n, 2 ** 11 * p * p, cert['cofactor'])
    if clause is Clause.EXCLUDED_ODD:
        return n % 2 == 1 and n % 16 == cert['residue_mod_16'] != 1 and a_set_pair(n) is None
    if clause is Clause.EXCLUDED_EVEN_VALUATION:
        t, u = cert['t'], cert['odd_part']
        return 1 <= t < 10 and u % 2 == 1 and n == 2 ** t * u
    if clause is Clause.EXCLUDED_2_11_SHAPE:
        product = 2 ** 11 * cert['sign']
        for entry in cert['split_primes']:
            p, a, b = entry['p'], entry['a'], entry['b']
            if not (is_prime(p) and p % 8 == 1 and a * a + b * b == p and (a + b) % 8 in (1, 7)):
                return False
            product *= p ** entry['k']
        for entry in cert['minus_one_primes']:
            if not (is_prime(entry['p']) and entry['p'] % 8 == 7):
                return False
            product *= entry['p'] ** entry['k']
        threes = cert['three_primes']
        if len(set(threes)) != len(threes) or not all(is_prime(q) and q % 8 == 3 for q in threes):
            return False
        for q in threes:
            product *= q
        return product == n
    return False


def verdict_text(verdict: Verdict) -> str:
    lines = [verdict.summary()]
    for key, value in verdict.certificate.items():
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)
