"""
Number Theory Helpers
Bounded factorization, sums of two squares and divisor-pair searches
"""
from __future__ import annotations

import logging
from math import isqrt
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import divisors, factorint, isprime, nextprime
from sympy.solvers.diophantine.diophantine import cornacchia

from ..core.errors import FactorizationLimitError, RepresentationNotFoundError

logger = logging.getLogger(__name__)

DEFAULT_CLASSIFY_BOUND = 2 ** 63
DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT = 10 ** 6


def check_bound(n: int, bound: int = DEFAULT_CLASSIFY_BOUND):
    if abs(n) > bound:
        raise FactorizationLimitError(f"|{n}| exceeds the factorization bound {bound}")


def factorize(n: int, bound: int = DEFAULT_CLASSIFY_BOUND) -> Dict[int, int]:
    """Prime factorization of |n| (n != 0)"""
    if n == 0:
        raise ValueError("0 has no prime factorization")
    check_bound(n, bound)
    return {int(p): int(k) for p, k in factorint(abs(n)).items()}


def split_two_power(n: int) -> Tuple[int, int]:
    """(t, u) with n = 2^t u and u odd; n != 0"""
    if n == 0:
        raise ValueError("0 has no odd part")
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    return t, n


def two_squares(p: int, brute_force_limit: int = DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT) -> Tuple[int, int]:
    """(a, b) with a^2 + b^2 = p, a odd and positive, b even and non-negative

    For a prime p = 1 mod 8 this forces 4 | b.
    """
    if p < 5 or p % 4 != 1:
        raise ValueError(f"{p} is not a sum of an odd and an even square")
    if p < brute_force_limit:
        for a in range(1, isqrt(p) + 1, 2):
            b = isqrt(p - a * a)
            if a * a + b * b == p:
                return a, b
    else:
        for x, y in sorted(cornacchia(1, 1, p) or ()):
            a, b = (abs(x), abs(y)) if x % 2 else (abs(y), abs(x))
            if a % 2 == 1 and b % 2 == 0:
                return a, b
    raise RepresentationNotFoundError(f"no two-squares representation found for {p}")


def rep_class(p: int, brute_force_limit: int = DEFAULT_TWO_SQUARES_BRUTE_FORCE_LIMIT) -> int:
    """3 when a + b = +-3 (mod 8) for the normalized representation of p, else 1"""
    a, b = two_squares(p, brute_force_limit)
    return 3 if (a + b) % 8 in (3, 5) else 1


def signed_divisor_pairs(n: int) -> Iterator[Tuple[int, int]]:
    """(u, v) with u v = n, u running over +d then -d for ascending divisors d"""
    for d in divisors(abs(n)):
        for u in (d, -d):
            yield u, n // u


def a_set_pair(n: int) -> Optional[Tuple[int, int]]:
    """A factor pair (u, v) = ((8k-3), (8l-3)) of n with k = l (mod 2), if any"""
    if n % 2 == 0:
        return None
    for u, v in signed_divisor_pairs(n):
        if u % 8 == 5 and v % 8 == 5 and ((u + 3) // 8 - (v + 3) // 8) % 2 == 0:
            return u, v
    return None


def primes_in_class(residue: int, modulus: int, count: int, start: int = 2,
                    predicate=None) -> List[int]:
    """The first `count` primes p >= start with p = residue (mod modulus)"""
    found: List[int] = []
    p = start - 1
    while len(found) < count:
        p = nextprime(p)
        if p % modulus == residue % modulus and (predicate is None or predicate(p)):
            found.append(int(p))
    return found


def is_prime(n: int) -> bool:
    return bool(isprime(n))
