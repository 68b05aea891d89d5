"""
Cyclotomic Integers
Exact arithmetic in Z[zeta_N], kept canonical modulo the N-th cyclotomic polynomial
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from sympy import ZZ, Poly, Symbol, divisors

from .errors import RingMismatchError

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomials are indexed by positive integers, got {n}")
    poly = Poly(_X ** n - 1, _X, domain=ZZ)
    for d in divisors(n)[:-1]:
        factor = Poly(list(reversed(cyclotomic_polynomial(d))), _X, domain=ZZ)
        poly = poly.exquo(factor)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class CycloRing:
    """The ring Z[zeta_N] with power basis 1, zeta, ..., zeta^(phi(N)-1)"""
    order: int

    def __post_init__(self):
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"ring order must be a positive integer, got {self.order!r}")

    @cached_property
    def modulus(self) -> Tuple[int, ...]:
        return cyclotomic_polynomial(self.order)

    @cached_property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @cached_property
    def powers(self) -> Tuple[Tuple[int, ...], ...]:
        """Canonical coefficients of zeta^k for 0 <= k < N"""
        d, phi = self.degree, self.modulus
        current = [1] + [0] * (d - 1)
        table = [tuple(current)]
        for _ in range(1, self.order):
            shifted = [0] + current
            top = shifted[d]
            if top:
                for i in range(d + 1):
                    shifted[i] -= top * phi[i]
            current = shifted[:d]
            table.append(tuple(current))
        return tuple(table)

    def reduce(self, coeffs: Sequence[int]) -> 'Cyclo':
        """Reduce a coefficient list of any length to canonical form"""
        d, N = self.degree, self.order
        out = [0] * d
        for k, c in enumerate(coeffs):
            if not c:
                continue
            if k < d:
                out[k] += c
            else:
                for i, p in enumerate(self.powers[k % N]):
                    if p:
                        out[i] += c * p
        return Cyclo(self, out)

    def zero(self) -> 'Cyclo':
        return Cyclo(self, [0] * self.degree)

    def one(self) -> 'Cyclo':
        return self.from_int(1)

    def from_int(self, n: int) -> 'Cyclo':
        return Cyclo(self, [int(n)] + [0] * (self.degree - 1))

    def root_of_unity(self, k: int) -> 'Cyclo':
        """zeta^k"""
        return Cyclo(self, self.powers[k % self.order])

    def from_power_counts(self, counts: Sequence[int]) -> 'Cyclo':
        """sum_k counts[k] * zeta^k for a length-N count vector"""
        return self.reduce(counts)

    def evaluate(self, coeffs: Sequence[int], x: 'Cyclo') -> 'Cyclo':
        """Evaluate an integer polynomial (constant term first) at x by Horner's rule"""
        result = self.zero()
        for c in reversed(coeffs):
            result = result * x + c
        return result

    def parse(self, text: str) -> 'Cyclo':
        """Inverse of str(): "3 - 2*z + z^3" """
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty cyclotomic integer")
        coeffs = [0] * self.order
        for sign, body in re.findall(r"([+-]?)([^+-]+)", compact):
            match = re.fullmatch(r"(\d+)?\*?(z(?:\^(\d+))?)?", body)
            if not match or not (match.group(1) or match.group(2)):
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            c = int(match.group(1)) if match.group(1) else 1
            k = 0
            if match.group(2):
                k = int(match.group(3)) if match.group(3) else 1
            coeffs[k % self.order] += -c if sign == "-" else c
        return self.reduce(coeffs)


@lru_cache(maxsize=None)
def get_ring(order: int) -> CycloRing:
    """Shared ring instance for Z[zeta_order]"""
    return CycloRing(order)


class Cyclo:
    """Element of Z[zeta_N] as canonical coefficients in the power basis"""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycloRing, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ring.degree:
            raise ValueError(f"Z[zeta_{ring.order}] elements have {ring.degree} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other) -> Optional['Cyclo']:
        if isinstance(other, Cyclo):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine Z[zeta_{self.ring.order}] with Z[zeta_{other.ring.order}]")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclo(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclo(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo(self.ring, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.ring.degree
        product = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        product[i + j] += a * b
        return self.ring.reduce(product)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> 'Cyclo':
        """Complex conjugate: zeta^i -> zeta^-i"""
        N = self.ring.order
        counts = [0] * N
        for i, c in enumerate(self.coeffs):
            counts[(-i) % N] += c
        return self.ring.from_power_counts(counts)

    def norm_squared(self) -> 'Cyclo':
        """self * conj(self)"""
        return self * self.conjugate()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> Optional[int]:
        """The rational integer this equals, or None"""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclo):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.as_integer() == other
        return NotImplemented

    def __hash__(self) -> int:
        value = self.as_integer()
        if value is not None:
            return hash(value)
        return hash((self.ring.order, self.coeffs))

    def __str__(self) -> str:
        terms: List[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                monomial = "z" if k == 1 else f"z^{k}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Cyclo(N={self.ring.order}, {list(self.coeffs)})"


Coefficient = Union[int, Cyclo]
