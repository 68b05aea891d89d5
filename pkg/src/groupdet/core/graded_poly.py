"""
Graded Polynomials
Sparse polynomials in the variables x_g of an abelian group, graded by the group
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Set, Tuple

import sympy

from .cyclotomic import Coefficient, Cyclo, CycloRing
from .errors import GroupError, IntegralityError, MissingVariableError, RingMismatchError
from .groups import Element, Group

Exponents = Tuple[int, ...]


def grade_of(group: Group, exponents: Exponents) -> Element:
    """Product of g^e over the variables x_g^e of a monomial"""
    coords = [0] * group.rank
    for g, e in zip(group.elements, exponents):
        if e:
            for i, x in enumerate(g):
                coords[i] += e * x
    return tuple(c % n for c, n in zip(coords, group.orders))


@dataclass(frozen=True)
class Monomial:
    """prod x_g^(e_g), exponents listed in element order, with its grade"""
    group: Group
    exponents: Exponents
    grade: Element

    @classmethod
    def from_exponents(cls, group: Group, exponents: Exponents) -> 'Monomial':
        exponents = tuple(exponents)
        if len(exponents) != group.size or any(e < 0 for e in exponents):
            raise GroupError("monomial exponents must be non-negative, one per group element")
        return cls(group, exponents, grade_of(group, exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        if other.group != self.group:
            raise GroupError("monomials over different groups")
        exponents = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        return Monomial(self.group, exponents, self.group.mul(self.grade, other.grade))


class GradedPoly:
    """Polynomial over Z (ring=None) or Z[zeta_N] in the variables x_g

    Terms map exponent tuples (element order) to non-zero coefficients.
    """

    __slots__ = ("group", "ring", "terms")

    def __init__(self, group: Group, terms: Optional[Mapping[Exponents, Coefficient]] = None,
                 ring: Optional[CycloRing] = None):
        self.group = group
        self.ring = ring
        self.terms: Dict[Exponents, Coefficient] = {}
        for exponents, c in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != group.size:
                raise GroupError("exponent tuple length must equal the group order")
            if isinstance(c, Cyclo) and c.ring != ring:
                raise RingMismatchError(f"coefficient in Z[zeta_{c.ring.order}] for a polynomial over {self._ring_name()}")
            if c != 0:
                self.terms[exponents] = c

    # --- constructors ---

    @classmethod
    def zero(cls, group: Group, ring: Optional[CycloRing] = None) -> 'GradedPoly':
        return cls(group, {}, ring)

    @classmethod
    def constant(cls, group: Group, c: Coefficient, ring: Optional[CycloRing] = None) -> 'GradedPoly':
        return cls(group, {(0,) * group.size: c}, ring)

    @classmethod
    def variable(cls, group: Group, g: Element, ring: Optional[CycloRing] = None) -> 'GradedPoly':
        """The polynomial x_g"""
        exponents = [0] * group.size
        exponents[group.index_of(g)] = 1
        one = ring.one() if ring is not None else 1
        return cls(group, {tuple(exponents): one}, ring)

    @classmethod
    def linear(cls, group: Group, coefficients: Mapping[Element, Coefficient],
               ring: Optional[CycloRing] = None) -> 'GradedPoly':
        """sum_g c_g x_g"""
        terms = {}
        for g, c in coefficients.items():
            exponents = [0] * group.size
            exponents[group.index_of(g)] = 1
            terms[tuple(exponents)] = c
        return cls(group, terms, ring)

    # --- arithmetic ---

    def _ring_name(self) -> str:
        return "Z" if self.ring is None else f"Z[zeta_{self.ring.order}]"

    def _check_compatible(self, other: 'GradedPoly'):
        if other.group != self.group:
            raise GroupError(f"polynomials over {self.group.name} and {other.group.name}")
        if other.ring != self.ring:
            raise RingMismatchError(f"polynomials over {self._ring_name()} and {other._ring_name()}")

    def _lift(self, other) -> Optional['GradedPoly']:
        if isinstance(other, GradedPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Cyclo)):
            return GradedPoly.constant(self.group, other, self.ring)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponents, c in other.terms.items():
            terms[exponents] = terms[exponents] + c if exponents in terms else c
        return GradedPoly(self.group, terms, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.group, {e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Cyclo)):
            return GradedPoly(self.group, {e: c * other for e, c in self.terms.items()}, self.ring)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc: Dict[Exponents, Coefficient] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                term = c1 * c2
                acc[key] = acc[key] + term if key in acc else term
        return GradedPoly(self.group, acc, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = GradedPoly.constant(self.group, self.ring.one() if self.ring else 1, self.ring)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GradedPoly.constant(self.group, other, self.ring)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    __hash__ = None

    # --- structure ---

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        for exponents in self._sorted_exponents():
            yield Monomial.from_exponents(self.group, exponents), self.terms[exponents]

    def degrees(self) -> Set[int]:
        return {sum(e) for e in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = self.degrees()
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def graded_component(self, h: Element) -> 'GradedPoly':
        """Sum of the terms whose monomial grade is h"""
        h = self.group.check(h)
        return GradedPoly(
            self.group,
            {e: c for e, c in self.terms.items() if grade_of(self.group, e) == h},
            self.ring,
        )

    def components(self) -> Dict[Element, 'GradedPoly']:
        """Non-zero graded components keyed by grade"""
        buckets: Dict[Element, Dict[Exponents, Coefficient]] = {}
        for e, c in self.terms.items():
            buckets.setdefault(grade_of(self.group, e), {})[e] = c
        return {h: GradedPoly(self.group, terms, self.ring) for h, terms in sorted(buckets.items())}

    def support(self) -> Set[Element]:
        """Elements g whose variable x_g occurs"""
        used = set()
        for e in self.terms:
            used.update(g for g, k in zip(self.group.elements, e) if k)
        return used

    def to_integer(self) -> 'GradedPoly':
        """Same polynomial over Z; every coefficient must be a rational integer"""
        if self.ring is None:
            return self
        terms = {}
        for e, c in self.terms.items():
            value = c.as_integer() if isinstance(c, Cyclo) else c
            if value is None:
                raise IntegralityError(f"coefficient {c} is not a rational integer")
            terms[e] = value
        return GradedPoly(self.group, terms, None)

    def substitute(self, assignment: Mapping[Element, int]) -> Coefficient:
        """Evaluate at x_g = assignment[g]"""
        needed = self.support()
        missing = needed - set(assignment)
        if missing:
            raise MissingVariableError(f"no value for x_{min(self.group.variable_index(g) for g in missing)}")
        total: Coefficient = self.ring.zero() if self.ring else 0
        for e, c in self.terms.items():
            value = 1
            for g, k in zip(self.group.elements, e):
                if k:
                    value *= assignment[g] ** k
            total = total + c * value
        return total

    # --- rendering ---

    def _variable_positions(self) -> List[int]:
        return [self.group.index_of(g) for g in self.group.variable_order]

    def _sorted_exponents(self) -> List[Exponents]:
        positions = self._variable_positions()
        return sorted(
            self.terms,
            key=lambda e: (sum(e), tuple(e[p] for p in positions)),
            reverse=True,
        )

    def format(self, prefix: str = "x") -> str:
        """Graded-lex rendering with variables named by variable index"""
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for e in self._sorted_exponents():
            factors = []
            for g, k in zip(self.group.elements, e):
                if k:
                    name = f"{prefix}_{self.group.variable_index(g)}"
                    factors.append((self.group.variable_index(g), name if k == 1 else f"{name}^{k}"))
            monomial = "*".join(name for _, name in sorted(factors))
            c = self.terms[e]
            if isinstance(c, Cyclo) and c.as_integer() is None:
                body = f"({c})" + (f"*{monomial}" if monomial else "")
                pieces.append(("+ " if pieces else "") + body)
                continue
            n = c.as_integer() if isinstance(c, Cyclo) else c
            magnitude = abs(n)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if pieces:
                pieces.append(("+ " if n > 0 else "- ") + body)
            else:
                pieces.append(body if n > 0 else f"-{body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"GradedPoly({self.group.name}, {self.format()!r})"

    def to_sympy(self, prefix: str = "x") -> sympy.Expr:
        """Integer polynomial as a sympy expression in symbols x_0, x_1, ..."""
        poly = self.to_integer()
        symbols = {g: sympy.Symbol(f"{prefix}_{self.group.variable_index(g)}") for g in self.group.elements}
        expr = sympy.Integer(0)
        for e, c in poly.terms.items():
            term = sympy.Integer(c)
            for g, k in zip(self.group.elements, e):
                if k:
                    term *= symbols[g] ** k
            expr += term
        return sympy.expand(expr)
