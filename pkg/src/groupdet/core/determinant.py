"""
Group Determinant Evaluators
Exact integer group determinants by fraction-free elimination and by the character product
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple

from .cyclotomic import Coefficient, Cyclo, CycloRing
from .errors import GroupError, IntegralityError, VerificationError
from .groups import CayleyGroup, Character, Group, GroupLike, cayley

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


@dataclass(frozen=True)
class Assignment:
    """Integer values a_g, stored in the group's element order

    For an abelian group that is the lexicographic order; for a Cayley
    group it is the table index.
    """
    group: GroupLike
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != self.group.size:
            raise GroupError(f"{self.group.name} needs {self.group.size} values, got {len(values)}")
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise GroupError(f"assignment values must be integers, got {v!r}")
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_sequence(cls, group: GroupLike, seq: Sequence[int]) -> 'Assignment':
        """Values listed by variable number (x_0, x_1, ...)"""
        seq = [int(v) for v in seq]
        if len(seq) != group.size:
            raise GroupError(f"{group.name} needs {group.size} values, got {len(seq)}")
        if isinstance(group, CayleyGroup):
            return cls(group, tuple(seq))
        values = [0] * group.size
        for j, v in enumerate(seq):
            values[group.index_of(group.element_of_variable(j))] = v
        return cls(group, tuple(values))

    @classmethod
    def from_mapping(cls, group: GroupLike, mapping: Mapping) -> 'Assignment':
        return cls(group, tuple(mapping[g] for g in group.elements))

    @classmethod
    def constant(cls, group: GroupLike, c: int) -> 'Assignment':
        return cls(group, (c,) * group.size)

    @classmethod
    def identity_indicator(cls, group: GroupLike) -> 'Assignment':
        values = [0] * group.size
        values[_position(group, group.identity)] = 1
        return cls(group, tuple(values))

    @classmethod
    def random(cls, group: GroupLike, rng: random.Random, bound: int) -> 'Assignment':
        return cls(group, tuple(rng.randint(-bound, bound) for _ in range(group.size)))

    def __getitem__(self, g) -> int:
        return self.values[_position(self.group, g)]

    def as_sequence(self) -> List[int]:
        """Values listed by variable number"""
        if isinstance(self.group, CayleyGroup):
            return list(self.values)
        return [self[g] for g in self.group.variable_order]

    def as_mapping(self) -> dict:
        return dict(zip(self.group.elements, self.values))


def _position(group: GroupLike, g) -> int:
    if isinstance(group, CayleyGroup):
        if not 0 <= g < group.size:
            raise GroupError(f"{g} is not an element of {group.name}")
        return g
    return group.index_of(g)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination"""
    M = [list(row) for row in matrix]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pivot is None:
                return 0
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                quotient, remainder = divmod(numerator, previous)
                if remainder:
                    raise VerificationError("Bareiss step produced a non-exact division")
                M[i][j] = quotient
        previous = M[k][k]
    return sign * M[n - 1][n - 1]


def group_matrix(C: CayleyGroup, values: Sequence[int], order: Optional[Sequence[int]] = None) -> Matrix:
    """M[g][h] = a(g h^-1), rows and columns listed in `order`"""
    order = list(order) if order is not None else list(range(C.size))
    if sorted(order) != list(range(C.size)):
        raise GroupError("row order must be a permutation of the group elements")
    return [[values[C.mul(g, C.inv(h))] for h in order] for g in order]


def eval_bareiss(group: GroupLike, a: Assignment, order: Optional[Sequence[int]] = None) -> int:
    """Theta_G(a) as det(a(g h^-1)), exact for any finite group"""
    if a.group != group:
        raise GroupError("assignment belongs to a different group")
    C = group if isinstance(group, CayleyGroup) else cayley(group)
    return bareiss_determinant(group_matrix(C, a.values, order))


def character_sum(G: Group, chi: Character, values: Sequence[Coefficient], ring: CycloRing) -> Cyclo:
    """sum_g chi(g) v_g in the given ring, values in element order"""
    N = G.exponent
    if ring.order % N:
        raise GroupError(f"Z[zeta_{ring.order}] does not contain the {N}-th roots of unity")
    scale = ring.order // N
    if all(isinstance(v, int) for v in values):
        counts = [0] * ring.order
        for g, v in zip(G.elements, values):
            if v:
                counts[chi.exponent_at(g) * scale] += v
        return ring.from_power_counts(counts)
    total = ring.zero()
    for g, v in zip(G.elements, values):
        if v != 0:
            total = total + ring.root_of_unity(chi.exponent_at(g) * scale) * v
    return total


def character_product(G: Group, values: Sequence[Coefficient], ring: Optional[CycloRing] = None) -> Cyclo:
    """prod_chi sum_g chi(g) v_g; values may themselves lie in the ring"""
    ring = ring or G.ring
    total = ring.one()
    for chi in G.characters:
        factor = character_sum(G, chi, values, ring)
        if factor.is_zero():
            return ring.zero()
        total = total * factor
    return total


def eval_dedekind(G: Group, a: Assignment) -> int:
    """Theta_G(a) for abelian G as the product of the character sums"""
    if isinstance(G, CayleyGroup):
        raise GroupError("the character product needs an abelian group given by cyclic factors")
    if a.group != G:
        raise GroupError("assignment belongs to a different group")
    value = character_product(G, a.values).as_integer()
    if value is None:
        raise IntegralityError(f"character product for {G.name} is not a rational integer")
    return value


def convolve(a: Assignment, b: Assignment) -> Assignment:
    """(a * b)_g = sum_{hk = g} a_h b_k, so Theta(a * b) = Theta(a) Theta(b)"""
    if a.group != b.group:
        raise GroupError("cannot convolve assignments on different groups")
    group = a.group
    C = group if isinstance(group, CayleyGroup) else cayley(group)
    out = [0] * group.size
    for h, x in enumerate(a.values):
        if x:
            for k, y in enumerate(b.values):
                if y:
                    out[C.mul(h, k)] += x * y
    return Assignment(group, tuple(out))


def zero_value_witness(group: GroupLike) -> Assignment:
    """An assignment with Theta_G = 0: all ones when G is non-trivial"""
    if group.size == 1:
        return Assignment(group, (0,))
    return Assignment.constant(group, 1)
