"""
Finite Groups
Abelian groups as products of cyclic factors, Cayley-table groups, subgroups,
quotients, transversals and character groups
"""
from __future__ import annotations

import itertools
import logging
import math
import random
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .cyclotomic import Cyclo, CycloRing, get_ring
from .errors import GroupError

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]

DEFAULT_ASSOCIATIVITY_CHECK_LIMIT = 32


@dataclass(frozen=True)
class Group:
    """Finite abelian group C_{n_1} x ... x C_{n_k}

    Elements are coordinate vectors (g_1, ..., g_k) with 0 <= g_i < n_i,
    enumerated lexicographically. Variables x_g are numbered with the first
    coordinate running fastest, so for C8 x C2 the element (r, s) is x_{r + 8s}.
    """
    orders: Tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        if not orders:
            raise GroupError("a group needs at least one cyclic factor")
        for n in orders:
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise GroupError(f"cyclic factor orders must be positive integers, got {n!r}")
        object.__setattr__(self, 'orders', orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def size(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @cached_property
    def name(self) -> str:
        return "x".join(f"C{n}" for n in self.orders)

    @cached_property
    def elements(self) -> Tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    @cached_property
    def _positions(self) -> Dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return (
            isinstance(g, tuple)
            and len(g) == self.rank
            and all(isinstance(x, int) and 0 <= x < n for x, n in zip(g, self.orders))
        )

    def check(self, g: Sequence[int]) -> Element:
        """Return g as an element tuple, raising GroupError if it is not one"""
        g = tuple(g)
        if g not in self:
            raise GroupError(f"{g} is not an element of {self.name}")
        return g

    def index_of(self, g: Element) -> int:
        """Position of g in the lexicographic enumeration"""
        try:
            return self._positions[g]
        except KeyError:
            raise GroupError(f"{g} is not an element of {self.name}") from None

    def mul(self, g: Element, h: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(g, h, self.orders))

    def inv(self, g: Element) -> Element:
        return tuple((-x) % n for x, n in zip(g, self.orders))

    def power(self, g: Element, k: int) -> Element:
        return tuple((k * x) % n for x, n in zip(g, self.orders))

    def order_of(self, g: Element) -> int:
        return math.lcm(*(n // math.gcd(x, n) for x, n in zip(g, self.orders)))

    def variable_index(self, g: Element) -> int:
        """Variable number of x_g (first coordinate runs fastest)"""
        index, stride = 0, 1
        for x, n in zip(g, self.orders):
            index += x * stride
            stride *= n
        return index

    def element_of_variable(self, j: int) -> Element:
        if not 0 <= j < self.size:
            raise GroupError(f"variable index {j} out of range for {self.name}")
        coords = []
        for n in self.orders:
            coords.append(j % n)
            j //= n
        return tuple(coords)

    @cached_property
    def variable_order(self) -> Tuple[Element, ...]:
        """Elements listed by variable number"""
        return tuple(self.element_of_variable(j) for j in range(self.size))

    @cached_property
    def characters(self) -> Tuple['Character', ...]:
        """All characters, ordered lexicographically by exponent vector"""
        return tuple(Character(self, exps) for exps in self.elements)

    def trivial_character(self) -> 'Character':
        return Character(self, self.identity)

    @cached_property
    def ring(self) -> CycloRing:
        """The ring Z[zeta_N] holding all character values (N = exponent)"""
        return get_ring(self.exponent)

    def __str__(self) -> str:
        return self.name


def make_group(orders: Iterable[int]) -> Group:
    """Build C_{n_1} x ... x C_{n_k} from its cyclic factor orders"""
    return Group(tuple(orders))


@dataclass(frozen=True)
class Character:
    """Homomorphism G -> roots of unity, chi(g) = zeta_N^(sum a_i g_i N / n_i)"""
    group: Group
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(self.exponents)
        if exponents not in self.group:
            raise GroupError(f"{exponents} is not a valid character exponent vector for {self.group.name}")
        object.__setattr__(self, 'exponents', exponents)

    def exponent_at(self, g: Element) -> int:
        """k such that chi(g) = zeta_N^k"""
        N = self.group.exponent
        return sum(a * x * (N // n) for a, x, n in zip(self.exponents, g, self.group.orders)) % N

    def value(self, g: Element, ring: Optional[CycloRing] = None) -> Cyclo:
        """chi(g) as an element of Z[zeta_M]; M must be a multiple of the group exponent"""
        ring = ring or self.group.ring
        N = self.group.exponent
        if ring.order % N:
            raise GroupError(f"Z[zeta_{ring.order}] does not contain the {N}-th roots of unity")
        return ring.root_of_unity(self.exponent_at(g) * (ring.order // N))

    def __call__(self, g: Element) -> Cyclo:
        return self.value(g)

    def __mul__(self, other: 'Character') -> 'Character':
        if other.group != self.group:
            raise GroupError("characters of different groups cannot be multiplied")
        return Character(self.group, self.group.mul(self.exponents, other.exponents))

    def inverse(self) -> 'Character':
        return Character(self.group, self.group.inv(self.exponents))

    def is_trivial_on(self, elements: Iterable[Element]) -> bool:
        return all(self.exponent_at(h) == 0 for h in elements)

    def restriction_key(self, subgroup: 'Subgroup') -> Tuple[int, ...]:
        """Values of chi on the subgroup, as zeta_N exponents"""
        return tuple(self.exponent_at(h) for h in subgroup.elements)

    def __str__(self) -> str:
        return f"chi{list(self.exponents)}"


@dataclass(frozen=True)
class Subgroup:
    """Explicit element set of a subgroup of an abelian group"""
    parent: Group
    elements: Tuple[Element, ...]

    def __post_init__(self):
        G = self.parent
        elements = tuple(sorted({G.check(h) for h in self.elements}))
        members = frozenset(elements)
        if G.identity not in members:
            raise GroupError("a subgroup must contain the identity")
        for g in elements:
            if G.inv(g) not in members:
                raise GroupError(f"not closed under inverses: {g}")
            for h in elements:
                if G.mul(g, h) not in members:
                    raise GroupError(f"not closed under products: {g} * {h}")
        if G.size % len(elements):
            raise GroupError("subgroup order must divide the group order")
        object.__setattr__(self, 'elements', elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.size // self.size

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._members

    def cayley_indices(self) -> Tuple[int, ...]:
        """Positions of the subgroup's elements in the parent's Cayley table"""
        return tuple(self.parent.index_of(h) for h in self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(h) for h in self.elements) + "}"


def subgroup_closure(G: Group, gens: Iterable[Sequence[int]]) -> Subgroup:
    """Smallest subgroup of G containing gens"""
    gens = [G.check(g) for g in gens]
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = G.mul(g, s)
            if h not in members:
                members.add(h)
                frontier.append(h)
    return Subgroup(G, tuple(members))


def all_subgroups(G: Group) -> List[Subgroup]:
    """Every subgroup of a desk-scale abelian group, smallest first"""
    trivial = subgroup_closure(G, [])
    found = {trivial.elements: trivial}
    queue = [trivial]
    while queue:
        H = queue.pop()
        for g in G.elements:
            if g in H:
                continue
            K = subgroup_closure(G, list(H.elements) + [g])
            if K.elements not in found:
                found[K.elements] = K
                queue.append(K)
    return sorted(found.values(), key=lambda K: (K.size, K.elements))


@dataclass(frozen=True)
class Quotient:
    """G/H with a transversal T and a total coset lookup"""
    parent: Group
    subgroup: Subgroup
    transversal: Tuple[Element, ...]
    coset_index: Dict[Element, int] = field(compare=False, repr=False)

    @property
    def index(self) -> int:
        return len(self.transversal)

    def representative(self, g: Element) -> Element:
        return self.transversal[self.coset_index[g]]

    def coset(self, i: int) -> Tuple[Element, ...]:
        t = self.transversal[i]
        return tuple(self.parent.mul(t, h) for h in self.subgroup.elements)

    def cosets(self) -> Tuple[Tuple[Element, ...], ...]:
        return tuple(self.coset(i) for i in range(self.index))


def quotient(G: Group, H: Subgroup, transversal: Optional[Sequence[Sequence[int]]] = None) -> Quotient:
    """Coset decomposition G = disjoint union of tH

    By default each coset is represented by its lexicographically smallest
    element, so the identity coset is represented by the identity. A custom
    transversal may be passed; it must meet every coset exactly once.
    """
    if not isinstance(H, Subgroup) or H.parent != G:
        raise GroupError(f"{H} is not a subgroup of {G.name}")

    coset_index: Dict[Element, int] = {}
    reps: List[Element] = []
    for g in G.elements:
        if g in coset_index:
            continue
        for h in H.elements:
            coset_index[G.mul(g, h)] = len(reps)
        reps.append(g)

    if transversal is not None:
        chosen: List[Optional[Element]] = [None] * len(reps)
        for t in transversal:
            t = G.check(t)
            i = coset_index[t]
            if chosen[i] is not None:
                raise GroupError(f"transversal meets the coset of {t} twice")
            chosen[i] = t
        if any(t is None for t in chosen):
            raise GroupError("transversal misses a coset")
        reps = chosen

    return Quotient(G, H, tuple(reps), coset_index)


def random_transversal(G: Group, H: Subgroup, rng: random.Random) -> Tuple[Element, ...]:
    """A uniformly random choice of one element per coset of H"""
    Q = quotient(G, H)
    return tuple(rng.choice(Q.coset(i)) for i in range(Q.index))


@dataclass(frozen=True)
class CharacterDecomposition:
    """Characters trivial on H and a transversal X of G^ modulo them"""
    subgroup: Subgroup
    trivial_on_subgroup: Tuple[Character, ...]
    transversal: Tuple[Character, ...]

    def restriction_keys(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(chi.restriction_key(self.subgroup) for chi in self.transversal)


def _characters_by_restriction(G: Group, H: Subgroup) -> Dict[Tuple[int, ...], List[Character]]:
    # chi and chi' share a coset of G^_H exactly when they agree on H
    classes: Dict[Tuple[int, ...], List[Character]] = {}
    for chi in G.characters:
        classes.setdefault(chi.restriction_key(H), []).append(chi)
    return classes


def character_decomposition(G: Group, H: Subgroup,
                            transversal: Optional[Sequence[Character]] = None) -> CharacterDecomposition:
    """Split G^ into cosets of G^_H

    X defaults to the lexicographically smallest exponent vector per coset.
    """
    if not isinstance(H, Subgroup) or H.parent != G:
        raise GroupError(f"{H} is not a subgroup of {G.name}")

    classes = _characters_by_restriction(G, H)
    trivial_key = (0,) * H.size
    trivial = tuple(classes[trivial_key])

    if transversal is None:
        chosen = tuple(members[0] for members in classes.values())
    else:
        chosen = tuple(transversal)
        keys = [chi.restriction_key(H) for chi in chosen]
        if len(set(keys)) != len(keys) or set(keys) != set(classes):
            raise GroupError("character transversal must meet every coset of G^_H exactly once")

    if len(trivial) != G.size // H.size or len(chosen) != H.size:
        raise GroupError("character decomposition has the wrong shape")
    return CharacterDecomposition(H, trivial, chosen)


def random_character_transversal(G: Group, H: Subgroup, rng: random.Random) -> Tuple[Character, ...]:
    return tuple(rng.choice(members) for members in _characters_by_restriction(G, H).values())


@dataclass(frozen=True)
class CayleyGroup:
    """Arbitrary finite group given by its multiplication table"""
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    name: str = field(default="", compare=False)
    associativity_check_limit: int = field(default=DEFAULT_ASSOCIATIVITY_CHECK_LIMIT, compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, 'table', table)
        m = len(table)
        if m == 0:
            raise GroupError("a Cayley table needs at least one element")
        full = set(range(m))
        for row in table:
            if len(row) != m or set(row) != full:
                raise GroupError("Cayley table rows must be permutations of the elements")
        for j in range(m):
            if {table[i][j] for i in range(m)} != full:
                raise GroupError("Cayley table columns must be permutations of the elements")
        e = self.identity
        if not 0 <= e < m or any(table[e][i] != i or table[i][e] != i for i in range(m)):
            raise GroupError(f"element {e} is not a two-sided identity")
        if m <= self.associativity_check_limit:
            for a, b, c in itertools.product(range(m), repeat=3):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise GroupError(f"table is not associative at ({a}, {b}, {c})")
        else:
            logger.debug("skipping associativity check for a table of size %d", m)
        if not self.name:
            object.__setattr__(self, 'name', f"Cayley({m})")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def elements(self) -> Tuple[int, ...]:
        return tuple(range(self.size))

    @cached_property
    def _inverses(self) -> Tuple[int, ...]:
        inverses = []
        for i, row in enumerate(self.table):
            j = row.index(self.identity)
            if self.table[j][i] != self.identity:
                raise GroupError(f"element {i} has no two-sided inverse")
            inverses.append(j)
        return tuple(inverses)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self._inverses[i]

    def commute(self, i: int, j: int) -> bool:
        return self.table[i][j] == self.table[j][i]

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.commute(i, j) for i in range(self.size) for j in range(i))

    def closure(self, gens: Iterable[int]) -> Tuple[int, ...]:
        """Elements of the subgroup generated by gens, sorted"""
        gens = list(gens)
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            g = frontier.pop()
            for s in gens:
                h = self.table[g][s]
                if h not in members:
                    members.add(h)
                    frontier.append(h)
        return tuple(sorted(members))

    def is_subgroup(self, elements: Iterable[int]) -> bool:
        members = set(elements)
        return (
            self.identity in members
            and all(self.inv(g) in members for g in members)
            and all(self.table[g][h] in members for g in members for h in members)
        )

    def subgroups(self) -> List[Tuple[int, ...]]:
        """Every subgroup, as sorted element tuples, smallest first"""
        found = {self.closure([])}
        queue = list(found)
        while queue:
            H = queue.pop()
            for g in range(self.size):
                if g in H:
                    continue
                K = self.closure(H + (g,))
                if K not in found:
                    found.add(K)
                    queue.append(K)
        return sorted(found, key=lambda K: (len(K), K))

    def left_transversal(self, subgroup: Sequence[int]) -> Tuple[int, ...]:
        """Smallest index in each left coset tH"""
        seen = set()
        reps = []
        for g in range(self.size):
            if g in seen:
                continue
            reps.append(g)
            seen.update(self.table[g][h] for h in subgroup)
        return tuple(reps)

    def __str__(self) -> str:
        return self.name


GroupLike = Union[Group, CayleyGroup]


@lru_cache(maxsize=None)
def cayley(G: Group) -> CayleyGroup:
    """Cayley table of an abelian group; table index = lexicographic position"""
    table = tuple(
        tuple(G.index_of(G.mul(g, h)) for h in G.elements)
        for g in G.elements
    )
    return CayleyGroup(table, identity=G.index_of(G.identity), name=G.name)


@lru_cache(maxsize=None)
def dihedral_group(order: int,
                   associativity_check_limit: int = DEFAULT_ASSOCIATIVITY_CHECK_LIMIT) -> CayleyGroup:
    """Dihedral group of the given order, from r^n = s^2 = 1 and s r s = r^-1

    Elements are the normal forms r^k s^e, stored at index k + n*e.
    """
    if order < 2 or order % 2:
        raise GroupError(f"dihedral groups have even order >= 2, got {order}")
    n = order // 2

    def normal_form(k: int, e: int) -> int:
        return (k % n) + n * (e % 2)

    def product(i: int, j: int) -> int:
        k1, e1 = i % n, i // n
        k2, e2 = j % n, j // n
        # moving r^k2 left past s^e1 inverts it
        return normal_form(k1 + (-1) ** e1 * k2, e1 + e2)

    table = tuple(tuple(product(i, j) for j in range(order)) for i in range(order))
    return CayleyGroup(table, identity=0, name=f"D{order}",
                       associativity_check_limit=associativity_check_limit)


_CYCLIC_FACTOR = re.compile(r"^c(\d+)(?:\^(\d+))?$")
_DIHEDRAL = re.compile(r"^d(\d+)$")


def parse_group_spec(text: str,
                     associativity_check_limit: int = DEFAULT_ASSOCIATIVITY_CHECK_LIMIT) -> GroupLike:
    """Parse "C8xC2", "C4", "C2^4" (abelian) or "D16" (dihedral, as a Cayley table)

    Tables larger than associativity_check_limit skip the O(n^3) associativity check.
    """
    spec = text.strip().lower().replace(" ", "").replace("×", "x")
    match = _DIHEDRAL.match(spec)
    if match:
        return dihedral_group(int(match.group(1)), associativity_check_limit)

    orders: List[int] = []
    for part in spec.split("x"):
        match = _CYCLIC_FACTOR.match(part)
        if not match:
            raise GroupError(f"cannot parse group spec {text!r}")
        n = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) else 1
        if repeat < 1:
            raise GroupError(f"repetition count must be positive in {text!r}")
        orders.extend([n] * repeat)
    return make_group(orders)


def parse_element(G: Group, text: str) -> Element:
    """Parse an element written as colon-separated coordinates, e.g. "2" or "0:1" """
    try:
        coords = tuple(int(part) for part in text.strip().split(":"))
    except ValueError:
        raise GroupError(f"cannot parse element {text!r}") from None
    return G.check(coords)


def parse_elements(G: Group, text: str) -> List[Element]:
    """Comma-separated list of elements; empty text means no elements"""
    text = text.strip()
    if not text or text in ("e", "-"):
        return []
    return [parse_element(G, part) for part in text.split(",")]
