"""
Subgroup Factorization
Evaluating Theta_G through a subgroup H: the z_h values, their polynomials,
and the commuting-block determinant
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation

from .cyclotomic import Cyclo
from .determinant import Assignment, eval_bareiss, eval_dedekind
from .errors import ExpansionLimitError, GroupError, IntegralityError, VerificationError
from .graded_poly import GradedPoly
from .groups import (CayleyGroup, Character, Element, Group, GroupLike, Quotient, Subgroup, cayley,
                     character_decomposition, quotient)

logger = logging.getLogger(__name__)

DEFAULT_MAX_QUOTIENT_ORDER_AT_16 = 4
DEFAULT_MAX_TERMS = 10 ** 5
DEFAULT_BLOCK_MAX_INDEX = 5


@dataclass
class FactorReport:
    """Result of evaluating Theta_G(a) through a subgroup H"""
    group: Group
    subgroup: Subgroup
    transversal: Tuple[Element, ...]
    characters: Tuple[Character, ...]
    factors: List[Cyclo]
    z: Dict[Element, int]
    theta_h: int
    product: int

    def to_dict(self) -> dict:
        return {
            'group': self.group.name,
            'subgroup': [list(h) for h in self.subgroup.elements],
            'transversal': [list(t) for t in self.transversal],
            'characters': [list(chi.exponents) for chi in self.characters],
            'factors': [
                {'character': list(chi.exponents), 'value': str(f), 'coeffs': list(f.coeffs)}
                for chi, f in zip(self.characters, self.factors)
            ],
            'z': [{'element': list(h), 'value': v} for h, v in sorted(self.z.items())],
            'theta_h': self.theta_h,
            'product': self.product,
        }


def subgroup_cayley(H: Subgroup) -> CayleyGroup:
    """Cayley table of H with elements indexed by their sorted position"""
    G = H.parent
    position = {h: i for i, h in enumerate(H.elements)}
    table = tuple(tuple(position[G.mul(g, h)] for h in H.elements) for g in H.elements)
    return CayleyGroup(table, identity=position[G.identity], name=f"H<{G.name}>")


def _coset_sums(G: Group, Q: Quotient, chi: Character, a: Assignment) -> List[Cyclo]:
    """y_tH = sum_h chi(th) a_th for each representative t of Q"""
    ring = G.ring
    sums = []
    for t in Q.transversal:
        y = ring.zero()
        for h in Q.subgroup.elements:
            g = G.mul(t, h)
            y = y + ring.root_of_unity(chi.exponent_at(g)) * a.values[G.index_of(g)]
        sums.append(y)
    return sums


def _quotient_determinant(G: Group, Q: Quotient, quotient_characters: Sequence[Character],
                          y: Sequence[Cyclo]) -> Cyclo:
    """Theta_{G/H}(y) as the product over characters of G/H, read on the transversal"""
    ring = G.ring
    result = ring.one()
    for psi in quotient_characters:
        total = ring.zero()
        for t, y_t in zip(Q.transversal, y):
            total = total + ring.root_of_unity(psi.exponent_at(t)) * y_t
        result = result * total
    return result


def eval_via_subgroup(G: Group, H: Subgroup, a: Assignment,
                      transversal: Optional[Sequence[Element]] = None,
                      character_transversal: Optional[Sequence[Character]] = None,
                      verify: bool = True) -> FactorReport:
    """Theta_G(a) = Theta_H(z) with z_h read off the grading

    For each chi in the character transversal X the coset sums
    y_tH = sum_h chi(th) a_th over the transversal T give the factor
    F_chi = Theta_{G/H}(y), which equals sum_h chi(h) z_h, so z is
    recovered by inverting over H^.
    """
    if a.group != G:
        raise GroupError("assignment belongs to a different group")
    Q = quotient(G, H, transversal)
    D = character_decomposition(G, H, character_transversal)
    ring = G.ring

    factors: List[Cyclo] = []
    for chi in D.transversal:
        y = _coset_sums(G, Q, chi, a)
        factors.append(_quotient_determinant(G, Q, D.trivial_on_subgroup, y))

    z: Dict[Element, int] = {}
    for h in H.elements:
        h_inv = G.inv(h)
        total = ring.zero()
        for chi, factor in zip(D.transversal, factors):
            total = total + ring.root_of_unity(chi.exponent_at(h_inv)) * factor
        value = total.as_integer()
        if value is None:
            raise IntegralityError(f"z_{h} is not a rational integer")
        if value % H.size:
            raise IntegralityError(f"z_{h} sum {value} is not divisible by |H| = {H.size}")
        z[h] = value // H.size

    product = ring.one()
    for factor in factors:
        product = product * factor
    product_value = product.as_integer()
    if product_value is None:
        raise IntegralityError("product of the subgroup factors is not a rational integer")

    HC = subgroup_cayley(H)
    theta_h = eval_bareiss(HC, Assignment(HC, tuple(z[h] for h in H.elements)))

    if verify:
        expected = eval_dedekind(G, a)
        if theta_h != expected or product_value != expected:
            raise VerificationError(
                f"subgroup factorization disagrees: Theta_H(z)={theta_h}, "
                f"product={product_value}, Theta_G={expected}")
    logger.debug("factored Theta_%s through |H|=%d: %d", G.name, H.size, product_value)
    return FactorReport(G, H, Q.transversal, D.transversal, factors, z, theta_h, product_value)


def symbolic_z(G: Group, H: Subgroup,
               max_quotient_order_at_16: int = DEFAULT_MAX_QUOTIENT_ORDER_AT_16,
               max_terms: int = DEFAULT_MAX_TERMS) -> Dict[Element, GradedPoly]:
    """Integer polynomials z_h: grade-h parts of Theta_{G/H}(sum of x_g over each coset)"""
    if not isinstance(H, Subgroup) or H.parent != G:
        raise GroupError(f"{H} is not a subgroup of {G.name}")
    index = H.index
    if G.size >= 16 and index > max_quotient_order_at_16:
        raise ExpansionLimitError(
            f"|G/H| = {index} exceeds {max_quotient_order_at_16} for a group of order {G.size}")
    estimate = math.comb(G.size + index - 1, index)
    if estimate > max_terms:
        raise ExpansionLimitError(f"expansion may reach {estimate} terms (limit {max_terms})")

    D = character_decomposition(G, H)
    ring = G.ring
    theta_quotient = GradedPoly.constant(G, ring.one(), ring)
    for chi in D.trivial_on_subgroup:
        linear = GradedPoly.linear(G, {g: chi.value(g) for g in G.elements}, ring)
        theta_quotient = theta_quotient * linear
    theta_quotient = theta_quotient.to_integer()

    if not theta_quotient.is_homogeneous(index):
        raise VerificationError(f"Theta_G/H expansion is not homogeneous of degree {index}")
    components = theta_quotient.components()
    stray = [h for h in components if h not in H]
    if stray:
        raise VerificationError(f"Theta_G/H has components of grade {stray[0]} outside H")
    logger.debug("expanded Theta_%s/H into %d terms", G.name, len(theta_quotient))
    return {h: components.get(h, GradedPoly.zero(G)) for h in H.elements}


def _as_cayley_subgroup(group: GroupLike, subgroup: Union[Subgroup, Sequence[int]]) -> Tuple[CayleyGroup, Tuple[int, ...]]:
    if isinstance(group, CayleyGroup):
        elements = tuple(sorted(set(int(h) for h in subgroup)))
        if not group.is_subgroup(elements):
            raise GroupError(f"{list(elements)} is not a subgroup of {group.name}")
        return group, elements
    if not isinstance(subgroup, Subgroup) or subgroup.parent != group:
        raise GroupError(f"{subgroup} is not a subgroup of {group.name}")
    return cayley(group), subgroup.cayley_indices()


def cayley_subgroup_table(C: CayleyGroup, H: Sequence[int]) -> CayleyGroup:
    """Cayley table of the subgroup H of C, elements indexed by their position in H"""
    position = {h: i for i, h in enumerate(H)}
    table = tuple(tuple(position[C.mul(g, h)] for h in H) for g in H)
    return CayleyGroup(table, identity=position[C.identity], name=f"H<{C.name}>")


def group_matrix_labels(C: CayleyGroup, H: Sequence[int], matrix, what: str = "matrix") -> Dict[int, int]:
    """Entry of an H-group matrix for each label h_i h_j^-1, keyed by position in H

    Raises VerificationError when the matrix is not constant along some label.
    """
    position = {h: i for i, h in enumerate(H)}
    labels: Dict[int, int] = {}
    for i, hi in enumerate(H):
        for j, hj in enumerate(H):
            key = position[C.mul(hi, C.inv(hj))]
            if labels.setdefault(key, matrix[i][j]) != matrix[i][j]:
                raise VerificationError(f"{what} is not an H-group matrix at ({i}, {j})")
    return labels


def block_determinant(group: GroupLike, subgroup: Union[Subgroup, Sequence[int]], a: Assignment,
                      max_index: int = DEFAULT_BLOCK_MAX_INDEX) -> int:
    """Theta_G(a) from the H-group-matrix blocks of the group matrix

    With G ordered by left cosets t_k H the blocks A_kl(h_i, h_j) = a(t_k h_i h_j^-1 t_l^-1)
    are H-group matrices. For abelian H they commute pairwise, and then
    det M = det(sum_sigma sgn(sigma) prod_k A_{k,sigma(k)}), itself an
    H-group matrix whose determinant is Theta_H of its labels.
    """
    if a.group != group:
        raise GroupError("assignment belongs to a different group")
    C, H = _as_cayley_subgroup(group, subgroup)
    if not all(C.commute(g, h) for g in H for h in H):
        raise GroupError("block determinant needs an abelian subgroup")
    T = C.left_transversal(H)
    n, m = len(T), len(H)
    if n > max_index:
        raise ExpansionLimitError(f"index {n} exceeds the block limit {max_index}")

    values = a.values
    blocks = [[None] * n for _ in range(n)]
    for k, tk in enumerate(T):
        for l, tl in enumerate(T):
            tl_inv = C.inv(tl)
            block = np.empty((m, m), dtype=object)
            for i, hi in enumerate(H):
                for j, hj in enumerate(H):
                    block[i, j] = values[C.mul(C.mul(tk, C.mul(hi, C.inv(hj))), tl_inv)]
            group_matrix_labels(C, H, block, f"block ({k}, {l})")
            blocks[k][l] = block

    flat = [blocks[k][l] for k in range(n) for l in range(n)]
    for A, B in itertools.combinations(flat, 2):
        if not np.array_equal(A.dot(B), B.dot(A)):
            raise VerificationError("blocks of the group matrix do not commute")

    total = np.zeros((m, m), dtype=object)
    for sigma in itertools.permutations(range(n)):
        term = np.identity(m, dtype=object)
        for k in range(n):
            term = term.dot(blocks[k][sigma[k]])
        total = total + Permutation(list(sigma)).signature() * term
    return collapse_block_sum(C, H, total)


def collapse_block_sum(C: CayleyGroup, H: Sequence[int], total) -> int:
    """Theta_H of the labels of the summed block matrix"""
    labels = group_matrix_labels(C, H, total, "block sum")
    HC = cayley_subgroup_table(C, H)
    return eval_bareiss(HC, Assignment(HC, tuple(int(labels[i]) for i in range(len(H)))))


def factor_report_text(report: FactorReport) -> str:
    """Human-readable summary of a FactorReport"""
    G, H = report.group, report.subgroup
    lines = [
        f"Theta_{G.name} through a subgroup of order {H.size} (index {H.index})",
        f"  H = {H}",
        f"  T = {', '.join(str(t) for t in report.transversal)}",
    ]
    for chi, f in zip(report.characters, report.factors):
        lines.append(f"  F[{chi}] = {f}")
    for h in H.elements:
        lines.append(f"  z{h} = {report.z[h]}")
    lines.append(f"  Theta_H(z) = {report.theta_h}")
    lines.append(f"  product    = {report.product}")
    return "\n".join(lines)
