"""
Oracle Cross-Checks
Runs the independent evaluators side by side on random assignments
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional

from .determinant import Assignment, eval_bareiss, eval_dedekind
from .factorization import DEFAULT_BLOCK_MAX_INDEX, block_determinant, eval_via_subgroup
from .groups import CayleyGroup, GroupLike, all_subgroups

logger = logging.getLogger(__name__)

ORACLE_GROUPS = ("C2", "C4", "C8", "C2^2", "C4xC2", "C8xC2", "C2^4", "C16", "D16")


@dataclass
class OracleReport:
    """Agreement of the evaluators on one group"""
    group: str
    samples: int
    subgroups: int
    block_subgroups: int
    mismatches: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            'group': self.group,
            'samples': self.samples,
            'subgroups': self.subgroups,
            'block_subgroups': self.block_subgroups,
            'mismatches': list(self.mismatches),
            'passed': self.passed,
        }


def _cayley_block_subgroups(C: CayleyGroup, max_index: int) -> List[tuple]:
    chosen = []
    for H in C.subgroups():
        if C.size // len(H) > max_index:
            continue
        if all(C.commute(g, h) for g in H for h in H):
            chosen.append(H)
    return chosen


def cross_check(group: GroupLike, rng: random.Random, samples: int = 100, bound: int = 5,
                block_max_index: int = 4, subgroup_limit: Optional[int] = None) -> OracleReport:
    """Compare Bareiss, the character product, every subgroup factorization and block determinants"""
    block_max_index = min(block_max_index, DEFAULT_BLOCK_MAX_INDEX)
    if isinstance(group, CayleyGroup):
        subgroups = []
        block_subgroups = _cayley_block_subgroups(group, block_max_index)
    else:
        subgroups = all_subgroups(group)
        if subgroup_limit is not None:
            subgroups = subgroups[:subgroup_limit]
        block_subgroups = [H for H in subgroups if H.index <= block_max_index]

    report = OracleReport(group.name, samples, len(subgroups), len(block_subgroups))
    for _ in range(samples):
        a = Assignment.random(group, rng, bound)
        expected = eval_bareiss(group, a)
        observed = {}
        if not isinstance(group, CayleyGroup):
            observed['dedekind'] = eval_dedekind(group, a)
            for H in subgroups:
                observed[f'subgroup{list(H.elements)}'] = eval_via_subgroup(group, H, a, verify=False).product
        for H in block_subgroups:
            key = f'block{list(H.elements) if not isinstance(group, CayleyGroup) else list(H)}'
            observed[key] = block_determinant(group, H, a, max_index=block_max_index)
        for name, value in observed.items():
            if value != expected:
                report.mismatches.append({'assignment': list(a.values), 'evaluator': name,
                                          'value': value, 'expected': expected})
    logger.info("%s: %d samples, %d mismatches", group.name, samples, len(report.mismatches))
    return report
