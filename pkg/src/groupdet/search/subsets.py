"""
Subset Relations
Membership predicates for known value sets, subset verification of searched
tables, and probes for strict inclusions
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..c8c2.classifier import classify

logger = logging.getLogger(__name__)


def _two_power_divides(n: int, t: int) -> bool:
    return n % (2 ** t) == 0


@dataclass(frozen=True)
class MembershipPredicate:
    """A test for membership in a value set

    `exact` is False when the test is only a necessary condition; a failed
    test still proves non-membership.
    """
    name: str
    test: Callable[[int], bool] = field(compare=False)
    exact: bool = True
    description: str = ""

    def __call__(self, n: int) -> bool:
        return bool(self.test(n))


PREDICATES: Dict[str, MembershipPredicate] = {
    "true": MembershipPredicate("true", lambda n: True, True, "every integer"),
    "C2": MembershipPredicate("C2", lambda n: n % 4 != 2, True, "integers not 2 mod 4"),
    "C4": MembershipPredicate("C4", lambda n: n % 2 == 1 or _two_power_divides(n, 4), True, "odd or divisible by 2^4"),
    "C8": MembershipPredicate("C8", lambda n: n % 2 == 1 or _two_power_divides(n, 5), True, "odd or divisible by 2^5"),
    "C2^4": MembershipPredicate("C2^4", lambda n: n % 2 == 1 or _two_power_divides(n, 16), False,
                                "odd or divisible by 2^16 (necessary only)"),
    "C8xC2": MembershipPredicate("C8xC2", lambda n: classify(n).member, True, "the C8 x C2 classification"),
}


def predicate_for(name: str) -> MembershipPredicate:
    """Look up a predicate by group name, case-insensitively"""
    key = name.strip().replace("×", "x").replace(" ", "")
    for pred_name, predicate in PREDICATES.items():
        if pred_name.lower() == key.lower():
            return predicate
    raise KeyError(f"no membership predicate for {name!r}; known: {', '.join(PREDICATES)}")


@dataclass
class SubsetReport:
    """Inner values checked against an outer predicate"""
    outer: str
    checked: int
    violations: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {'outer': self.outer, 'checked': self.checked, 'violations': list(self.violations),
                'passed': self.passed}


def verify_subset(inner: Union[Mapping[int, object], Sequence[int]], outer: MembershipPredicate) -> SubsetReport:
    """Every inner value must satisfy the outer predicate

    `inner` may be a ValueTable's witness map or any collection of values.
    """
    values = sorted(inner.witnesses if hasattr(inner, 'witnesses') else inner)
    violations = [n for n in values if not outer(n)]
    if violations:
        logger.warning("%d of %d values violate %s", len(violations), len(values), outer.name)
    return SubsetReport(outer.name, len(values), violations)


@dataclass(frozen=True)
class ProbeLink:
    """One claimed strict inclusion inner < outer"""
    inner: MembershipPredicate
    outer_name: str
    outer_values: Mapping[int, Optional[Tuple[int, ...]]]


@dataclass
class LinkResult:
    inner: str
    outer: str
    separating_value: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None

    @property
    def conclusive(self) -> bool:
        return self.separating_value is not None

    def to_dict(self) -> dict:
        return {
            'inner': self.inner,
            'outer': self.outer,
            'separating_value': self.separating_value,
            'witness': list(self.witness) if self.witness is not None else None,
            'status': 'separated' if self.conclusive else 'inconclusive',
        }


def strictness_probe(links: Sequence[ProbeLink]) -> List[LinkResult]:
    """For each link, the smallest outer value (by |n|) the inner predicate rejects"""
    results = []
    for link in links:
        result = LinkResult(link.inner.name, link.outer_name)
        for n in sorted(link.outer_values, key=lambda v: (abs(v), v)):
            if not link.inner(n):
                result.separating_value = n
                witness = link.outer_values[n]
                result.witness = tuple(witness) if witness is not None else None
                break
        if not result.conclusive:
            logger.info("no value separates %s from %s at this scale", link.inner.name, link.outer_name)
        results.append(result)
    return results
