"""
Algebra Commands
eval, factor and zpoly: evaluating and factorizing group determinants
"""
import argparse
import logging

from ..core.determinant import Assignment, eval_bareiss, eval_dedekind
from ..core.errors import UsageError, VerificationError
from ..core.factorization import block_determinant, eval_via_subgroup, factor_report_text, symbolic_z
from ..core.groups import (CayleyGroup, Group, character_decomposition, parse_elements,
                           random_character_transversal, random_transversal, subgroup_closure)
from .base_command import BaseCommand, CommandResult, CommandType, check_length, parse_integers

logger = logging.getLogger(__name__)

ASSIGNMENT_HELP = ("comma-separated integers x_0,x_1,... by variable number; the first "
                   "coordinate runs fastest, so for C8xC2 x_j belongs to (r, s) with j = r + 8s")
SUBGROUP_HELP = ("subgroup generators as comma-separated elements with colon-separated "
                 "coordinates, e.g. 2 or 0:1,4:0; for dihedral groups use element indices")


def format_element(g) -> str:
    if isinstance(g, int):
        return str(g)
    return ":".join(str(c) for c in g)


class EvalCommand(BaseCommand):
    """Evaluate Theta_G at an integer assignment"""

    command_type = CommandType.EVAL
    help = "evaluate the group determinant at an integer assignment"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('group', help="group spec such as C8xC2, C4, C2^4 or D16")
        parser.add_argument('assignment', help=ASSIGNMENT_HELP)
        parser.add_argument('--evaluator', choices=('auto', 'bareiss', 'dedekind'), default='auto',
                            help="auto uses the character product for abelian groups")
        parser.add_argument('--check', action='store_true',
                            help="evaluate with every applicable method and require agreement")

    def prepare(self):
        args = self.config.arguments
        self.group = self.parse_group(args.group)
        values = parse_integers(args.assignment)
        check_length(values, self.group)
        self.assignment = Assignment.from_sequence(self.group, values)
        if args.evaluator == 'dedekind' and isinstance(self.group, CayleyGroup):
            raise UsageError(f"the character product needs an abelian group, not {self.group.name}")
        self.evaluator = args.evaluator
        if self.evaluator == 'auto':
            self.evaluator = 'bareiss' if isinstance(self.group, CayleyGroup) else 'dedekind'

    def _evaluate(self, evaluator: str) -> int:
        if evaluator == 'bareiss':
            return eval_bareiss(self.group, self.assignment)
        return eval_dedekind(self.group, self.assignment)

    def execute(self) -> CommandResult:
        value = self._evaluate(self.evaluator)
        payload = {
            'group': self.group.name,
            'assignment': self.assignment.as_sequence(),
            'evaluator': self.evaluator,
            'value': value,
        }
        if self.config.arguments.check:
            others = {'bareiss': eval_bareiss(self.group, self.assignment)}
            if not isinstance(self.group, CayleyGroup):
                others['dedekind'] = eval_dedekind(self.group, self.assignment)
            payload['checks'] = others
            disagree = {name: v for name, v in others.items() if v != value}
            if disagree:
                raise VerificationError(f"evaluators disagree: {self.evaluator}={value}, {disagree}")
        return CommandResult(payload=payload, text=str(value))


class _SubgroupCommand(BaseCommand):
    """Shared parsing of a group plus subgroup generators"""

    def prepare_subgroup(self, group_text: str, gens_text: str):
        self.group = self.parse_group(group_text)
        if isinstance(self.group, CayleyGroup):
            gens = parse_integers(gens_text, "subgroup generators") if gens_text.strip() not in ("e", "-") else []
            for g in gens:
                if not 0 <= g < self.group.size:
                    raise UsageError(f"{g} is not an element index of {self.group.name}")
            self.subgroup = self.group.closure(gens)
        else:
            self.subgroup = subgroup_closure(self.group, parse_elements(self.group, gens_text))


class FactorCommand(_SubgroupCommand):
    """Factor Theta_G(a) through a subgroup H"""

    command_type = CommandType.FACTOR
    help = "factor the group determinant through a subgroup"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('group', help="group spec such as C8xC2 or D16")
        parser.add_argument('subgroup', metavar='H-gens', help=SUBGROUP_HELP)
        parser.add_argument('assignment', help=ASSIGNMENT_HELP)
        parser.add_argument('--random-transversals', action='store_true',
                            help="draw the coset and character transversals at random (uses --seed)")

    def prepare(self):
        args = self.config.arguments
        self.prepare_subgroup(args.group, args.subgroup)
        values = parse_integers(args.assignment)
        check_length(values, self.group)
        self.assignment = Assignment.from_sequence(self.group, values)

    def _block(self):
        limit = self.setting('block.max_index', 5)
        index = self.group.size // len(self.subgroup)
        if index > limit:
            return None
        return block_determinant(self.group, self.subgroup, self.assignment, max_index=limit)

    def execute(self) -> CommandResult:
        if isinstance(self.group, CayleyGroup):
            value = self._block()
            if value is None:
                raise UsageError(f"index of the subgroup exceeds block.max_index for {self.group.name}")
            expected = eval_bareiss(self.group, self.assignment)
            if value != expected:
                raise VerificationError(f"block determinant {value} disagrees with Bareiss {expected}")
            payload = {'group': self.group.name, 'subgroup': list(self.subgroup),
                       'block_determinant': value, 'value': expected}
            return CommandResult(payload=payload, text=f"{self.group.name} block determinant = {value}")

        transversal = characters = None
        if self.config.arguments.random_transversals:
            rng = self.config.rng()
            transversal = random_transversal(self.group, self.subgroup, rng)
            characters = random_character_transversal(self.group, self.subgroup, rng)
        report = eval_via_subgroup(self.group, self.subgroup, self.assignment, transversal, characters)
        payload = report.to_dict()
        text = factor_report_text(report)
        block = self._block()
        if block is not None:
            payload['block_determinant'] = block
            text += f"\n  block det  = {block}"
            if block != report.product:
                raise VerificationError(f"block determinant {block} disagrees with {report.product}")
        return CommandResult(payload=payload, text=text)


class ZpolyCommand(_SubgroupCommand):
    """Print the integer polynomials z_h for a subgroup H"""

    command_type = CommandType.ZPOLY
    help = "print the polynomials z_h that Theta_H is evaluated at"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('group', help="abelian group spec such as C4 or C4xC2")
        parser.add_argument('subgroup', metavar='H-gens', help=SUBGROUP_HELP)

    def prepare(self):
        args = self.config.arguments
        self.prepare_subgroup(args.group, args.subgroup)
        if not isinstance(self.group, Group):
            raise UsageError("zpoly needs an abelian group")

    def execute(self) -> CommandResult:
        z = symbolic_z(
            self.group, self.subgroup,
            max_quotient_order_at_16=self.setting('symbolic.max_quotient_order_at_16', 4),
            max_terms=self.setting('symbolic.max_terms', 10 ** 5),
        )
        rows = []
        lines = [f"z_h for a subgroup of order {self.subgroup.size} in {self.group.name} "
                 f"(degree {self.subgroup.index})"]
        for h in self.subgroup.elements:
            poly = z[h]
            rows.append({'element': list(h), 'polynomial': poly.format(), 'terms': len(poly)})
            lines.append(f"  z[{format_element(h)}] = {poly.format()}")
        payload = {
            'group': self.group.name,
            'subgroup': [list(h) for h in self.subgroup.elements],
            'degree': self.subgroup.index,
            'characters_trivial_on_subgroup': [
                list(chi.exponents) for chi in character_decomposition(self.group, self.subgroup).trivial_on_subgroup
            ],
            'z': rows,
        }
        return CommandResult(payload=payload, text="\n".join(lines))
