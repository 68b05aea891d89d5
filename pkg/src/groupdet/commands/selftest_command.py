"""
Self Test Command
Residue check suite plus evaluator agreement on the desk-scale groups
"""
import argparse
import logging

from ..c8c2.residues import residue_suite
from ..core.oracle import ORACLE_GROUPS, cross_check
from .base_command import EXIT_FAILURE, BaseCommand, CommandResult, CommandType

logger = logging.getLogger(__name__)


class SelfTestCommand(BaseCommand):
    command_type = CommandType.SELFTEST
    help = "run every residue check and cross-check all evaluators"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--samples', type=int, default=100,
                            help="random assignments per group (default 100)")
        parser.add_argument('--bound', type=int, default=5, help="entries are drawn from -bound..bound")
        parser.add_argument('--groups', default=",".join(ORACLE_GROUPS),
                            help="comma-separated groups to cross-check")
        parser.add_argument('--skip-residues', action='store_true')

    def prepare(self):
        args = self.config.arguments
        if args.samples < 1:
            raise ValueError("--samples must be positive")
        self.groups = [self.parse_group(name) for name in args.groups.split(",") if name.strip()]

    def execute(self) -> CommandResult:
        args = self.config.arguments
        lines = []
        residues = [] if args.skip_residues else residue_suite()
        lines.extend(r.summary() for r in residues)

        rng = self.config.rng()
        block_limit = min(4, self.setting('block.max_index', 5))
        oracles = []
        for group in self.groups:
            report = cross_check(group, rng, samples=args.samples, bound=args.bound, block_max_index=block_limit)
            oracles.append(report)
            status = "pass" if report.passed else f"FAIL ({len(report.mismatches)} mismatches)"
            lines.append(f"oracle {report.group}: {status}, {report.samples} samples, "
                         f"{report.subgroups} subgroups, {report.block_subgroups} block layouts")

        passed = all(r.passed for r in residues) and all(r.passed for r in oracles)
        lines.append("selftest passed" if passed else "selftest FAILED")
        payload = {
            'residues': [r.to_dict() for r in residues],
            'oracles': [r.to_dict() for r in oracles],
            'passed': passed,
        }
        return CommandResult(0 if passed else EXIT_FAILURE, payload, "\n".join(lines))
