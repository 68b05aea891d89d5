"""
C8 x C2 Commands
classify, witness and check-lemma
"""
import argparse
import logging

from ..c8c2.classifier import check_certificate, classify, verdict_text
from ..c8c2.residues import RESIDUE_CHECKS, residue_check
from ..c8c2.transform import C8XC2, alpha_beta_gamma, assignment_of, d8x2
from ..c8c2.witnesses import (PRIME_FAMILY_CASES, SMALL_FAMILY_CASES, prime_family_value, prime_family_witness,
                              small_family_value, small_family_witness, witness_for_value, zero_witness)
from ..core.determinant import eval_bareiss
from ..core.errors import FactorizationLimitError, UsageError, VerificationError
from .base_command import EXIT_FAILURE, BaseCommand, CommandResult, CommandType, parse_integer

logger = logging.getLogger(__name__)

WITNESS_KINDS = ("small", "prime", "value", "zero")


class ClassifyCommand(BaseCommand):
    """Decide membership in the C8 x C2 value set"""

    command_type = CommandType.CLASSIFY
    help = "decide whether an integer is a C8xC2 group determinant"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('n', help="the integer, e.g. 2048 or 2^11*17")
        parser.add_argument('--bound', type=int, default=None,
                            help="refuse |n| above this (default classify.bound)")

    def prepare(self):
        args = self.config.arguments
        self.n = parse_integer(args.n)
        self.bound = args.bound if args.bound is not None else self.setting('classify.bound', 2 ** 63)

    def execute(self) -> CommandResult:
        verdict = classify(
            self.n, self.bound,
            brute_force_limit=self.setting('number_theory.two_squares_brute_force_limit', 10 ** 6),
        )
        checked = check_certificate(verdict)
        payload = verdict.to_dict()
        payload['certificate_checked'] = checked
        text = verdict_text(verdict)
        if not checked:
            logger.error("certificate for %d failed its re-check", self.n)
            return CommandResult(EXIT_FAILURE, payload, text + "\n  certificate re-check FAILED")
        return CommandResult(payload=payload, text=text)


class WitnessCommand(BaseCommand):
    """Build an explicit assignment and verify its value"""

    command_type = CommandType.WITNESS
    help = "build a C8xC2 assignment realizing a member value"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('kind', choices=WITNESS_KINDS,
                            help="small CASE M [N] | prime CASE P M | value N | zero")
        parser.add_argument('params', nargs='*', help="integer parameters for the chosen kind")

    def prepare(self):
        args = self.config.arguments
        params = [parse_integer(p, "witness parameter") for p in args.params]
        self.kind = args.kind
        expected = {"small": (2, 3), "prime": (3, 3), "value": (1, 1), "zero": (0, 0)}[self.kind]
        if not expected[0] <= len(params) <= expected[1]:
            raise UsageError(f"witness {self.kind} takes {expected[0]}"
                             + (f"-{expected[1]}" if expected[1] != expected[0] else "")
                             + f" parameters, got {len(params)}")
        if self.kind == "small" and params[0] not in SMALL_FAMILY_CASES:
            raise UsageError(f"small families are numbered {SMALL_FAMILY_CASES[0]}..{SMALL_FAMILY_CASES[-1]}")
        if self.kind == "prime" and params[0] not in PRIME_FAMILY_CASES:
            raise UsageError(f"prime families are numbered {PRIME_FAMILY_CASES[0]}..{PRIME_FAMILY_CASES[-1]}")
        self.params = params

    def _build(self):
        if self.kind == "small":
            return small_family_witness(*self.params), small_family_value(*self.params)
        if self.kind == "prime":
            case, p, m = self.params
            return prime_family_witness(case, p, m), prime_family_value(case, p, m)
        if self.kind == "value":
            return witness_for_value(self.params[0]), self.params[0]
        return zero_witness(), 0

    def execute(self) -> CommandResult:
        a, target = self._build()
        value = d8x2(a)
        bareiss = eval_bareiss(C8XC2, assignment_of(a))
        if not value == bareiss == target:
            raise VerificationError(f"witness {list(a)} gives {value} (Bareiss {bareiss}), expected {target}")
        try:
            clause = classify(value, self.setting('classify.bound', 2 ** 63)).clause.value
        except FactorizationLimitError as e:
            logger.warning("witness verified, but its value could not be classified: %s", e)
            clause = None
        payload = {
            'kind': self.kind,
            'params': self.params,
            'witness': list(a),
            'value': value,
            'clause': clause,
            'alpha_beta_gamma': alpha_beta_gamma(a).to_dict(),
        }
        text = f"{','.join(str(x) for x in a)}\n  D8x2 = {value} ({clause or 'clause unavailable'})"
        return CommandResult(payload=payload, text=text)


class CheckLemmaCommand(BaseCommand):
    """Run exhaustive residue checks"""

    command_type = CommandType.CHECK_LEMMA
    help = "run an exhaustive congruence check (or all of them)"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('check_id', metavar='id', choices=tuple(RESIDUE_CHECKS) + ("all",),
                            help="one of " + ", ".join(RESIDUE_CHECKS) + ", or all")

    def execute(self) -> CommandResult:
        check_id = self.config.arguments.check_id
        ids = list(RESIDUE_CHECKS) if check_id == "all" else [check_id]
        reports = [residue_check(i) for i in ids]
        passed = all(r.passed for r in reports)
        payload = {'checks': [r.to_dict() for r in reports], 'passed': passed}
        text = "\n".join(r.summary() for r in reports)
        return CommandResult(0 if passed else EXIT_FAILURE, payload, text)
