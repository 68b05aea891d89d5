"""
Search Commands
search and verify-subset
"""
import argparse
import logging
import re
from typing import Optional, Tuple

from ..c8c2.classifier import classify
from ..c8c2.residues import two_adic_pattern_check
from ..core.errors import SearchCapError, UsageError
from ..search.enumeration import EVALUATORS, SearchSpec, ValueTable, enumerate_values
from ..search.subsets import ProbeLink, predicate_for, strictness_probe, verify_subset
from .base_command import EXIT_FAILURE, BaseCommand, CommandResult, CommandType, parse_integer

logger = logging.getLogger(__name__)

_BOX = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_box(text: str) -> Tuple[int, int]:
    """"lo..hi" as a pair of integers"""
    match = _BOX.match(text)
    if not match:
        raise UsageError(f"box must look like lo..hi (write --box=-1..1 for negative bounds), got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise UsageError(f"box {text!r} is empty")
    return lo, hi


class SearchCommand(BaseCommand):
    """Scan a box of assignments for determinant values"""

    command_type = CommandType.SEARCH
    help = "enumerate group determinant values over a box of assignments"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('group', help="group spec such as C8xC2, C16 or D16")
        parser.add_argument('--box', default=None,
                            help="coordinate range lo..hi for every variable (default search.default_box)")
        parser.add_argument('--value-bound', type=str, default=None,
                            help="record only values with |value| <= B, e.g. 2^13")
        parser.add_argument('--sample', type=int, default=None,
                            help="draw this many seeded random points instead of a full scan")
        parser.add_argument('--evaluator', choices=EVALUATORS, default='auto')
        parser.add_argument('--verify-limit', type=int, default=None,
                            help="re-check only this many stored witnesses by Bareiss (default all)")

    def prepare(self):
        args = self.config.arguments
        self.group = self.parse_group(args.group)
        if args.box is not None:
            lo, hi = parse_box(args.box)
        else:
            lo, hi = self.setting('search.default_box', [0, 1])
        if args.value_bound is not None:
            value_bound: Optional[int] = parse_integer(args.value_bound, "value bound")
            if value_bound < 0:
                raise UsageError(f"--value-bound must be non-negative, got {value_bound}")
        else:
            value_bound = self.setting('search.value_bound')
        try:
            self.spec = SearchSpec.uniform(
                args.group, lo, hi,
                value_bound=value_bound,
                evaluator=args.evaluator,
                sample=args.sample,
                seed=self.config.seed,
                box_cap=self.setting('search.box_cap', 2 ** 26),
                chunk_count=self.setting('search.chunk_count', 64),
            )
        except SearchCapError as e:
            raise UsageError(f"{e}; narrow --box or pass --sample") from None

    def execute(self) -> CommandResult:
        table = enumerate_values(self.spec, workers=self.config.threads)
        mismatches = table.verify(self.config.arguments.verify_limit)
        payload = {'meta': table.meta(), 'values': table.values(),
                   'witness_mismatches': [{'value': v, 'witness': list(w), 'recomputed': r}
                                          for v, w, r in mismatches]}
        lines = [f"{self.group.name}: {len(table)} values from {table.scanned} points "
                 f"({table.evaluator}, {table.duration:.2f}s)",
                 "  " + " ".join(str(v) for v in table.values())]
        failed = bool(mismatches)

        if self.group.name == "C8xC2":
            bound = self.setting('classify.bound', 2 ** 63)
            excluded = [v for v in table.values() if not classify(v, bound).member]
            pattern = [v for v in table.values() if not two_adic_pattern_check(table.witnesses[v])]
            payload['classifier_excluded'] = excluded
            payload['two_adic_pattern_failures'] = pattern
            lines.append(f"  classifier consistency: {len(excluded)} excluded values found, "
                         f"{len(pattern)} 2-adic pattern failures")
            failed = failed or bool(excluded) or bool(pattern)

        out = self.config.out
        if out:
            if table.to_jsonl(out):
                self.settings.add_recent_output(out)
                lines.append(f"  table written to {out}")
            else:
                lines.append(f"  could not write the table to {out}")
                failed = True
        if mismatches:
            lines.append(f"  {len(mismatches)} witnesses failed the Bareiss re-check")
        return CommandResult(EXIT_FAILURE if failed else 0, payload, "\n".join(lines))


class VerifySubsetCommand(BaseCommand):
    """Check a searched table against a membership predicate"""

    command_type = CommandType.VERIFY_SUBSET
    help = "check every value of a searched table against a membership predicate"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--inner', default=None,
                            help="JSONL value table written by search --out (default: the most recent one)")
        parser.add_argument('--outer', required=True,
                            help="predicate: true, C2, C4, C8, C2^4 or C8xC2")
        parser.add_argument('--separate-from', default=None, metavar='PREDICATE',
                            help="also look for a table value this predicate rejects")

    def prepare(self):
        args = self.config.arguments
        self.outer = predicate_for(args.outer)
        self.separate = predicate_for(args.separate_from) if args.separate_from else None
        self.inner = args.inner or self._latest_table()
        try:
            self.table = ValueTable.from_jsonl(self.inner)
        except OSError as e:
            raise UsageError(f"cannot read {self.inner}: {e.strerror}") from None

    def _latest_table(self) -> str:
        tables = [p for p in self.settings.get_recent_outputs() if p.endswith(".jsonl")]
        if not tables:
            raise UsageError("no --inner table given and no recent search output to fall back on")
        logger.info("using the most recent table %s", tables[0])
        return tables[0]

    def execute(self) -> CommandResult:
        report = verify_subset(self.table, self.outer)
        payload = {'inner': self.inner, 'group': self.table.spec.group,
                   'subset': report.to_dict()}
        status = "no violations" if report.passed else f"{len(report.violations)} violations"
        lines = [f"{self.table.spec.group} table ({report.checked} values) against {self.outer.name}: {status}"]
        if not report.passed:
            lines.append("  " + " ".join(str(v) for v in report.violations[:20]))
        if not self.outer.exact and report.passed:
            lines.append(f"  note: {self.outer.name} is a necessary condition only")

        if self.separate is not None:
            link = ProbeLink(self.separate, self.table.spec.group, self.table.witnesses)
            result = strictness_probe([link])[0]
            payload['separation'] = result.to_dict()
            if result.conclusive:
                lines.append(f"  {result.separating_value} separates {self.table.spec.group} from "
                             f"{self.separate.name}, witness {','.join(str(x) for x in result.witness)}")
            else:
                lines.append(f"  no table value separates {self.table.spec.group} from {self.separate.name}")
        return CommandResult(0 if report.passed else EXIT_FAILURE, payload, "\n".join(lines))
