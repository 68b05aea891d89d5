"""
Base Command Class
All CLI subcommands inherit from this
"""
import argparse
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ..core.errors import GroupDetError, GroupError, UsageError
from ..core.groups import GroupLike, parse_group_spec
from ..utils.settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CommandType(Enum):
    """Subcommands available on the command line"""
    EVAL = "eval"
    FACTOR = "factor"
    ZPOLY = "zpoly"
    CLASSIFY = "classify"
    WITNESS = "witness"
    CHECK_LEMMA = "check-lemma"
    SEARCH = "search"
    VERIFY_SUBSET = "verify-subset"
    SELFTEST = "selftest"


@dataclass
class CommandConfig:
    """Everything a command needs, validated before any computation"""
    command: CommandType
    arguments: argparse.Namespace
    settings: Settings
    json_output: bool = False
    threads: int = 1
    seed: int = 0
    out: Optional[str] = None

    @property
    def group(self) -> Optional[str]:
        return getattr(self.arguments, 'group', None)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass
class CommandResult:
    """Exit code plus the structured and rendered forms of the output"""
    exit_code: int = EXIT_OK
    payload: Dict[str, Any] = field(default_factory=dict)
    text: str = ""

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK


class BaseCommand:
    """Base class for all subcommands

    Subclasses declare their arguments in `add_arguments`, turn raw
    arguments into domain objects in `prepare`, and compute in `execute`.
    Anything `prepare` rejects is a usage error.
    """

    command_type: CommandType
    help: str = ""

    def __init__(self, config: CommandConfig):
        self.config = config
        self.settings = config.settings

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        """Register subcommand-specific arguments"""
        pass

    def prepare(self):
        """Parse and validate arguments; raise UsageError on bad input"""
        pass

    def execute(self) -> CommandResult:
        raise NotImplementedError

    def run(self) -> CommandResult:
        try:
            self.prepare()
        except UsageError:
            raise
        except (GroupDetError, ValueError, KeyError) as e:
            raise UsageError(_message(e)) from e
        logger.debug("running %s", self.command_type.value)
        return self.execute()

    def setting(self, key: str, default: Any = None) -> Any:
        return self.settings.get(key, default)

    def parse_group(self, text: str) -> GroupLike:
        try:
            return parse_group_spec(text, self.setting('cayley.associativity_check_limit', 32))
        except GroupError as e:
            raise UsageError(f"{e}; try C8xC2, C4, C2^4 or D16") from None


def parse_integers(text: str, what: str = "assignment") -> List[int]:
    """Comma-separated integers, e.g. "1,2,3,4" """
    parts = [part.strip() for part in text.split(",")] if text.strip() else []
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def parse_integer(text: str, what: str = "value") -> int:
    """An integer, also accepting the power form 2^11*3"""
    try:
        product = 1
        for factor in text.replace(" ", "").split("*"):
            base, _, exponent = factor.partition("^")
            product *= int(base) ** (int(exponent) if exponent else 1)
        return product
    except ValueError:
        raise UsageError(f"{what} must be an integer such as 2048 or 2^11*3, got {text!r}") from None


def check_length(values: Sequence[int], group: GroupLike, what: str = "assignment"):
    if len(values) != group.size:
        raise UsageError(f"{group.name} needs an {what} of {group.size} integers, got {len(values)}")


def _message(error: Exception) -> str:
    if isinstance(error, KeyError) and error.args:
        return str(error.args[0])
    return str(error)
