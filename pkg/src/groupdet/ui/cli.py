"""
Command Line Interface
Parses arguments, dispatches to a command and renders its result
"""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from ..commands import COMMANDS, CommandConfig, CommandResult, CommandType
from ..commands.base_command import EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from ..core.errors import GroupDetError, UsageError
from ..utils.export import ReportExporter
from ..utils.settings import Settings

logger = logging.getLogger(__name__)

DESCRIPTION = """Group determinants of finite abelian groups and the integer
group determinants of C8xC2.

Assignments are comma-separated integers x_0,x_1,... by variable number, with
the first group coordinate running fastest: for C8xC2 the value x_j belongs
to the element (r, s) with j = r + 8s."""

_handler: Optional[logging.Handler] = None


def configure_logging(verbosity: int, stream: Optional[TextIO] = None):
    """Route the package's log records to stderr at the requested level"""
    global _handler
    package_logger = logging.getLogger("groupdet")
    if _handler is not None:
        package_logger.removeHandler(_handler)
    _handler = logging.StreamHandler(stream or sys.stderr)
    _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger.addHandler(_handler)
    package_logger.propagate = False
    if verbosity > 0:
        package_logger.setLevel(logging.DEBUG)
    elif verbosity < 0:
        package_logger.setLevel(logging.ERROR)
    else:
        package_logger.setLevel(logging.WARNING)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="print the result as JSON")
    common.add_argument('--threads', type=int, default=None, metavar='N',
                        help="worker processes for searches (default runtime.threads)")
    common.add_argument('--seed', type=int, default=None, metavar='S',
                        help="random seed for sampled and randomized commands (default runtime.seed)")
    common.add_argument('--out', default=None, metavar='PATH',
                        help="write the result there as JSON, or as text for a .txt path (search writes a JSONL value table)")
    common.add_argument('--config', default=None, metavar='PATH',
                        help="settings file (default ~/.groupdet/settings.json)")
    volume = common.add_mutually_exclusive_group()
    volume.add_argument('-v', '--verbose', action='store_true', help="log progress and debug detail")
    volume.add_argument('-q', '--quiet', action='store_true', help="log errors only")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupdet",
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = _common_options()
    subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)
    for command_type, command_class in COMMANDS.items():
        sub = subparsers.add_parser(command_type.value, parents=[common], help=command_class.help,
                                    description=command_class.help)
        command_class.add_arguments(sub)
    return parser


def make_config(args: argparse.Namespace) -> CommandConfig:
    settings = Settings(args.config)
    threads = args.threads if args.threads is not None else settings.get('runtime.threads', 1)
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    return CommandConfig(
        command=CommandType(args.command),
        arguments=args,
        settings=settings,
        json_output=args.json,
        threads=threads,
        seed=args.seed if args.seed is not None else settings.get('runtime.seed', 0),
        out=args.out,
    )


def render(result: CommandResult, config: CommandConfig) -> str:
    if config.json_output:
        return ReportExporter.to_json(result.payload)
    return result.text


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Run one command; returns 0 on success, 1 on a failed check, 2 on bad usage"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(1 if args.verbose else -1 if args.quiet else 0, stderr)
    try:
        config = make_config(args)
        command = COMMANDS[config.command](config)
        result = command.run()
    except UsageError as e:
        print(f"groupdet {args.command}: error: {e}", file=stderr)
        return EXIT_USAGE
    except GroupDetError as e:
        logger.debug("command failed", exc_info=True)
        print(f"groupdet {args.command}: {type(e).__name__}: {e}", file=stderr)
        return EXIT_FAILURE

    print(render(result, config), file=stdout)
    if config.out and config.command is not CommandType.SEARCH:
        if config.out.endswith(".txt"):
            written = ReportExporter.save_text(config.out, result.text)
        else:
            written = ReportExporter.save_json(config.out, result.payload)
        if written:
            config.settings.add_recent_output(config.out)
        else:
            return EXIT_FAILURE
    return result.exit_code
