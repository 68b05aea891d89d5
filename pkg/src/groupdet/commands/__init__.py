"""
Commands module for groupdet
One command object per CLI subcommand
"""
from .base_command import BaseCommand, CommandConfig, CommandResult, CommandType
from .algebra_commands import EvalCommand, FactorCommand, ZpolyCommand
from .c8c2_commands import CheckLemmaCommand, ClassifyCommand, WitnessCommand
from .search_commands import SearchCommand, VerifySubsetCommand
from .selftest_command import SelfTestCommand

COMMANDS = {
    cls.command_type: cls
    for cls in (EvalCommand, FactorCommand, ZpolyCommand, ClassifyCommand, WitnessCommand,
                CheckLemmaCommand, SearchCommand, VerifySubsetCommand, SelfTestCommand)
}

__all__ = [
    'BaseCommand',
    'CommandConfig',
    'CommandResult',
    'CommandType',
    'COMMANDS',
    'EvalCommand',
    'FactorCommand',
    'ZpolyCommand',
    'ClassifyCommand',
    'WitnessCommand',
    'CheckLemmaCommand',
    'SearchCommand',
    'VerifySubsetCommand',
    'SelfTestCommand'
]
