"""
UI module for groupdet
Contains the command-line surface
"""
from .cli import build_parser, configure_logging, run

__all__ = ['build_parser', 'configure_logging', 'run']
