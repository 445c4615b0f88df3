"""
Command-line surface: argument parsing and command handlers.
"""

from .commands import COMMANDS, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, evaluate_form, run_command
from .parser import CliConfig, Command, EvalMethod, FormName, OutputFormat, build_parser, config_from_args

__all__ = [
    'COMMANDS',
    'CliConfig',
    'Command',
    'EXIT_FAILURE',
    'EXIT_OK',
    'EXIT_USAGE',
    'EvalMethod',
    'FormName',
    'OutputFormat',
    'build_parser',
    'config_from_args',
    'evaluate_form',
    'run_command',
]
