"""
Main entry point of the fractional uncertainty toolkit.

Parses the command line, validates it and dispatches to the command
handlers. Exit codes: 0 success, 1 verification failure, 2 usage or input
error.
"""

import sys

from pydantic import ValidationError

from cli.commands import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, run_command
from cli.parser import build_parser, config_from_args
from oracle.base import OracleConvergenceError


def _first_validation_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"])
    message = error["msg"].removeprefix("Value error, ")
    return f"{location}: {message}" if location else message


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        cfg = config_from_args(args)
        return run_command(cfg)
    except ValidationError as e:
        print(f"[CLI] ERROR: {_first_validation_error(e)}", file=sys.stderr)
        return EXIT_USAGE
    except OracleConvergenceError as e:
        print(f"[CLI] ERROR: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, KeyError) as e:
        print(f"[CLI] ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
