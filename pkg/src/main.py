"""
Command-line front end.

    python3 src/main.py SUBCOMMAND [--in FILE] [--map FILE] [--model FILE]
        [--geometry FILE] [--sym3 FILE] [--free NAME=VALUE ...] [--v V --w W]
        [--catalog FILE] [--out FILE] [--log-level LEVEL]

Exactly one document is written to standard output (or to --out). Exit codes:
0 success, 1 domain error, 2 usage error.
"""

import argparse
import asyncio
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from src.services.documents import dumps
from src.services.errors import ProjectiveToolkitError, UsageError
from src.toolkit.manager import ToolkitManager

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

logger = logging.getLogger("cli")


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad invocations as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def build_parser(commands: Sequence[str]) -> ArgumentParser:
    parser = ArgumentParser(prog="projective-connections", description="Exact computations with projective connections.")
    parser.add_argument("command", choices=list(commands), help="subcommand")
    parser.add_argument("--in", dest="input", metavar="FILE", help="input document ('-' for standard input)")
    parser.add_argument("--map", metavar="FILE", help="jetmap document")
    parser.add_argument("--model", metavar="FILE", help="frame model document")
    parser.add_argument("--geometry", metavar="FILE", help="geometry document")
    parser.add_argument("--sym3", metavar="FILE", help="2x2 matrix document for g-matrix")
    parser.add_argument("--free", action="append", default=[], metavar="NAME=VALUE", help="free parameter (repeatable)")
    parser.add_argument("--catalog", metavar="FILE", help="printed-formula catalogue for verify-errata")
    parser.add_argument("--v", help="direction of a single element")
    parser.add_argument("--w", help="curvature coordinate of a single element")
    parser.add_argument("--out", metavar="FILE", help="write the document here instead of standard output")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def parse_free(pairs: Sequence[str]) -> Dict[str, str]:
    free = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise UsageError(f"--free expects NAME=VALUE, got {pair!r}")
        free[name.strip()] = value.strip()
    return free


def setup_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr, force=True)


async def execute(manager: ToolkitManager, args: argparse.Namespace) -> Tuple[int, Dict[str, Any]]:
    request = {
        "input": args.input,
        "map": args.map,
        "model": args.model,
        "geometry": args.geometry,
        "sym3": args.sym3,
        "v": args.v,
        "w": args.w,
        "free": parse_free(args.free),
        "catalog": args.catalog,
    }
    result = await manager.dispatch(args.command, request)
    if result.get("success"):
        if args.out:
            await manager.route(args.command).write_document(args.out, result["document"])
            return EXIT_OK, {}
        return EXIT_OK, result["document"]
    return EXIT_DOMAIN, result["error"]


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one subcommand.

    Returns:
        int: The exit code
    """
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        manager = ToolkitManager(ROOT)
        manager.load_toolkits()
        args = build_parser(manager.commands()).parse_args(argv)
        setup_logging(args.log_level)
        code, document = asyncio.run(execute(manager, args))
    except UsageError as e:
        code, document = EXIT_USAGE, e.to_document()
    except ProjectiveToolkitError as e:
        logger.error(f"{e.condition}: {e}")
        code, document = EXIT_DOMAIN, e.to_document()
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        code, document = EXIT_DOMAIN, {"kind": "error", "condition": "internal-error", "message": str(e)}
    if document:
        stdout.write(dumps(document))
        stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(run())
