"""`ultranorm` command-line entrypoint.

Exit codes: 0 success, 1 negative verdict under --expect, 2 malformed input,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from src import __version__
from src.cli.commands import CommandResult, run
from src.config import settings
from src.errors import DescriptorError, UltranormError
from src.reports.models import Report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultranorm",
        description="Exact computations in X-normed spaces over the p-adic rationals",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="Descriptor file ([field], [chain], [space], [class], [vectors])")
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument("--expect", action="store_true", help="Exit 1 when the primary verdict is negative")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="NHS, c0 and rigidity verdicts")

    gs = sub.add_parser("gs", parents=[common], help="Gram-Schmidt orthogonalization")
    gs.add_argument("vectors", nargs="+", help="Vector names from [vectors] or literals like 'e1 + 5*e2'")

    probe = sub.add_parser("probe", parents=[common], help="Exponent-class occupancy of a decreasing norm sequence")
    probe.add_argument("--gen", required=True, help="geometric:<x> | inclass:<m> | list:<x>;<x>;...")
    probe.add_argument("--steps", type=int, default=None, help="Terms to read (default from settings)")
    probe.add_argument("--bound", type=int, default=None, help="Stagnation bound per class (default from settings)")

    suite = sub.add_parser("suite", parents=[common], help="Randomized NHS and c0 checks")
    suite.add_argument("--samples", type=int, default=settings.ULTRANORM_SUITE_SAMPLES)
    suite.add_argument("--seed", type=int, default=settings.ULTRANORM_DEFAULT_SEED)

    shift = sub.add_parser("demo-shift", parents=[common], help="Shift isometry on a constant-norm system")
    shift.add_argument("-n", type=int, default=3, help="Shift length")
    shift.add_argument("--norm", default=None, help="Common norm (b@<element>, g^<m>)")

    phi = sub.add_parser("phi", parents=[common], help="max{g : g x0 <= x}")
    phi.add_argument("x")
    phi.add_argument("x0")

    dist = sub.add_parser("dist", parents=[common], help="Distance to a line or to the span of an orthogonal system")
    dist.add_argument("vector")
    dist.add_argument("span", nargs="+")

    ortho = sub.add_parser("check-ortho", parents=[common], help="Orthogonality of a pair or a system")
    ortho.add_argument("vectors", nargs="+")
    return parser


def render(report: Report) -> str:
    lines = [f"ultranorm {report.tool_version} {report.command}"]
    for check in report.checks:
        witness = "" if check.witness is None else "  " + json.dumps(check.witness, default=str)
        lines.append(f"  [{check.verdict.upper():4}] {check.name}{witness}")
        if check.basis:
            lines.append(f"         ({check.basis})")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        result: CommandResult = run(args)
    except DescriptorError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except UltranormError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.json:
        print(result.report.model_dump_json(indent=2))
    else:
        print(render(result.report))
    if args.expect and not result.primary:
        return EXIT_NEGATIVE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
