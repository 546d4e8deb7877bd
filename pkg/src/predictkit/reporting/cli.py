"""
Command-line entry point
"""
import argparse
import logging
from pathlib import Path
from typing import List, Optional

from predictkit import __version__
from predictkit.utils.config import load_run_config, settings
from predictkit.utils.logging import setup_logging

from .errors import ExitCode, run_with_exit_code
from .pipeline import Stage, run_pipeline

logger = logging.getLogger(__name__)

COMMAND_STAGES = {
    "tables": [Stage.TABLES],
    "sim": [Stage.SIM],
    "all": [Stage.TABLES, Stage.SIM],
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="predictkit",
        description="Return predictability across countries and asset classes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--data", type=Path, action="append", help="Panel file (repeat for several)"
    )
    common.add_argument("--config", type=Path, help="YAML run configuration")
    common.add_argument("--out", type=Path, dest="output_dir", help="Output directory")
    common.add_argument("--seed", type=int, help="Simulation seed")
    common.add_argument("--reps", type=int, dest="sim_reps", help="Simulation repetitions")
    common.add_argument(
        "--format",
        choices=["csv", "markdown"],
        action="append",
        dest="formats",
        help="Output format (repeat for both)",
    )
    common.add_argument("--workers", type=int, help="Worker threads")
    common.add_argument("--release", help="Data-release label for the manifest")
    common.add_argument(
        "--blank", action="store_true", default=None, help="Render non-Y summary cells empty"
    )
    common.add_argument(
        "--dump-derived",
        action="store_true",
        default=None,
        dest="dump_derived",
        help="Write every derived series to derived.csv",
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        default=None,
        help="Debug logging and extra economic-value columns",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("tables", parents=[common], help="Summary and regression tables")
    subparsers.add_parser("sim", parents=[common], help="Null simulation of the pooled VAR")
    subparsers.add_parser("all", parents=[common], help="Tables and simulation")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the pipeline and return the exit code"""
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else settings.log_level)

    def run() -> int:
        settings.log_configuration()
        overrides = {
            "data": args.data,
            "output_dir": args.output_dir,
            "seed": args.seed,
            "sim_reps": args.sim_reps,
            "formats": args.formats,
            "workers": args.workers,
            "release": args.release,
            "blank": args.blank,
            "dump_derived": args.dump_derived,
            "verbose": args.verbose,
        }
        config = load_run_config(args.config, overrides)
        config.log_configuration()

        result = run_pipeline(config, COMMAND_STAGES[args.command])
        logger.info(f"Wrote {len(result.files)} files to {result.output_dir}")
        if result.partial:
            logger.warning(f"Run finished with {len(result.failures)} failed stages")
            return ExitCode.PARTIAL
        return ExitCode.SUCCESS

    return run_with_exit_code(run)
