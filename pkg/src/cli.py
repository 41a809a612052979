"""
Command Line - Rees Hochschild

Command dispatch only. The work lives in the handlers/ package.

Exit codes: 0 all assertions passed, 1 an assertion failed, 2 input or
validation error, 3 size guard.
"""

import argparse
import logging
import sys
import time
from dataclasses import replace
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import List, Optional, Tuple

from config import DEGREE_CAP, LOG_DIR, LOG_LEVEL, MAX_DEGREE, SEED, WORKERS
from handlers import (
    RunOptions, RunReport, build_provenance, handle_checks, handle_hh, handle_morita,
    render_text, write_json,
)
from instance import InstanceConfig, build_semigroup, load_config
from shared.errors import DiscrepancyError, SizeGuardError, ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_VALIDATION = 2
EXIT_SIZE_GUARD = 3

COMMANDS = {
    'hh': (handle_hh,),
    'morita': (handle_morita,),
    'checks': (handle_checks,),
    'all': (handle_hh, handle_morita, handle_checks),
}


def setup_logging(level: str = LOG_LEVEL, log_dir: str = LOG_DIR) -> None:
    """Rotating file log plus console on stderr; reports go to stdout."""
    root_logger = logging.getLogger()
    if any(isinstance(h, RotatingFileHandler) for h in root_logger.handlers):
        return
    logs = Path(log_dir)
    logs.mkdir(parents=True, exist_ok=True)
    log_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    log_level = getattr(logging, level.upper(), logging.INFO)

    file_handler = RotatingFileHandler(
        logs / "rees_hochschild.log",
        maxBytes=5 * 1024 * 1024,  # 5MB
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setFormatter(logging.Formatter(log_format))
    file_handler.setLevel(log_level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(log_format))
    console_handler.setLevel(log_level)

    root_logger.setLevel(log_level)
    root_logger.addHandler(file_handler)
    root_logger.addHandler(console_handler)


def parse_position(text: str) -> Tuple[int, int]:
    """'i,lambda' (1-based) -> 0-based pair."""
    try:
        i, lam = (int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'i,lambda' with integers, got {text!r}") from None
    if i < 1 or lam < 1:
        raise argparse.ArgumentTypeError("indices are 1-based")
    return i - 1, lam - 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='rees-hochschild',
        description='Exact Hochschild homology and Morita certificates for Rees semigroup algebras.',
    )
    parser.add_argument('command', choices=sorted(COMMANDS), help='what to run')
    parser.add_argument('config', help='instance file (text or JSON)')
    parser.add_argument('--max-degree', type=int, default=None,
                        help=f'top degree of every complex (default {MAX_DEGREE} or the config value)')
    parser.add_argument('--idempotent', type=parse_position, default=None, metavar='I,LAMBDA',
                        help='position of the Morita idempotent, 1-based')
    parser.add_argument('--force', action='store_true', help='override the size guards')
    parser.add_argument('--oracle', action='store_true', help='run dense brute-force cross-checks')
    parser.add_argument('--seed', type=int, default=SEED, help='seed for sampled checks')
    parser.add_argument('--workers', type=int, default=WORKERS, help='processes for homology columns')
    parser.add_argument('--json', metavar='PATH', default=None, help='write the canonical JSON report')
    parser.add_argument('--log-level', default=LOG_LEVEL)
    return parser


def run(command: str, config: InstanceConfig, options: RunOptions) -> RunReport:
    """
    Build the instance and run every handler of a command.

    Raises:
        ValidationError: Bad input
        SizeGuardError: A cap was exceeded
        DiscrepancyError: An asserted identity failed
    """
    if options.force and not config.force:
        config = replace(config, force=True)
    s = build_semigroup(config, options.seed)
    report = RunReport(command, config, provenance=build_provenance(options))
    for handler in COMMANDS[command]:
        start = time.perf_counter()
        result = handler(s, options)
        name = handler.__name__.replace('handle_', '')
        report.timings[name] = time.perf_counter() - start
        report.checks.extend(result.pop('checks', []))
        report.sections.update(result)
    return report


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)

    try:
        config = load_config(args.config)
        max_degree = args.max_degree if args.max_degree is not None else config.max_degree
        force = args.force or config.force
        if max_degree > DEGREE_CAP and not force:
            raise SizeGuardError('max degree', max_degree, DEGREE_CAP)
        if max_degree < 1:
            raise ValidationError(f"max degree must be >= 1, got {max_degree}")
        options = RunOptions(
            max_degree=max_degree,
            position=args.idempotent,
            force=force,
            oracle=args.oracle,
            seed=args.seed,
            workers=args.workers,
            chain_cap=sys.maxsize if force else config.chain_dim_cap,
        )
        if force:
            options.homotopy_cap = sys.maxsize
        report = run(args.command, config, options)
    except ValidationError as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except SizeGuardError as e:
        logger.error(f"Size guard: {e}")
        print(f"size guard: {e} (use --force to override)", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except DiscrepancyError as e:
        logger.error(f"Discrepancy: {e}", exc_info=True)
        print(f"discrepancy: {e}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except OSError as e:
        logger.error(f"Cannot read {args.config}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    sys.stdout.write(render_text(report))
    if args.json:
        write_json(report, args.json)
    return EXIT_OK if report.passed else EXIT_DISCREPANCY


if __name__ == '__main__':
    sys.exit(main())
