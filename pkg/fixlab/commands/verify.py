"""
Fixlab - Verify command
Runs the lemma sweep over a catalog and writes CSV and JSONL reports
"""

import argparse
import asyncio
import logging

from fixlab.catalog.builtin import validate_catalog
from fixlab.catalog.generators import gen_random_entries
from fixlab.utils.report_factory import ReportFactory
from fixlab.utils.verification_runner import DEFAULT_ALPHAS, parse_lemmas, run_verification

logger = logging.getLogger(__name__)


class Verify:
    """
    VERIFY
    - every applicable checker on every entry; failed hypotheses are logged and skipped
    - exit code 0 when every report holds, 1 otherwise
    """

    def __init__(self, app):
        self.app = app

    def register(self, subparsers, common) -> None:
        sub = subparsers.add_parser('verify', parents=[common], help="check every lemma on a catalog")
        sub.add_argument('--out', help="report directory (default FIXLAB_REPORT_DIR); '-' prints reports in --format to stdout")
        sub.add_argument('--lemmas', help="comma separated lemma ids, default all")
        sub.add_argument('--scatter', help="write rfx against |V| records to this file")
        sub.add_argument('--catalog', choices=('builtin', 'files'), default='builtin')
        sub.add_argument('--random', type=int, default=0,
                         help="add this many random transitive groups, drawn with --seed")
        sub.set_defaults(handler=self.verify)

    def verify(self, args: argparse.Namespace) -> int:
        settings = self.app.settings
        lemmas = parse_lemmas(args.lemmas)
        alphas = [args.alpha] if args.alpha is not None else list(DEFAULT_ALPHAS)
        registry = self.app.registry()
        entries = self.app.catalog(args)
        if args.random:
            entries = entries + validate_catalog(gen_random_entries(settings.seed, args.random), registry)
        to_stdout = args.out == '-'
        result = asyncio.run(run_verification(
            entries,
            lemmas,
            alphas,
            out_dir=None if to_stdout else settings.report_dir,
            registry=registry,
            workers=settings.workers,
            scatter_path=args.scatter,
        ))
        if to_stdout:
            print(ReportFactory.render(result.reports, settings.report_format), end='')
            return result.exit_code
        print(f"entries {len(entries)} reports {len(result.reports)} failures {len(result.failures)} "
              f"exclusions {len(result.exclusions)}")
        for path in result.paths:
            print(path)
        return result.exit_code


def setup(app):
    app.add_commands(Verify(app))
