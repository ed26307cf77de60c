#!/usr/bin/env python3
"""
Fixlab - Command line entry point
Permutation groups, orbital graphs and fixity, with a verification harness
for the fixity bounds of arc-transitive graphs
"""

import argparse
import importlib
import logging
import os
import sys
from fractions import Fraction
from typing import List, Optional

from fixlab.catalog.builtin import builtin_catalog, validate_catalog
from fixlab.catalog.constants import ConstantsRegistry
from fixlab.graphs.automorphisms import automorphism_group
from fixlab.models.catalog_entry import CatalogEntry, Provenance
from fixlab.models.errors import FixlabError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.parsers.constants_file import read_constants_file
from fixlab.parsers.graph_file import read_graph_file
from fixlab.parsers.group_file import read_group_file
from fixlab.utils.settings import REPORT_FORMATS, Settings

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

COMMAND_GROUPS = [
    'fixlab.commands.core',
    'fixlab.commands.catalog',
    'fixlab.commands.verify',
]


def parse_alpha(text: str) -> Fraction:
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"alpha must be a rational P/Q, got {text!r}") from None
    if not 0 < alpha <= 1:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1], got {text}")
    return alpha


def configure_logging(settings: Settings, verbose: bool = False) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags; subcommand copies use SUPPRESS so they never clobber values given earlier"""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument('--group', default=default(None), help="group file")
    parser.add_argument('--graph', default=default(None), help="graph file")
    parser.add_argument('--format', choices=REPORT_FORMATS, default=default(None), help="report format")
    parser.add_argument('--alpha', type=parse_alpha, default=default(None), help="fixity threshold P/Q")
    parser.add_argument('--seed', type=int, default=default(None), help="seed for randomized sweeps")
    parser.add_argument('--constants', default=default(None), help="c(L) constants file (JSON)")
    parser.add_argument('-v', '--verbose', action='store_true', default=default(False), help="debug logging")


class FixlabApp:
    """Owns settings, the c(L) registry and the loaded command groups"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()
        self.command_groups = []
        self._registry: Optional[ConstantsRegistry] = None

    def add_commands(self, group) -> None:
        self.command_groups.append(group)

    def load_command_groups(self) -> None:
        for name in COMMAND_GROUPS:
            module = importlib.import_module(name)
            module.setup(self)
            logger.debug(f"Loaded command group: {name}")

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog='fixlab', description=__doc__.strip().splitlines()[0])
        _global_flags(parser, suppress=False)
        common = argparse.ArgumentParser(add_help=False)
        _global_flags(common, suppress=True)
        subparsers = parser.add_subparsers(dest='command', required=True)
        for group in self.command_groups:
            group.register(subparsers, common)
        return parser

    def apply_flags(self, args: argparse.Namespace) -> None:
        out = getattr(args, 'out', None)
        self.settings = self.settings.override(
            report_format=args.format,
            seed=args.seed,
            constants_file=args.constants,
            report_dir=out if out != '-' else None,
        )

    # ------------------------------------------------------------------ inputs

    def group(self, args: argparse.Namespace) -> PermGroup:
        if not args.group:
            raise FixlabError("this command needs --group FILE")
        return read_group_file(args.group).group()

    def graph(self, args: argparse.Namespace) -> SimpleGraph:
        if not args.graph:
            raise FixlabError("this command needs --graph FILE")
        return read_graph_file(args.graph)

    def registry(self) -> ConstantsRegistry:
        if self._registry is None:
            registry = ConstantsRegistry.builtin()
            if self.settings.constants_file:
                registry.extend(read_constants_file(self.settings.constants_file))
            self._registry = registry
        return self._registry

    def catalog(self, args: argparse.Namespace) -> List[CatalogEntry]:
        if getattr(args, 'catalog', 'builtin') == 'builtin':
            return builtin_catalog(self.registry())
        graph = self.graph(args)
        entry_id = os.path.splitext(os.path.basename(args.graph))[0]
        if args.group:
            entry = CatalogEntry(entry_id, graph, self.group(args), Provenance.FILE)
        else:
            entry = CatalogEntry(entry_id, graph, automorphism_group(graph), Provenance.AUTOMORPHISM_SEARCH)
        return validate_catalog([entry], self.registry())

    # ------------------------------------------------------------------ run

    def run(self, argv: Optional[List[str]] = None) -> int:
        self.load_command_groups()
        parser = self.build_parser()
        args = parser.parse_args(argv)
        self.apply_flags(args)
        configure_logging(self.settings, args.verbose)
        try:
            return args.handler(args)
        except FixlabError as e:
            logger.error(f"❌ {e}")
            return 2
        except OSError as e:
            logger.error(f"❌ I/O error: {e}")
            return 2


def main(argv: Optional[List[str]] = None) -> int:
    return FixlabApp().run(argv)


if __name__ == "__main__":
    sys.exit(main())
