"""
Fixlab - Catalog commands
"""

import argparse
import logging

logger = logging.getLogger(__name__)


class CatalogCommands:
    """Listing of catalog entries with their derived tags"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers, common) -> None:
        catalog = subparsers.add_parser('catalog', parents=[common], help="inspect the instance catalog")
        actions = catalog.add_subparsers(dest='catalog_action', required=True)
        sub = actions.add_parser('list', parents=[common], help="list entries with order and tags")
        sub.add_argument('--catalog', choices=('builtin', 'files'), default='builtin')
        sub.set_defaults(handler=self.list_entries)

    def list_entries(self, args: argparse.Namespace) -> int:
        entries = self.app.catalog(args)
        for entry in entries:
            print(f"{entry.id}\tvertices={entry.graph.n_vertices}\tedges={entry.graph.edge_count()}\t"
                  f"order={entry.group.order()}\tprovenance={entry.provenance.value}\t"
                  f"tags={','.join(entry.sorted_tags())}")
        logger.info(f"Listed {len(entries)} catalog entries")
        return 0


def setup(app):
    app.add_commands(CatalogCommands(app))
