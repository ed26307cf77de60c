"""
Fixlab - Core group commands
order, orbits, suborbits, orbital, fixity and threshold
"""

import argparse
import logging

import mpmath

from fixlab.bounds.special_functions import n_threshold
from fixlab.graphs.orbital import orbital_digraph, paired_suborbit, suborbits
from fixlab.groups.fixity import fixity_search, relative_fixity
from fixlab.groups.structure import CLASS_CAP
from fixlab.models.errors import FixlabError
from fixlab.parsers.graph_file import print_orbital

logger = logging.getLogger(__name__)


class Core:
    """
    CORE COMMANDS
    - every command reads the group given by --group
    - output goes to stdout, one record per line
    """

    def __init__(self, app):
        self.app = app

    def register(self, subparsers, common) -> None:
        sub = subparsers.add_parser('order', parents=[common], help="print the group order")
        sub.set_defaults(handler=self.order)

        sub = subparsers.add_parser('orbits', parents=[common], help="print the orbits, one per line")
        sub.set_defaults(handler=self.orbits)

        sub = subparsers.add_parser('suborbits', parents=[common], help="print the suborbits at a point")
        sub.add_argument('--point', type=int, default=0, help="base point (default 0)")
        sub.set_defaults(handler=self.suborbits)

        sub = subparsers.add_parser('orbital', parents=[common], help="export the orbital digraph of (point, rep)")
        sub.add_argument('--point', type=int, default=0, help="base point (default 0)")
        sub.add_argument('--rep', type=int, required=True, help="suborbit representative")
        sub.set_defaults(handler=self.orbital)

        sub = subparsers.add_parser('fixity', parents=[common], help="print rfx, fixity and a witness")
        sub.set_defaults(handler=self.fixity)

        sub = subparsers.add_parser('threshold', parents=[common], help="print log10 N for a local group")
        target = sub.add_mutually_exclusive_group(required=True)
        target.add_argument('--local', help="registered local group name, e.g. 'Sym(3)'")
        target.add_argument('--c', type=int, help="stabiliser bound c(L)")
        sub.set_defaults(handler=self.threshold)

    def order(self, args: argparse.Namespace) -> int:
        print(self.app.group(args).order())
        return 0

    def orbits(self, args: argparse.Namespace) -> int:
        for orb in self.app.group(args).orbits():
            print(' '.join(map(str, orb)))
        return 0

    def suborbits(self, args: argparse.Namespace) -> int:
        G = self.app.group(args)
        for spec in suborbits(G, args.point):
            paired = ' '.join(map(str, sorted(paired_suborbit(spec))))
            points = ' '.join(map(str, sorted(spec.suborbit)))
            print(f"rep {spec.rep} size {spec.size} self_paired {str(spec.self_paired).lower()} "
                  f"points {points} paired {paired}")
        return 0

    def orbital(self, args: argparse.Namespace) -> int:
        spec = orbital_digraph(self.app.group(args), args.point, args.rep)
        print(print_orbital(spec), end='')
        return 0

    def fixity(self, args: argparse.Namespace) -> int:
        G = self.app.group(args)
        if G.order() == 1:
            raise FixlabError("relative fixity is undefined for the trivial group")
        result = relative_fixity(G) if G.order() <= CLASS_CAP else fixity_search(G)
        print(f"rfx {result.rfx} fixity {result.fixity} witness {result.witness.cycle_notation()}")
        return 0

    def threshold(self, args: argparse.Namespace) -> int:
        if args.alpha is None:
            raise FixlabError("threshold needs --alpha P/Q")
        if args.local is not None:
            entry = self.app.registry().get(args.local)
            c, name = entry.constant, entry.name
        else:
            c, name = args.c, f"c={args.c}"
        log10_n = n_threshold(c, args.alpha)
        logger.info(f"log10 N({name}, {args.alpha}) = {mpmath.nstr(log10_n, 12)}")
        print(f"{name} alpha {args.alpha} log10_N {mpmath.nstr(log10_n, 15)}")
        return 0


def setup(app):
    app.add_commands(Core(app))
