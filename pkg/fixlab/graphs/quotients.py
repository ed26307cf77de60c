"""
Fixlab - Quotients
Orbit counts of a group on vertices and edges, and the rank bound for
semiregular groups
"""

import logging
from typing import Tuple

from fixlab.graphs.orbital import is_connected
from fixlab.groups.actions import edge_action, find_orbits, point_action
from fixlab.groups.structure import RANK_CAP, group_rank
from fixlab.models.errors import NotAutomorphismError, PreconditionError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.reports import BoundReport, LemmaId, Relation

logger = logging.getLogger(__name__)


def quotient_counts(graph: SimpleGraph, G: PermGroup) -> Tuple[int, int]:
    """(number of vertex orbits, number of edge orbits)"""
    if G.degree != graph.n_vertices:
        raise NotAutomorphismError(f"group degree {G.degree} != {graph.n_vertices} vertices")
    for g in G.generators:
        if not graph.is_automorphism(g):
            raise NotAutomorphismError(f"{g.cycle_notation()} does not preserve adjacency")
    vertex_orbits = find_orbits(G.generators, range(graph.n_vertices), point_action)
    edge_orbits = find_orbits(G.generators, graph.edges(), edge_action)
    return len(vertex_orbits), len(edge_orbits)


def betti_bound(graph: SimpleGraph, G: PermGroup) -> int:
    """Cycle rank of the quotient graph: edge orbits - vertex orbits + 1"""
    vertices, edges = quotient_counts(graph, G)
    return edges - vertices + 1


def check_cover_rank(graph: SimpleGraph, G: PermGroup, instance_id: str = "", cap: int = RANK_CAP) -> BoundReport:
    if not is_connected(graph):
        raise PreconditionError("connected", "graph is disconnected")
    if not G.is_semiregular():
        raise PreconditionError("semiregular", "some vertex stabiliser is nontrivial")
    vertices, edges = quotient_counts(graph, G)
    rank = group_rank(G, cap)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LCOVER,
        lhs=rank,
        rhs=edges - vertices + 1,
        relation=Relation.LE,
        context={
            'order': G.order(),
            'vertex_orbits': vertices,
            'edge_orbits': edges,
        },
    )
