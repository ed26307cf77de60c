"""
Quotient orbit counts and the rank bound for semiregular groups
"""

import networkx as nx
import pytest

from fixlab.catalog.generators import gen_cayley, gen_from_edges
from fixlab.catalog.named_groups import cyclic, klein_four, symmetric
from fixlab.graphs.quotients import betti_bound, check_cover_rank, quotient_counts
from fixlab.models.errors import CapacityError, NotAutomorphismError, PreconditionError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation
from fixlab.models.reports import LemmaId

PETERSEN_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
FIVE_FOLD = PermGroup(10, [Permutation.from_cycles(10, [(0, 1, 2, 3, 4), (5, 6, 7, 8, 9)])])


def hexagon() -> SimpleGraph:
    return SimpleGraph.from_edges(6, nx.cycle_graph(6).edges())


def test_counts_for_regular_cyclic_action():
    assert quotient_counts(hexagon(), cyclic(6)) == (1, 1)
    assert betti_bound(hexagon(), cyclic(6)) == 1


def test_trivial_group_leaves_the_graph_unchanged():
    graph = SimpleGraph.from_edges(10, PETERSEN_EDGES)
    assert quotient_counts(graph, PermGroup.trivial(10)) == (10, 15)


def test_prism_rotation_counts():
    entry = gen_from_edges('prism5', 10, [(i, (i + 1) % 5) for i in range(5)]
                           + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
                           + [(i, 5 + i) for i in range(5)])
    assert quotient_counts(entry.graph, FIVE_FOLD) == (2, 3)


def test_cover_rank_on_cycle_is_tight():
    report = check_cover_rank(hexagon(), cyclic(6), instance_id="C6")
    assert report.lemma_id is LemmaId.LCOVER
    assert report.lhs == 1
    assert report.rhs == 1
    assert report.holds


def test_cover_rank_on_klein_cayley_graph():
    V = klein_four()
    entry = gen_cayley(V, [g for g in V.elements() if not g.is_identity()])
    report = check_cover_rank(entry.graph, entry.group)
    assert report.context['edge_orbits'] == 3
    assert report.lhs == 2
    assert report.rhs == 3
    assert report.holds


def test_cover_rank_on_petersen_rotation():
    graph = SimpleGraph.from_edges(10, PETERSEN_EDGES)
    report = check_cover_rank(graph, FIVE_FOLD)
    assert (report.lhs, report.rhs) == (1, 2)
    assert report.holds


def test_cover_rank_hypotheses():
    graph = SimpleGraph.from_edges(4, nx.complete_graph(4).edges())
    with pytest.raises(PreconditionError) as info:
        check_cover_rank(graph, symmetric(4))
    assert info.value.hypothesis == "semiregular"

    disconnected = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(PreconditionError) as info:
        check_cover_rank(disconnected, PermGroup.trivial(6))
    assert info.value.hypothesis == "connected"


def test_counts_reject_non_automorphisms():
    path = SimpleGraph.from_edges(4, nx.path_graph(4).edges())
    with pytest.raises(NotAutomorphismError):
        quotient_counts(path, cyclic(4))
    with pytest.raises(NotAutomorphismError):
        quotient_counts(path, cyclic(5))


def test_cover_rank_cap():
    with pytest.raises(CapacityError):
        check_cover_rank(hexagon(), cyclic(6), cap=3)
