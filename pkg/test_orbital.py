"""
Suborbits, orbital digraphs, automorphism search and transitivity profiles
"""

import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from fixlab.catalog.generators import gen_lcf, gen_wreath_lexico
from fixlab.catalog.named_groups import cyclic, dihedral, symmetric
from fixlab.graphs.automorphisms import automorphism_group, refine
from fixlab.groups.oracles import random_transitive_group
from fixlab.graphs.orbital import (
    bipartition,
    higman_check,
    is_complete_bipartite,
    is_connected,
    local_action,
    orbital_digraph,
    paired_suborbit,
    suborbits,
    transitivity_profile,
)
from fixlab.models.errors import FixlabError, NotAutomorphismError, PointOutOfRangeError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

PETERSEN_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
SEED = 20240601


def petersen() -> SimpleGraph:
    return SimpleGraph.from_edges(10, PETERSEN_EDGES)


def from_networkx(graph: nx.Graph) -> SimpleGraph:
    return SimpleGraph.from_edges(graph.number_of_nodes(), graph.edges())


def count_automorphisms(graph: SimpleGraph) -> int:
    nxg = graph.to_networkx()
    return sum(1 for _ in GraphMatcher(nxg, nxg).isomorphisms_iter())


def test_suborbits_of_pentagon():
    specs = suborbits(dihedral(5), 0)
    assert [sorted(s.suborbit) for s in specs] == [[1, 4], [2, 3]]
    assert all(s.self_paired for s in specs)
    assert all(is_connected(s.graph) for s in specs)
    assert all(nx.is_isomorphic(s.graph.to_networkx(), nx.cycle_graph(5)) for s in specs)


def test_regular_cyclic_suborbits_pair_up():
    specs = suborbits(cyclic(5), 0)
    assert [sorted(s.suborbit) for s in specs] == [[1], [2], [3], [4]]
    assert not any(s.self_paired for s in specs)
    assert paired_suborbit(specs[0]) == frozenset({4})
    assert specs[0].graph is None


def test_disconnected_self_paired_orbital():
    spec = orbital_digraph(cyclic(6), 0, 3)
    assert spec.self_paired
    assert spec.graph.edge_count() == 3
    assert not is_connected(spec.graph)
    assert higman_check(cyclic(6)) == (False, False)


def test_orbital_argument_errors():
    with pytest.raises(FixlabError):
        orbital_digraph(cyclic(5), 2, 2)
    with pytest.raises(PointOutOfRangeError):
        orbital_digraph(cyclic(5), 0, 7)


def test_wreath_orbital_is_directed_and_connected():
    entry = gen_wreath_lexico(3, 3)
    spec = entry.orbital
    assert spec.size == 3
    assert spec.suborbit == frozenset({3, 4, 5})
    assert not spec.self_paired
    assert is_connected(spec)
    reversed_arcs = {(b, a) for a, b in spec.arcs}
    assert not reversed_arcs & spec.arcs

    larger = gen_wreath_lexico(4, 3)
    assert larger.group.degree == 12
    assert not larger.orbital.self_paired
    assert {(b, a) for a, b in larger.orbital.arcs} != larger.orbital.arcs


@pytest.mark.parametrize("graph, expected", [
    (petersen(), 120),
    (from_networkx(nx.complete_graph(4)), 24),
    (from_networkx(nx.complete_bipartite_graph(3, 3)), 72),
    (from_networkx(nx.cycle_graph(7)), 14),
])
def test_automorphism_group_orders(graph, expected):
    G = automorphism_group(graph)
    assert G.order() == expected
    assert all(graph.is_automorphism(g) for g in G.generators)


@pytest.mark.parametrize("entry_id, n, shifts, repeats, expected", [
    ('cube', 8, [3, -3], 4, 48),
    ('Heawood', 14, [5, -5], 7, 336),
    ('Moebius-Kantor', 16, [5, -5], 8, 96),
    ('Pappus', 18, [5, 7, -7, 7, -7, -5], 3, 216),
    ('dodecahedron', 20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2, 120),
    ('Desargues', 20, [5, -5, 9, -9], 5, 240),
])
def test_lcf_graph_automorphism_orders(entry_id, n, shifts, repeats, expected):
    entry = gen_lcf(entry_id, n, shifts, repeats)
    assert entry.group.order() == expected
    assert entry.subgroups['lcf-rotation'].is_semiregular()


def test_automorphism_count_matches_networkx():
    for graph in (petersen(), from_networkx(nx.cubical_graph())):
        assert automorphism_group(graph).order() == count_automorphisms(graph)


def test_refinement_splits_by_degree():
    star = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    cells = refine(star, [list(range(4))])
    assert sorted(len(c) for c in cells) == [1, 3]


def test_petersen_profile():
    graph = petersen()
    profile = transitivity_profile(graph, automorphism_group(graph))
    assert profile.vertex and profile.edge and profile.arc and profile.two_arc
    assert profile.local_arc and profile.locally_quasiprimitive
    assert profile.local_groups[0].order() == 6


def test_rotations_of_pentagon_are_not_arc_transitive():
    graph = from_networkx(nx.cycle_graph(5))
    profile = transitivity_profile(graph, cyclic(5))
    assert profile.vertex and profile.edge
    assert not profile.arc
    assert not profile.local_arc
    assert profile.as_dict()['two_arc'] is False


def test_profile_rejects_non_automorphisms():
    graph = from_networkx(nx.path_graph(4))
    with pytest.raises(NotAutomorphismError):
        transitivity_profile(graph, cyclic(4))


def test_local_action_on_k4():
    graph = from_networkx(nx.complete_graph(4))
    L = local_action(graph, symmetric(4), 0)
    assert L.degree == 3
    assert L.order() == 6


def test_local_action_on_isolated_vertex():
    graph = SimpleGraph.from_edges(3, [(0, 1)])
    G = symmetric(3).point_stabilizer(2)
    with pytest.raises(FixlabError):
        local_action(graph, G, 2)


def test_complete_bipartite_detection():
    assert is_complete_bipartite(from_networkx(nx.complete_bipartite_graph(3, 3)))
    assert is_complete_bipartite(from_networkx(nx.star_graph(3)))
    assert not is_complete_bipartite(from_networkx(nx.cycle_graph(6)))
    assert not is_complete_bipartite(from_networkx(nx.complete_graph(4)))
    assert not is_complete_bipartite(SimpleGraph.from_edges(3, []))


def test_bipartition_puts_vertex_zero_first():
    left, right = bipartition(from_networkx(nx.cycle_graph(6)))
    assert left == frozenset({0, 2, 4})
    assert right == frozenset({1, 3, 5})


def test_graph_automorphism_check():
    graph = from_networkx(nx.cycle_graph(5))
    assert graph.is_automorphism(Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]))
    assert not graph.is_automorphism(Permutation.from_cycles(5, [(0, 1)]))


@pytest.mark.parametrize("entry_id, n, shifts, repeats, named", [
    ('cube', 8, [3, -3], 4, nx.cubical_graph),
    ('Heawood', 14, [5, -5], 7, nx.heawood_graph),
    ('Moebius-Kantor', 16, [5, -5], 8, nx.moebius_kantor_graph),
    ('Pappus', 18, [5, 7, -7, 7, -7, -5], 3, nx.pappus_graph),
    ('dodecahedron', 20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2, nx.dodecahedral_graph),
    ('Desargues', 20, [5, -5, 9, -9], 5, nx.desargues_graph),
])
def test_lcf_graphs_are_the_named_graphs(entry_id, n, shifts, repeats, named):
    entry = gen_lcf(entry_id, n, shifts, repeats)
    assert nx.is_isomorphic(entry.graph.to_networkx(), named())


def test_petersen_edge_list_is_the_petersen_graph():
    assert nx.is_isomorphic(petersen().to_networkx(), nx.petersen_graph())


def test_orbital_arc_counts_on_random_groups():
    rng = random.Random(SEED)
    for _ in range(30):
        G = random_transitive_group(rng, rng.randint(3, 9))
        regenerated = PermGroup(G.degree, list(reversed(G.generators)) + [G.generators[0] * G.generators[-1]])
        assert regenerated.order() == G.order()
        for spec in suborbits(G, 0):
            assert len(spec.arcs) == G.degree * spec.size
            assert orbital_digraph(regenerated, 0, spec.rep).arcs == spec.arcs


def test_weak_and_strong_connectivity_agree_for_orbitals():
    rng = random.Random(SEED + 1)
    for _ in range(30):
        G = random_transitive_group(rng, rng.randint(3, 10))
        for spec in suborbits(G, 0):
            assert is_connected(spec) == nx.is_strongly_connected(spec.to_networkx())


def test_transitivity_profile_is_monotone():
    graph = petersen()
    hexagon = from_networkx(nx.cycle_graph(6))
    k33 = from_networkx(nx.complete_bipartite_graph(3, 3))
    wreath = gen_wreath_lexico(3, 2)
    heawood = gen_lcf('Heawood', 14, [5, -5], 7)
    five_fold = PermGroup(10, [Permutation.from_cycles(10, [(0, 1, 2, 3, 4), (5, 6, 7, 8, 9)])])
    instances = [
        (graph, automorphism_group(graph)),
        (graph, five_fold),
        (hexagon, cyclic(6)),
        (hexagon, dihedral(6)),
        (k33, automorphism_group(k33)),
        (wreath.graph, wreath.group),
        (heawood.graph, heawood.group),
    ]
    for g, G in instances:
        profile = transitivity_profile(g, G)
        assert not profile.two_arc or profile.arc
        if profile.vertex:
            assert not profile.arc or profile.edge
    assert transitivity_profile(graph, five_fold).as_dict() == {
        'vertex': False, 'edge': False, 'arc': False, 'two_arc': False,
        'local_arc': False, 'locally_quasiprimitive': False,
    }
