"""
Conjugacy, normal closures, centres, primitivity and rank
"""

import random
from math import lcm

import pytest

from fixlab.catalog.named_groups import alternating, cyclic, dihedral, klein_four, symmetric
from fixlab.graphs.orbital import higman_check
from fixlab.groups.oracles import (
    closure,
    normal_subgroups,
    quasiprimitive_by_enumeration,
    random_group,
    random_transitive_group,
)
from fixlab.groups.structure import (
    block_system,
    center,
    centralizer,
    conjugacy_class,
    conjugacy_classes,
    exponent,
    group_rank,
    is_k_transitive,
    is_normal_subgroup,
    is_primitive,
    is_quasiprimitive,
    normal_closure,
    permutation_isomorphic,
    plus_subgroup,
)
from fixlab.models.errors import CapacityError, NotAMemberError, NotTransitiveError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

SEED = 20240601


def test_class_sizes_of_sym4():
    classes = conjugacy_classes(symmetric(4))
    assert classes[0][0].is_identity()
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]


def test_conjugacy_class_of_transposition():
    g = Permutation.from_cycles(5, [(0, 1)])
    assert len(conjugacy_class(symmetric(5), g)) == 10


def test_centralizer_orders():
    five_cycle = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert centralizer(symmetric(5), five_cycle).order() == 5
    transposition = Permutation.from_cycles(5, [(0, 1)])
    assert centralizer(symmetric(5), transposition).order() == 12


def test_centralizer_requires_member():
    with pytest.raises(NotAMemberError):
        centralizer(alternating(4), Permutation.from_cycles(4, [(0, 1)]))


def test_normal_closures_in_sym4():
    S4 = symmetric(4)
    assert normal_closure(S4, Permutation.from_cycles(4, [(0, 1)])).order() == 24
    assert normal_closure(S4, Permutation.from_cycles(4, [(0, 1, 2)])).order() == 12
    V = normal_closure(S4, Permutation.from_cycles(4, [(0, 1), (2, 3)]))
    assert V.order() == 4
    assert is_normal_subgroup(V, S4)
    assert not is_normal_subgroup(PermGroup(4, [Permutation.from_cycles(4, [(0, 1)])]), S4)


def test_center_and_exponent():
    assert center(symmetric(3)).order() == 1
    assert center(dihedral(4)).order() == 2
    assert center(klein_four()).order() == 4
    assert exponent(symmetric(4)) == 12
    assert exponent(alternating(5)) == 30
    assert exponent(cyclic(8)) == 8


def test_plus_subgroup():
    assert plus_subgroup(symmetric(3)).order() == 6
    assert plus_subgroup(cyclic(6)).order() == 1
    # reflections of the hexagon through vertices generate a dihedral group of order 6
    assert plus_subgroup(dihedral(6)).order() == 6


def test_block_system_of_hexagon():
    assert block_system(dihedral(6), 3) == [[0, 3], [1, 4], [2, 5]]
    assert block_system(dihedral(6), 2) == [[0, 2, 4], [1, 3, 5]]


def test_primitivity():
    assert is_primitive(symmetric(5))
    assert is_primitive(dihedral(5))
    assert is_primitive(cyclic(7))
    assert not is_primitive(dihedral(6))
    assert not is_primitive(cyclic(4))
    with pytest.raises(NotTransitiveError):
        is_primitive(PermGroup(4, [Permutation.from_cycles(4, [(0, 1)])]))


def test_quasiprimitivity_matches_normal_subgroup_enumeration():
    for G in (symmetric(4), alternating(4), cyclic(5), cyclic(4), dihedral(6), dihedral(5), klein_four()):
        assert is_quasiprimitive(G) == quasiprimitive_by_enumeration(G)
    assert not is_quasiprimitive(dihedral(6))
    assert is_quasiprimitive(symmetric(4))


def test_normal_subgroups_of_sym4():
    assert [len(N) for N in normal_subgroups(symmetric(4))] == [1, 4, 12, 24]


def test_double_transitivity():
    assert is_k_transitive(symmetric(4), 2)
    assert is_k_transitive(alternating(4), 2)
    assert not is_k_transitive(dihedral(5), 2)
    assert is_k_transitive(symmetric(5), 3)


def test_permutation_isomorphism():
    A = PermGroup(4, [Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    B = PermGroup(4, [Permutation.from_cycles(4, [(0, 2, 1, 3)])])
    sigma = permutation_isomorphic(A, B)
    assert sigma is not None
    assert all(B.contains(g.conjugate(sigma)) for g in A.generators)
    assert permutation_isomorphic(A, klein_four()) is None


def test_group_rank():
    assert group_rank(PermGroup.trivial(3)) == 0
    assert group_rank(cyclic(6)) == 1
    assert group_rank(klein_four()) == 2
    assert group_rank(symmetric(3)) == 2
    assert group_rank(symmetric(4)) == 2
    assert group_rank(dihedral(4)) == 2
    with pytest.raises(CapacityError):
        group_rank(symmetric(8))


def test_higman_agreement_on_named_and_random_groups():
    groups = [symmetric(5), alternating(5), dihedral(5), dihedral(6), dihedral(8), cyclic(6), cyclic(7), klein_four()]
    rng = random.Random(SEED)
    groups.extend(random_transitive_group(rng, rng.randint(3, 12)) for _ in range(100))
    for G in groups:
        primitive, connected = higman_check(G)
        assert primitive == connected


def test_closure_oracle_agrees_with_chain_order():
    G = dihedral(7)
    assert len(closure(7, G.generators)) == G.order() == 14


def test_rank_of_elementary_abelian_group_needs_every_doubling():
    E = PermGroup(6, [Permutation.from_cycles(6, [(0, 1)]), Permutation.from_cycles(6, [(2, 3)]),
                      Permutation.from_cycles(6, [(4, 5)])])
    assert E.order() == 8
    assert group_rank(E) == 3


def test_class_equation_on_random_groups():
    rng = random.Random(SEED)
    for _ in range(30):
        G = random_group(rng, rng.randint(2, 6))
        classes = conjugacy_classes(G)
        assert sum(len(c) for c in classes) == G.order()
        for members in classes:
            assert len(members) * centralizer(G, members[0]).order() == G.order()
            assert set(members) == conjugacy_class(G, members[-1])


def test_exponent_matches_full_enumeration():
    rng = random.Random(SEED + 1)
    for _ in range(30):
        G = random_group(rng, rng.randint(2, 7))
        assert exponent(G) == lcm(*(g.order() for g in closure(G.degree, G.generators)))


@pytest.mark.parametrize("n, expected", [(5, 10), (6, 6)])
def test_plus_subgroup_matches_stabilizer_closure(n, expected):
    G = dihedral(n)
    stabilizer_gens = [g for w in range(n) for g in G.point_stabilizer(w).generators]
    by_definition = closure(n, stabilizer_gens)
    assert len(by_definition) == expected
    assert set(plus_subgroup(G).elements()) == by_definition
