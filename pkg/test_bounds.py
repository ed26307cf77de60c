"""
Bound functions and lemma checkers on hand-checked instances
"""

import random
from fractions import Fraction

import mpmath
import networkx as nx
import pytest
from mpmath import mpf

from fixlab.bounds.checkers import (
    check_center_exponent,
    check_center_rank,
    check_corollary1,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    check_lemma_class,
    check_lemma_class_factorial,
    check_lemma_lqp,
    check_plus_structure,
    check_theorem_main,
    check_theorem_suborbit,
    check_tutte,
)
from fixlab.bounds.special_functions import F_bound, f_bound, g_map, inverse_gamma, n_threshold, phi
from fixlab.catalog.generators import gen_lcf, gen_wreath_lexico
from fixlab.catalog.named_groups import dihedral, symmetric
from fixlab.graphs.automorphisms import automorphism_group
from fixlab.groups.oracles import random_transitive_group
from fixlab.groups.structure import class_representatives, normal_closure
from fixlab.models.errors import DomainError, NormalityError, PreconditionError, UnknownConstantError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation
from fixlab.models.reports import BoundReport, LemmaId, Relation, evaluate

PETERSEN_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
SEED = 20240601


def graph_of(nxg: nx.Graph) -> SimpleGraph:
    return SimpleGraph.from_edges(nxg.number_of_nodes(), nxg.edges())


@pytest.fixture(scope="module")
def petersen():
    graph = SimpleGraph.from_edges(10, PETERSEN_EDGES)
    return graph, automorphism_group(graph)


@pytest.fixture(scope="module")
def heawood():
    entry = gen_lcf('Heawood', 14, [5, -5], 7)
    return entry.graph, entry.group


@pytest.fixture(scope="module")
def k33():
    graph = graph_of(nx.complete_bipartite_graph(3, 3))
    return graph, automorphism_group(graph)


# ------------------------------------------------------------------ special functions

def test_f_exact_values():
    assert f_bound(2) == mpf(1) / 2
    assert 1 / f_bound(3) == 3
    assert f_bound(7) == mpf(1) / 4
    assert f_bound(1) == mpf(1) / 2


def test_f_at_120_lies_between_exact_points():
    # 119 lies just below 5!, so Gamma^{-1}(119) is just below 6
    value = f_bound(120)
    assert f_bound(121) < value < f_bound(25)
    assert 1 / f_bound(121) == 6


def test_inverse_gamma_round_trip():
    for v in (mpf('1.5'), mpf(10), mpf(1000), mpf('1e50')):
        x = inverse_gamma(v)
        assert mpmath.almosteq(mpmath.gamma(x), v, rel_eps=mpf(10) ** -12)


def test_F_exact_values():
    assert abs(F_bound(2) - 1) < mpf(10) ** -12
    assert abs(F_bound(32) - 2) < mpf(10) ** -12


def test_F_round_trip_on_log_grid():
    for k in range(1000):
        y = mpf(10) ** (mpf(k) / 100 - 3)
        assert abs(g_map(F_bound(y)) - y) <= abs(y) * mpf(10) ** -12


def test_monotonicity_on_sampled_grids():
    xs = [2, 2.5, 3, 5, 10, 50, 120, 1000, 10 ** 4, 10 ** 5, 10 ** 6]
    fs = [f_bound(x) for x in xs]
    assert all(a > b for a, b in zip(fs, fs[1:]))
    ys = [mpf('0.5'), 1, 2, 10, 32, 100, 10 ** 4, 10 ** 8]
    Fs = [F_bound(y) for y in ys]
    assert all(a < b for a, b in zip(Fs, Fs[1:]))
    phis = [phi(y) for y in [10, 100, 10 ** 4, 10 ** 8, 10 ** 12]]
    assert all(a >= b for a, b in zip(phis, phis[1:]))
    assert phis[0] > phis[-1]


def test_domain_errors():
    with pytest.raises(DomainError):
        f_bound(Fraction(1, 2))
    with pytest.raises(DomainError):
        F_bound(0)
    with pytest.raises(DomainError):
        n_threshold(0, Fraction(1, 2))
    with pytest.raises(DomainError):
        n_threshold(48, 0)


def test_threshold_values():
    # c^2/alpha = 1 clamps the Gamma argument to 2, so N = 2 * 4^2
    assert abs(n_threshold(1, 1) - mpmath.log10(32)) < mpf(10) ** -12
    assert n_threshold(48, Fraction(1, 2)) > 10 ** 4
    assert n_threshold(48, Fraction(1, 10)) > n_threshold(48, Fraction(1, 2))


# ------------------------------------------------------------------ reports

def test_report_relations():
    assert evaluate(3, Relation.DIVIDES, 12)
    assert not evaluate(5, Relation.DIVIDES, 12)
    assert not evaluate(0, Relation.DIVIDES, 0)
    assert evaluate(False, Relation.IMPLIES, False)
    assert not evaluate(True, Relation.IMPLIES, False)
    assert evaluate(Fraction(1, 3), Relation.LE, mpf('0.34'))
    report = BoundReport("x", LemmaId.L4, 5, mpf('4.9'), Relation.GE)
    assert report.holds
    assert LemmaId.parse("l3a") is LemmaId.L3A


# ------------------------------------------------------------------ group lemmas

def test_lemma3_on_pentagon():
    X = dihedral(5)
    reflection = X.generators[1]
    first, second = check_lemma3(X, reflection, 0)
    assert first.lhs == 1 and first.rhs == 2 and first.holds
    assert second.lhs == Fraction(1, 5)
    assert second.rhs == Fraction(2, 5)
    assert second.holds


def test_lemma3_with_normal_subgroup():
    X = symmetric(4)
    g = Permutation.from_cycles(4, [(0, 1), (2, 3)])
    G = normal_closure(X, g)
    first, second = check_lemma3(X, g, 0, G=G)
    assert first.holds and second.holds
    with pytest.raises(NormalityError):
        check_lemma3(X, Permutation.from_cycles(4, [(0, 1)]), 0, G=PermGroup(4, [Permutation.from_cycles(4, [(0, 1)])]))


def test_lemma3_on_random_instances():
    rng = random.Random(SEED)
    for _ in range(100):
        X = random_transitive_group(rng, rng.randint(3, 7))
        g = rng.choice(list(X.elements()))
        omega = rng.randrange(X.degree)
        assert all(report.holds for report in check_lemma3(X, g, omega))
        if not g.is_identity():
            G = normal_closure(X, g)
            assert all(report.holds for report in check_lemma3(X, g, omega, G=G))


def test_class_lemmas_on_random_instances():
    rng = random.Random(SEED + 1)
    for _ in range(50):
        X = random_transitive_group(rng, rng.randint(3, 7))
        g = rng.choice([r for r in class_representatives(X) if not r.is_identity()])
        report = check_lemma_class(X, g, 0)
        assert report.holds, report.context
        assert check_lemma_class_factorial(X, g).holds


def test_class_lemmas_hold_on_petersen(petersen):
    graph, X = petersen
    for g in class_representatives(X):
        if g.is_identity():
            continue
        assert check_lemma_class(X, g, 0).holds
        report = check_lemma_class_factorial(X, g)
        assert report.holds
        assert report.context['class_step']


def test_lemma1_on_petersen(petersen):
    _, X = petersen
    report = check_lemma1(X)
    assert report.relation is Relation.DIVIDES
    assert report.lhs == 60
    assert report.holds


# ------------------------------------------------------------------ graph lemmas

def test_corollary1_epsilon(petersen, heawood):
    report = check_corollary1(*petersen)
    assert report.context['epsilon'] == 0
    assert report.holds
    report = check_corollary1(*heawood)
    assert report.context['epsilon'] == 1
    assert report.holds


def test_lemma4_and_centre_steps(petersen, heawood):
    for graph, G in (petersen, heawood):
        assert check_lemma4(graph, G).holds
        assert check_center_exponent(graph, G).holds
        assert check_center_rank(graph, G).holds


def test_lemma4_excludes_complete_bipartite(k33):
    with pytest.raises(PreconditionError) as info:
        check_lemma4(*k33)
    assert info.value.hypothesis == "not complete bipartite"


def test_plus_structure(petersen, heawood):
    report = check_plus_structure(*heawood)
    assert report.lhs == 2
    assert report.context['plus_orbits'] == 2
    assert report.holds
    report = check_plus_structure(*petersen)
    assert report.lhs == 1
    assert report.holds


def test_lqp_implication(petersen, k33):
    assert check_lemma_lqp(*petersen).holds
    assert check_lemma_lqp(*k33).holds


def test_tutte_bound(petersen, heawood, k33):
    assert check_tutte(*petersen).lhs == 12
    assert check_tutte(*heawood).lhs == 24
    assert check_tutte(*k33).lhs == 12
    assert all(check_tutte(*instance).holds for instance in (petersen, heawood, k33))
    with pytest.raises(PreconditionError):
        check_tutte(graph_of(nx.complete_graph(5)), symmetric(5))


# ------------------------------------------------------------------ main theorem

def test_theorem_on_petersen(petersen):
    graph, X = petersen
    report = check_theorem_main(graph, X, "Sym(3)", Fraction(1, 2))
    assert report.context['rfx'] == Fraction(2, 5)
    assert report.lhs is False
    assert report.rhs is True
    assert report.holds
    assert report.context['log10_N'] > 10 ** 4


def test_theorem_below_threshold_with_large_fixity(k33):
    report = check_theorem_main(*k33, "Sym(3)", Fraction(1, 2))
    assert report.context['rfx'] == Fraction(2, 3)
    assert report.lhs is False
    assert report.holds
    assert 'chain_holds' not in report.context


def test_theorem_requires_matching_local_group(petersen):
    graph, X = petersen
    with pytest.raises(PreconditionError):
        check_theorem_main(graph, X, "Alt(4)", Fraction(1, 2))
    with pytest.raises(UnknownConstantError):
        check_theorem_main(graph, X, "PSL(2,7)", Fraction(1, 2))


def test_theorem_from_suborbit(petersen):
    _, X = petersen
    report = check_theorem_suborbit(X, 0, 1, Fraction(1, 4))
    assert report.context['suborbit'] == 3
    assert report.context['condition_prime']
    assert report.holds


def test_theorem_from_suborbit_needs_self_paired():
    entry = gen_wreath_lexico(3, 2)
    with pytest.raises(PreconditionError) as info:
        check_theorem_suborbit(entry.group, 0, 2, Fraction(1, 2))
    assert info.value.hypothesis == "self-paired suborbit"
