"""
Fixlab - Lemma checkers
Evaluate each explicit inequality on a concrete instance and return BoundReports.
Hypotheses are verified first; a failed hypothesis raises PreconditionError
naming it, so sweeps can filter instances instead of reporting false failures.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple

import mpmath
from mpmath import mp, mpf
from sympy import isprime

from fixlab.bounds.special_functions import (
    WORKING_DPS,
    F_bound,
    f_bound,
    n_threshold,
    phi,
    round_down,
    round_up,
    to_mpf,
)
from fixlab.catalog.constants import ConstantsRegistry, LocalGroupConstant, matches
from fixlab.graphs.orbital import (
    TransitivityProfile,
    bipartition,
    is_bipartite,
    is_complete_bipartite,
    is_connected,
    orbital_digraph,
    transitivity_profile,
)
from fixlab.graphs.quotients import quotient_counts
from fixlab.groups.fixity import fix_set, fpr, relative_fixity
from fixlab.groups.structure import (
    center,
    centralizer,
    conjugacy_class,
    exponent,
    faithful_on_orbits,
    group_rank,
    is_k_transitive,
    is_normal_subgroup,
    normal_closure,
    plus_subgroup,
    restriction,
)
from fixlab.models.errors import NormalityError, NotAMemberError, NotTransitiveError, PreconditionError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation
from fixlab.models.reports import BoundReport, LemmaId, Relation

logger = logging.getLogger(__name__)

# beyond this the factorial bound is compared through log Gamma
EXACT_FACTORIAL_LIMIT = 2000
TUTTE_ORDERS = (3, 6, 12, 24, 48)


def _require(condition: bool, hypothesis: str, detail: str = "") -> None:
    if not condition:
        raise PreconditionError(hypothesis, detail)


def _profile(graph: SimpleGraph, G: PermGroup, profile: Optional[TransitivityProfile]) -> TransitivityProfile:
    return profile if profile is not None else transitivity_profile(graph, G)


def _require_locally_arc_transitive(graph: SimpleGraph, G: PermGroup, profile: TransitivityProfile) -> None:
    _require(is_connected(graph), "connected")
    _require(profile.local_arc, "locally arc-transitive")


def _require_lemma4_hypotheses(graph: SimpleGraph, G: PermGroup, profile: TransitivityProfile) -> None:
    _require(is_connected(graph), "connected")
    _require(profile.locally_quasiprimitive, "locally quasiprimitive")
    _require(not is_complete_bipartite(graph), "not complete bipartite")


def _le_mpf(lhs: Fraction, rhs: mpf) -> bool:
    with mp.workdps(WORKING_DPS):
        return to_mpf(lhs) <= rhs


# ------------------------------------------------------------------ group lemmas

def check_lemma3(X: PermGroup, g: Permutation, omega: int, G: Optional[PermGroup] = None,
                 instance_id: str = "") -> Tuple[BoundReport, BoundReport]:
    """
    Fix(g) <= |C_G(g)| |Omega/G|, and fpr(g) <= |G_omega| |C_G(g)| / |G|
    for G normal in the transitive group X (G = X by default)
    """
    if G is None:
        G = X
    if not X.is_transitive():
        raise NotTransitiveError("check_lemma3 requires a transitive overgroup")
    if not G.contains(g):
        raise NotAMemberError(f"{g.cycle_notation()} is not in G")
    if G is not X and not is_normal_subgroup(G, X):
        raise NormalityError("G is not normal in X")

    C = centralizer(G, g)
    n_orbits = len(G.orbits())
    stabilizer_order = G.point_stabilizer(omega).order()
    context = {
        'order': G.order(),
        'centralizer': C.order(),
        'orbits': n_orbits,
        'stabilizer': stabilizer_order,
        'element': g.cycle_notation(),
    }
    fixed = len(fix_set(g))
    first = BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.L3A,
        lhs=fixed,
        rhs=C.order() * n_orbits,
        context=dict(context),
    )
    second = BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.L3B,
        lhs=fpr(g),
        rhs=Fraction(stabilizer_order * C.order(), G.order()),
        context=dict(context),
    )
    return first, second


def check_lemma_class(X: PermGroup, g: Permutation, omega: int, instance_id: str = "") -> BoundReport:
    """fpr(g) <= |G_omega| |X:G| f(|G:Z(G)|) with G the normal closure of g in X"""
    _require(not g.is_identity(), "nontrivial element")
    if not X.is_transitive():
        raise NotTransitiveError("check_lemma_class requires a transitive group")
    G = normal_closure(X, g)
    Z = center(G)
    index_xg = X.order() // G.order()
    index_gz = G.order() // Z.order()
    stabilizer_order = G.point_stabilizer(omega).order()
    f_value = f_bound(index_gz)
    with mp.workdps(WORKING_DPS):
        rhs = round_up(stabilizer_order * index_xg * f_value)
    lhs = fpr(g)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LCLASS,
        lhs=lhs,
        rhs=rhs,
        holds=_le_mpf(lhs, rhs),
        context={
            'element': g.cycle_notation(),
            'closure_order': G.order(),
            'index_XG': index_xg,
            'index_GZ': index_gz,
            'stabilizer': stabilizer_order,
            'f': f_value,
            'f_clamped': index_gz < 2,
        },
    )


def check_lemma_class_factorial(X: PermGroup, g: Permutation, instance_id: str = "") -> BoundReport:
    """
    |G:Z(G)| <= (|X:G| |G:C_G(g)|)! with G the normal closure of g in X
    - the class-size step |g^X| <= |X:G| |G:C_G(g)| and the centralizer
      step |C_G(g)|/|G| <= |X:G| f(|G:Z(G)|) are recorded in context
    """
    _require(not g.is_identity(), "nontrivial element")
    G = normal_closure(X, g)
    Z = center(G)
    C = centralizer(G, g)
    index_xg = X.order() // G.order()
    index_gc = G.order() // C.order()
    index_gz = G.order() // Z.order()
    class_size = len(conjugacy_class(X, g))
    m = index_xg * index_gc
    if m <= EXACT_FACTORIAL_LIMIT:
        rhs = factorial(m)
        holds = index_gz <= rhs
    else:
        with mp.workdps(WORKING_DPS):
            rhs = round_down(mpmath.exp(mpmath.loggamma(m + 1)))
            holds = index_gz <= rhs
    f_value = f_bound(index_gz)
    with mp.workdps(WORKING_DPS):
        centralizer_step = to_mpf(Fraction(C.order(), G.order())) <= round_up(index_xg * f_value)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LCLASS_FACT,
        lhs=index_gz,
        rhs=rhs,
        holds=holds,
        context={
            'element': g.cycle_notation(),
            'class_size': class_size,
            'class_step': class_size <= m,
            'centralizer_step': centralizer_step,
            'index_XG': index_xg,
            'index_GC': index_gc,
        },
    )


def check_lemma1(G: PermGroup, instance_id: str = "") -> BoundReport:
    """exp(G) divides |G:Z(G)| |Omega/G+|"""
    if not G.is_transitive():
        raise NotTransitiveError("check_lemma1 requires a transitive group")
    exp = exponent(G)
    index_gz = G.order() // center(G).order()
    plus_orbits = len(plus_subgroup(G).orbits())
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.L1,
        lhs=exp,
        rhs=index_gz * plus_orbits,
        relation=Relation.DIVIDES,
        context={'order': G.order(), 'index_GZ': index_gz, 'plus_orbits': plus_orbits},
    )


# ------------------------------------------------------------------ graph lemmas

def check_corollary1(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                     profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """exp(G) divides 2^eps |G:Z(G)|, eps = 1 iff the graph is bipartite and G-arc-transitive"""
    profile = _profile(graph, G, profile)
    _require_locally_arc_transitive(graph, G, profile)
    _require(all(faithful_on_orbits(G).values()), "faithful on each vertex orbit")
    _require(not is_complete_bipartite(graph), "not complete bipartite")
    epsilon = 1 if is_bipartite(graph) and profile.arc else 0
    exp = exponent(G)
    index_gz = G.order() // center(G).order()
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.COR1,
        lhs=exp,
        rhs=2 ** epsilon * index_gz,
        relation=Relation.DIVIDES,
        context={'epsilon': epsilon, 'order': G.order(), 'index_GZ': index_gz},
    )


def check_lemma4(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                 profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """|G:Z(G)| >= F(|G|), F rounded down"""
    profile = _profile(graph, G, profile)
    _require_lemma4_hypotheses(graph, G, profile)
    index_gz = G.order() // center(G).order()
    with mp.workdps(WORKING_DPS):
        rhs = round_down(F_bound(G.order()))
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.L4,
        lhs=index_gz,
        rhs=rhs,
        relation=Relation.GE,
        context={'order': G.order()},
    )


def check_center_exponent(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                          profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """exp(Z(G)) <= 2 |G:Z(G)|"""
    profile = _profile(graph, G, profile)
    _require_lemma4_hypotheses(graph, G, profile)
    Z = center(G)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LZ_EXP,
        lhs=exponent(Z),
        rhs=2 * (G.order() // Z.order()),
        context={'center': Z.order()},
    )


def check_center_rank(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                      profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """rank(Z) <= |E/Z| - |V/Z| + 1 <= |E/Z| <= |G:Z(G)|"""
    profile = _profile(graph, G, profile)
    _require_lemma4_hypotheses(graph, G, profile)
    Z = center(G)
    index_gz = G.order() // Z.order()
    vertex_orbits, edge_orbits = quotient_counts(graph, Z)
    betti = edge_orbits - vertex_orbits + 1
    rank = group_rank(Z)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LZ_RANK,
        lhs=rank,
        rhs=index_gz,
        holds=rank <= betti <= edge_orbits <= index_gz,
        context={
            'center': Z.order(),
            'center_semiregular': Z.is_semiregular(),
            'vertex_orbits': vertex_orbits,
            'edge_orbits': edge_orbits,
            'betti': betti,
        },
    )


def check_plus_structure(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                         profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """
    For a connected G-locally-arc-transitive graph:
    - |G:G+| <= 2 and G+ has at most 2 vertex orbits
    - bipartite: G+ orbits lie inside the parts; otherwise G+ = G
    """
    profile = _profile(graph, G, profile)
    _require_locally_arc_transitive(graph, G, profile)
    P = plus_subgroup(G)
    index = G.order() // P.order()
    orbits = P.orbits()
    bipartite = is_bipartite(graph)
    if bipartite:
        left, right = bipartition(graph)
        shape_ok = all(set(o) <= left or set(o) <= right for o in orbits)
    else:
        shape_ok = index == 1
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LPLUS,
        lhs=index,
        rhs=2,
        holds=index <= 2 and len(orbits) <= 2 and shape_ok,
        context={'plus_orbits': len(orbits), 'bipartite': bipartite, 'orbits_respect_parts': shape_ok},
    )


def check_lemma_lqp(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                    profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """Unfaithful on some vertex orbit => complete bipartite"""
    profile = _profile(graph, G, profile)
    _require(is_connected(graph), "connected")
    _require(profile.locally_quasiprimitive, "locally quasiprimitive")
    faithful = faithful_on_orbits(G)
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.LLQP,
        lhs=not all(faithful.values()),
        rhs=is_complete_bipartite(graph),
        relation=Relation.IMPLIES,
        context={'vertex_orbits': len(faithful)},
    )


def check_tutte(graph: SimpleGraph, G: PermGroup, instance_id: str = "",
                profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """|G_v| <= 48 and |G_v| in {3, 6, 12, 24, 48} for connected cubic G-arc-transitive graphs"""
    _require(is_connected(graph), "connected")
    _require(graph.is_regular() and graph.degree(0) == 3, "cubic")
    profile = _profile(graph, G, profile)
    _require(profile.arc, "arc-transitive")
    stabilizer_order = G.point_stabilizer(0).order()
    return BoundReport(
        instance_id=instance_id,
        lemma_id=LemmaId.TUTTE,
        lhs=stabilizer_order,
        rhs=48,
        holds=stabilizer_order in TUTTE_ORDERS,
        context={'order': G.order()},
    )


# ------------------------------------------------------------------ main theorem

def _local_group(graph: SimpleGraph, X: PermGroup) -> PermGroup:
    v = 0
    return restriction(X.point_stabilizer(v), graph.neighbors(v))


def _theorem_report(lemma_id: LemmaId, graph: SimpleGraph, X: PermGroup, entry: LocalGroupConstant,
                    alpha: Fraction, instance_id: str, extra: dict) -> BoundReport:
    result = relative_fixity(X)
    log10_n = n_threshold(entry.constant, alpha)
    with mp.workdps(WORKING_DPS):
        log10_v = mpmath.log10(graph.n_vertices)
        above = log10_v > log10_n
    context = {
        'local_group': entry.name,
        'c': entry.constant,
        'alpha': alpha,
        'rfx': result.rfx,
        'n_vertices': graph.n_vertices,
        'log10_N': log10_n,
    }
    if result.rfx >= alpha and not is_complete_bipartite(graph):
        # the chain alpha <= fpr(g) <= c^2 phi(|G|) for G the normal closure of a witness
        closure = normal_closure(X, result.witness)
        with mp.workdps(WORKING_DPS):
            chain_rhs = round_up(entry.constant ** 2 * phi(closure.order()))
            context['chain_holds'] = to_mpf(result.rfx) <= chain_rhs
        context['closure_order'] = closure.order()
    context.update(extra)
    logger.info(f"{instance_id}: log10 N({entry.name}, {alpha}) = {mpmath.nstr(log10_n, 8)}, rfx = {result.rfx}")
    return BoundReport(
        instance_id=instance_id,
        lemma_id=lemma_id,
        lhs=above,
        rhs=result.rfx < alpha,
        relation=Relation.IMPLIES,
        context=context,
    )


def check_theorem_main(graph: SimpleGraph, X: PermGroup, local_tag: str, alpha: Fraction,
                       registry: Optional[ConstantsRegistry] = None, instance_id: str = "",
                       profile: Optional[TransitivityProfile] = None) -> BoundReport:
    """
    |V| > N(L, alpha) => rfx(X) < alpha
    - requires a connected X-arc-transitive graph whose local group matches local_tag
    """
    registry = registry or ConstantsRegistry.builtin()
    entry = registry.get(local_tag)
    _require(is_connected(graph), "connected")
    profile = _profile(graph, X, profile)
    _require(profile.vertex and profile.arc, "arc-transitive")
    _require(matches(entry, _local_group(graph, X)), f"locally {entry.name}")
    return _theorem_report(LemmaId.THM_MAIN, graph, X, entry, Fraction(alpha), instance_id, {})


def check_theorem_suborbit(G: PermGroup, omega: int, delta: int, alpha: Fraction, condition3: bool = False,
                           registry: Optional[ConstantsRegistry] = None, instance_id: str = "") -> BoundReport:
    """
    Transitive G with a self-paired suborbit of delta at omega whose orbital graph is connected,
    under (1) prime suborbit length, (2) doubly transitive G_omega^Sigma or (3) a caller flag
    """
    registry = registry or ConstantsRegistry.builtin()
    if not G.is_transitive():
        raise NotTransitiveError("check_theorem_suborbit requires a transitive group")
    spec = orbital_digraph(G, omega, delta)
    _require(spec.self_paired, "self-paired suborbit")
    _require(is_connected(spec.graph), "connected orbital graph")
    sigma = sorted(spec.suborbit)
    L = restriction(G.point_stabilizer(omega), sigma)
    prime = isprime(len(sigma))
    doubly = is_k_transitive(L, 2)
    _require(prime or doubly or condition3, "suborbit condition", "prime length, 2-transitive or tagged")
    entry = registry.match(L)
    if entry is None:
        raise PreconditionError("graph-restrictive local group", f"no registered constant for order {L.order()} "
                                                                  f"degree {L.degree}")
    extra = {
        'suborbit': len(sigma),
        'condition_prime': bool(prime),
        'condition_2transitive': doubly,
        'condition_tagged': condition3,
    }
    return _theorem_report(LemmaId.THM_SUBORBIT, spec.graph, G, entry, Fraction(alpha), instance_id, extra)
