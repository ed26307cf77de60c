"""
Fixlab - Group structure
Conjugacy classes, centralizers, normal closures, center, exponent, G+,
block systems, primitivity, quasiprimitivity and rank
"""

import logging
from itertools import permutations
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence

from fixlab.groups.actions import UnionFind, conjugation_action, orbit_of, orbit_with_transversal
from fixlab.models.errors import (
    CapacityError,
    DegreeMismatchError,
    FixlabError,
    NotAMemberError,
    NotTransitiveError,
)
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

CLASS_CAP = 10 ** 6
RANK_CAP = 10 ** 4
ISOMORPHISM_DEGREE_CAP = 8


def _require_member(G: PermGroup, g: Permutation) -> None:
    if not G.contains(g):
        raise NotAMemberError(f"{g.cycle_notation()} is not an element of the group")


def _require_transitive(G: PermGroup, what: str) -> None:
    if not G.is_transitive():
        raise NotTransitiveError(f"{what} requires a transitive group")


def _extend_subgroup(H: PermGroup, candidates: Iterable[Permutation]) -> PermGroup:
    """Add each candidate that is not yet in H; the chain is rebuilt only on growth"""
    for c in candidates:
        if c.is_identity() or H.contains(c):
            continue
        gens = [x for x in H.generators if not x.is_identity()]
        H = PermGroup(H.degree, gens + [c])
    return H


# ------------------------------------------------------------------ classes

def conjugacy_class(G: PermGroup, g: Permutation) -> set:
    _require_member(G, g)
    return set(orbit_of(G.generators, g, conjugation_action))


def _centralizer(G: PermGroup, g: Permutation) -> PermGroup:
    # stabilizer of g in the conjugation action: Schreier generators on the class
    transversal = orbit_with_transversal(G.generators, g, conjugation_action, G.identity)
    if len(transversal) == 1:
        return G
    order_bound = G.order() // len(transversal)
    C = PermGroup.trivial(G.degree)
    for x, u in transversal.items():
        for s in G.generators:
            y = x.conjugate(s)
            schreier = u * s * transversal[y].inverse()
            if schreier.is_identity() or C.contains(schreier):
                continue
            C = _extend_subgroup(C, [schreier])
            if C.order() == order_bound:
                return C
    return C


def centralizer(G: PermGroup, g: Permutation) -> PermGroup:
    _require_member(G, g)
    return _centralizer(G, g)


def conjugacy_classes(G: PermGroup, cap: int = CLASS_CAP) -> List[List[Permutation]]:
    """
    All conjugacy classes in a deterministic order
    - the representative (first entry) is the first element met in G.elements()
    - the identity class comes first
    """
    order = G.order()
    if order > cap:
        raise CapacityError("conjugacy class enumeration", order, cap)
    seen = set()
    classes = []
    for element in G.elements():
        if element in seen:
            continue
        members = orbit_of(G.generators, element, conjugation_action)
        seen.update(members)
        classes.append(members)
        if len(seen) == order:
            break
    classes.sort(key=lambda c: not c[0].is_identity())
    logger.debug(f"Found {len(classes)} conjugacy classes in group of order {order}")
    return classes


def class_representatives(G: PermGroup, cap: int = CLASS_CAP) -> List[Permutation]:
    return [c[0] for c in conjugacy_classes(G, cap)]


# ------------------------------------------------------------------ normal subgroups

def normal_closure_of(X: PermGroup, gens: Sequence[Permutation]) -> PermGroup:
    """Smallest normal subgroup of X containing every element of gens"""
    N = _extend_subgroup(PermGroup.trivial(X.degree), gens)
    pending = [g for g in N.generators if not g.is_identity()]
    while pending:
        n = pending.pop()
        for x in X.generators:
            c = n.conjugate(x)
            if not N.contains(c):
                N = _extend_subgroup(N, [c])
                pending.append(c)
    return N


def normal_closure(X: PermGroup, g: Permutation) -> PermGroup:
    _require_member(X, g)
    return normal_closure_of(X, [g])


def is_normal_subgroup(N: PermGroup, X: PermGroup) -> bool:
    if N.degree != X.degree:
        raise DegreeMismatchError(X.degree, N.degree)
    if not N.is_subgroup_of(X):
        return False
    return all(N.contains(n.conjugate(x)) for n in N.generators for x in X.generators)


def center(G: PermGroup) -> PermGroup:
    Z = G
    for g in G.generators:
        if g.is_identity():
            continue
        Z = _centralizer(Z, g)
    return Z


def exponent(G: PermGroup) -> int:
    return lcm(*(g.order() for g in class_representatives(G)))


def plus_subgroup(G: PermGroup) -> PermGroup:
    """G+ generated by all point stabilizers; one stabilizer per orbit up to normal closure"""
    gens: List[Permutation] = []
    for orb in G.orbits():
        gens.extend(g for g in G.point_stabilizer(orb[0]).generators if not g.is_identity())
    if not gens:
        return PermGroup.trivial(G.degree)
    return normal_closure_of(G, gens)


# ------------------------------------------------------------------ blocks

def block_system(G: PermGroup, delta: int, alpha: int = 0) -> List[List[int]]:
    """Finest block system with alpha and delta in one block (minimal block closure)"""
    if delta == alpha:
        return [[p] for p in range(G.degree)]
    uf = UnionFind(range(G.degree))
    uf.union(alpha, delta)
    queue = [(alpha, delta)]
    while queue:
        a, b = queue.pop()
        for s in G.generators:
            c, d = uf.find(s.images[a]), uf.find(s.images[b])
            if c != d:
                uf.union(c, d)
                queue.append((c, d))
    blocks = [sorted(c) for c in uf.classes().values()]
    return sorted(blocks, key=lambda b: b[0])


def is_primitive(G: PermGroup) -> bool:
    _require_transitive(G, "is_primitive")
    if G.degree <= 2:
        return True
    # the minimal block through 0 and delta only depends on the G_0-orbit of delta
    for suborbit in G.point_stabilizer(0).orbits():
        delta = suborbit[0]
        if delta == 0:
            continue
        if len(block_system(G, delta)) > 1:
            return False
    return True


def is_quasiprimitive(G: PermGroup) -> bool:
    _require_transitive(G, "is_quasiprimitive")
    for rep in class_representatives(G):
        if rep.is_identity():
            continue
        if not normal_closure_of(G, [rep]).is_transitive():
            return False
    return True


def is_k_transitive(G: PermGroup, k: int = 2) -> bool:
    """k-transitivity through transitivity of successive point stabilizers"""
    if k < 1:
        raise FixlabError("k must be positive")
    if G.degree < k:
        return False
    H = G
    fixed: List[int] = []
    for _ in range(k):
        remaining = [p for p in range(G.degree) if p not in fixed]
        if len(H.orbit(remaining[0])) != len(remaining):
            return False
        fixed.append(remaining[0])
        H = H.point_stabilizer(remaining[0])
    return True


# ------------------------------------------------------------------ restrictions

def restriction(G: PermGroup, points: Sequence[int]) -> PermGroup:
    """Group induced on an invariant point list, relabelled by position"""
    index = {p: i for i, p in enumerate(points)}
    gens = []
    for g in G.generators:
        try:
            gens.append(Permutation([index[g.images[p]] for p in points]))
        except KeyError as e:
            raise FixlabError(f"point set is not invariant: {e.args[0]} escapes") from e
    return PermGroup(len(points), gens)


def kernel_order(G: PermGroup, points: Sequence[int]) -> int:
    return G.order() // restriction(G, points).order()


def faithful_on_orbits(G: PermGroup) -> Dict[int, bool]:
    """Least point of each orbit -> whether G acts faithfully on that orbit"""
    return {orb[0]: kernel_order(G, orb) == 1 for orb in G.orbits()}


def permutation_isomorphic(A: PermGroup, B: PermGroup) -> Optional[Permutation]:
    """
    Relabelling sigma with A^sigma = B, or None
    - brute force over Sym(n); degree capped at 8
    """
    if A.degree != B.degree or A.order() != B.order():
        return None
    if A.degree > ISOMORPHISM_DEGREE_CAP:
        raise CapacityError("permutation isomorphism search", A.degree, ISOMORPHISM_DEGREE_CAP)
    for images in permutations(range(A.degree)):
        sigma = Permutation(images)
        if all(B.contains(g.conjugate(sigma)) for g in A.generators):
            return sigma
    return None


# ------------------------------------------------------------------ rank

def group_rank(G: PermGroup, cap: int = RANK_CAP) -> int:
    """
    Size of a smallest generating set (0 for the trivial group)
    - the first generator ranges over class representatives only
    - later generators avoid the subgroup built so far and are taken in increasing element order
    - each new generator at least doubles the subgroup, so branches with |H| * 2^budget < |G| are cut
    """
    order = G.order()
    if order > cap:
        raise CapacityError("group rank search", order, cap)
    if order == 1:
        return 0
    reps = [r for r in class_representatives(G) if not r.is_identity()]
    elements = [e for e in G.elements() if not e.is_identity()]

    def extend(gens: List[Permutation], H: PermGroup, start: int, budget: int) -> bool:
        if H.order() == order:
            return True
        if H.order() << budget < order:
            return False
        for idx in range(start, len(elements)):
            e = elements[idx]
            if H.contains(e):
                continue
            if extend(gens + [e], PermGroup(G.degree, gens + [e]), idx + 1, budget - 1):
                return True
        return False

    k = 1
    while True:
        for r in reps:
            if extend([r], PermGroup(G.degree, [r]), 0, k - 1):
                logger.debug(f"Group of order {order} has rank {k}")
                return k
        k += 1
