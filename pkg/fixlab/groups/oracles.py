"""
Fixlab - Brute-force oracles
Closure enumeration and exhaustive searches used to cross-check the
stabilizer chain machinery on small groups
"""

import logging
import random
from collections import deque
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Set

from fixlab.groups.structure import class_representatives, normal_closure_of
from fixlab.models.errors import CapacityError, FixlabError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

CLOSURE_CAP = 10 ** 5
NORMAL_SUBGROUP_CAP = 2000


def closure(degree: int, generators: Sequence[Permutation], cap: int = CLOSURE_CAP) -> Set[Permutation]:
    """All products of the generators, by breadth-first multiplication"""
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = x * s
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapacityError("closure enumeration", len(seen), cap)
                queue.append(y)
    return seen


def closure_orbit(elements: Set[Permutation], point: int) -> Set[int]:
    return {g.images[point] for g in elements}


def closure_stabilizer_order(elements: Set[Permutation], point: int) -> int:
    return sum(1 for g in elements if g.images[point] == point)


def normal_subgroups(G: PermGroup, cap: int = NORMAL_SUBGROUP_CAP) -> List[FrozenSet[Permutation]]:
    """
    Every normal subgroup as an element set, smallest first
    - joins of normal closures of conjugacy classes
    """
    if G.order() > cap:
        raise CapacityError("normal subgroup enumeration", G.order(), cap)
    minimal = [normal_closure_of(G, [r]) for r in class_representatives(G)]
    found = {frozenset(N.elements()): N for N in minimal}
    frontier = list(found.values())
    while frontier:
        new = []
        for N in frontier:
            for M in minimal:
                J = normal_closure_of(G, list(N.generators) + list(M.generators))
                key = frozenset(J.elements())
                if key not in found:
                    found[key] = J
                    new.append(J)
        frontier = new
    logger.debug(f"Group of order {G.order()} has {len(found)} normal subgroups")
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def quasiprimitive_by_enumeration(G: PermGroup) -> bool:
    """Every nontrivial normal subgroup is transitive"""
    n = G.degree
    for N in normal_subgroups(G):
        if len(N) == 1:
            continue
        if len(closure_orbit(set(N), 0)) != n:
            return False
    return True


def exhaustive_relative_fixity(G: PermGroup) -> Fraction:
    """max fpr over every non-identity element"""
    best = None
    for g in G.elements():
        if g.is_identity():
            continue
        count = len(g.fixed_points())
        if best is None or count > best:
            best = count
    if best is None:
        raise FixlabError("relative fixity is undefined for the trivial group")
    return Fraction(best, G.degree)


def random_permutation(rng: random.Random, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


def random_group(rng: random.Random, degree: int, n_generators: int = 2) -> PermGroup:
    return PermGroup(degree, [random_permutation(rng, degree) for _ in range(n_generators)])


def random_transitive_group(rng: random.Random, degree: int, n_generators: int = 1) -> PermGroup:
    """A conjugate of the n-cycle plus random generators, hence transitive"""
    if degree < 2:
        raise FixlabError("random transitive groups need degree >= 2")
    sigma = random_permutation(rng, degree)
    cycle = Permutation.from_cycles(degree, [range(degree)]).conjugate(sigma)
    extra = []
    for _ in range(n_generators):
        g = random_permutation(rng, degree)
        # half the extras are powers of the cycle, so imprimitive groups turn up
        if rng.random() < 0.5:
            g = cycle ** rng.randrange(1, degree)
        extra.append(g)
    return PermGroup(degree, [cycle] + extra)
