"""
Fixlab - Fixity
Fixed-point sets, fixed-point ratios and relative fixity in exact arithmetic
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Tuple

from fixlab.catalog.named_groups import wreath_lexico
from fixlab.groups.structure import CLASS_CAP, class_representatives
from fixlab.models.errors import CapacityError, FixlabError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

WREATH_DEGREE_CAP = 64
# above this order the wreath example uses fixity_search instead of class enumeration
WREATH_CLASS_LIMIT = 10 ** 5


@dataclass(frozen=True)
class FixityResult:
    """rfx with a maximizing witness; fixity = rfx * degree"""
    rfx: Fraction
    witness: Permutation
    fixity: int


def fix_set(g: Permutation) -> FrozenSet[int]:
    return g.fixed_points()


def fpr(g: Permutation) -> Fraction:
    return Fraction(len(g.fixed_points()), g.degree)


def relative_fixity(G: PermGroup, cap: int = CLASS_CAP) -> FixityResult:
    """
    Maximum fpr over non-identity elements, taken over class representatives
    - ties go to the representative met first in class enumeration order
    """
    if G.order() == 1:
        raise FixlabError("relative fixity is undefined for the trivial group")
    best = None
    witness = None
    for rep in class_representatives(G, cap):
        if rep.is_identity():
            continue
        value = len(rep.fixed_points())
        if best is None or value > best:
            best, witness = value, rep
    return FixityResult(rfx=Fraction(best, G.degree), witness=witness, fixity=best)


def fixity_search(G: PermGroup) -> FixityResult:
    """
    Exact fixity without enumerating elements
    - fix(G) is the largest |S| with a nontrivial pointwise stabilizer G_(S)
    - G_(S) equals G_(Fix(G_(S))), so nodes are keyed by their fixed-point set
    - within one orbit of H the stabilizers are conjugate in H, so one point per orbit is tried
    """
    if G.order() == 1:
        raise FixlabError("relative fixity is undefined for the trivial group")
    ceiling = G.degree - 2
    best = [-1, None]
    visited = set()

    def descend(H: PermGroup) -> None:
        fixed = frozenset(p for p in range(G.degree) if all(g.images[p] == p for g in H.generators))
        if fixed in visited or best[0] == ceiling:
            return
        visited.add(fixed)
        if len(fixed) > best[0]:
            best[0] = len(fixed)
            best[1] = next(g for g in H.generators if not g.is_identity())
        for orb in H.orbits():
            if len(orb) == 1:
                continue
            K = H.point_stabilizer(orb[0])
            if K.order() > 1:
                descend(K)

    descend(G)
    logger.debug(f"Fixity search visited {len(visited)} pointwise stabilizers")
    return FixityResult(rfx=Fraction(best[0], G.degree), witness=best[1], fixity=best[0])


def wreath_example(n: int, m: int) -> Tuple[PermGroup, Fraction]:
    """Sym(m) wr C_n on n*m points together with its relative fixity"""
    if n * m > WREATH_DEGREE_CAP:
        raise CapacityError("wreath example degree", n * m, WREATH_DEGREE_CAP)
    G = wreath_lexico(n, m)
    if G.order() <= WREATH_CLASS_LIMIT:
        result = relative_fixity(G)
    else:
        result = fixity_search(G)
    logger.debug(f"Wreath example ({n}, {m}): rfx = {result.rfx}, witness {result.witness}")
    return G, result.rfx
