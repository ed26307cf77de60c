"""
Fixlab - Named groups
Small standard permutation groups in their natural actions
"""

from typing import List

from fixlab.models.errors import FixlabError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation


def _require_degree(n: int, minimum: int) -> None:
    if n < minimum:
        raise FixlabError(f"degree must be at least {minimum}, got {n}")


def cyclic(n: int) -> PermGroup:
    """Regular cyclic group generated by (0 1 ... n-1)"""
    _require_degree(n, 1)
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup(n, [Permutation.from_cycles(n, [range(n)])])


def symmetric(n: int) -> PermGroup:
    _require_degree(n, 1)
    if n == 1:
        return PermGroup.trivial(1)
    if n == 2:
        return PermGroup(2, [Permutation([1, 0])])
    return PermGroup(n, [
        Permutation.from_cycles(n, [(0, 1)]),
        Permutation.from_cycles(n, [range(n)]),
    ])


def alternating(n: int) -> PermGroup:
    """Generated by the 3-cycles (0 1 i)"""
    _require_degree(n, 1)
    if n < 3:
        return PermGroup.trivial(n)
    return PermGroup(n, [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)])


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon on its n vertices, order 2n"""
    _require_degree(n, 3)
    rotation = Permutation.from_cycles(n, [range(n)])
    reflection = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [rotation, reflection])


def klein_four() -> PermGroup:
    return PermGroup(4, [
        Permutation.from_cycles(4, [(0, 1), (2, 3)]),
        Permutation.from_cycles(4, [(0, 2), (1, 3)]),
    ])


def wreath_lexico(n: int, m: int) -> PermGroup:
    """
    Sym(m) wr C_n on n*m points, point i*m + j is vertex j of fibre i
    - the automorphism group of the lexicographic product of the directed n-cycle
      with the edgeless graph on m vertices
    - order (m!)^n * n
    """
    _require_degree(n, 2)
    _require_degree(m, 2)
    degree = n * m
    rotation = Permutation([((p // m + 1) % n) * m + p % m for p in range(degree)])
    gens: List[Permutation] = [rotation, Permutation.from_cycles(degree, [(0, 1)])]
    if m > 2:
        gens.append(Permutation.from_cycles(degree, [range(m)]))
    return PermGroup(degree, gens)
