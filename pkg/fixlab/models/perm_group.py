"""
Fixlab - Permutation groups
Finite generating set plus a lazily built stabilizer chain
(deterministic Schreier-Sims) for order, membership, orbits and stabilizers
"""

import logging
from collections import deque
from functools import cached_property
from itertools import product
from math import prod
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from fixlab.models.errors import DegreeMismatchError, FixlabError, PointOutOfRangeError
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)


class ChainLevel:
    """
    One level of a stabilizer chain
    - base_point: b_i
    - generators: strong generators fixing b_0 .. b_{i-1}
    - transversal: orbit point -> element carrying b_i to it
    - checked: (point, generator index) pairs whose Schreier generator already sifts
    """

    __slots__ = ('base_point', 'generators', 'transversal', 'orbit', 'checked', '_inverses')

    def __init__(self, base_point: int, identity: Permutation):
        self.base_point = base_point
        self.generators: List[Permutation] = []
        self.transversal: Dict[int, Permutation] = {base_point: identity}
        self.orbit: List[int] = [base_point]
        self.checked: Set[Tuple[int, int]] = set()
        self._inverses: Dict[int, Permutation] = {}

    def extend_orbit(self) -> None:
        # existing transversal elements never change, so checked pairs stay valid
        i = 0
        while i < len(self.orbit):
            point = self.orbit[i]
            u = self.transversal[point]
            for s in self.generators:
                image = s.images[point]
                if image not in self.transversal:
                    self.transversal[image] = u * s
                    self.orbit.append(image)
            i += 1

    def inverse_of(self, point: int) -> Permutation:
        inv = self._inverses.get(point)
        if inv is None:
            inv = self.transversal[point].inverse()
            self._inverses[point] = inv
        return inv


class StabilizerChain:
    """
    Base and strong generating set built by deterministic Schreier-Sims
    - base points are taken as the smallest point moved by the element forcing a new level
    - an optional base prefix is honoured first (used for point stabilizers)
    - Schreier generators are reduced by sifting before being added
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self.levels: List[ChainLevel] = [ChainLevel(b, self.identity) for b in base_prefix]

        for g in generators:
            if g.is_identity():
                continue
            if all(g.images[lv.base_point] == lv.base_point for lv in self.levels):
                self.levels.append(ChainLevel(g.smallest_moved_point(), self.identity))
            for lv in self.levels:
                lv.generators.append(g)
                if g.images[lv.base_point] != lv.base_point:
                    break

        for lv in self.levels:
            lv.extend_orbit()
        self._close()

    @classmethod
    def from_levels(cls, degree: int, levels: List[ChainLevel]) -> 'StabilizerChain':
        """Chain sharing already-closed levels (the tail of another chain)"""
        chain = object.__new__(cls)
        chain.degree = degree
        chain.identity = Permutation.identity(degree)
        chain.levels = list(levels)
        return chain

    def _close(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            level = self.levels[i]
            restart = False
            for point in list(level.orbit):
                u = level.transversal[point]
                for index, s in enumerate(level.generators):
                    if (point, index) in level.checked:
                        continue
                    target = s.images[point]
                    schreier = u * s * level.inverse_of(target)
                    residue, depth = self.sift(schreier, i + 1)
                    if depth == len(self.levels) and residue.is_identity():
                        level.checked.add((point, index))
                        continue
                    if depth == len(self.levels):
                        self.levels.append(ChainLevel(residue.smallest_moved_point(), self.identity))
                    for j in range(i + 1, depth + 1):
                        self.levels[j].generators.append(residue)
                        self.levels[j].extend_orbit()
                    i = depth
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """Strip g through the levels; returns (residue, depth reached)"""
        h = g
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            beta = h.images[level.base_point]
            if beta not in level.transversal:
                return h, j
            if beta != level.base_point:
                h = h * level.inverse_of(beta)
        return h, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        residue, depth = self.sift(g)
        return depth == len(self.levels) and residue.is_identity()

    def order(self) -> int:
        return prod(len(lv.orbit) for lv in self.levels)

    def base(self) -> List[int]:
        return [lv.base_point for lv in self.levels]

    def strong_generators(self) -> List[Permutation]:
        if not self.levels:
            return []
        return list(self.levels[0].generators)

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as u_{k-1} * ... * u_0 in a fixed order"""
        if not self.levels:
            yield self.identity
            return
        columns = [[lv.transversal[p] for p in lv.orbit] for lv in reversed(self.levels)]
        for choice in product(*columns):
            element = choice[0]
            for u in choice[1:]:
                element = element * u
            yield element


class PermGroup:
    """
    Permutation group given by generators
    - the stabilizer chain is built on first use and never mutated afterwards
    - point stabilizers are memoised per point
    """

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        if degree < 1:
            raise FixlabError("group degree must be positive")
        gens = tuple(generators)
        if not gens:
            gens = (Permutation.identity(degree),)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
        self._degree = degree
        self._generators = gens
        self._stabilizers: Dict[int, 'PermGroup'] = {}
        self._preset_chain: Optional[StabilizerChain] = None

    @classmethod
    def trivial(cls, degree: int) -> 'PermGroup':
        return cls(degree, [Permutation.identity(degree)])

    @classmethod
    def _from_chain(cls, chain: StabilizerChain, generators: Sequence[Permutation]) -> 'PermGroup':
        group = cls(chain.degree, generators)
        group._preset_chain = chain
        return group

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        return self._generators

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    @cached_property
    def chain(self) -> StabilizerChain:
        if self._preset_chain is not None:
            return self._preset_chain
        chain = StabilizerChain(self._degree, self._generators)
        logger.debug(f"Built stabilizer chain of degree {self._degree}: base {chain.base()}, order {chain.order()}")
        return chain

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self._generators)

    def _check_point(self, point: int) -> None:
        if not 0 <= point < self._degree:
            raise PointOutOfRangeError(point, self._degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            raise DegreeMismatchError(self._degree, p.degree)
        return self.chain.contains(p)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def orbit(self, point: int) -> Set[int]:
        self._check_point(point)
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self._generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self) -> List[List[int]]:
        """All orbits as sorted lists, ordered by least point"""
        result = []
        covered: Set[int] = set()
        for point in range(self._degree):
            if point in covered:
                continue
            orb = self.orbit(point)
            covered |= orb
            result.append(sorted(orb))
        return result

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._degree

    def is_semiregular(self) -> bool:
        # stabilizers within an orbit are conjugate: one point per orbit suffices
        n = self.order()
        return all(len(orb) == n for orb in self.orbits())

    def point_stabilizer(self, point: int) -> 'PermGroup':
        self._check_point(point)
        cached = self._stabilizers.get(point)
        if cached is not None:
            return cached
        chain = self.chain
        if not chain.levels or chain.levels[0].base_point != point:
            chain = StabilizerChain(self._degree, self._generators, base_prefix=(point,))
        tail = chain.levels[1:]
        gens = list(tail[0].generators) if tail else []
        if not gens:
            stabilizer = PermGroup.trivial(self._degree)
        else:
            stabilizer = PermGroup._from_chain(StabilizerChain.from_levels(self._degree, tail), gens)
        self._stabilizers[point] = stabilizer
        return stabilizer

    def elements(self) -> Iterator[Permutation]:
        return self.chain.elements()

    def base(self) -> List[int]:
        return self.chain.base()

    def strong_generators(self) -> List[Permutation]:
        return self.chain.strong_generators()

    def is_subgroup_of(self, other: 'PermGroup') -> bool:
        return all(other.contains(g) for g in self._generators)

    def __repr__(self) -> str:
        gens = ', '.join(g.cycle_notation() for g in self._generators)
        return f"PermGroup(degree={self._degree}, generators=[{gens}])"


def group_order(group: PermGroup) -> int:
    return group.order()


def contains(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def orbit(group: PermGroup, point: int) -> Set[int]:
    return group.orbit(point)


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    return group.point_stabilizer(point)


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()


def is_semiregular(group: PermGroup) -> bool:
    return group.is_semiregular()
