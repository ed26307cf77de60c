"""
Fixlab - Permutations
Bijections of {0, ..., n-1} stored as image tables, acting on the right:
the image of a point w under p*q is (w^p)^q
"""

from functools import reduce
from math import lcm
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from fixlab.models.errors import (
    DegreeMismatchError,
    InvalidPermutationError,
    PointOutOfRangeError,
)


class Permutation:
    """
    Immutable permutation of {0, ..., degree-1}
    - images[i] is the image of i
    - p * q applies p first, then q
    - hashable and totally ordered by image table, so sets and sorted lists are reproducible
    """

    __slots__ = ('_images', '_hash')

    def __init__(self, images: Iterable[int]):
        table = tuple(images)
        if not table:
            raise InvalidPermutationError("permutation degree must be positive")
        if sorted(table) != list(range(len(table))):
            raise InvalidPermutationError(f"not a bijection on 0..{len(table) - 1}: {table}")
        self._images = table
        self._hash = hash(table)

    @classmethod
    def _trusted(cls, table: Tuple[int, ...]) -> 'Permutation':
        """Build from an image table already known to be a bijection"""
        perm = object.__new__(cls)
        perm._images = table
        perm._hash = hash(table)
        return perm

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        if degree < 1:
            raise InvalidPermutationError("permutation degree must be positive")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """Product of the given cycles, applied left to right"""
        table = list(range(degree))
        result = cls._trusted(tuple(table))
        for cycle in cycles:
            if not cycle:
                continue
            if len(set(cycle)) != len(cycle):
                raise InvalidPermutationError(f"repeated point in cycle {tuple(cycle)}")
            step = list(range(degree))
            for point in cycle:
                if not 0 <= point < degree:
                    raise PointOutOfRangeError(point, degree)
            for a, b in zip(cycle, cycle[1:]):
                step[a] = b
            step[cycle[-1]] = cycle[0]
            result = result * cls._trusted(tuple(step))
        return result

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, point: int) -> int:
        if not 0 <= point < len(self._images):
            raise PointOutOfRangeError(point, len(self._images))
        return self._images[point]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._images) != len(self._images):
            raise DegreeMismatchError(len(self._images), len(other._images))
        image = other._images
        return Permutation._trusted(tuple([image[i] for i in self._images]))

    def inverse(self) -> 'Permutation':
        table = [0] * len(self._images)
        for i, j in enumerate(self._images):
            table[j] = i
        return Permutation._trusted(tuple(table))

    __invert__ = inverse

    def __pow__(self, exponent: int) -> 'Permutation':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, by: 'Permutation') -> 'Permutation':
        """g^x = x^-1 g x"""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point, ordered by least point"""
        seen = set()
        result = []
        for start in range(len(self._images)):
            if start in seen or self._images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self._images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self._images[point]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def fixed_points(self) -> FrozenSet[int]:
        return frozenset(i for i, j in enumerate(self._images) if i == j)

    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, j in enumerate(self._images) if i != j)

    def smallest_moved_point(self) -> int:
        for i, j in enumerate(self._images):
            if i != j:
                return i
        return -1

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(map(str, c)) + ')' for c in cycles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: 'Permutation') -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, degree={self.degree})"

    def __str__(self) -> str:
        return self.cycle_notation()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """compose(p, q).images[i] == q.images[p.images[i]]"""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)
