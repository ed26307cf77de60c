"""
Fixlab - Group actions
Union-find orbit partitions and BFS orbits with transversals for arbitrary actions
(points, ordered pairs, edges, conjugation)
"""

from collections import deque
from typing import Callable, Dict, Hashable, Iterable, List, Sequence, TypeVar

from fixlab.models.permutation import Permutation

T = TypeVar('T', bound=Hashable)

Action = Callable[[Permutation, T], T]


class UnionFind:
    """Disjoint sets with union by rank and path compression"""

    def __init__(self, items: Iterable[T]):
        self.parent: Dict[T, T] = {x: x for x in items}
        self.rank: Dict[T, int] = {x: 0 for x in self.parent}

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> bool:
        """Merge the classes of x and y; False if they were already one class"""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]
        return True

    def classes(self) -> Dict[T, List[T]]:
        result: Dict[T, List[T]] = {}
        for x in self.parent:
            result.setdefault(self.find(x), []).append(x)
        return result

    def __len__(self) -> int:
        return len(self.rank)


def point_action(g: Permutation, x: int) -> int:
    return g.images[x]


def pair_action(g: Permutation, pair: tuple) -> tuple:
    return (g.images[pair[0]], g.images[pair[1]])


def edge_action(g: Permutation, edge: tuple) -> tuple:
    a, b = g.images[edge[0]], g.images[edge[1]]
    return (a, b) if a < b else (b, a)


def two_arc_action(g: Permutation, walk: tuple) -> tuple:
    return tuple(g.images[v] for v in walk)


def conjugation_action(x: Permutation, g: Permutation) -> Permutation:
    return g.conjugate(x)


def find_orbits(gens: Sequence[Permutation], space: Iterable[T], action: Action) -> List[List[T]]:
    """Orbits of a general action, each sorted, ordered by least element"""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return sorted((sorted(c) for c in uf.classes().values()), key=lambda c: c[0])


def orbit_with_transversal(gens: Sequence[Permutation], start: T, action: Action,
                           identity: Permutation) -> Dict[T, Permutation]:
    """
    Orbit of start as a dict: image -> element carrying start to it
    - insertion order is BFS order, so iteration is deterministic
    """
    transversal: Dict[T, Permutation] = {start: identity}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        u = transversal[x]
        for g in gens:
            y = action(g, x)
            if y not in transversal:
                transversal[y] = u * g
                queue.append(y)
    return transversal


def orbit_of(gens: Sequence[Permutation], start: T, action: Action) -> List[T]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = action(g, x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order
