"""
Fixlab - Graphs
Finite undirected simple graphs as vertex count plus sorted adjacency lists
"""

from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from fixlab.models.errors import FixlabError, PointOutOfRangeError
from fixlab.models.permutation import Permutation


class SimpleGraph:
    """
    Undirected simple graph on {0, ..., n-1}
    - adjacency lists are sorted, symmetric, loop-free and duplicate-free
    """

    __slots__ = ('_n', '_adjacency', '_edge_count')

    def __init__(self, n_vertices: int, adjacency: Sequence[Iterable[int]]):
        if n_vertices < 1:
            raise FixlabError("a graph needs at least one vertex")
        if len(adjacency) != n_vertices:
            raise FixlabError(f"expected {n_vertices} adjacency lists, got {len(adjacency)}")
        adj = []
        for v, neighbours in enumerate(adjacency):
            row = sorted(set(neighbours))
            for u in row:
                if not 0 <= u < n_vertices:
                    raise PointOutOfRangeError(u, n_vertices)
                if u == v:
                    raise FixlabError(f"loop at vertex {v}")
            adj.append(tuple(row))
        for v, row in enumerate(adj):
            for u in row:
                if v not in adj[u]:
                    raise FixlabError(f"adjacency is not symmetric: {v} -> {u}")
        self._n = n_vertices
        self._adjacency = tuple(adj)
        self._edge_count = sum(len(row) for row in adj) // 2

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Tuple[int, int]]) -> 'SimpleGraph':
        adjacency: List[set] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n_vertices:
                    raise PointOutOfRangeError(w, n_vertices)
            if u == v:
                raise FixlabError(f"loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n_vertices, adjacency)

    @property
    def n_vertices(self) -> int:
        return self._n

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self._adjacency]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v in lexicographic order"""
        for u, row in enumerate(self._adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def arcs(self) -> Iterator[Tuple[int, int]]:
        for u, row in enumerate(self._adjacency):
            for v in row:
                yield (u, v)

    def two_arcs(self) -> Iterator[Tuple[int, int, int]]:
        for u, row in enumerate(self._adjacency):
            for v in row:
                for w in self._adjacency[v]:
                    if w != u:
                        yield (u, v, w)

    def is_automorphism(self, g: Permutation) -> bool:
        if g.degree != self._n:
            return False
        image = g.images
        return all(image[v] in self._adjacency[image[u]] for u, v in self.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash(self._adjacency)

    def __repr__(self) -> str:
        return f"SimpleGraph(n_vertices={self._n}, edges={self._edge_count})"
