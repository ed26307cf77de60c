"""
Fixlab - Graph automorphisms
Individualization-refinement backtracking for the full automorphism group of a
small simple graph
"""

import logging
from typing import Dict, List, Optional, Sequence

from fixlab.models.errors import CapacityError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

AUTOMORPHISM_VERTEX_CAP = 128

Partition = List[List[int]]


def refine(graph: SimpleGraph, cells: Sequence[Sequence[int]]) -> Partition:
    """
    Coarsest equitable refinement of an ordered partition
    - a cell is split by neighbour counts into the splitter cell, counts ascending
    - splitting depends only on the cell structure, so it commutes with isomorphisms
    """
    cells = [sorted(c) for c in cells]
    while True:
        split = None
        for s in range(len(cells)):
            splitter = set(cells[s])
            new_cells: Partition = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for v in cell:
                    count = sum(1 for u in graph.neighbors(v) if u in splitter)
                    groups.setdefault(count, []).append(v)
                if len(groups) > 1:
                    split = True
                new_cells.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new_cells
                break
        if not split:
            return cells


def individualize(cells: Partition, v: int) -> Partition:
    result = []
    for cell in cells:
        if v in cell:
            result.append([v])
            result.append([u for u in cell if u != v])
        else:
            result.append(cell)
    return [c for c in result if c]


def _shape(cells: Partition) -> List[int]:
    return [len(c) for c in cells]


def _target_cell(cells: Partition) -> int:
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            return i
    return -1


class AutomorphismSearch:
    """
    Search state for one graph
    - first_path[j] is the partition before individualizing base[j]
    - generators found while filling level i fix base[0..i-1] pointwise
    """

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.n = graph.n_vertices
        self.first_path: List[Partition] = []
        self.cell_index: List[int] = []
        self.base: List[int] = []
        self.generators: List[Permutation] = []
        self.leaves = 0

        cells = refine(graph, [list(range(self.n))])
        while True:
            self.first_path.append(cells)
            c = _target_cell(cells)
            if c < 0:
                break
            b = cells[c][0]
            self.cell_index.append(c)
            self.base.append(b)
            cells = refine(graph, individualize(cells, b))
        self.leaf = cells

    def _leaf_map(self, right: Partition) -> Optional[Permutation]:
        self.leaves += 1
        images = [0] * self.n
        for left_cell, right_cell in zip(self.leaf, right):
            images[left_cell[0]] = right_cell[0]
        g = Permutation(images)
        return g if self.graph.is_automorphism(g) else None

    def _extend(self, right: Partition, depth: int) -> Optional[Permutation]:
        if _target_cell(right) < 0:
            return self._leaf_map(right)
        c = self.cell_index[depth]
        expected = _shape(self.first_path[depth + 1])
        for v in right[c]:
            child = refine(self.graph, individualize(right, v))
            if _shape(child) != expected:
                continue
            found = self._extend(child, depth + 1)
            if found is not None:
                return found
        return None

    def _orbit(self, point: int, gens: List[Permutation]) -> set:
        seen = {point}
        stack = [point]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def run(self) -> List[Permutation]:
        # deepest level first, so gens at levels > i already generate the stabilizer of base[0..i]
        for level in reversed(range(len(self.base))):
            cells = self.first_path[level]
            b = self.base[level]
            expected = _shape(self.first_path[level + 1])
            orbit = self._orbit(b, self.generators)
            for w in cells[self.cell_index[level]]:
                if w in orbit:
                    continue
                child = refine(self.graph, individualize(cells, w))
                if _shape(child) != expected:
                    continue
                g = self._extend(child, level + 1)
                if g is not None:
                    self.generators.append(g)
                    orbit = self._orbit(b, self.generators)
        return self.generators


def automorphism_group(graph: SimpleGraph) -> PermGroup:
    if graph.n_vertices > AUTOMORPHISM_VERTEX_CAP:
        raise CapacityError("automorphism search vertices", graph.n_vertices, AUTOMORPHISM_VERTEX_CAP)
    search = AutomorphismSearch(graph)
    gens = search.run()
    group = PermGroup(graph.n_vertices, gens) if gens else PermGroup.trivial(graph.n_vertices)
    logger.debug(f"Automorphism search on {graph!r}: {len(gens)} generators, "
                 f"{search.leaves} leaves, order {group.order()}")
    return group
