"""
Fixlab - Instance generators
Circulants, Cayley graphs, LCF-coded cubic graphs and the wreath example,
each returned as a CatalogEntry with a group of automorphisms attached
"""

import logging
import random
from collections import deque
from typing import Dict, List, Optional, Sequence

import networkx as nx

from fixlab.catalog.named_groups import cyclic, wreath_lexico
from fixlab.graphs.automorphisms import AUTOMORPHISM_VERTEX_CAP, automorphism_group
from fixlab.graphs.orbital import orbital_digraph
from fixlab.groups.fixity import WREATH_DEGREE_CAP
from fixlab.groups.oracles import random_transitive_group
from fixlab.models.catalog_entry import CatalogEntry, Provenance
from fixlab.models.errors import CapacityError, FixlabError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

CAYLEY_ORDER_CAP = 5000
RANDOM_DEGREES = (4, 5, 6, 7)


def _rotation(n: int, step: int) -> Permutation:
    return Permutation([(i + step) % n for i in range(n)])


def _with_search(entry_id: str, graph: SimpleGraph, fallback: PermGroup) -> CatalogEntry:
    logger.debug(f"Building {entry_id} on {graph.n_vertices} vertices")
    if graph.n_vertices <= AUTOMORPHISM_VERTEX_CAP:
        return CatalogEntry(entry_id, graph, automorphism_group(graph), Provenance.AUTOMORPHISM_SEARCH)
    return CatalogEntry(entry_id, graph, fallback, Provenance.CONSTRUCTED)


def gen_circulant(n: int, steps: Sequence[int], entry_id: Optional[str] = None) -> CatalogEntry:
    """Circulant on Z_n with connection set +-steps; full group when small enough, rotations always"""
    if n < 3:
        raise FixlabError(f"circulant needs at least 3 vertices, got {n}")
    residues = sorted({s % n for s in steps})
    if not residues:
        raise FixlabError("circulant needs a nonempty step set")
    if 0 in residues:
        raise FixlabError("circulant steps must be nonzero modulo n")
    edges = [(i, (i + s) % n) for i in range(n) for s in residues]
    graph = SimpleGraph.from_edges(n, edges)
    rotations = cyclic(n)
    entry = _with_search(entry_id or f"circulant({n};{','.join(map(str, residues))})", graph, rotations)
    entry.subgroups['rotation'] = rotations
    return entry


def gen_cycle(n: int) -> CatalogEntry:
    entry = gen_circulant(n, [1], entry_id=f"C{n}")
    return entry


def _group_elements_bfs(group: PermGroup) -> List[Permutation]:
    """Elements in BFS order from the identity over the generators"""
    identity = group.identity
    seen = {identity: 0}
    order = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in group.generators:
            y = x * s
            if y not in seen:
                seen[y] = len(order)
                order.append(y)
                queue.append(y)
    return order


def gen_cayley(group: PermGroup, connection_set: Sequence[Permutation], entry_id: Optional[str] = None) -> CatalogEntry:
    """
    Cayley graph with vertices the group elements (BFS order), edges {x, s*x}
    - the regular action x -> x*h is attached as the entry group
    """
    order = group.order()
    if order > CAYLEY_ORDER_CAP:
        raise CapacityError("Cayley graph order", order, CAYLEY_ORDER_CAP)
    S = list(dict.fromkeys(connection_set))
    if not S:
        raise FixlabError("connection set must be nonempty")
    for s in S:
        if s.is_identity():
            raise FixlabError("connection set must not contain the identity")
        if not group.contains(s):
            raise FixlabError(f"{s.cycle_notation()} is not a group element")
        if s.inverse() not in S:
            raise FixlabError(f"connection set is not inverse-closed: {s.cycle_notation()}")

    elements = _group_elements_bfs(group)
    index: Dict[Permutation, int] = {x: i for i, x in enumerate(elements)}
    edges = [(index[x], index[s * x]) for x in elements for s in S]
    graph = SimpleGraph.from_edges(len(elements), edges)
    regular = PermGroup(len(elements), [
        Permutation([index[x * h] for x in elements]) for h in group.generators
    ])
    if not regular.is_semiregular():
        raise FixlabError("right regular action is not semiregular")
    entry = CatalogEntry(entry_id or f"cayley({order})", graph, regular, Provenance.CONSTRUCTED)
    entry.subgroups['regular'] = regular
    return entry


def gen_lcf(entry_id: str, n: int, shifts: Sequence[int], repeats: int) -> CatalogEntry:
    """Hamiltonian cubic graph from LCF notation; the rotation by len(shifts) is attached"""
    nxg = nx.LCF_graph(n, list(shifts), repeats)
    graph = SimpleGraph.from_edges(n, nxg.edges())
    period = len(shifts)
    rotation = PermGroup(n, [_rotation(n, period)])
    entry = _with_search(entry_id, graph, rotation)
    entry.subgroups['lcf-rotation'] = rotation
    return entry


def gen_wreath_lexico(n: int, m: int, entry_id: Optional[str] = None) -> CatalogEntry:
    """
    Sym(m) wr C_n with its size-m suborbit at 0 (fibre 1); the directed orbital is the
    lexicographic product of the directed n-cycle with m isolated vertices
    """
    if n < 3:
        raise FixlabError(f"wreath example needs n >= 3, got {n}")
    if m < 2:
        raise FixlabError(f"wreath example needs m >= 2, got {m}")
    if n * m > WREATH_DEGREE_CAP:
        raise CapacityError("wreath example degree", n * m, WREATH_DEGREE_CAP)
    G = wreath_lexico(n, m)
    spec = orbital_digraph(G, 0, m)
    graph = SimpleGraph.from_edges(n * m, spec.arcs)
    entry = CatalogEntry(entry_id or f"wreath({n},{m})", graph, G, Provenance.CONSTRUCTED)
    entry.orbital = spec
    entry.tags.add('directed-orbital')
    return entry


def gen_from_edges(entry_id: str, n: int, edges: Sequence[Sequence[int]]) -> CatalogEntry:
    graph = SimpleGraph.from_edges(n, [tuple(e) for e in edges])
    return _with_search(entry_id, graph, PermGroup.trivial(n))


def gen_random_transitive(rng: random.Random, degree: int, entry_id: str) -> CatalogEntry:
    """A random transitive group on the edgeless graph; only the group lemmas apply to it"""
    group = random_transitive_group(rng, degree)
    graph = SimpleGraph.from_edges(degree, [])
    entry = CatalogEntry(entry_id, graph, group, Provenance.CONSTRUCTED)
    entry.tags.add('random')
    return entry


def gen_random_entries(seed: int, count: int, degrees: Sequence[int] = RANDOM_DEGREES) -> List[CatalogEntry]:
    rng = random.Random(seed)
    return [gen_random_transitive(rng, rng.choice(list(degrees)), f"random-{seed}-{i:03d}") for i in range(count)]
