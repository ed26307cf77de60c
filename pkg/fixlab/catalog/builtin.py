"""
Fixlab - Built-in catalog
Named instances embedded as data records, expanded and validated on load
"""

import logging
from typing import Dict, List, Optional

from fixlab.catalog.constants import ConstantsRegistry
from fixlab.catalog.generators import (
    gen_cayley,
    gen_circulant,
    gen_cycle,
    gen_from_edges,
    gen_lcf,
    gen_wreath_lexico,
)
from fixlab.catalog.named_groups import cyclic, klein_four, symmetric
from fixlab.graphs.orbital import is_bipartite, is_complete_bipartite, is_connected, transitivity_profile
from fixlab.models.catalog_entry import CatalogEntry
from fixlab.models.errors import CatalogValidationError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)


def _prism_edges(n: int) -> List[List[int]]:
    outer = [[i, (i + 1) % n] for i in range(n)]
    inner = [[n + i, n + (i + 1) % n] for i in range(n)]
    spokes = [[i, n + i] for i in range(n)]
    return outer + inner + spokes


# explicit edge lists
EDGE_RECORDS: List[Dict] = [
    {'id': 'K4', 'vertices': 4, 'edges': [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]},
    {'id': 'K3,3', 'vertices': 6, 'edges': [[0, 3], [0, 4], [0, 5], [1, 3], [1, 4], [1, 5],
                                            [2, 3], [2, 4], [2, 5]]},
    {'id': 'Petersen', 'vertices': 10, 'edges': [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0],
                                                 [0, 5], [1, 6], [2, 7], [3, 8], [4, 9],
                                                 [5, 7], [7, 9], [9, 6], [6, 8], [8, 5]],
     'subgroups': {'rotation': [[(0, 1, 2, 3, 4), (5, 6, 7, 8, 9)]]}},
    {'id': 'prism5', 'vertices': 10, 'edges': _prism_edges(5),
     'subgroups': {'rotation': [[(0, 1, 2, 3, 4), (5, 6, 7, 8, 9)]]}},
    {'id': 'prism6', 'vertices': 12, 'edges': _prism_edges(6),
     'subgroups': {'rotation': [[(0, 1, 2, 3, 4, 5), (6, 7, 8, 9, 10, 11)]]}},
]

# Hamiltonian cubic graphs: (id, vertices, shifts, repeats)
LCF_RECORDS = [
    ('cube', 8, [3, -3], 4),
    ('Heawood', 14, [5, -5], 7),
    ('Moebius-Kantor', 16, [5, -5], 8),
    ('Pappus', 18, [5, 7, -7, 7, -7, -5], 3),
    ('dodecahedron', 20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2),
    ('Desargues', 20, [5, -5, 9, -9], 5),
]

CYCLE_RECORDS = list(range(5, 13))

CIRCULANT_RECORDS = [(10, [1, 3])]

WREATH_RECORDS = [(3, 3), (4, 2), (5, 2)]


def _cayley_records() -> List[CatalogEntry]:
    v4 = klein_four()
    s3 = symmetric(3)
    c6 = cyclic(6)
    transpositions = [Permutation.from_cycles(3, [c]) for c in [(0, 1), (0, 2), (1, 2)]]
    step = c6.generators[0]
    return [
        gen_cayley(v4, [g for g in v4.elements() if not g.is_identity()], entry_id='cayley-V4'),
        gen_cayley(c6, [step, step.inverse()], entry_id='cayley-C6'),
        gen_cayley(s3, transpositions, entry_id='cayley-S3'),
    ]


def _expand() -> List[CatalogEntry]:
    entries: List[CatalogEntry] = []
    for record in EDGE_RECORDS:
        entry = gen_from_edges(record['id'], record['vertices'], record['edges'])
        for name, generators in record.get('subgroups', {}).items():
            entry.subgroups[name] = PermGroup(record['vertices'], [
                Permutation.from_cycles(record['vertices'], cycles) for cycles in generators
            ])
        entries.append(entry)
    for entry_id, n, shifts, repeats in LCF_RECORDS:
        entries.append(gen_lcf(entry_id, n, shifts, repeats))
    entries.extend(gen_cycle(n) for n in CYCLE_RECORDS)
    entries.extend(gen_circulant(n, steps) for n, steps in CIRCULANT_RECORDS)
    entries.extend(_cayley_records())
    entries.extend(gen_wreath_lexico(n, m) for n, m in WREATH_RECORDS)
    return entries


def validate_entry(entry: CatalogEntry, registry: Optional[ConstantsRegistry] = None) -> CatalogEntry:
    """Check group <= Aut(graph) for the group and every subgroup, then compute tags"""
    graph = entry.graph
    for name, group in [('group', entry.group)] + list(entry.subgroups.items()):
        if group.degree != graph.n_vertices:
            raise CatalogValidationError(entry.id, f"{name} has degree {group.degree}, graph has {graph.n_vertices}")
        for g in group.generators:
            if not graph.is_automorphism(g):
                raise CatalogValidationError(entry.id, f"{name} generator {g.cycle_notation()} is not an automorphism")

    registry = registry or ConstantsRegistry.builtin()
    connected = is_connected(graph)
    entry.tags.add('connected' if connected else 'disconnected')
    if is_bipartite(graph):
        entry.tags.add('bipartite')
    if is_complete_bipartite(graph):
        entry.tags.add('complete-bipartite')
    if entry.group.is_semiregular():
        entry.tags.add('semiregular')

    profile = transitivity_profile(graph, entry.group)
    entry.profile = profile
    if profile.vertex:
        entry.tags.add('vertex-transitive')
    if profile.local_arc:
        entry.tags.add('locally-arc-transitive')
    if profile.locally_quasiprimitive:
        entry.tags.add('locally-quasiprimitive')
    if profile.vertex and profile.arc:
        entry.tags.add('arc-transitive')
        if profile.two_arc:
            entry.tags.add('two-arc-transitive')
        if graph.is_regular() and graph.degree(0) == 3:
            entry.tags.add('cubic-arc-transitive')
        constant = registry.match(profile.local_groups[0])
        if constant is not None:
            entry.tags.add(f"local-group={constant.name}")
            entry.known_constant = constant.constant
    return entry


def validate_catalog(entries: List[CatalogEntry], registry: Optional[ConstantsRegistry] = None) -> List[CatalogEntry]:
    seen = set()
    for entry in entries:
        if entry.id in seen:
            raise CatalogValidationError(entry.id, "duplicate instance id")
        seen.add(entry.id)
        validate_entry(entry, registry)
        logger.debug(f"Validated {entry!r} tags={entry.sorted_tags()}")
    return entries


def builtin_catalog(registry: Optional[ConstantsRegistry] = None) -> List[CatalogEntry]:
    entries = validate_catalog(_expand(), registry)
    logger.info(f"Loaded {len(entries)} built-in catalog entries")
    return entries
