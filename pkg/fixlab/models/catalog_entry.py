"""
Fixlab - Catalog entries
A graph together with a group of automorphisms and derived tags
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Dict, List, Optional, Set

from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup

if TYPE_CHECKING:
    from fixlab.graphs.orbital import OrbitalSpec, TransitivityProfile


class Provenance(Enum):
    CONSTRUCTED = "constructed"
    FILE = "file"
    AUTOMORPHISM_SEARCH = "automorphism-search"


@dataclass
class CatalogEntry:
    """
    One verification instance
    - group <= Aut(graph), checked when the catalog is loaded
    - subgroups are extra named actions (rotations, regular actions) used by rank sweeps
    - orbital is set for entries built from a directed orbital
    """
    id: str
    graph: SimpleGraph
    group: PermGroup
    provenance: Provenance
    tags: Set[str] = field(default_factory=set)
    known_constant: Optional[int] = None
    subgroups: Dict[str, PermGroup] = field(default_factory=dict)
    orbital: Optional['OrbitalSpec'] = None
    profile: Optional['TransitivityProfile'] = None

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags

    @property
    def local_group_name(self) -> Optional[str]:
        for tag in self.tags:
            if tag.startswith('local-group='):
                return tag.split('=', 1)[1]
        return None

    def sorted_tags(self) -> List[str]:
        return sorted(self.tags)

    def __repr__(self) -> str:
        return (f"CatalogEntry(id={self.id!r}, vertices={self.graph.n_vertices}, "
                f"edges={self.graph.edge_count()}, order={self.group.order()})")
