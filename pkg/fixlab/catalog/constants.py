"""
Fixlab - Local group constants
Registry of graph-restrictive local groups L with their stabilizer bounds c(L)
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from fixlab.groups.structure import ISOMORPHISM_DEGREE_CAP, is_primitive, permutation_isomorphic
from fixlab.models.errors import UnknownConstantError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalGroupConstant:
    """A local group L, given by generators on {0..degree-1}, and its constant c(L)"""
    name: str
    degree: int
    generators: Tuple[Permutation, ...]
    constant: int
    citation: str = ""

    @property
    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.generators)


def _entry(name: str, degree: int, cycles: List[List[Tuple[int, ...]]], constant: int, citation: str) -> LocalGroupConstant:
    gens = tuple(Permutation.from_cycles(degree, c) for c in cycles)
    return LocalGroupConstant(name=name, degree=degree, generators=gens, constant=constant, citation=citation)


BUILTIN_CONSTANTS = (
    _entry("Sym(2)", 2, [[(0, 1)]], 2,
           "valence 2: a vertex stabiliser of an arc-transitive cycle has order at most 2"),
    _entry("Sym(3)", 3, [[(0, 1)], [(0, 1, 2)]], 48,
           "Tutte: cubic arc-transitive graphs have vertex stabilisers of order at most 48"),
    _entry("Alt(4)", 4, [[(0, 1, 2)], [(1, 2, 3)]], 36,
           "Gardiner: tetravalent arc-transitive locally-A4 graphs"),
    _entry("Sym(4)", 4, [[(0, 1)], [(0, 1, 2, 3)]], 2 ** 4 * 3 ** 6,
           "Gardiner: tetravalent arc-transitive locally-S4 graphs"),
)


@dataclass
class ConstantsRegistry:
    """
    Name -> LocalGroupConstant, in registration order
    - later registrations with an existing name replace the earlier entry
    """
    entries: Dict[str, LocalGroupConstant] = field(default_factory=dict)

    @classmethod
    def builtin(cls) -> 'ConstantsRegistry':
        registry = cls()
        registry.extend(BUILTIN_CONSTANTS)
        return registry

    def register(self, entry: LocalGroupConstant) -> None:
        if entry.name in self.entries:
            logger.info(f"Replacing constant for {entry.name}: {self.entries[entry.name].constant} -> {entry.constant}")
        self.entries[entry.name] = entry

    def extend(self, entries: Iterable[LocalGroupConstant]) -> None:
        for entry in entries:
            self.register(entry)

    def get(self, name: str) -> LocalGroupConstant:
        try:
            return self.entries[name]
        except KeyError:
            raise UnknownConstantError(f"no constant registered for local group {name!r}") from None

    def match(self, local_group: PermGroup) -> Optional[LocalGroupConstant]:
        """Registered entry permutation isomorphic to the given local group"""
        for entry in self.entries.values():
            if matches(entry, local_group):
                return entry
        return None

    def names(self) -> List[str]:
        return list(self.entries)


def matches(entry: LocalGroupConstant, local_group: PermGroup) -> bool:
    """Degree, order and primitivity agree, plus permutation isomorphism on small degrees"""
    if entry.degree != local_group.degree:
        return False
    L = entry.group
    if L.order() != local_group.order():
        return False
    if L.is_transitive() != local_group.is_transitive():
        return False
    if L.is_transitive() and is_primitive(L) != is_primitive(local_group):
        return False
    if entry.degree <= ISOMORPHISM_DEGREE_CAP:
        return permutation_isomorphic(L, local_group) is not None
    return True
