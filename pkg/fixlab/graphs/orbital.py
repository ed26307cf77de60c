"""
Fixlab - Orbitals
Suborbits, orbital (di)graphs, Higman's criterion and the transitivity
hierarchy of a group acting on a graph
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from fixlab.groups.actions import edge_action, orbit_of, pair_action, two_arc_action
from fixlab.groups.structure import is_primitive, is_quasiprimitive, restriction
from fixlab.models.errors import FixlabError, NotAutomorphismError, NotTransitiveError, PointOutOfRangeError
from fixlab.models.graph import SimpleGraph
from fixlab.models.perm_group import PermGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitalSpec:
    """
    The orbital of (base, rep)
    - suborbit is rep^{G_base}
    - arcs is the G-orbit of (base, rep); graph is present iff self_paired
    """
    degree: int
    base: int
    rep: int
    suborbit: FrozenSet[int]
    self_paired: bool
    arcs: FrozenSet[Tuple[int, int]]
    graph: Optional[SimpleGraph] = None

    @property
    def size(self) -> int:
        return len(self.suborbit)

    def to_networkx(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self.degree))
        digraph.add_edges_from(sorted(self.arcs))
        return digraph


@dataclass
class TransitivityProfile:
    """Transitivity flags of G on a graph, plus G_v^{Gamma(v)} per vertex-orbit representative"""
    vertex: bool
    edge: bool
    arc: bool
    two_arc: bool
    local_arc: bool
    locally_quasiprimitive: bool
    local_groups: Dict[int, PermGroup] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, bool]:
        return {
            'vertex': self.vertex,
            'edge': self.edge,
            'arc': self.arc,
            'two_arc': self.two_arc,
            'local_arc': self.local_arc,
            'locally_quasiprimitive': self.locally_quasiprimitive,
        }


def orbital_digraph(G: PermGroup, omega: int, delta: int) -> OrbitalSpec:
    if omega == delta:
        raise FixlabError("orbital representative must differ from the base point")
    for point in (omega, delta):
        if not 0 <= point < G.degree:
            raise PointOutOfRangeError(point, G.degree)
    arcs = frozenset(orbit_of(G.generators, (omega, delta), pair_action))
    suborbit = frozenset(b for a, b in arcs if a == omega)
    self_paired = (delta, omega) in arcs
    graph = None
    if self_paired:
        graph = SimpleGraph.from_edges(G.degree, ((a, b) for a, b in arcs if a < b))
    return OrbitalSpec(
        degree=G.degree,
        base=omega,
        rep=delta,
        suborbit=suborbit,
        self_paired=self_paired,
        arcs=arcs,
        graph=graph,
    )


def suborbits(G: PermGroup, omega: int) -> List[OrbitalSpec]:
    """Orbits of G_omega on the remaining points, ordered by least point"""
    if not G.is_transitive():
        raise NotTransitiveError("suborbits require a transitive group")
    stabilizer = G.point_stabilizer(omega)
    specs = []
    for orb in stabilizer.orbits():
        if orb == [omega]:
            continue
        specs.append(orbital_digraph(G, omega, orb[0]))
    logger.debug(f"Suborbit lengths at {omega}: {[s.size for s in specs]}")
    return specs


def paired_suborbit(spec: OrbitalSpec) -> FrozenSet[int]:
    """Suborbit at the same base of the reversed orbital"""
    return frozenset(a for a, b in spec.arcs if b == spec.base)


def is_connected(obj: Union[SimpleGraph, OrbitalSpec]) -> bool:
    """Reachability; directed orbitals count as connected when weakly connected"""
    if isinstance(obj, OrbitalSpec):
        return nx.is_weakly_connected(obj.to_networkx())
    if isinstance(obj, SimpleGraph):
        return nx.is_connected(obj.to_networkx())
    raise TypeError(f"cannot test connectivity of {type(obj).__name__}")


def higman_check(G: PermGroup) -> Tuple[bool, bool]:
    """(primitive by blocks, every orbital digraph connected); the two always agree"""
    primitive = is_primitive(G)
    connected = all(is_connected(spec) for spec in suborbits(G, 0))
    if primitive != connected:
        logger.error(f"Higman disagreement on {G!r}: primitive={primitive}, connected={connected}")
    return primitive, connected


def _require_automorphisms(graph: SimpleGraph, G: PermGroup) -> None:
    if G.degree != graph.n_vertices:
        raise NotAutomorphismError(f"group degree {G.degree} != {graph.n_vertices} vertices")
    for g in G.generators:
        if not graph.is_automorphism(g):
            raise NotAutomorphismError(f"{g.cycle_notation()} does not preserve adjacency")


def local_action(graph: SimpleGraph, G: PermGroup, v: int) -> PermGroup:
    """G_v acting on Gamma(v), neighbours relabelled 0..deg-1 in ascending order"""
    neighbours = graph.neighbors(v)
    if not neighbours:
        raise FixlabError(f"vertex {v} has no neighbours")
    return restriction(G.point_stabilizer(v), neighbours)


def _one_orbit(G: PermGroup, items: List[tuple], action) -> bool:
    if not items:
        return False
    return len(orbit_of(G.generators, items[0], action)) == len(items)


def transitivity_profile(graph: SimpleGraph, G: PermGroup) -> TransitivityProfile:
    _require_automorphisms(graph, G)
    edges = list(graph.edges())
    arcs = list(graph.arcs())
    vertex = G.is_transitive()
    edge = _one_orbit(G, edges, edge_action)
    arc = _one_orbit(G, arcs, pair_action)
    if arc:
        two_arcs = list(graph.two_arcs())
        two_arc = not two_arcs or _one_orbit(G, two_arcs, two_arc_action)
    else:
        two_arc = False

    local_groups: Dict[int, PermGroup] = {}
    local_arc = True
    locally_qp = True
    for orb in G.orbits():
        v = orb[0]
        if graph.degree(v) == 0:
            local_arc = locally_qp = False
            continue
        L = local_action(graph, G, v)
        local_groups[v] = L
        if not L.is_transitive():
            local_arc = locally_qp = False
        elif not is_quasiprimitive(L):
            locally_qp = False

    return TransitivityProfile(
        vertex=vertex,
        edge=edge,
        arc=arc,
        two_arc=two_arc,
        local_arc=local_arc,
        locally_quasiprimitive=locally_qp,
        local_groups=local_groups,
    )


def is_complete_bipartite(graph: SimpleGraph) -> bool:
    """K_{a,b} with a, b >= 1, stars included"""
    if graph.edge_count() == 0:
        return False
    nxg = graph.to_networkx()
    if not nx.is_connected(nxg) or not nx.is_bipartite(nxg):
        return False
    left, right = nx.bipartite.sets(nxg)
    return graph.edge_count() == len(left) * len(right)


def is_bipartite(graph: SimpleGraph) -> bool:
    return nx.is_bipartite(graph.to_networkx())


def bipartition(graph: SimpleGraph) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Parts of a connected bipartite graph, the part holding vertex 0 first"""
    left, right = nx.bipartite.sets(graph.to_networkx())
    if 0 in right:
        left, right = right, left
    return frozenset(left), frozenset(right)
