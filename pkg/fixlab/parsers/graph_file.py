"""
Fixlab - Graph file parser
Line 1 "vertices n"; following lines "u v", 0-indexed; "#" starts a comment.
Orbital digraphs are exported as arc lists under an "orbital" header.
"""

import logging
import re
from typing import List, Optional, Tuple

from fixlab.graphs.orbital import OrbitalSpec
from fixlab.models.errors import FileFormatError, FixlabError
from fixlab.models.graph import SimpleGraph

logger = logging.getLogger(__name__)

VERTICES_RE = re.compile(r'^vertices\s+(\d+)$')
EDGE_RE = re.compile(r'^(\d+)\s+(\d+)$')
ORBITAL_RE = re.compile(r'^orbital\s+base\s+(\d+)\s+rep\s+(\d+)\s+self_paired\s+(true|false)$')


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0].strip()
        if body:
            yield number, body


def _pairs(lines, n: int, path: Optional[str]) -> List[Tuple[int, int]]:
    pairs = []
    for number, body in lines:
        match = EDGE_RE.match(body)
        if not match:
            raise FileFormatError(f"expected 'u v', got {body!r}", path, number)
        u, v = int(match.group(1)), int(match.group(2))
        if u >= n or v >= n:
            raise FileFormatError(f"vertex out of range for {n} vertices", path, number)
        pairs.append((u, v))
    return pairs


def parse_graph(text: str, path: Optional[str] = None) -> SimpleGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FileFormatError("empty graph file", path)
    number, header = lines[0]
    match = VERTICES_RE.match(header)
    if not match:
        raise FileFormatError(f"expected 'vertices n', got {header!r}", path, number)
    n = int(match.group(1))
    edges = _pairs(lines[1:], n, path)
    for (u, v), (line_no, _) in zip(edges, lines[1:]):
        if u == v:
            raise FileFormatError(f"loop at vertex {u}", path, line_no)
    try:
        graph = SimpleGraph.from_edges(n, edges)
    except FixlabError as e:
        raise FileFormatError(str(e), path) from e
    logger.debug(f"Parsed graph file {path or '<text>'}: {n} vertices, {graph.edge_count()} edges")
    return graph


def print_graph(graph: SimpleGraph) -> str:
    out = [f"vertices {graph.n_vertices}"]
    out.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(out) + "\n"


def print_orbital(spec: OrbitalSpec) -> str:
    out = [
        f"orbital base {spec.base} rep {spec.rep} self_paired {str(spec.self_paired).lower()}",
        f"vertices {spec.degree}",
    ]
    out.extend(f"{u} {v}" for u, v in sorted(spec.arcs))
    return "\n".join(out) + "\n"


def parse_orbital_arcs(text: str, path: Optional[str] = None) -> Tuple[int, int, bool, int, List[Tuple[int, int]]]:
    """(base, rep, self_paired, vertices, arcs) from an exported orbital"""
    lines = list(_content_lines(text))
    if len(lines) < 2:
        raise FileFormatError("orbital export needs a header and a vertices line", path)
    header = ORBITAL_RE.match(lines[0][1])
    if not header:
        raise FileFormatError(f"bad orbital header {lines[0][1]!r}", path, lines[0][0])
    vertices = VERTICES_RE.match(lines[1][1])
    if not vertices:
        raise FileFormatError(f"expected 'vertices n', got {lines[1][1]!r}", path, lines[1][0])
    n = int(vertices.group(1))
    arcs = _pairs(lines[2:], n, path)
    return int(header.group(1)), int(header.group(2)), header.group(3) == 'true', n, arcs


def read_graph_file(path: str) -> SimpleGraph:
    with open(path, 'r', encoding='utf-8') as handle:
        return parse_graph(handle.read(), path)
