"""
Fixlab - Group file parser
Line 1 "degree n"; every other non-comment line is one generator, either in
cycle notation "(0 1 2)(3 4)" or as an image list "img 1 2 0 4 3"; "#" starts a comment
"""

import logging
import re
from dataclasses import dataclass, field
from typing import List, Optional, Union

from fixlab.models.errors import FileFormatError, FixlabError
from fixlab.models.perm_group import PermGroup
from fixlab.models.permutation import Permutation

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r'^degree\s+(\d+)$')
CYCLES_RE = re.compile(r'^(\(\s*[\d\s,]*\)\s*)+$')
CYCLE_RE = re.compile(r'\(([^()]*)\)')
IMAGES_RE = re.compile(r'^img((\s+\d+)+)$')


@dataclass
class GeneratorLine:
    """One generator; `raw` holds the line as written and wins over the canonical form"""
    permutation: Permutation
    notation: str  # 'cycles' or 'img'
    comment: str = ""
    raw: Optional[str] = None

    def render(self) -> str:
        if self.raw is not None:
            return self.raw
        if self.notation == 'img':
            body = "img " + " ".join(map(str, self.permutation.images))
        else:
            body = self.permutation.cycle_notation()
        return f"{body} {self.comment}" if self.comment else body


Line = Union[GeneratorLine, str]


@dataclass
class GroupDocument:
    """Parsed group file; comment and blank lines are kept as raw strings"""
    degree: int
    lines: List[Line] = field(default_factory=list)
    header: Optional[str] = None
    trailing_newline: bool = True

    @property
    def generators(self) -> List[Permutation]:
        return [line.permutation for line in self.lines if isinstance(line, GeneratorLine)]

    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.generators)


def _split_comment(raw: str):
    body, sep, comment = raw.partition('#')
    return body.strip(), (sep + comment) if sep else ""


def parse_generator(text: str, degree: int) -> GeneratorLine:
    """One generator in either notation; raises FixlabError on malformed input"""
    text = text.strip()
    images = IMAGES_RE.match(text)
    if images:
        values = [int(v) for v in images.group(1).split()]
        if len(values) != degree:
            raise FixlabError(f"image list has {len(values)} entries, expected {degree}")
        return GeneratorLine(Permutation(values), 'img')
    if CYCLES_RE.match(text):
        cycles = []
        for body in CYCLE_RE.findall(text):
            cycles.append([int(v) for v in re.split(r'[\s,]+', body.strip()) if v])
        return GeneratorLine(Permutation.from_cycles(degree, cycles), 'cycles')
    raise FixlabError(f"unrecognised generator {text!r}")


def parse_group(text: str, path: Optional[str] = None) -> GroupDocument:
    raw_lines = text.split('\n')
    trailing_newline = bool(raw_lines) and raw_lines[-1] == ""
    if trailing_newline:
        raw_lines.pop()
    document: Optional[GroupDocument] = None
    for number, raw in enumerate(raw_lines, start=1):
        body, comment = _split_comment(raw)
        if document is None:
            if not body:
                raise FileFormatError("expected 'degree n' before any other content", path, number)
            header = HEADER_RE.match(body)
            if not header or int(header.group(1)) < 1:
                raise FileFormatError(f"expected 'degree n', got {body!r}", path, number)
            document = GroupDocument(int(header.group(1)), header=raw, trailing_newline=trailing_newline)
            continue
        if not body:
            document.lines.append(raw)
            continue
        try:
            line = parse_generator(body, document.degree)
        except FixlabError as e:
            raise FileFormatError(str(e), path, number) from e
        line.comment = comment
        line.raw = raw
        document.lines.append(line)
    if document is None:
        raise FileFormatError("empty group file", path, 1 if raw_lines else None)
    logger.debug(f"Parsed group file {path or '<text>'}: degree {document.degree}, "
                 f"{len(document.generators)} generators")
    return document


def print_group(document: GroupDocument) -> str:
    out = [document.header if document.header is not None else f"degree {document.degree}"]
    for line in document.lines:
        out.append(line.render() if isinstance(line, GeneratorLine) else line)
    return "\n".join(out) + ("\n" if document.trailing_newline else "")


def group_document(group: PermGroup, notation: str = 'cycles') -> GroupDocument:
    return GroupDocument(group.degree, [GeneratorLine(g, notation) for g in group.generators])


def read_group_file(path: str) -> GroupDocument:
    with open(path, 'r', encoding='utf-8') as handle:
        return parse_group(handle.read(), path)
