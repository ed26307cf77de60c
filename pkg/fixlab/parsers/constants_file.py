"""
Fixlab - Constants file
JSON list of {name, degree, generators, constant, citation} records extending
the c(L) registry; generators are cycle-notation strings
"""

import json
import logging
from typing import Any, List, Optional

from fixlab.catalog.constants import ConstantsRegistry, LocalGroupConstant
from fixlab.models.errors import FileFormatError, FixlabError
from fixlab.parsers.group_file import parse_generator

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ('name', 'degree', 'generators', 'constant')


def _record(item: Any, index: int, path: Optional[str]) -> LocalGroupConstant:
    if not isinstance(item, dict):
        raise FileFormatError(f"record {index} is not an object", path)
    missing = [k for k in REQUIRED_KEYS if k not in item]
    if missing:
        raise FileFormatError(f"record {index} lacks {', '.join(missing)}", path)
    degree = item['degree']
    constant = item['constant']
    if not isinstance(degree, int) or degree < 1:
        raise FileFormatError(f"record {index}: degree must be a positive integer", path)
    if not isinstance(constant, int) or constant < 1:
        raise FileFormatError(f"record {index}: constant must be a positive integer", path)
    try:
        generators = tuple(parse_generator(text, degree).permutation for text in item['generators'])
    except (FixlabError, TypeError) as e:
        raise FileFormatError(f"record {index}: {e}", path) from e
    return LocalGroupConstant(
        name=str(item['name']),
        degree=degree,
        generators=generators,
        constant=constant,
        citation=str(item.get('citation', "")),
    )


def parse_constants(text: str, path: Optional[str] = None) -> List[LocalGroupConstant]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"invalid JSON: {e.msg}", path, e.lineno) from e
    if not isinstance(data, list):
        raise FileFormatError("constants file must hold a JSON list", path)
    return [_record(item, i, path) for i, item in enumerate(data)]


def registry_with(entries: List[LocalGroupConstant]) -> ConstantsRegistry:
    registry = ConstantsRegistry.builtin()
    registry.extend(entries)
    return registry


def read_constants_file(path: str) -> List[LocalGroupConstant]:
    with open(path, 'r', encoding='utf-8') as handle:
        entries = parse_constants(handle.read(), path)
    logger.info(f"Loaded {len(entries)} local group constants from {path}")
    return entries
