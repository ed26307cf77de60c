"""
Fixlab - Error hierarchy
Typed failures raised by the library; the CLI maps them onto exit codes
"""

from typing import Optional


class FixlabError(Exception):
    """Base class for every error raised by fixlab"""


class InvalidPermutationError(FixlabError, ValueError):
    """Image table is not a bijection on {0, ..., n-1}"""


class DegreeMismatchError(FixlabError, ValueError):
    """Two objects act on point sets of different sizes"""

    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PointOutOfRangeError(FixlabError, ValueError):
    """A point lies outside {0, ..., degree-1}"""

    def __init__(self, point: int, degree: int):
        super().__init__(f"point {point} out of range for degree {degree}")
        self.point = point
        self.degree = degree


class NotTransitiveError(FixlabError, ValueError):
    """Operation requires a transitive group"""


class NotAMemberError(FixlabError, ValueError):
    """Element is not contained in the group it is used with"""


class NormalityError(FixlabError, ValueError):
    """Subgroup is not normal in the supplied overgroup"""


class NotAutomorphismError(FixlabError, ValueError):
    """A group generator does not preserve the adjacency of a graph"""


class CapacityError(FixlabError, RuntimeError):
    """A brute-force cap was exceeded; the answer is refused rather than guessed"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class DomainError(FixlabError, ValueError):
    """Argument outside the domain of a bound function"""


class PreconditionError(FixlabError, ValueError):
    """A lemma hypothesis does not hold on the supplied instance"""

    def __init__(self, hypothesis: str, detail: str = ""):
        message = f"hypothesis failed: {hypothesis}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.hypothesis = hypothesis
        self.detail = detail


class UnknownConstantError(FixlabError, KeyError):
    """No c(L) constant is registered for a local group"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown constant"


class CatalogValidationError(FixlabError, ValueError):
    """A catalog entry failed load-time validation"""

    def __init__(self, entry_id: str, reason: str):
        super().__init__(f"catalog entry {entry_id!r} invalid: {reason}")
        self.entry_id = entry_id
        self.reason = reason


class FileFormatError(FixlabError, ValueError):
    """Malformed group, graph or constants file"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line
