"""
Fixlab - Bound reports
One record per (instance, lemma) comparison
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from mpmath import mpf

Number = Union[int, Fraction, mpf]


class LemmaId(Enum):
    """Identifiers of every checked inequality"""
    L3A = "L3a"
    L3B = "L3b"
    LCLASS = "LCLASS"
    LCLASS_FACT = "LCLASS_FACT"
    L1 = "L1"
    COR1 = "COR1"
    L4 = "L4"
    LCOVER = "LCOVER"
    LPLUS = "LPLUS"
    LLQP = "LLQP"
    LZ_EXP = "LZ_EXP"
    LZ_RANK = "LZ_RANK"
    TUTTE = "TUTTE"
    THM_MAIN = "THM_MAIN"
    THM_SUBORBIT = "THM_SUBORBIT"

    @classmethod
    def parse(cls, text: str) -> 'LemmaId':
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise ValueError(f"unknown lemma id {text!r}")


class Relation(Enum):
    """How lhs and rhs are compared"""
    LE = "<="
    GE = ">="
    DIVIDES = "|"
    IMPLIES = "=>"


def _coerce(lhs: Any, rhs: Any):
    # Fractions meet mpf values only through mpf
    if isinstance(lhs, mpf) or isinstance(rhs, mpf):
        lhs, rhs = (mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else x for x in (lhs, rhs))
    return lhs, rhs


def evaluate(lhs: Any, relation: Relation, rhs: Any) -> bool:
    lhs, rhs = _coerce(lhs, rhs)
    if relation is Relation.LE:
        return lhs <= rhs
    if relation is Relation.GE:
        return lhs >= rhs
    if relation is Relation.DIVIDES:
        return lhs != 0 and rhs % lhs == 0
    # implications carry booleans: premise => conclusion
    return (not lhs) or bool(rhs)


@dataclass
class BoundReport:
    """
    Per-instance outcome of one lemma
    - holds is derived from lhs, relation and rhs unless given
    - context keys are sorted on emission
    - reports of one instance sort by lemma declaration order, ties keep emission order
    """
    instance_id: str
    lemma_id: LemmaId
    lhs: Any
    rhs: Any
    relation: Relation = Relation.LE
    holds: Optional[bool] = None
    context: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.holds is None:
            self.holds = evaluate(self.lhs, self.relation, self.rhs)

    @property
    def sort_key(self):
        return (self.instance_id, list(LemmaId).index(self.lemma_id))
