from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..graph import InducedStar
from ..tree import TreeState

FOUND = "found"
CERTIFIED_FAIL = "certified_fail"
EXHAUSTED = "exhausted"
LIMIT = "limit"

DISTANCE_SET = "distance_set"
INDUCED_STAR = "induced_star"
EXCEPTION_CASE = "exception_case"


class PreconditionError(ValueError):
    """Solver input violates a stated precondition (e.g. disconnected host)."""


@dataclass
class Certificate:
    kind: str
    stuck_tree: TreeState
    witness_set: tuple[int, ...] = ()
    degree_sum: int = 0
    stem_size: int = 0
    bound: int = 0
    star: Optional[InducedStar] = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "witness_set": list(self.witness_set),
            "degree_sum": self.degree_sum,
            "stem_size": self.stem_size,
            "bound": self.bound,
            "star": self.star.to_dict() if self.star else None,
            "stuck_tree": self.stuck_tree.to_dict(),
            "details": self.details,
        }


@dataclass
class SearchOutcome:
    status: str
    tree: Optional[TreeState] = None
    certificate: Optional[Certificate] = None
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "tree": self.tree.to_dict() if self.tree is not None else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "stats": self.stats,
        }
