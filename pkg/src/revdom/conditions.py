"""Per-vertex neighbor-count predicates used by the condition generator.

A condition only decides whether a count is acceptable. Counting is left to the
caller so the dynamics and the brute-force oracles each do their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnknownCondition


class ConditionKind(Enum):
    PERFECT_OPEN = "perfect-open"
    ODD_OPEN = "odd-open"
    ODD_CLOSED = "odd-closed"
    EXACT = "exact"
    AT_LEAST = "at-least"


@dataclass(frozen=True)
class Condition:
    kind: ConditionKind
    k: int | None = None

    def __post_init__(self):
        if self.kind in (ConditionKind.EXACT, ConditionKind.AT_LEAST):
            if self.k is None or self.k < 0:
                raise UnknownCondition(f"{self.kind.value} needs a non-negative count")
        elif self.k is not None:
            raise UnknownCondition(f"{self.kind.value} takes no count")

    @property
    def closed(self) -> bool:
        """True when the count ranges over N[v] rather than N(v)."""
        return self.kind is ConditionKind.ODD_CLOSED

    @property
    def name(self) -> str:
        if self.k is None:
            return self.kind.value
        return f"{self.kind.value}:{self.k}"

    def accepts(self, count: int) -> bool:
        kind = self.kind
        if kind is ConditionKind.PERFECT_OPEN:
            return count == 1
        if kind is ConditionKind.ODD_OPEN or kind is ConditionKind.ODD_CLOSED:
            return count % 2 == 1
        if kind is ConditionKind.EXACT:
            return count == self.k
        return count >= self.k

    def accepts_array(self, counts):
        """Vectorised :meth:`accepts` for a numpy integer array."""
        kind = self.kind
        if kind is ConditionKind.PERFECT_OPEN:
            return counts == 1
        if kind is ConditionKind.ODD_OPEN or kind is ConditionKind.ODD_CLOSED:
            return (counts & 1) == 1
        if kind is ConditionKind.EXACT:
            return counts == self.k
        return counts >= self.k

    def __str__(self):
        return self.name


PERFECT_OPEN = Condition(ConditionKind.PERFECT_OPEN)
ODD_OPEN = Condition(ConditionKind.ODD_OPEN)
ODD_CLOSED = Condition(ConditionKind.ODD_CLOSED)


def parse_condition(name: str) -> Condition:
    """Parse ``perfect-open``, ``odd-open``, ``odd-closed``, ``exact:<k>`` or ``at-least:<k>``."""
    head, _, arg = name.strip().partition(":")
    try:
        kind = ConditionKind(head)
    except ValueError:
        raise UnknownCondition(f"unknown condition {name!r}") from None
    if kind in (ConditionKind.EXACT, ConditionKind.AT_LEAST):
        if not arg.isdigit():
            raise UnknownCondition(f"{head} needs an integer, e.g. {head}:1")
        return Condition(kind, int(arg))
    if arg:
        raise UnknownCondition(f"{head} takes no argument")
    return Condition(kind)
