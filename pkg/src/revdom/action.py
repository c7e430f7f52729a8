"""Finitely generated monoid actions on the state space of a graph.

A system is a list of named generator maps. Words act rightmost letter
first: ``"ab"`` sends ``s`` to ``a(b(s))``.

The reverse action is never built as a set of functions on the monoid.
A state ``s`` lies in the image of the evaluation map exactly when every
generator is a bijection of the orbit closure ``Ms``. Injectivity of each
generator on the finite, closed set ``Ms`` is enough, because compositions of
bijections are bijections and every monoid element is a word in the
generators. A reverse trajectory is then read off pointwise by
inverting generators on ``Ms`` (:func:`reverse_lookup`).

Two routes compute membership:

* :func:`is_in_im_epsilon` per state, straight from the orbit closure;
* :func:`im_epsilon_mask` for the whole space at once, using that
  ``s`` qualifies iff every state reachable from ``s`` is periodic under
  every generator.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import dynamics as dyn
from .conditions import Condition, PERFECT_OPEN, parse_condition
from .dynamics import State
from .errors import (
    IndexOutOfRange,
    NotReversible,
    UnknownGenerator,
    UnknownName,
    WidthMismatch,
    WidthTooLarge,
)
from .graph import Graph

EXHAUSTIVE_CAP = 24


@dataclass(frozen=True)
class GeneratorMap:
    """A named total map on state indices of a fixed width.

    ``array_func`` is an optional vectorised twin of ``func`` used to build
    whole-space transition tables.
    """

    name: str
    func: Callable[[int], int]
    width: int
    array_func: Callable[[np.ndarray], np.ndarray] | None = field(default=None, compare=False)

    def __call__(self, s):
        if isinstance(s, State):
            if s.width != self.width:
                raise WidthMismatch(f"state width {s.width} != map width {self.width}")
            return State(self.func(s.index), self.width)
        return self.func(s)

    def table(self, xs: np.ndarray | None = None) -> np.ndarray:
        if xs is None:
            check_width(self.width)
            xs = dyn.all_states(self.width)
        if self.array_func is not None:
            return self.array_func(xs)
        return np.fromiter((self.func(int(x)) for x in xs), dtype=dyn.STATE_DTYPE, count=len(xs))


@dataclass(frozen=True)
class ActionSystem:
    generators: tuple[GeneratorMap, ...]
    width: int
    name: str = ""

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an action system needs at least one generator")
        names = [gen.name for gen in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for gen in self.generators:
            if len(gen.name) != 1:
                raise ValueError(f"generator names are single letters, got {gen.name!r}")
            if gen.width != self.width:
                raise WidthMismatch(f"generator {gen.name} has width {gen.width}, system {self.width}")

    @property
    def letters(self) -> str:
        return "".join(gen.name for gen in self.generators)

    def generator(self, letter: str) -> GeneratorMap:
        for gen in self.generators:
            if gen.name == letter:
                return gen
        raise UnknownGenerator(f"no generator {letter!r} in system {self.name or self.letters}")


def check_width(n: int, cap: int = EXHAUSTIVE_CAP) -> None:
    if n > min(cap, EXHAUSTIVE_CAP):
        raise WidthTooLarge(f"{n} vertices exceeds the exhaustive cap of {min(cap, EXHAUSTIVE_CAP)}")


# -- generators and presets -----------------------------------------------

def f_generator(g: Graph, name: str = "F") -> GeneratorMap:
    return GeneratorMap(name, lambda x: dyn.f_bits(g, x), g.n, lambda xs: dyn.f_array(g, xs))


def a_generator(g: Graph) -> GeneratorMap:
    return GeneratorMap("a", lambda x: dyn.a_bits(g, x), g.n, lambda xs: dyn.a_array(g, xs))


def b_independence_generator(g: Graph) -> GeneratorMap:
    return GeneratorMap(
        "b", lambda x: dyn.b_independence_bits(g, x), g.n, lambda xs: dyn.b_independence_array(g, xs)
    )


def b_condition_generator(g: Graph, c: Condition) -> GeneratorMap:
    return GeneratorMap(
        "b", lambda x: dyn.b_condition_bits(g, x, c), g.n, lambda xs: dyn.b_condition_array(g, xs, c)
    )


def f_system(g: Graph) -> ActionSystem:
    return ActionSystem((f_generator(g),), g.n, "N-F")


def independence_system(g: Graph) -> ActionSystem:
    return ActionSystem((a_generator(g), b_independence_generator(g)), g.n, "M-indep")


def condition_system(g: Graph, c: Condition) -> ActionSystem:
    return ActionSystem((a_generator(g), b_condition_generator(g, c)), g.n, f"M-cond:{c.name}")


SYSTEM_PRESETS = ("N-F", "M-indep", "M-cond:<condition>")


def system_preset(g: Graph, preset: str, condition: Condition | None = None) -> ActionSystem:
    """Resolve ``N-F``, ``M-indep`` or ``M-cond[:<condition>]``.

    A condition spelled inside the preset wins over ``condition``; plain
    ``M-cond`` falls back to ``condition`` and then to perfect-open.
    """
    if preset == "N-F":
        return f_system(g)
    if preset == "M-indep":
        return independence_system(g)
    if preset == "M-cond" or preset.startswith("M-cond:"):
        spelled = preset.partition(":")[2]
        c = parse_condition(spelled) if spelled else (condition or PERFECT_OPEN)
        return condition_system(g, c)
    raise UnknownName(f"unknown system preset {preset!r}; choose from {', '.join(SYSTEM_PRESETS)}")


# -- per-state operations -------------------------------------------------

def _index(sys: ActionSystem, s) -> int:
    if isinstance(s, State):
        if s.width != sys.width:
            raise WidthMismatch(f"state width {s.width} != system width {sys.width}")
        return s.index
    k = int(s)
    if not 0 <= k < (1 << sys.width):
        raise IndexOutOfRange(f"state index {k} not in [0, 2**{sys.width})")
    return k


def _resolve(sys: ActionSystem, word: Iterable[str]) -> list[GeneratorMap]:
    return [sys.generator(letter) for letter in word]


def apply_word(sys: ActionSystem, word: str, s) -> int:
    x = _index(sys, s)
    for gen in reversed(_resolve(sys, word)):
        x = gen.func(x)
    return x


def orbit_closure(sys: ActionSystem, s) -> set[int]:
    start = _index(sys, s)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for gen in sys.generators:
            y = gen.func(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _injective_on(gen: GeneratorMap, states: set[int]) -> bool:
    return len({gen.func(x) for x in states}) == len(states)


def is_in_im_epsilon(sys: ActionSystem, s) -> bool:
    closure = orbit_closure(sys, s)
    return all(_injective_on(gen, closure) for gen in sys.generators)


@dataclass(frozen=True)
class OrbitSummary:
    tail_length: int
    cycle_length: int
    cycle_members: tuple[int, ...]
    entry_state: int


def orbit_summary(gen: GeneratorMap, s) -> OrbitSummary:
    """Tail and cycle of ``s`` under repeated application of one map.

    ``cycle_members`` starts at ``entry_state`` and follows the map.
    """
    x = s.index if isinstance(s, State) else int(s)
    position: dict[int, int] = {}
    path: list[int] = []
    while x not in position:
        position[x] = len(path)
        path.append(x)
        x = gen.func(x)
    tail = position[x]
    cycle = tuple(path[tail:])
    return OrbitSummary(tail, len(cycle), cycle, x)


def reverse_lookup(sys: ActionSystem, s, word: str) -> int:
    """The value at ``word`` of the reverse trajectory through ``s``.

    Returns the unique ``x`` in ``Ms`` with ``apply_word(sys, word, x) == s``.
    """
    start = _index(sys, s)
    gens = _resolve(sys, word)
    closure = orbit_closure(sys, start)
    inverses: dict[str, dict[int, int]] = {}
    for gen in sys.generators:
        inv = {gen.func(x): x for x in closure}
        if len(inv) != len(closure):
            raise NotReversible(
                f"state {start} is not in the image of the evaluation map for {sys.name or sys.letters}: "
                f"generator {gen.name} is not injective on its orbit"
            )
        inverses[gen.name] = inv
    x = start
    # word t1..tk acts as t1(...tk(x)); undo t1 first
    for gen in gens:
        x = inverses[gen.name][x]
    return x


# -- whole-space route ----------------------------------------------------

def transition_tables(sys: ActionSystem, cap: int = EXHAUSTIVE_CAP) -> dict[str, np.ndarray]:
    check_width(sys.width, cap)
    xs = dyn.all_states(sys.width)
    return {gen.name: gen.table(xs) for gen in sys.generators}


def periodic_mask(successor: np.ndarray) -> np.ndarray:
    """States on cycles of a functional graph: the eventual image of the map."""
    successor = np.asarray(successor, dtype=np.intp)
    current = np.ones(len(successor), dtype=bool)
    while True:
        image = np.zeros_like(current)
        image[successor[current]] = True
        if np.array_equal(image, current):
            return current
        current = image


def im_epsilon_mask_from_tables(tables: Iterable[np.ndarray]) -> np.ndarray:
    tables = [np.asarray(t, dtype=np.intp) for t in tables]
    good = np.logical_and.reduce([periodic_mask(t) for t in tables])
    bad = ~good
    while True:
        spread = bad.copy()
        for t in tables:
            spread |= bad[t]
        if np.array_equal(spread, bad):
            return ~bad
        bad = spread


def im_epsilon_mask(sys: ActionSystem, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    """Boolean array over all state indices: membership in the image of evaluation."""
    return im_epsilon_mask_from_tables(transition_tables(sys, cap).values())


def im_epsilon_set(sys: ActionSystem, cap: int = EXHAUSTIVE_CAP) -> list[int]:
    """Ascending state indices of the maximal sub-action on which ``sys`` acts by bijections."""
    return np.flatnonzero(im_epsilon_mask(sys, cap)).tolist()


def im_epsilon_set_by_orbits(sys: ActionSystem, cap: int = EXHAUSTIVE_CAP) -> list[int]:
    """Same set as :func:`im_epsilon_set`, computed state by state from orbit closures.

    Memoises with two facts: a member's whole orbit consists of members, and a
    state whose orbit contains a non-member is a non-member.
    """
    check_width(sys.width, cap)
    verdict: dict[int, bool] = {}
    for k in range(1 << sys.width):
        if k in verdict:
            continue
        closure = orbit_closure(sys, k)
        if any(verdict.get(x) is False for x in closure):
            verdict[k] = False
            continue
        ok = all(_injective_on(gen, closure) for gen in sys.generators)
        if ok:
            verdict.update(dict.fromkeys(closure, True))
        else:
            verdict[k] = False
    return sorted(k for k, ok in verdict.items() if ok)
