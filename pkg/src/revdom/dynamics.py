"""GF(2) update maps on vertex states.

``F(s) = s P_s + P_s + s + 1`` with ``P_s(v) = prod_{x in N(v)} (1 + s(x))``.
Over GF(2) this factors as ``(1 + s)(1 + P_s)``, i.e. bitwise
``~s & ~P_s``, and ``P_s(v) = 1`` exactly when ``s & mask[v] == 0``. The
``*_array`` variants apply the same maps to a numpy array of state indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conditions import Condition
from .errors import IndexOutOfRange, VertexOutOfRange, WidthMismatch
from .graph import Graph


@dataclass(frozen=True, order=True)
class State:
    """A 0/1 assignment to ``width`` vertices, stored as its index ``k``.

    Vertex ``v_1`` carries the most significant bit, so ``binary`` reads
    ``v_1`` first.
    """

    index: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.index < (1 << self.width):
            raise IndexOutOfRange(f"state index {self.index} not in [0, 2**{self.width})")

    def bit(self, v: int) -> int:
        if not 0 <= v < self.width:
            raise VertexOutOfRange(f"vertex index {v} not in [0, {self.width})")
        return (self.index >> (self.width - 1 - v)) & 1

    @property
    def binary(self) -> str:
        return format(self.index, f"0{self.width}b")

    def ones(self) -> frozenset[int]:
        """Vertex indices mapped to 1, i.e. ``s^{-1}(1)``."""
        return frozenset(v for v in range(self.width) if self.bit(v))

    def zeros(self) -> frozenset[int]:
        return frozenset(v for v in range(self.width) if not self.bit(v))

    def complement(self) -> State:
        return State(self.index ^ ((1 << self.width) - 1), self.width)

    @property
    def is_constant(self) -> bool:
        return self.index in (0, (1 << self.width) - 1)

    @property
    def is_surjective(self) -> bool:
        return not self.is_constant

    def render(self, g: Graph | None = None) -> dict:
        """Index, binary string and vertex-name set in one mapping."""
        names = [g.labels[v] if g is not None else f"v{v + 1}" for v in sorted(self.ones())]
        return {"index": self.index, "binary": self.binary, "vertices": names}

    def __int__(self):
        return self.index


def state_from_index(k: int, n: int) -> State:
    return State(k, n)


def state_from_vertices(g: Graph, vertices) -> State:
    k = 0
    for v in vertices:
        g._check_vertex(v)
        k |= g.bit(v)
    return State(k, g.n)


def constant_state(n: int, value: int) -> State:
    return State((1 << n) - 1 if value else 0, n)


def _checked(g: Graph, s: State) -> int:
    if s.width != g.n:
        raise WidthMismatch(f"state width {s.width} != graph order {g.n}")
    return s.index


# -- integer kernels -------------------------------------------------------

def p_bits(g: Graph, x: int) -> int:
    out = 0
    for v, m in enumerate(g.masks):
        if not x & m:
            out |= g.bit(v)
    return out


def f_bits(g: Graph, x: int) -> int:
    return ~(x | p_bits(g, x)) & g.full_mask


def a_bits(g: Graph, x: int) -> int:
    return f_bits(g, f_bits(g, x))


def b_independence_bits(g: Graph, x: int) -> int:
    return x & p_bits(g, x)


def t_bits(g: Graph, x: int, c: Condition) -> int:
    out = 0
    closed = c.closed
    for v, m in enumerate(g.masks):
        count = (x & m).bit_count()
        if closed and x & g.bit(v):
            count += 1
        if c.accepts(count):
            out |= g.bit(v)
    return out


def b_condition_bits(g: Graph, x: int, c: Condition) -> int:
    # 1 + T + sT == s | ~T over GF(2)
    return (x | ~t_bits(g, x, c)) & g.full_mask


# -- State-level API ------------------------------------------------------

def p_vector(g: Graph, s: State) -> State:
    return State(p_bits(g, _checked(g, s)), g.n)


def step_f(g: Graph, s: State) -> State:
    return State(f_bits(g, _checked(g, s)), g.n)


def local_update(g: Graph, s: State, v: int) -> int:
    """``f_v`` evaluated from ``s`` restricted to ``N[v]``.

    Written as the literal polynomial ``1 + s(v) + p + s(v) p`` with
    ``p = prod (1 - s(x))`` so it can be checked against :func:`step_f`.
    """
    _checked(g, s)
    g._check_vertex(v)
    sv = s.bit(v)
    p = 1
    for x in g.neighbors(v):
        p *= 1 - s.bit(x)
    return (1 + sv + p + sv * p) % 2


def step_a(g: Graph, s: State) -> State:
    return State(a_bits(g, _checked(g, s)), g.n)


def step_b_independence(g: Graph, s: State) -> State:
    return State(b_independence_bits(g, _checked(g, s)), g.n)


def t_vector(g: Graph, s: State, c: Condition) -> State:
    return State(t_bits(g, _checked(g, s), c), g.n)


def step_b_condition(g: Graph, s: State, c: Condition) -> State:
    return State(b_condition_bits(g, _checked(g, s), c), g.n)


# -- whole-array kernels --------------------------------------------------

STATE_DTYPE = np.int64


def all_states(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=STATE_DTYPE)


def p_array(g: Graph, xs: np.ndarray) -> np.ndarray:
    out = np.zeros_like(xs)
    for v, m in enumerate(g.masks):
        out |= ((xs & m) == 0).astype(xs.dtype) << (g.n - 1 - v)
    return out


def f_array(g: Graph, xs: np.ndarray) -> np.ndarray:
    return ~(xs | p_array(g, xs)) & g.full_mask


def a_array(g: Graph, xs: np.ndarray) -> np.ndarray:
    return f_array(g, f_array(g, xs))


def b_independence_array(g: Graph, xs: np.ndarray) -> np.ndarray:
    return xs & p_array(g, xs)


def t_array(g: Graph, xs: np.ndarray, c: Condition) -> np.ndarray:
    out = np.zeros_like(xs)
    for v, m in enumerate(g.masks):
        counts = np.bitwise_count(xs & m).astype(np.int64)
        if c.closed:
            counts += (xs >> (g.n - 1 - v)) & 1
        out |= c.accepts_array(counts).astype(xs.dtype) << (g.n - 1 - v)
    return out


def b_condition_array(g: Graph, xs: np.ndarray, c: Condition) -> np.ndarray:
    return (xs | ~t_array(g, xs, c)) & g.full_mask
