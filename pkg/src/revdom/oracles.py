"""Brute-force domination predicates: the ground truth for the dynamics.

Everything here is written from the set-theoretic definitions using vertex
neighbor sets. Nothing is imported from :mod:`revdom.dynamics` or
:mod:`revdom.action`, so agreement between the two sides is meaningful.

Vertex sets are frozensets of vertex indices. The ``*_mask`` functions
evaluate a predicate on every subset at once, indexed the same way as states
(first vertex most significant).
"""

from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from .conditions import Condition, ODD_CLOSED, ODD_OPEN, PERFECT_OPEN
from .errors import UnknownPredicate, WidthMismatch, WidthTooLarge
from .graph import Graph

EXHAUSTIVE_CAP = 24

VertexSet = frozenset


def as_vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    d = frozenset(members)
    bad = [v for v in d if not 0 <= v < g.n]
    if bad:
        raise WidthMismatch(f"vertices {sorted(bad)} outside a graph of order {g.n}")
    return d


def set_from_index(g: Graph, k: int) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if (k >> (g.n - 1 - v)) & 1)


def set_index(g: Graph, d: Iterable[int]) -> int:
    return sum(1 << (g.n - 1 - v) for v in as_vertex_set(g, d))


# -- single-set predicates ------------------------------------------------

def is_dominating(g: Graph, d) -> bool:
    d = as_vertex_set(g, d)
    return all(v in d or g.neighbors(v) & d for v in range(g.n))


def is_nonblocking(g: Graph, b) -> bool:
    b = as_vertex_set(g, b)
    return is_dominating(g, frozenset(range(g.n)) - b)


def is_independent(g: Graph, d) -> bool:
    d = as_vertex_set(g, d)
    return not any(g.neighbors(v) & d for v in d)


def is_maximal_independent(g: Graph, d) -> bool:
    return is_independent(g, d) and is_dominating(g, d)


def is_minimal_dominating(g: Graph, d) -> bool:
    d = as_vertex_set(g, d)
    return is_dominating(g, d) and not any(is_dominating(g, d - {v}) for v in d)


def condition_count(g: Graph, d: frozenset[int], v: int, c: Condition) -> int:
    hood = g.neighbors(v) | {v} if c.closed else g.neighbors(v)
    return len(hood & d)


def is_c_dominating(g: Graph, d, c: Condition) -> bool:
    d = as_vertex_set(g, d)
    if not is_dominating(g, d):
        return False
    return all(c.accepts(condition_count(g, d, v, c)) for v in range(g.n) if v not in d)


def is_sutner_parity_set(g: Graph, d) -> bool:
    """Every vertex, inside or outside ``d``, sees an odd number of members in ``N[v]``."""
    d = as_vertex_set(g, d)
    return all(len((g.neighbors(v) | {v}) & d) % 2 == 1 for v in range(g.n))


# -- whole-space masks ----------------------------------------------------

def _check_cap(g: Graph, cap: int) -> None:
    limit = min(cap, EXHAUSTIVE_CAP)
    if g.n > limit:
        raise WidthTooLarge(f"{g.n} vertices exceeds the enumeration cap of {limit}")


def _membership(g: Graph) -> list[np.ndarray]:
    ks = np.arange(1 << g.n, dtype=np.int64)
    return [((ks >> (g.n - 1 - v)) & 1).astype(bool) for v in range(g.n)]


def dominating_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    _check_cap(g, cap)
    inside = _membership(g)
    ok = np.ones(1 << g.n, dtype=bool)
    for v in range(g.n):
        covered = inside[v].copy()
        for u in g.neighbors(v):
            covered |= inside[u]
        ok &= covered
    return ok


def complement_mask(mask: np.ndarray) -> np.ndarray:
    """``out[k] = mask[complement of k]``; complementing reverses the index order."""
    return mask[::-1].copy()


def nonblocking_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    return complement_mask(dominating_mask(g, cap))


def independent_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    _check_cap(g, cap)
    inside = _membership(g)
    ok = np.ones(1 << g.n, dtype=bool)
    for u, v in g.edges():
        ok &= ~(inside[u] & inside[v])
    return ok


def maximal_independent_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    return independent_mask(g, cap) & dominating_mask(g, cap)


def minimal_dominating_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    dom = dominating_mask(g, cap)
    ks = np.arange(1 << g.n, dtype=np.int64)
    ok = dom.copy()
    for v, member in enumerate(_membership(g)):
        without_v = ks & ~(1 << (g.n - 1 - v))
        ok &= ~member | ~dom[without_v]
    return ok


def c_dominating_mask(g: Graph, c: Condition, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    dom = dominating_mask(g, cap)
    inside = _membership(g)
    ok = dom.copy()
    for v in range(g.n):
        hood = set(g.neighbors(v)) | ({v} if c.closed else set())
        count = np.zeros(1 << g.n, dtype=np.int64)
        for u in hood:
            count += inside[u]
        ok &= inside[v] | c.accepts_array(count)
    return ok


def sutner_parity_mask(g: Graph, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    _check_cap(g, cap)
    inside = _membership(g)
    ok = np.ones(1 << g.n, dtype=bool)
    for v in range(g.n):
        parity = inside[v].copy()
        for u in g.neighbors(v):
            parity ^= inside[u]
        ok &= parity
    return ok


PREDICATES: dict[str, Callable[[Graph, int], np.ndarray]] = {
    "dominating": dominating_mask,
    "nonblocking": nonblocking_mask,
    "independent": independent_mask,
    "maximal-independent": maximal_independent_mask,
    "minimal-dominating": minimal_dominating_mask,
    "perfect": lambda g, cap=EXHAUSTIVE_CAP: c_dominating_mask(g, PERFECT_OPEN, cap),
    "odd-open": lambda g, cap=EXHAUSTIVE_CAP: c_dominating_mask(g, ODD_OPEN, cap),
    "odd-closed": lambda g, cap=EXHAUSTIVE_CAP: c_dominating_mask(g, ODD_CLOSED, cap),
    "dom-and-nonblocking": lambda g, cap=EXHAUSTIVE_CAP: dominating_mask(g, cap) & nonblocking_mask(g, cap),
}


def predicate_mask(g: Graph, predicate: str, cap: int = EXHAUSTIVE_CAP) -> np.ndarray:
    try:
        fn = PREDICATES[predicate]
    except KeyError:
        raise UnknownPredicate(
            f"unknown predicate {predicate!r}; choose from {', '.join(PREDICATES)}"
        ) from None
    return fn(g, cap)


def enumerate_sets(g: Graph, predicate: str, cap: int = EXHAUSTIVE_CAP) -> list[frozenset[int]]:
    """All subsets satisfying ``predicate``, ascending by index encoding."""
    mask = predicate_mask(g, predicate, cap)
    return [set_from_index(g, int(k)) for k in np.flatnonzero(mask)]


def domatic_2_partitions(g: Graph, cap: int = EXHAUSTIVE_CAP) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Unordered pairs ``{D, V - D}`` with both parts dominating.

    Each pair appears once, as ``(part containing the first vertex, other part)``.
    """
    dom = dominating_mask(g, cap)
    both = dom & complement_mask(dom)
    first = 1 << (g.n - 1)
    everyone = frozenset(range(g.n))
    pairs = []
    for k in np.flatnonzero(both):
        if int(k) & first:
            d = set_from_index(g, int(k))
            pairs.append((d, everyone - d))
    return pairs
