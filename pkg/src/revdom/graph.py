"""Simple undirected graphs with per-vertex neighbor bit vectors.

Bit layout: vertex index ``i`` of an ``n``-vertex graph owns bit ``n - 1 - i``.
With this layout the integer value of a vertex bit vector is exactly the
state index ``k = 2**(n-1) i_1 + ... + i_n`` (first vertex most significant),
so states, vertex sets and neighbor masks are interchangeable integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyGraph, MalformedLine, SelfLoop, UnknownName, VertexOutOfRange

_LETTER_NUMBER = re.compile(r"^([A-Za-z]+)(\d+)$")


def label_sort_key(label: str) -> tuple[str, int, str]:
    """Lexicographic, except letter+integer labels compare by the integer (v2 < v10)."""
    m = _LETTER_NUMBER.match(label)
    if m:
        return (m.group(1), int(m.group(2)), label)
    return (label, -1, label)


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    masks: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise EmptyGraph("graph has no vertices")
        if len(self.masks) != n:
            raise ValueError("one neighbor mask per vertex required")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        full = (1 << n) - 1
        for i, m in enumerate(self.masks):
            if m & ~full:
                raise VertexOutOfRange(f"neighbor of {self.labels[i]} outside [0, {n})")
            if m & self.bit(i):
                raise SelfLoop(f"self-loop at {self.labels[i]}")
            for j in range(n):
                if (m >> (n - 1 - j)) & 1 and not (self.masks[j] & self.bit(i)):
                    raise ValueError(f"asymmetric adjacency {self.labels[i]}-{self.labels[j]}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def bit(self, v: int) -> int:
        return 1 << (self.n - 1 - v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex index {v} not in [0, {self.n})")

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownName(f"no vertex labelled {label!r}") from None

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        m = self.masks[v]
        return frozenset(j for j in range(self.n) if (m >> (self.n - 1 - j)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in sorted(self.neighbors(i)) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def vertex_map(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def describe(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.vertex_map(),
            "edges": [[self.labels[i], self.labels[j]] for i, j in self.edges()],
        }

    def serialize(self) -> str:
        """Canonical edge-list text: ``vertices:`` header then edges in index order."""
        lines = ["vertices: " + " ".join(self.labels)]
        lines += [f"{self.labels[i]} {self.labels[j]}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"


def from_edges(labels: Iterable[str], edges: Iterable[tuple[str, str]], name: str | None = None) -> Graph:
    """Build a graph from labels and label pairs; labels are re-ordered canonically."""
    edges = list(edges)
    seen = set(labels)
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        seen.update((u, v))
    if not seen:
        raise EmptyGraph("no vertices and no edges")
    order = sorted(seen, key=label_sort_key)
    n = len(order)
    index = {label: i for i, label in enumerate(order)}
    masks = [0] * n
    for u, v in edges:
        i, j = index[u], index[v]
        masks[i] |= 1 << (n - 1 - j)
        masks[j] |= 1 << (n - 1 - i)
    return Graph(tuple(order), tuple(masks), name=name)


def from_index_edges(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    """Graph on ``v1..vn`` from 0-based index pairs."""
    labels = [f"v{i + 1}" for i in range(n)]
    return from_edges(labels, ((labels[i], labels[j]) for i, j in edges), name=name)


def parse_edge_list(text: str, name: str | None = None) -> Graph:
    declared: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("vertices:"):
            declared.extend(line.split(":", 1)[1].split())
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(f"line {lineno}: expected 2 vertex labels, got {len(tokens)}")
        u, v = tokens
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    if not declared and not edges:
        raise EmptyGraph("no edges and no vertices declared")
    return from_edges(declared, edges, name=name)


_BUILTIN_EDGES = {
    "g3": (6, [(0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (3, 4), (2, 5)]),
    "k2": (2, [(0, 1)]),
    "p3": (3, [(0, 1), (1, 2)]),
    "c4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
}

BUILTIN_NAMES = tuple(_BUILTIN_EDGES)


def builtin_graph(name: str) -> Graph:
    """``g3`` is a 6-vertex, 7-edge test graph; ``k2``, ``p3``, ``c4`` are the usual small graphs."""
    try:
        n, edges = _BUILTIN_EDGES[name]
    except KeyError:
        raise UnknownName(f"unknown builtin graph {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return from_index_edges(n, edges, name=name)


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v) | {v}


def is_connected(g: Graph) -> bool:
    reached = g.bit(0)
    frontier = reached
    while frontier:
        grown = 0
        for v in range(g.n):
            if frontier & g.bit(v):
                grown |= g.masks[v]
        frontier = grown & ~reached
        reached |= frontier
    return reached == g.full_mask
