"""Small-graph universes for exhaustive checks.

The connected-graph catalog holds one graph per isomorphism class for
2 <= n <= 8 (1, 2, 6, 21, 112, 853, 11117 graphs) and ships as graph6 text
in ``data/connected_graphs.g6``. :func:`generate_connected_graphs` rebuilds it
by vertex extension: every connected graph on n vertices arises from a
connected graph on n - 1 vertices by attaching a vertex to a non-empty set
of neighbors (drop any non-cut vertex), so extending every class and
discarding isomorphic repeats enumerates all classes.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from importlib import resources
from typing import Iterator

import networkx as nx
import numpy as np

from .graph import Graph, from_index_edges, is_connected

CATALOG_MAX_N = 8
CATALOG_FILE = "connected_graphs.g6"
DEFAULT_SEED = 20240917


def graph_from_networkx(h: nx.Graph, name: str | None = None) -> Graph:
    nodes = sorted(h.nodes())
    index = {u: i for i, u in enumerate(nodes)}
    return from_index_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()), name=name)


def graph_to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _dedup(candidates: Iterator[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[tuple, list[nx.Graph]] = {}
    kept = []
    for h in candidates:
        key = (
            tuple(sorted(d for _, d in h.degree())),
            nx.weisfeiler_lehman_graph_hash(h, iterations=3),
        )
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        kept.append(h)
    return kept


def generate_connected_graphs(max_n: int) -> dict[int, list[nx.Graph]]:
    """Connected graphs up to isomorphism for each order ``1..max_n``."""
    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, max_n + 1):
        new = n - 1

        def extensions():
            for h in levels[n - 1]:
                for r in range(1, n):
                    for hood in itertools.combinations(range(n - 1), r):
                        ext = h.copy()
                        ext.add_edges_from((new, u) for u in hood)
                        yield ext

        levels[n] = _dedup(extensions())
    return levels


def write_catalog(path, max_n: int = CATALOG_MAX_N) -> dict[int, int]:
    levels = generate_connected_graphs(max_n)
    with open(path, "wb") as fh:
        for n in range(2, max_n + 1):
            for h in levels[n]:
                fh.write(nx.to_graph6_bytes(h, header=False))
    return {n: len(gs) for n, gs in levels.items()}


@lru_cache(maxsize=1)
def _catalog_lines() -> tuple[bytes, ...]:
    data = resources.files("revdom").joinpath("data", CATALOG_FILE).read_bytes()
    return tuple(line for line in data.splitlines() if line.strip())


def connected_graphs(n_min: int = 2, n_max: int = CATALOG_MAX_N) -> list[Graph]:
    """Shipped catalog of connected graphs, one per isomorphism class, by order."""
    if n_max > CATALOG_MAX_N:
        raise ValueError(f"catalog only reaches n={CATALOG_MAX_N}")
    out = []
    for i, line in enumerate(_catalog_lines()):
        # graph6 order byte: chr(63 + n) for n < 63
        n = line[0] - 63
        if n_min <= n <= n_max:
            out.append(graph_from_networkx(nx.from_graph6_bytes(line), name=f"catalog:{i}"))
    return out


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.5, name: str | None = None) -> Graph:
    """Erdos-Renyi G(n, p) rejection-sampled until connected."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        keep = rng.random(len(pairs)) < p
        g = from_index_edges(n, (e for e, k in zip(pairs, keep) if k), name=name)
        if is_connected(g):
            return g


def random_universe(count: int = 100, n_min: int = 9, n_max: int = 12, seed: int = DEFAULT_SEED) -> list[Graph]:
    rng = np.random.default_rng(seed)
    graphs = []
    for i in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        graphs.append(random_connected_graph(n, rng, name=f"random:{seed}:{i}"))
    return graphs
