"""Bond percolation and exact component statistics.

:func:`percolate` keeps each edge independently with its layer's
occupation probability (one uniform per edge, in edge-list order, so a
seed pins the occupied subgraph). :func:`components` labels connected
components of the layer-union graph with union-find (union by size,
path halving); this is the package's hot kernel and is numba-compiled
unless the ``CASCADE_BACKEND`` flag selects the plain-Python fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import USE_NUMBA, njit
from .netgen import LayeredGraph


@dataclass(frozen=True)
class ComponentStats:
    """Component sizes of one percolated graph, largest first."""

    n: int
    sizes: np.ndarray
    c1: int
    c2: int
    num_components: int

    @classmethod
    def from_sizes(cls, n: int, sizes: np.ndarray) -> "ComponentStats":
        sizes = np.sort(np.asarray(sizes, dtype=np.int64))[::-1]
        if sizes.sum() != n:
            raise ValueError(f"component sizes sum to {sizes.sum()}, expected {n}")
        c1 = int(sizes[0]) if sizes.size else 0
        c2 = int(sizes[1]) if sizes.size > 1 else 0
        return cls(n=n, sizes=sizes, c1=c1, c2=c2, num_components=int(sizes.size))


def percolate(graph: LayeredGraph, t_w: float, t_f: float,
              rng: np.random.Generator, t_t: float = 1.0) -> LayeredGraph:
    """Occupied subgraph with per-layer probabilities (t_w, t_f, t_t)."""
    for name, t in (("t_w", t_w), ("t_f", t_f), ("t_t", t_t)):
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {t}")
    probs = np.array([t_w, t_f, t_t], dtype=np.float64)[graph.edge_layer]
    keep = rng.random(graph.num_edges) < probs
    return LayeredGraph(
        n=graph.n,
        edge_u=graph.edge_u[keep],
        edge_v=graph.edge_v[keep],
        edge_layer=graph.edge_layer[keep],
        members_f=graph.members_f,
        members_t=graph.members_t,
    )


def _component_counts_impl(n, edge_u, edge_v):
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    for e in range(edge_u.shape[0]):
        x = edge_u[e]
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        y = edge_v[e]
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        if x == y:
            continue
        if size[x] < size[y]:
            x, y = y, x
        parent[y] = x
        size[x] += size[y]
    counts = np.zeros(n, np.int64)
    for i in range(n):
        x = i
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        counts[x] += 1
    return counts


# Same algorithm on both backends; results are bit-identical.
_component_counts_python = _component_counts_impl
_component_counts_numba = njit(cache=True, nogil=True)(_component_counts_impl)
_component_counts = _component_counts_numba if USE_NUMBA else _component_counts_python


def components(graph: LayeredGraph) -> ComponentStats:
    """Exact connected components of the layer-union graph."""
    counts = _component_counts(
        graph.n,
        np.ascontiguousarray(graph.edge_u),
        np.ascontiguousarray(graph.edge_v),
    )
    return ComponentStats.from_sizes(graph.n, counts[counts > 0])


def avg_outbreak_size(stats: ComponentStats) -> float:
    """Mean informed-cluster size from a uniform seed: sum of C_j^2 over n."""
    sizes = stats.sizes.astype(np.float64)
    return float(np.dot(sizes, sizes) / stats.n)


def epidemic_fraction(stats: ComponentStats) -> float:
    """Fractional size of the largest component."""
    return stats.c1 / stats.n
