"""Coupled random-graph construction.

Generators for the overlay of a physical layer on everyone and one (or
two) social layers on random membership subsets:

* :func:`config_model_coupled` -- erased configuration model driven by a
  colored degree vector per node (social degree zero for non-members);
* :func:`er_coupled` / :func:`er_triple` -- sparse ER layers sampled by
  geometric gap skipping over the pair lattice, O(edges) not O(n^2);
* :func:`sublinear_membership` -- membership sets of expected size
  n**gamma for bound checking.

All randomness flows through a caller-supplied ``numpy.random.Generator``
so a seed pins the exact graph. Constructed graphs are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dist import DegreeDistribution, sample_degree
from .errors import InvariantViolation

LAYER_W = 0  # physical
LAYER_F = 1  # social (primary membership set)
LAYER_T = 2  # social (secondary membership set)

LAYER_LETTERS = ("w", "f", "t")
_EMPTY_IDS = np.empty(0, dtype=np.int64)


@dataclass(frozen=True)
class CoupledSpec:
    """Parameters of one coupled two-layer experiment."""

    n: int
    alpha: float
    dist_w: DegreeDistribution
    dist_f: DegreeDistribution
    t_w: float = 1.0
    t_f: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        for name, t in (("t_w", self.t_w), ("t_f", self.t_f)):
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {t}")


@dataclass(frozen=True)
class LayeredGraph:
    """n nodes plus a typed edge list and the social membership sets.

    Edges are parallel arrays (edge_u, edge_v, edge_layer); membership
    arrays hold sorted node ids. Social edges may only join members of
    the corresponding set, which :meth:`validate` asserts.
    """

    n: int
    edge_u: np.ndarray
    edge_v: np.ndarray
    edge_layer: np.ndarray
    members_f: np.ndarray = field(default_factory=lambda: _EMPTY_IDS)
    members_t: np.ndarray = field(default_factory=lambda: _EMPTY_IDS)

    @property
    def num_edges(self) -> int:
        return int(self.edge_u.size)

    def layer_mask(self, layer: int) -> np.ndarray:
        return self.edge_layer == layer

    def edges_of_layer(self, layer: int) -> tuple[np.ndarray, np.ndarray]:
        mask = self.layer_mask(layer)
        return self.edge_u[mask], self.edge_v[mask]

    def validate(self) -> None:
        """Assert the structural invariants; raises InvariantViolation."""
        u, v, lay = self.edge_u, self.edge_v, self.edge_layer
        if u.size != v.size or u.size != lay.size:
            raise InvariantViolation("edge arrays disagree in length")
        if u.size:
            if int(u.min()) < 0 or int(max(u.max(), v.max())) >= self.n:
                raise InvariantViolation("edge endpoint out of range")
            if np.any(u == v):
                raise InvariantViolation("self-loop survived construction")
            key = lay.astype(np.int64) * self.n * self.n \
                + np.minimum(u, v) * self.n + np.maximum(u, v)
            if np.unique(key).size != key.size:
                raise InvariantViolation("duplicate (u, v, layer) edge")
        for layer, members in ((LAYER_F, self.members_f), (LAYER_T, self.members_t)):
            mu, mv = self.edges_of_layer(layer)
            if mu.size and not (
                np.all(np.isin(mu, members)) and np.all(np.isin(mv, members))
            ):
                raise InvariantViolation(
                    f"social layer '{LAYER_LETTERS[layer]}' edge outside membership")

    def dump_edgelist(self, path, alpha: float | None = None) -> None:
        """Write ``u v layer`` lines after a ``n=<n> alpha=<alpha>`` header.

        When alpha is not given the realised fraction |members_f|/n is used.
        """
        if alpha is None:
            alpha = self.members_f.size / self.n
        letters = np.array(LAYER_LETTERS)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"n={self.n} alpha={alpha:.10g}\n")
            for u, v, s in zip(self.edge_u.tolist(), self.edge_v.tolist(),
                               letters[self.edge_layer].tolist()):
                fh.write(f"{u} {v} {s}\n")


def _as_graph(n, chunks, members_f=_EMPTY_IDS, members_t=_EMPTY_IDS) -> LayeredGraph:
    """Assemble (u, v, layer) chunks into a validated LayeredGraph."""
    if chunks:
        u = np.concatenate([c[0] for c in chunks]).astype(np.int64, copy=False)
        v = np.concatenate([c[1] for c in chunks]).astype(np.int64, copy=False)
        lay = np.concatenate(
            [np.full(c[0].size, c[2], dtype=np.int8) for c in chunks])
    else:
        u = v = _EMPTY_IDS
        lay = np.empty(0, dtype=np.int8)
    g = LayeredGraph(n=n, edge_u=u, edge_v=v, edge_layer=lay,
                     members_f=np.sort(np.asarray(members_f, dtype=np.int64)),
                     members_t=np.sort(np.asarray(members_t, dtype=np.int64)))
    g.validate()
    return g


# -- membership sampling ----------------------------------------------


def sample_membership(n: int, alpha: float, rng: np.random.Generator) -> np.ndarray:
    """Include each of the n nodes independently with probability alpha."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if alpha == 1.0:
        rng.random(n)  # consume the same stream regardless of alpha
        return np.arange(n, dtype=np.int64)
    return np.flatnonzero(rng.random(n) < alpha).astype(np.int64)


def sublinear_membership(n: int, gamma: float, rng: np.random.Generator) -> np.ndarray:
    """Include each node with probability n**(gamma-1), 0 < gamma < 1."""
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")
    p = float(n) ** (gamma - 1.0)
    return np.flatnonzero(rng.random(n) < p).astype(np.int64)


# -- configuration model ----------------------------------------------


def sample_colored_degrees(spec: CoupledSpec, membership: np.ndarray,
                           rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Draw per-node (d_f, d_w): members get d_f from dist_f, others zero.

    Applies the parity fix: an odd stub total bumps the degree of one
    uniformly random node (a member, for the social layer) by one.
    """
    membership = np.asarray(membership, dtype=np.int64)
    if membership.size and (membership.min() < 0 or membership.max() >= spec.n):
        raise ValueError("membership ids out of range")
    d_f = np.zeros(spec.n, dtype=np.int64)
    if membership.size:
        d_f[membership] = sample_degree(spec.dist_f, rng, size=membership.size)
    d_w = sample_degree(spec.dist_w, rng, size=spec.n)
    if d_f.sum() % 2 == 1:
        d_f[membership[rng.integers(membership.size)]] += 1
    if d_w.sum() % 2 == 1:
        d_w[rng.integers(spec.n)] += 1
    return d_f, d_w


def match_stubs(degrees: np.ndarray, rng: np.random.Generator
                ) -> tuple[np.ndarray, np.ndarray]:
    """Pair stubs uniformly at random; returns the raw (pre-erasure) pairs."""
    degrees = np.asarray(degrees, dtype=np.int64)
    if degrees.sum() % 2 != 0:
        raise ValueError("stub count must be even (parity fix missing?)")
    stubs = np.repeat(np.arange(degrees.size, dtype=np.int64), degrees)
    rng.shuffle(stubs)
    return stubs[0::2], stubs[1::2]


def erase_multi_edges(u: np.ndarray, v: np.ndarray, n: int
                      ) -> tuple[np.ndarray, np.ndarray]:
    """Drop self-loops and collapse parallel edges (erased config model)."""
    keep = u != v
    u, v = u[keep], v[keep]
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    key = np.unique(lo * np.int64(n) + hi)
    return key // n, key % n


def config_model_coupled(spec: CoupledSpec, rng: np.random.Generator) -> LayeredGraph:
    """Two-layer erased configuration model on colored degrees."""
    members = sample_membership(spec.n, spec.alpha, rng)
    d_f, d_w = sample_colored_degrees(spec, members, rng)
    fu, fv = erase_multi_edges(*match_stubs(d_f, rng), spec.n)
    wu, wv = erase_multi_edges(*match_stubs(d_w, rng), spec.n)
    return _as_graph(spec.n, [(wu, wv, LAYER_W), (fu, fv, LAYER_F)],
                     members_f=members)


def single_layer_w(n: int, dist_w: DegreeDistribution,
                   rng: np.random.Generator) -> LayeredGraph:
    """Physical layer alone via the erased configuration model."""
    d_w = sample_degree(dist_w, rng, size=n)
    if d_w.sum() % 2 == 1:
        d_w[rng.integers(n)] += 1
    wu, wv = erase_multi_edges(*match_stubs(d_w, rng), n)
    return _as_graph(n, [(wu, wv, LAYER_W)])


# -- sparse ER layers --------------------------------------------------


def _er_pair_indices(num_nodes: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Linear indices of present pairs in G(num_nodes, p), by geometric skipping.

    Gap lengths between successive present pairs are Geometric(p); they
    are drawn in vectorised batches, so expected cost is O(edges).
    """
    total = num_nodes * (num_nodes - 1) // 2
    if p <= 0.0 or total == 0:
        return np.empty(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(total, dtype=np.int64)
    log_q = math.log1p(-p)
    mean_edges = total * p
    batch = int(mean_edges + 6.0 * math.sqrt(mean_edges + 1.0) + 16.0)
    out = []
    last = np.int64(-1)
    while True:
        gaps = (np.log1p(-rng.random(batch)) / log_q).astype(np.int64) + 1
        idx = last + np.cumsum(gaps)
        if idx[-1] >= total:
            out.append(idx[idx < total])
            break
        out.append(idx)
        last = idx[-1]
    return np.concatenate(out)


def _pairs_from_linear(idx: np.ndarray, num_nodes: int
                       ) -> tuple[np.ndarray, np.ndarray]:
    """Invert the row-major (i < j) pair enumeration.

    Row i starts at offset(i) = i*(num_nodes-1) - i*(i-1)/2. The float
    inversion can be off by one near the end of the range, so integer
    correction passes pin it down exactly.
    """
    if idx.size == 0:
        return _EMPTY_IDS, _EMPTY_IDS
    n = np.int64(num_nodes)
    t = idx.astype(np.float64)
    a = 2.0 * float(num_nodes) - 1.0
    i = np.floor((a - np.sqrt(a * a - 8.0 * t)) / 2.0).astype(np.int64)
    np.clip(i, 0, num_nodes - 2, out=i)

    def offset(row):
        return row * (n - 1) - row * (row - 1) // 2

    for _ in range(3):
        i += offset(i + 1) <= idx
        i -= offset(i) > idx
    np.clip(i, 0, num_nodes - 2, out=i)
    if np.any(offset(i) > idx) or np.any(offset(i + 1) <= idx):
        raise AssertionError("pair-index inversion failed")
    j = idx - offset(i) + i + 1
    return i, j


def er_edges(ids: np.ndarray, p: float, rng: np.random.Generator
             ) -> tuple[np.ndarray, np.ndarray]:
    """ER edge list among the given node ids with per-pair probability p."""
    m = ids.size
    if m < 2:
        return _EMPTY_IDS, _EMPTY_IDS
    iu, iv = _pairs_from_linear(_er_pair_indices(m, p, rng), m)
    return ids[iu], ids[iv]


def complete_edges(ids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All pairs among the given node ids (worst-case social layer)."""
    m = ids.size
    if m < 2:
        return _EMPTY_IDS, _EMPTY_IDS
    iu, iv = np.triu_indices(m, k=1)
    return ids[iu.astype(np.int64)], ids[iv.astype(np.int64)]


def er_coupled(n: int, alpha: float, lambda_w: float, lambda_f: float,
               rng: np.random.Generator) -> LayeredGraph:
    """Physical ER layer on all n nodes, social ER layer on the members.

    Edge probabilities are lambda_w/n and lambda_f/(alpha*n); both must
    not exceed one.
    """
    p_w = lambda_w / n
    p_f = lambda_f / (alpha * n)
    if p_w > 1.0:
        raise ValueError(f"lambda_w/n = {p_w} exceeds 1")
    if p_f > 1.0:
        raise ValueError(f"lambda_f/(alpha*n) = {p_f} exceeds 1")
    members = sample_membership(n, alpha, rng)
    all_ids = np.arange(n, dtype=np.int64)
    wu, wv = er_edges(all_ids, p_w, rng)
    fu, fv = er_edges(members, p_f, rng)
    return _as_graph(n, [(wu, wv, LAYER_W), (fu, fv, LAYER_F)], members_f=members)


def er_triple(n: int, alpha_f: float, alpha_t: float, lambda_w: float,
              lambda_f: float, lambda_t: float,
              rng: np.random.Generator) -> LayeredGraph:
    """Three independent ER layers: physical plus two social membership sets."""
    p_w = lambda_w / n
    if p_w > 1.0:
        raise ValueError(f"lambda_w/n = {p_w} exceeds 1")

    def social_p(lam, alpha, name):
        if alpha == 0.0:
            if lam != 0.0:
                raise ValueError(f"{name}: zero membership with positive mean degree")
            return 0.0
        p = lam / (alpha * n)
        if p > 1.0:
            raise ValueError(f"{name}: edge probability {p} exceeds 1")
        return p

    p_f = social_p(lambda_f, alpha_f, "social_f")
    p_t = social_p(lambda_t, alpha_t, "social_t")
    members_f = (sample_membership(n, alpha_f, rng) if alpha_f > 0.0 else _EMPTY_IDS)
    members_t = (sample_membership(n, alpha_t, rng) if alpha_t > 0.0 else _EMPTY_IDS)
    all_ids = np.arange(n, dtype=np.int64)
    wu, wv = er_edges(all_ids, p_w, rng)
    fu, fv = er_edges(members_f, p_f, rng)
    tu, tv = er_edges(members_t, p_t, rng)
    return _as_graph(n, [(wu, wv, LAYER_W), (fu, fv, LAYER_F), (tu, tv, LAYER_T)],
                     members_f=members_f, members_t=members_t)
