"""Bundled bipartite graphs B(l_1..l_k), their arrowing hosts U_t, padding.

Vertex numbering (fixed, relied on by embeddings and certificates):

* ``B``: side X is ``0..k-1``, side Y is ``k..2k-1``, then the pendant leaves
  of X-vertex 0, then those of X-vertex 1, and so on.
* ``U_t`` with ``K = k + t - 1``: X is ``0..K-1``, Y is ``K..2K-1``, then the
  leaves of each X-vertex's star in X order. X-vertex ``i < k`` carries a
  star of size ``l_{i+1}``; the remaining ``t - 1`` carry stars of size l_1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapError, GraphError
from .graph import MAX_VERTICES, Graph, build_from_edges, delete_vertices, disjoint_union, empty, is_embedding


@dataclass(frozen=True)
class BundleParams:
    """Parameters of B(l_1, ..., l_k); ``ell`` is nonincreasing.

    Large parameter vectors are allowed for closed-form work; building the
    graph enforces the vertex cap.
    """

    k: int
    ell: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ell", tuple(self.ell))
        if self.k < 2:
            raise GraphError(f"bundle needs k >= 2, got {self.k}")
        if len(self.ell) != self.k:
            raise GraphError(f"expected {self.k} pendant counts, got {len(self.ell)}")
        if any(x < 0 for x in self.ell):
            raise GraphError("pendant counts must be nonnegative")
        if any(a < b for a, b in zip(self.ell, self.ell[1:])):
            raise GraphError(f"pendant counts must be nonincreasing, got {self.ell}")

    @classmethod
    def of(cls, *ell: int) -> BundleParams:
        return cls(len(ell), tuple(ell))

    @property
    def n(self) -> int:
        return 2 * self.k + sum(self.ell)


@dataclass(frozen=True)
class UtParams:
    bundle: BundleParams
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise GraphError(f"t must be at least 1, got {self.t}")

    @property
    def part_size(self) -> int:
        return self.bundle.k + self.t - 1

    @property
    def star_sizes(self) -> tuple[int, ...]:
        ell = self.bundle.ell
        return ell + (ell[0],) * (self.t - 1)

    @property
    def n(self) -> int:
        return 2 * self.part_size + sum(self.star_sizes)


@dataclass(frozen=True)
class Embedding:
    """Injective adjacency-preserving map from B into a host.

    ``mapping[v]`` is the image of B-vertex ``v`` in the host after deletion
    (renumbered); ``original[v]`` is the same image in U_t's numbering.
    """

    mapping: tuple[int, ...]
    original: tuple[int, ...]


def bundle_stats(p: BundleParams) -> tuple[int, int, int]:
    """``(n, m, max_degree)`` of B from the closed forms."""
    s = sum(p.ell)
    return 2 * p.k + s, p.k * p.k + s, p.k + p.ell[0]


def _stars_graph(part: int, sizes) -> Graph:
    n = 2 * part + sum(sizes)
    if n > MAX_VERTICES:
        raise CapError(f"construction needs {n} vertices; the cap is {MAX_VERTICES}")
    edges = [(x, part + y) for x in range(part) for y in range(part)]
    leaf = 2 * part
    for x, size in enumerate(sizes):
        for _ in range(size):
            edges.append((x, leaf))
            leaf += 1
    return build_from_edges(n, edges)


def build_bundle(p: BundleParams) -> Graph:
    return _stars_graph(p.k, p.ell)


def build_ut(q: UtParams) -> Graph:
    return _stars_graph(q.part_size, q.star_sizes)


def ut_edge_count(q: UtParams) -> int:
    return q.part_size ** 2 + sum(q.star_sizes)


def _star_leaves(part: int, sizes) -> list[list[int]]:
    out = []
    leaf = 2 * part
    for size in sizes:
        out.append(list(range(leaf, leaf + size)))
        leaf += size
    return out


def top_after_removal(ell: tuple[int, ...], t: int, removed: set[int]) -> list[int]:
    """Largest k sizes left in {l_1..l_k, l_1 x (t-1)} after dropping ``removed`` positions."""
    sizes = ell + (ell[0],) * (t - 1)
    left = sorted((s for i, s in enumerate(sizes) if i not in removed), reverse=True)
    return left[: len(ell)]


def embed_bundle_after_deletion(q: UtParams, S) -> Embedding:
    """Copy of B inside U_t - S, built from undamaged stars.

    A star is damaged when S holds its centre or one of its leaves. At most
    |S| <= t-1 stars are damaged, so k undamaged ones remain, and their sizes
    dominate (l_1..l_k) once sorted. The result is checked edge by edge.
    """
    S = set(S)
    if len(S) > q.t - 1:
        raise GraphError(f"deletion set has {len(S)} vertices; at most t-1 = {q.t - 1} allowed")
    host = build_ut(q)
    if any(not 0 <= v < host.n for v in S):
        raise GraphError("deletion set contains vertices outside U_t")
    k, part = q.bundle.k, q.part_size
    sizes = q.star_sizes
    leaves = _star_leaves(part, sizes)
    intact = [x for x in range(part) if x not in S and not S.intersection(leaves[x])]
    # Eligible stars for l_1 >= l_2 >= ... form a growing chain, so taking the
    # lowest free index in order never blocks a later position; S empty gives
    # stars 0..k-1.
    chosen: list[int] = []
    for need in q.bundle.ell:
        pick = next((x for x in intact if x not in chosen and sizes[x] >= need), None)
        if pick is None:
            raise AssertionError("selected star sizes fail to dominate the bundle")
        chosen.append(pick)
    ys = [y for y in range(part, 2 * part) if y not in S][:k]
    if len(ys) < k:
        raise AssertionError("damaged-star count exceeded |S|")
    original = [0] * q.bundle.n
    for i in range(k):
        original[i] = chosen[i]
        original[k + i] = ys[i]
    leaf = 2 * k
    for i, need in enumerate(q.bundle.ell):
        for j in range(need):
            original[leaf] = leaves[chosen[i]][j]
            leaf += 1
    remaining, index = delete_vertices(host, S)
    mapping = tuple(index[v] for v in original)
    B = build_bundle(q.bundle)
    if not is_embedding(remaining, B, mapping):
        raise AssertionError("constructed map is not an embedding")
    return Embedding(mapping, tuple(original))


def pad_with_isolates(G: Graph, s: int) -> Graph:
    """G together with ``s`` isolated vertices."""
    if s < 0:
        raise GraphError("padding count must be nonnegative")
    return disjoint_union(G, empty(s)) if s else G
