"""Decision procedures for F -> (G, H) and F -> (tK_2, G).

Every negative verdict carries a red/blue colouring of the host that has no
red copy of the red target and no blue copy of the blue target; it can be
re-checked with :func:`check_certificate`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExhausted, CapError, GraphError, NotBipartiteError
from .graph import Edge, Graph, bipartition, contains_subgraph, find_embedding, matching
from .matching import _max_matching, matching_number

GENERIC_EDGE_CAP = 20
MATCHING_EDGE_CAP = 64


class Budget:
    """Work limit counted in embedding-search node visits."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def charge(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(self.used)


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class Coloring:
    host: Graph
    red: frozenset[Edge]

    def color(self, e: tuple[int, int]) -> Color:
        u, v = e
        key = Edge(min(u, v), max(u, v))
        if not self.host.adjacent(u, v):
            raise GraphError(f"{e} is not an edge of the host")
        return Color.RED if key in self.red else Color.BLUE

    @property
    def assignment(self) -> dict[Edge, Color]:
        return {e: (Color.RED if e in self.red else Color.BLUE) for e in self.host.edges}

    def red_graph(self) -> Graph:
        return _subgraph(self.host.n, self.red)

    def blue_graph(self) -> Graph:
        return _subgraph(self.host.n, [e for e in self.host.edges if e not in self.red])


def _subgraph(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


@dataclass(frozen=True)
class ArrowVerdict:
    """``arrows`` is None when the budget ran out before a decision."""

    arrows: bool | None
    certificate: Coloring | None
    method: str
    work: int = 0

    @property
    def decided(self) -> bool:
        return self.arrows is not None


def check_certificate(coloring: Coloring, red_target: Graph | int, blue_target: Graph) -> bool:
    """True when the colouring avoids both targets.

    An integer red target t stands for tK_2 and is checked by matching number.
    """
    red = coloring.red_graph()
    if isinstance(red_target, int):
        red_ok = matching_number(red)[0] < red_target
    else:
        red_ok = contains_subgraph(red, red_target) is None
    return red_ok and contains_subgraph(coloring.blue_graph(), blue_target) is None


def search_edge_order(F: Graph) -> list[Edge]:
    """Host edges by decreasing degree sum, ties broken lexicographically."""
    degs = F.degrees
    return sorted(F.edges, key=lambda e: (-(degs[e.u] + degs[e.v]), e))


def _check_cap(F: Graph, cap: int | None, what: str) -> None:
    if cap is not None and F.m > cap:
        raise CapError(f"{what}: host has {F.m} edges, cap is {cap} (pass a larger cap to override)")


def arrows_generic(F: Graph, G: Graph, H: Graph, budget: Budget | int | None = None,
                   edge_cap: int | None = GENERIC_EDGE_CAP) -> ArrowVerdict:
    """Decide F -> (G, H) by exhaustive colouring search.

    Edges are coloured one at a time; a branch is cut as soon as the red
    edges so far contain G or the blue edges so far contain H, since both
    colour classes only grow.
    """
    _check_cap(F, edge_cap, "arrows_generic")
    budget = _as_budget(budget)
    edges = search_edge_order(F)
    n = F.n
    red = [0] * n
    blue = [0] * n
    chosen: list[Edge] = []

    def free_of(rows, target):
        return find_embedding(n, rows, target, budget) is None

    def dfs(i: int) -> bool:
        budget.charge()
        if i == len(edges):
            return True
        u, v = edges[i]
        for rows, target, is_red in ((red, G, True), (blue, H, False)):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            if free_of(rows, target):
                if is_red:
                    chosen.append(edges[i])
                if dfs(i + 1):
                    rows[u] ^= 1 << v
                    rows[v] ^= 1 << u
                    return True
                if is_red:
                    chosen.pop()
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        return False

    try:
        if not (free_of(red, G) and free_of(blue, H)):
            return ArrowVerdict(True, None, "generic-enum", budget.used)
        if dfs(0):
            return ArrowVerdict(False, Coloring(F, frozenset(chosen)), "generic-enum", budget.used)
        return ArrowVerdict(True, None, "generic-enum", budget.used)
    except BudgetExhausted:
        return ArrowVerdict(None, None, "generic-enum", budget.used)


def _as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


def _maximal_red(F: Graph, order: list[Edge], red: set[Edge], t: int) -> frozenset[Edge]:
    # Grow the red set in search order while its matching number stays < t.
    # Extra red edges only shrink the blue graph, so blue stays G-free.
    rows = [0] * F.n
    for u, v in red:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for e in order:
        if e in red:
            continue
        u, v = e
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if _nu_reaches(F.n, rows, t):
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        else:
            red.add(e)
    return frozenset(red)


def _nu_reaches(n: int, rows, t: int) -> bool:
    mate = _max_matching(n, rows, target=t)
    return sum(1 for v, w in enumerate(mate) if v < w) >= t


def arrows_matching(F: Graph, t: int, G: Graph, budget: Budget | int | None = None,
                    edge_cap: int | None = MATCHING_EDGE_CAP) -> ArrowVerdict:
    """Decide F -> (tK_2, G) by branching on blue copies of G.

    A bad colouring needs a red set R with matching number < t that meets
    every copy of G. Whenever the current blue graph still holds a copy, R
    must take one of that copy's edges; the branches are made disjoint by
    pinning earlier copy edges blue. Certificates are inclusion-maximal red
    sets.
    """
    if t < 1:
        raise GraphError("t must be at least 1")
    _check_cap(F, edge_cap, "arrows_matching")
    budget = _as_budget(budget)
    order = search_edge_order(F)
    rank = {e: i for i, e in enumerate(order)}
    n = F.n

    if F.m < t and G.m > 0:
        cert = Coloring(F, frozenset(F.edges))
        return ArrowVerdict(False, cert, "matching-branch", 0)

    host_rows = list(F.rows)
    red_rows = [0] * n
    red: set[Edge] = set()

    def blue_rows():
        return [h ^ r for h, r in zip(host_rows, red_rows)]

    def search(pinned: frozenset[Edge]) -> bool:
        budget.charge()
        emb = find_embedding(n, blue_rows(), G, budget)
        if emb is None:
            return True
        copy = sorted({Edge(min(emb[a], emb[b]), max(emb[a], emb[b])) for a, b in G.edges},
                      key=rank.__getitem__)
        free = [e for e in copy if e not in pinned]
        for i, e in enumerate(free):
            u, v = e
            red_rows[u] |= 1 << v
            red_rows[v] |= 1 << u
            if not _nu_reaches(n, red_rows, t):
                red.add(e)
                if search(pinned.union(free[:i])):
                    return True
                red.discard(e)
            red_rows[u] ^= 1 << v
            red_rows[v] ^= 1 << u
        return False

    try:
        if search(frozenset()):
            cert = Coloring(F, _maximal_red(F, order, set(red), t))
            return ArrowVerdict(False, cert, "matching-branch", budget.used)
        return ArrowVerdict(True, None, "matching-branch", budget.used)
    except BudgetExhausted:
        return ArrowVerdict(None, None, "matching-branch", budget.used)


def arrows_bipartite_cover(F: Graph, t: int, G: Graph,
                           budget: Budget | int | None = None) -> ArrowVerdict:
    """Decide F -> (tK_2, G) for bipartite F using König's theorem.

    A red subgraph of a bipartite host without tK_2 has a vertex cover of
    size at most t-1, so F arrows exactly when F - S contains G for every
    vertex set S of that size. G must have no isolated vertices.
    """
    if t < 1:
        raise GraphError("t must be at least 1")
    if bipartition(F) is None:
        raise NotBipartiteError("cover-based arrowing needs a bipartite host")
    if any(r == 0 for r in G.rows):
        raise GraphError("target has isolated vertices; pass its isolate-free core")
    budget = _as_budget(budget)
    size = min(t - 1, F.n)
    try:
        # Smaller deletion sets are implied: F - S' contains F - S for S' within S.
        for S in combinations(range(F.n), size):
            removed = 0
            for v in S:
                removed |= 1 << v
            rows = [0 if (removed >> v) & 1 else r & ~removed for v, r in enumerate(F.rows)]
            if find_embedding(F.n, rows, G, budget) is None:
                red = frozenset(e for e in F.edges if e.u in S or e.v in S)
                return ArrowVerdict(False, Coloring(F, red), "bipartite-cover", budget.used)
        return ArrowVerdict(True, None, "bipartite-cover", budget.used)
    except BudgetExhausted:
        return ArrowVerdict(None, None, "bipartite-cover", budget.used)


METHODS = ("auto", "generic", "matching", "cover")


def choose_method(F: Graph, G: Graph) -> str:
    if bipartition(F) is not None and all(G.rows):
        return "cover"
    return "matching"


def arrows(F: Graph, t: int, G: Graph, method: str = "auto",
           budget: Budget | int | None = None, edge_cap: int | None = None) -> ArrowVerdict:
    """Decide F -> (tK_2, G) with the requested procedure.

    ``auto`` uses the cover procedure for bipartite hosts and isolate-free
    targets, and matching-branch search otherwise.
    """
    if method == "auto":
        method = choose_method(F, G)
    if method == "cover":
        return arrows_bipartite_cover(F, t, G, budget)
    if method == "matching":
        kw = {} if edge_cap is None else {"edge_cap": edge_cap}
        return arrows_matching(F, t, G, budget, **kw)
    if method == "generic":
        kw = {} if edge_cap is None else {"edge_cap": edge_cap}
        return arrows_generic(F, matching(t), G, budget, **kw)
    raise GraphError(f"unknown method {method!r}; choose from {METHODS}")
