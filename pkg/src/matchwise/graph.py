"""Small immutable simple graphs on at most 64 vertices.

Adjacency is stored as one bitmask per vertex, so neighbourhood
intersections and set differences are single integer operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import NamedTuple

from .errors import CapError, GraphError

MAX_VERTICES = 64


class Edge(NamedTuple):
    u: int
    v: int


def _edge(u: int, v: int) -> Edge:
    return Edge(u, v) if u < v else Edge(v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality is labelled equality
    (same n, same edge set). Use :func:`canonical_code` for isomorphism.
    """

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapError(f"graph has {n} vertices; the cap is {MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full or (row >> u) & 1:
                raise GraphError(f"row {u} has a loop or an out-of-range neighbour")
            r = row
            while r:
                low = r & -r
                if not (rows[low.bit_length() - 1] >> u) & 1:
                    raise GraphError("adjacency is not symmetric")
                r ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_m", sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee a symmetric irreflexive relation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_m", sum(r.bit_count() for r in rows) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges]})"

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    @property
    def m(self) -> int:
        return self._m

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u, row in enumerate(self.rows):
            r = row >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append(Edge(u, v))
                r >>= 1
                v += 1
        return tuple(out)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return _bits(self.rows[u])


class GraphStats(NamedTuple):
    n: int
    m: int
    max_degree: int
    isolate_count: int


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapError(f"graph would have {n} vertices; the cap is {MAX_VERTICES}")


def build_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges (duplicates are ignored)."""
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


# ---------------------------------------------------------------- generators

def empty(s: int) -> Graph:
    _check_order(s)
    return Graph._trusted(s, (0,) * s)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << u) for u in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; vertices ``0..a-1`` form the first side."""
    if a < 0 or b < 0:
        raise GraphError("part sizes must be nonnegative")
    _check_order(a + b)
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph._trusted(a + b, (right,) * a + (left,) * b)


def path(n: int) -> Graph:
    """Path on ``n`` vertices numbered along the path."""
    _check_order(n)
    return build_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    _check_order(n)
    return build_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(d: int) -> Graph:
    """K_{1,d} with centre 0."""
    return complete_bipartite(1, d)


def matching(t: int) -> Graph:
    """tK_2 with edges (2i, 2i+1)."""
    if t < 0:
        raise GraphError("matching size must be nonnegative")
    _check_order(2 * t)
    return build_from_edges(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])


_GENERATORS = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "matching": (matching, 1),
    "empty": (empty, 1),
}


def generate(kind: str, *params: int) -> Graph:
    """Named standard graph, e.g. ``generate("complete_bipartite", 3, 3)``."""
    try:
        fn, arity = _GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise GraphError("generator parameters must be nonnegative")
    return fn(*params)


# ---------------------------------------------------------------- operations

def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Vertex-disjoint union; H's vertices are renumbered after G's."""
    _check_order(G.n + H.n)
    shift = G.n
    return Graph._trusted(G.n + H.n, G.rows + tuple(r << shift for r in H.rows))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphError(f"cannot add edge ({u}, {v})")
    rows = list(G.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(G.n, tuple(rows))


def induced_subgraph(G: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced on ``keep``; vertex ``keep[i]`` becomes ``i``."""
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in _bits(G.rows[v]):
            j = index.get(w)
            if j is not None:
                r |= 1 << j
        rows.append(r)
    return Graph._trusted(len(keep), tuple(rows))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Copy of G where vertex ``v`` is renamed ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    rows = [0] * G.n
    for u, v in G.edges:
        a, b = perm[u], perm[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph._trusted(G.n, tuple(rows))


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove ``S``; returns the remaining graph and the old->new vertex map."""
    S = set(S)
    bad = [v for v in S if not 0 <= v < G.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} are not in the graph")
    keep = [v for v in range(G.n) if v not in S]
    return induced_subgraph(G, keep), {v: i for i, v in enumerate(keep)}


def isolate_free_core(G: Graph) -> tuple[Graph, int]:
    """G without its isolated vertices, plus the number ``s`` removed."""
    keep = [v for v in range(G.n) if G.rows[v]]
    return induced_subgraph(G, keep), G.n - len(keep)


def stats(G: Graph) -> GraphStats:
    degs = G.degrees
    return GraphStats(G.n, G.m, max(degs, default=0), degs.count(0))


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph._trusted(G.n, tuple(full ^ r ^ (1 << u) for u, r in enumerate(G.rows)))


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(G.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(_bits(comp))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def bipartition(G: Graph) -> list[int] | None:
    """Proper 2-colouring (side 0/1 per vertex) or None if G is not bipartite.

    The least vertex of every component is put on side 0.
    """
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in _bits(G.rows[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


# ------------------------------------------------------- subgraph containment

class _Pattern:
    """Search plan for embedding one pattern graph."""

    __slots__ = ("n", "order", "back", "degree", "isolated")

    def __init__(self, G: Graph):
        degs = G.degrees
        remaining = [v for v in range(G.n) if degs[v]]
        placed = 0
        order = []
        while remaining:
            # highest degree first, then most already-placed neighbours
            v = max(remaining, key=lambda x: (degs[x], (G.rows[x] & placed).bit_count(), -x))
            remaining.remove(v)
            order.append(v)
            placed |= 1 << v
        pos = {v: i for i, v in enumerate(order)}
        self.n = G.n
        self.order = order
        self.back = [[pos[w] for w in _bits(G.rows[v]) if w in pos and pos[w] < i]
                     for i, v in enumerate(order)]
        self.degree = [degs[v] for v in order]
        self.isolated = [v for v in range(G.n) if not degs[v]]


_PATTERNS: dict[Graph, _Pattern] = {}


def _pattern(G: Graph) -> _Pattern:
    p = _PATTERNS.get(G)
    if p is None:
        if len(_PATTERNS) > 4096:
            _PATTERNS.clear()
        p = _PATTERNS[G] = _Pattern(G)
    return p


def find_embedding(n: int, rows: Sequence[int], G: Graph, budget=None) -> list[int] | None:
    """Embed G into the host given by ``rows``; returns host images per G-vertex.

    ``budget`` (a :class:`~matchwise.arrowing.Budget`) is charged one unit per
    search-node visit.
    """
    pat = _pattern(G)
    if G.n > n:
        return None
    k = len(pat.order)
    host_deg = [r.bit_count() for r in rows]
    by_degree: dict[int, int] = {}
    for d in set(pat.degree):
        mask = 0
        for v in range(n):
            if host_deg[v] >= d:
                mask |= 1 << v
        by_degree[d] = mask
    cand_masks = [by_degree[d] for d in pat.degree]
    image = [0] * k
    back = pat.back

    def extend(i: int, used: int) -> bool:
        if budget is not None:
            budget.charge()
        if i == k:
            return True
        cand = cand_masks[i] & ~used
        for j in back[i]:
            cand &= rows[image[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    if not extend(0, 0):
        return None
    result = [-1] * G.n
    used = 0
    for i, v in enumerate(pat.order):
        result[v] = image[i]
        used |= 1 << image[i]
    free = [v for v in range(n) if not (used >> v) & 1]
    if len(free) < len(pat.isolated):
        return None
    for v, w in zip(pat.isolated, free):
        result[v] = w
    return result


def contains_subgraph(F: Graph, G: Graph, budget=None) -> dict[int, int] | None:
    """Injective adjacency-preserving map V(G) -> V(F), or None.

    Containment is not induced: non-edges of G may map to edges of F.
    """
    emb = find_embedding(F.n, F.rows, G, budget)
    if emb is None:
        return None
    return dict(enumerate(emb))


def is_embedding(F: Graph, G: Graph, mapping: dict[int, int] | Sequence[int]) -> bool:
    if isinstance(mapping, dict):
        if set(mapping) != set(range(G.n)):
            return False
        images = [mapping[v] for v in range(G.n)]
    else:
        images = list(mapping)
        if len(images) != G.n:
            return False
    if len(set(images)) != len(images) or any(not 0 <= w < F.n for w in images):
        return False
    return all(F.adjacent(images[u], images[v]) for u, v in G.edges)


# ------------------------------------------------------------ canonical form

def _adjacency_code(rows: Sequence[int], order: Sequence[int]) -> bytes:
    bits = 0
    nbits = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            bits = (bits << 1) | ((rj >> order[i]) & 1)
            nbits += 1
    return bits.to_bytes((nbits + 7) // 8, "big") if nbits else b""


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into every cell until equitable.
    # Deterministic and label-equivariant: subcells are ordered by signature.
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple((rows[v] & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _search_order(n: int, rows: Sequence[int]) -> list[int]:
    # Individualisation-refinement over all leaves; keeps the least leaf code.
    # Subtrees are skipped when an automorphism fixing the current prefix maps
    # an explored vertex onto the candidate.
    best: list = [None, None]
    seen: dict[bytes, list[int]] = {}
    autos: list[list[int]] = []

    def visit(cells: list[list[int]], prefix: list[int]) -> None:
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            code = _adjacency_code(rows, order)
            prev = seen.get(code)
            if prev is not None:
                perm = [0] * n
                for a, b in zip(prev, order):
                    perm[a] = b
                autos.append(perm)
            else:
                seen[code] = order
                if best[0] is None or code < best[0]:
                    best[0], best[1] = code, order
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored and _same_orbit(v, explored, autos, prefix, n):
                continue
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            visit(_refine(rows, child), prefix + [v])
            explored.append(v)

    visit(_refine(rows, [list(range(n))]), [])
    return best[1]


def _same_orbit(v: int, explored: list[int], autos: list[list[int]],
                prefix: list[int], n: int) -> bool:
    gens = [a for a in autos if all(a[p] == p for p in prefix)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in gens:
        for x in range(n):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                parent[rx] = ry
    root = find(v)
    return any(find(u) == root for u in explored)


def _canonical_order(n: int, rows: tuple[int, ...]) -> list[int]:
    if n <= 1:
        return list(range(n))
    G = Graph._trusted(n, rows)
    comps = components(G)
    if len(comps) == 1:
        co = complement(G)
        if len(components(co)) > 1:
            return _canonical_order(n, co.rows)
        return _search_order(n, rows)
    keyed = []
    for comp in comps:
        sub = induced_subgraph(G, comp)
        order = _canonical_order(sub.n, sub.rows)
        keyed.append((len(comp), _adjacency_code(sub.rows, order), [comp[i] for i in order]))
    keyed.sort(key=lambda x: (x[0], x[1]))
    return [v for _, _, verts in keyed for v in verts]


def canonical_order(G: Graph) -> list[int]:
    """Vertex ordering whose adjacency code is an isomorphism invariant."""
    return _canonical_order(G.n, G.rows)


def canonical_code(G: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return bytes([G.n]) + _adjacency_code(G.rows, canonical_order(G))


def canonical_form(G: Graph) -> Graph:
    """The representative of G's isomorphism class in canonical labelling."""
    order = canonical_order(G)
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(G, perm)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_code(G) == canonical_code(H)


# ------------------------------------------------------------------- graph6

def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def graph6_encode(G: Graph) -> str:
    """Standard graph6 string (no header, no newline)."""
    bits = []
    for j in range(1, G.n):
        rj = G.rows[j]
        for i in range(j):
            bits.append((rj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    chunks = [chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)]
    return _g6_size(G.n) + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 string; a leading ``>>graph6<<`` header is accepted."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise GraphError(f"graph6 string {text!r} has characters outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise CapError("graph6 8-byte size form exceeds the vertex cap")
        if len(vals) < 4:
            raise GraphError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n <= 62:
            raise GraphError("graph6 long size form used for n <= 62")
        body = vals[4:]
    if n > MAX_VERTICES:
        raise CapError(f"graph6 graph has {n} vertices; the cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    word = 0
    for x in body:
        word = (word << 6) | x
    pad = len(body) * 6 - nbits
    if word & ((1 << pad) - 1):
        raise GraphError("graph6 padding bits are not zero")
    word >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (word >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [graph6_decode(line) for line in lines if line.strip()]


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)
