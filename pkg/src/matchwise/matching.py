"""Maximum matchings in general graphs and König covers for bipartite ones."""

from __future__ import annotations

from .errors import NotBipartiteError
from .graph import Edge, Graph, _bits, bipartition


def _max_matching(n: int, rows, target: int | None = None) -> list[int]:
    """Mate array of a maximum matching (Edmonds, blossom shrinking).

    Stops as soon as ``target`` edges are matched when a target is given.
    """
    mate = [-1] * n
    size = 0
    for v in range(n):
        if mate[v] == -1:
            for w in _bits(rows[v]):
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    size += 1
                    break
    if target is not None and size >= target:
        return mate
    adj = [_bits(r) for r in rows]

    for root in range(n):
        if mate[root] != -1 or not adj[root]:
            continue
        # A vertex with no augmenting path now never gets one later.
        end, parent = _find_augmenting(root, n, adj, mate)
        if end == -1:
            continue
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
        size += 1
        if target is not None and size >= target:
            break
    return mate


def _find_augmenting(root, n, adj, mate):
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    head = 0

    def lca(a, b):
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _mate_edges(mate: list[int]) -> tuple[Edge, ...]:
    return tuple(Edge(v, w) for v, w in enumerate(mate) if v < w)


def matching_number(G: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Return ``(nu, witness)`` where witness is a maximum matching of G."""
    edges = _mate_edges(_max_matching(G.n, G.rows))
    return len(edges), edges


def has_matching_at_least(G: Graph, t: int) -> bool:
    if t <= 0:
        return True
    if G.m < t or G.n < 2 * t:
        return False
    mate = _max_matching(G.n, G.rows, target=t)
    return sum(1 for v, w in enumerate(mate) if v < w) >= t


def min_vertex_cover_bipartite(G: Graph) -> frozenset[int]:
    """Minimum vertex cover of a bipartite graph via König's construction.

    Raises NotBipartiteError for non-bipartite input.
    """
    side = bipartition(G)
    if side is None:
        raise NotBipartiteError("vertex cover construction needs a bipartite graph")
    mate = _max_matching(G.n, G.rows)
    # Z: vertices reachable from unmatched side-0 vertices by alternating paths.
    reached = [False] * G.n
    stack = [v for v in range(G.n) if side[v] == 0 and mate[v] == -1]
    for v in stack:
        reached[v] = True
    while stack:
        v = stack.pop()
        for w in _bits(G.rows[v]):
            if side[v] == 0 and mate[v] != w and not reached[w]:
                reached[w] = True
                stack.append(w)
        if side[v] == 1 and mate[v] != -1 and not reached[mate[v]]:
            reached[mate[v]] = True
            stack.append(mate[v])
    return frozenset(v for v in range(G.n)
                     if (side[v] == 0 and not reached[v]) or (side[v] == 1 and reached[v]))


def is_vertex_cover(G: Graph, cover) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in G.edges)


def is_matching(G: Graph, edges) -> bool:
    seen = set()
    for u, v in edges:
        if not G.adjacent(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True
