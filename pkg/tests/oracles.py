"""Brute-force reference implementations, deliberately naive.

None of these share code paths with the package beyond the Graph container.
"""

from itertools import combinations, permutations, product


def edges_of(G):
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if (G.rows[u] >> v) & 1]


def brute_matching_number(G):
    edges = edges_of(G)
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for sub in combinations(edges, k):
            verts = [x for e in sub for x in e]
            if len(set(verts)) == 2 * k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def brute_contains(host_n, host_edges, G):
    """Subgraph containment by trying every injective vertex map."""
    hs = {frozenset(e) for e in host_edges}
    gedges = edges_of(G)
    for image in permutations(range(host_n), G.n):
        if all(frozenset((image[u], image[v])) in hs for u, v in gedges):
            return True
    return False


def brute_arrows(F, red_test, G):
    """F -> (red target, G) by trying all 2^m colourings.

    ``red_test(red_edges)`` says whether the red edge set contains the red target.
    Returns (verdict, bad red set or None).
    """
    edges = edges_of(F)
    for colours in product((0, 1), repeat=len(edges)):
        red = [e for e, c in zip(edges, colours) if c]
        blue = [e for e, c in zip(edges, colours) if not c]
        if red_test(red):
            continue
        if not brute_contains(F.n, blue, G):
            return False, red
    return True, None


def matching_test(t):
    def test(red):
        for sub in combinations(red, t):
            if len({x for e in sub for x in e}) == 2 * t:
                return True
        return t == 0
    return test


def brute_isomorphic(G, H):
    if G.n != H.n:
        return False
    ge = {frozenset(e) for e in edges_of(G)}
    he = edges_of(H)
    if len(ge) != len(he):
        return False
    return any(all(frozenset((p[u], p[v])) in ge for u, v in he) for p in permutations(range(G.n)))


def nx_arrows_matching(F, t, G):
    """F -> (tK_2, G) over all 2^m colourings, containment by networkx monomorphism."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    pattern = nx.Graph()
    pattern.add_nodes_from(range(G.n))
    pattern.add_edges_from(edges_of(G))
    red_has = matching_test(t)
    edges = edges_of(F)
    for colours in product((0, 1), repeat=len(edges)):
        red = [e for e, c in zip(edges, colours) if c]
        if red_has(red):
            continue
        blue = nx.Graph()
        blue.add_nodes_from(range(F.n))
        blue.add_edges_from(e for e, c in zip(edges, colours) if not c)
        if not GraphMatcher(blue, pattern).subgraph_is_monomorphic():
            return False
    return True
