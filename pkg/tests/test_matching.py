import pytest
from hypothesis import given, settings

from matchwise.errors import NotBipartiteError
from matchwise.graph import (
    build_from_edges, complete, complete_bipartite, cycle, disjoint_union, empty, matching, path, star, stats,
)
from matchwise.matching import (
    has_matching_at_least, is_matching, is_vertex_cover, matching_number, min_vertex_cover_bipartite,
)

from .oracles import brute_matching_number
from .strategies import bipartite_graphs, graphs


@pytest.mark.parametrize("G, nu", [
    (path(4), 2), (cycle(5), 2), (star(5), 1), (complete(7), 3),
    (complete_bipartite(2, 5), 2), (matching(4), 4), (empty(3), 0),
    # a blossom: triangle with a pendant path, odd cycles force contraction
    (build_from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)]), 3),
])
def test_known_values(G, nu):
    value, witness = matching_number(G)
    assert value == nu == len(witness)
    assert is_matching(G, witness)


def test_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    G = build_from_edges(10, outer + spokes + inner)
    assert matching_number(G)[0] == 5


@settings(max_examples=300, deadline=None)
@given(graphs(8, max_m=10))
def test_agrees_with_brute_force(G):
    nu, witness = matching_number(G)
    assert nu == brute_matching_number(G)
    assert is_matching(G, witness)


@settings(max_examples=200, deadline=None)
@given(graphs(8))
def test_threshold_query(G):
    nu = matching_number(G)[0]
    for t in range(0, nu + 3):
        assert has_matching_at_least(G, t) == (t <= nu)


@settings(max_examples=200, deadline=None)
@given(graphs(10))
def test_vizing_lower_bound(G):
    # a proper (Delta+1)-edge-colouring has a colour class of size >= m/(Delta+1)
    s = stats(G)
    assert matching_number(G)[0] * (s.max_degree + 1) >= s.m


@settings(max_examples=200, deadline=None)
@given(graphs(10))
def test_matching_union_additive(G):
    H = disjoint_union(G, G) if G.n <= 32 else G
    assert matching_number(H)[0] == 2 * matching_number(G)[0]


class TestKonig:
    def test_k33(self):
        cover = min_vertex_cover_bipartite(complete_bipartite(3, 3))
        assert len(cover) == 3 and is_vertex_cover(complete_bipartite(3, 3), cover)

    def test_star(self):
        assert min_vertex_cover_bipartite(star(4)) == frozenset({0})

    def test_odd_cycle_rejected(self):
        with pytest.raises(NotBipartiteError):
            min_vertex_cover_bipartite(cycle(3))

    @settings(max_examples=300, deadline=None)
    @given(bipartite_graphs(5, 5))
    def test_cover_size_is_matching_number(self, G):
        cover = min_vertex_cover_bipartite(G)
        assert is_vertex_cover(G, cover)
        assert len(cover) == matching_number(G)[0]
