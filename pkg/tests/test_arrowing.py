import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchwise.arrowing import (
    Budget, Color, Coloring, arrows, arrows_bipartite_cover, arrows_generic, arrows_matching, check_certificate,
    choose_method,
)
from matchwise.constructions import BundleParams, UtParams, build_bundle, build_ut
from matchwise.errors import CapError, GraphError, NotBipartiteError
from matchwise.graph import (
    build_from_edges, complete, complete_bipartite, contains_subgraph, cycle, delete_vertices, disjoint_union,
    empty, matching, path, star,
)
from matchwise.matching import matching_number

from .oracles import brute_arrows, brute_contains, edges_of, matching_test
from .strategies import bipartite_graphs, graphs, isolate_free


def assert_sound(v, F, t, G):
    if v.arrows is False:
        assert v.certificate is not None and v.certificate.host == F
        assert check_certificate(v.certificate, t, G)


class TestGeneric:
    def test_star_against_edge(self):
        assert arrows_generic(star(3), complete(2), star(3)).arrows is True

    @pytest.mark.parametrize("G", [complete(2), path(4), cycle(5), star(3), complete_bipartite(2, 3)],
                             ids=["K2", "P4", "C5", "S3", "K23"])
    def test_every_graph_arrows_edge_and_itself(self, G):
        assert arrows_generic(G, complete(2), G).arrows is True

    @pytest.mark.parametrize("G", [path(4), cycle(5), star(3), complete(4)], ids=["P4", "C5", "S3", "K4"])
    def test_one_edge_short_fails_all_blue(self, G):
        F = build_from_edges(G.n, list(G.edges)[:-1])
        v = arrows_generic(F, complete(2), G)
        assert v.arrows is False
        assert v.certificate.red == frozenset()
        assert all(c is Color.BLUE for c in v.certificate.assignment.values())

    def test_two_triangles_in_k6(self):
        # K6 -> (K3, K3) is the classical R(3,3)=6; K5 does not arrow
        assert arrows_generic(complete(6), complete(3), complete(3)).arrows is True
        v = arrows_generic(complete(5), complete(3), complete(3))
        assert v.arrows is False and check_certificate(v.certificate, complete(3), complete(3))

    def test_cap(self):
        with pytest.raises(CapError):
            arrows_generic(complete(7), complete(2), complete(2))
        assert arrows_generic(complete(7), complete(2), complete(2), edge_cap=None).arrows is True

    def test_budget_yields_undecided(self):
        v = arrows_generic(complete(6), complete(3), complete(3), budget=Budget(5))
        assert v.arrows is None and not v.decided


class TestMatchingBranch:
    @pytest.mark.parametrize("G", [complete(2), path(3), star(3)], ids=["K2", "P3", "S3"])
    def test_path3_all_red(self, G):
        v = arrows_matching(path(3), 2, G)
        assert v.arrows is False
        assert v.certificate.red == frozenset(path(3).edges)

    def test_two_stars(self):
        # exhaustive 2^6 colouring oracle gives True
        F = disjoint_union(star(3), star(3))
        assert brute_arrows(F, matching_test(2), star(3))[0] is True
        assert arrows_matching(F, 2, star(3)).arrows is True

    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_fewer_than_t_edges(self, t):
        F = path(t)  # t-1 edges
        v = arrows_matching(F, t, complete(2))
        assert v.arrows is False and v.certificate.red == frozenset(F.edges)

    def test_bad_t(self):
        with pytest.raises(GraphError):
            arrows_matching(path(3), 0, complete(2))

    def test_certificates_are_maximal(self):
        F = complete(5)
        v = arrows_matching(F, 2, cycle(5))
        assert v.arrows is False
        red = set(v.certificate.red)
        for e in F.edges:
            if e not in red:
                grown = Coloring(F, frozenset(red | {e}))
                assert not check_certificate(grown, 2, cycle(5))


class TestCover:
    def test_k33_c4(self):
        F = complete_bipartite(3, 3)
        # every one-vertex deletion leaves a C4
        for v in range(6):
            rest, _ = delete_vertices(F, [v])
            assert brute_contains(rest.n, edges_of(rest), cycle(4))
        assert arrows_bipartite_cover(F, 2, cycle(4)).arrows is True

    def test_ut_hosts_bundle(self):
        q = UtParams(BundleParams.of(1, 1), 2)
        assert arrows_bipartite_cover(build_ut(q), 2, build_bundle(q.bundle)).arrows is True

    @pytest.mark.parametrize("F, G", [(complete_bipartite(2, 3), cycle(4)), (star(3), path(3)),
                                      (matching(2), path(3))])
    def test_t1_is_containment(self, F, G):
        assert arrows_bipartite_cover(F, 1, G).arrows == (contains_subgraph(F, G) is not None)

    def test_rejects_non_bipartite_host(self):
        with pytest.raises(NotBipartiteError):
            arrows_bipartite_cover(cycle(5), 2, complete(2))

    def test_rejects_isolates_in_target(self):
        with pytest.raises(GraphError):
            arrows_bipartite_cover(cycle(4), 2, disjoint_union(complete(2), empty(1)))


class TestDispatch:
    def test_auto_choice(self):
        assert choose_method(cycle(4), path(3)) == "cover"
        assert choose_method(cycle(5), path(3)) == "matching"
        assert choose_method(cycle(4), disjoint_union(path(3), empty(1))) == "matching"

    def test_method_echoed(self):
        assert arrows(cycle(4), 2, path(3)).method == "bipartite-cover"
        assert arrows(cycle(4), 2, path(3), "generic").method == "generic-enum"
        assert arrows(cycle(4), 2, path(3), "matching").method == "matching-branch"

    def test_unknown_method(self):
        with pytest.raises(GraphError):
            arrows(cycle(4), 2, path(3), "magic")


@settings(max_examples=120, deadline=None)
@given(graphs(6, max_m=9), st.integers(1, 3), isolate_free(4, 3))
def test_methods_match_brute_force(F, t, G):
    expected = brute_arrows(F, matching_test(t), G)[0]
    for method in ("generic", "matching"):
        v = arrows(F, t, G, method)
        assert v.arrows == expected
        assert_sound(v, F, t, G)


@settings(max_examples=120, deadline=None)
@given(bipartite_graphs(4, 4, max_m=10), st.integers(1, 3), isolate_free(4, 3))
def test_cover_matches_brute_force(F, t, G):
    expected = brute_arrows(F, matching_test(t), G)[0]
    v = arrows_bipartite_cover(F, t, G)
    assert v.arrows == expected
    assert_sound(v, F, t, G)


@settings(max_examples=60, deadline=None)
@given(graphs(5, max_m=6), isolate_free(4, 3), isolate_free(3, 2))
def test_generic_certificates_with_graph_targets(F, G, H):
    v = arrows_generic(F, G, H)
    if v.arrows is False:
        assert check_certificate(v.certificate, G, H)
    else:
        red_test = lambda red: brute_contains(F.n, red, G)
        assert brute_arrows(F, red_test, H)[0]


class TestLaws:
    @settings(max_examples=60, deadline=None)
    @given(graphs(6, max_m=8), st.integers(1, 2), isolate_free(4, 3), st.data())
    def test_monotone_in_host(self, F, t, G, data):
        if arrows(F, t, G).arrows:
            non = [(u, v) for u, v in combinations(range(F.n + 1), 2) if u == F.n or not F.adjacent(u, v)]
            e = data.draw(st.sampled_from(non))
            assert arrows(build_from_edges(F.n + 1, list(F.edges) + [e]), t, G).arrows

    def test_disjoint_union_law(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(200):
            F1 = build_from_edges(5, rng.sample(list(combinations(range(5), 2)), rng.randint(2, 7)))
            F2 = build_from_edges(5, rng.sample(list(combinations(range(5), 2)), rng.randint(2, 7)))
            G = [complete(2), path(3), matching(2)][rng.randrange(3)]
            s, t = rng.randint(1, 2), rng.randint(1, 2)
            if arrows(F1, s, G).arrows and arrows(F2, t, G).arrows:
                checked += 1
                assert arrows(disjoint_union(F1, F2), s + t, G).arrows
        assert checked >= 10

    @settings(max_examples=60, deadline=None)
    @given(graphs(5, max_m=7), st.integers(1, 2), isolate_free(4, 3), st.integers(0, 3))
    def test_padding_law(self, F, t, G, s):
        if arrows(F, t, G).arrows:
            padded_G = disjoint_union(G, empty(s))
            assert arrows(disjoint_union(F, empty(s)), t, padded_G, "matching").arrows

    def test_red_matching_bounded_in_certificates(self):
        v = arrows(complete(5), 3, cycle(5), "matching")
        assert v.arrows is False
        assert matching_number(v.certificate.red_graph())[0] < 3


def test_coloring_rejects_non_edges():
    c = Coloring(path(3), frozenset())
    assert c.color((1, 0)) is Color.BLUE
    with pytest.raises(GraphError):
        c.color((0, 2))
