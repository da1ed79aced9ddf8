from itertools import combinations

import networkx as nx
import pytest

from matchwise.arrowing import check_certificate
from matchwise.bounds import disjoint_upper, matching_lower
from matchwise.errors import GraphError
from matchwise.graph import (
    canonical_code, complete, cycle, disjoint_union, empty, graph6_decode, graph6_encode, matching, path, star,
)
from matchwise.solver import SolverCaps, enumerate_hosts, exact_generic_size_ramsey, exact_matching_size_ramsey

from .oracles import brute_arrows, brute_contains, matching_test

# isolate-free graphs by edge count (OEIS A000664)
HOST_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68, 7: 177, 8: 497}


def brute_class_count(m):
    """Isomorphism classes of isolate-free m-edge graphs via networkx."""
    n = 2 * m
    reps = {}
    for edges in combinations(list(combinations(range(n), 2)), m):
        g = nx.Graph(list(edges))
        key = nx.weisfeiler_lehman_graph_hash(g)
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return sum(len(b) for b in reps.values())


class TestEnumeration:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_counts_against_networkx(self, m):
        assert len(enumerate_hosts(m)) == brute_class_count(m)

    @pytest.mark.parametrize("m, count", sorted(HOST_COUNTS.items()))
    def test_counts_reference(self, m, count):
        assert len(enumerate_hosts(m)) == count

    def test_m3_classes(self):
        expected = {canonical_code(g) for g in
                    (complete(3), path(4), star(3), disjoint_union(path(3), complete(2)), matching(3))}
        assert {canonical_code(h) for h in enumerate_hosts(3)} == expected

    @pytest.mark.parametrize("m", range(1, 8))
    def test_hosts_are_distinct_and_isolate_free(self, m):
        hosts = enumerate_hosts(m)
        assert len({canonical_code(h) for h in hosts}) == len(hosts)
        for h in hosts:
            assert h.m == m and all(h.rows)
            assert graph6_decode(graph6_encode(h)) == h

    def test_order_and_filter(self):
        hosts = enumerate_hosts(4)
        assert [h.n for h in hosts] == sorted(h.n for h in hosts)
        assert all(h.n <= 5 for h in enumerate_hosts(4, max_n=5))

    def test_bad_m(self):
        with pytest.raises(GraphError):
            enumerate_hosts(0)


def brute_value(t, G, start):
    """Least m >= start with some enumerated host arrowing, checked by all colourings."""
    m = start
    while True:
        for h in enumerate_hosts(m):
            if brute_arrows(h, matching_test(t), G)[0]:
                return m
        m += 1


class TestMatchingSolver:
    def test_k2_t2(self):
        r = exact_matching_size_ramsey(2, complete(2))
        assert r.value == 2 and r.witness_host == matching(2)
        assert r.exhaustion_log == {1: 1, 2: 2}

    @pytest.mark.parametrize("G", [complete(2), path(3), cycle(5), star(3), path(5), complete(4)],
                             ids=["K2", "P3", "C5", "S3", "P5", "K4"])
    def test_t1_is_edge_count(self, G):
        assert exact_matching_size_ramsey(1, G).value == G.m

    @pytest.mark.parametrize("G, value", [(star(3), 6), (path(3), 4)], ids=["S3", "P3"])
    def test_squeeze_cases(self, G, value):
        assert exact_matching_size_ramsey(2, G).value == value

    @pytest.mark.parametrize("t, G", [(2, matching(2)), (2, complete(3)), (2, path(4)), (3, path(3)),
                                      (2, disjoint_union(path(3), complete(2)))],
                             ids=["2K2", "K3", "P4", "P3-t3", "P3+K2"])
    def test_against_brute_force(self, t, G):
        r = exact_matching_size_ramsey(t, G)
        assert r.value == brute_value(t, G, 1)
        assert brute_arrows(r.witness_host, matching_test(t), G)[0]

    def test_refutations_certify_level_below(self):
        r = exact_matching_size_ramsey(2, star(2))
        below = r.value - 1
        assert len(r.refutations) == len(enumerate_hosts(below)) == r.exhaustion_log[below]
        for host, cert in r.refutations:
            assert host.m == below and check_certificate(cert, 2, star(2))

    @pytest.mark.parametrize("s", [0, 1, 2, 3])
    def test_padding_invariance(self, s):
        assert exact_matching_size_ramsey(2, disjoint_union(path(3), empty(s))).value == 4

    def test_subadditive_examples(self):
        one = exact_matching_size_ramsey(1, star(3)).value
        two = exact_matching_size_ramsey(2, star(3)).value
        assert two <= one + one
        assert exact_matching_size_ramsey(3, complete(2)).value <= 1 + 2

    @pytest.mark.parametrize("t, G", [(1, cycle(4)), (2, path(4)), (2, matching(2)), (3, star(2))])
    def test_sandwich(self, t, G):
        v = exact_matching_size_ramsey(t, G).value
        assert matching_lower(G, t) <= v <= disjoint_upper(G, t)

    def test_caps_give_interval(self):
        r = exact_matching_size_ramsey(3, cycle(5), SolverCaps(max_edges=9))
        assert not r.exact and r.value is None
        assert r.lower == 10 and r.upper == 15

    def test_budget_gives_undecided(self):
        r = exact_matching_size_ramsey(2, cycle(5), SolverCaps(max_edges=9, host_budget=1))
        assert not r.exact and r.undecided > 0

    def test_jobs_do_not_change_result(self):
        a = exact_matching_size_ramsey(2, path(4))
        b = exact_matching_size_ramsey(2, path(4), SolverCaps(jobs=2))
        assert (a.value, a.witness_host, a.exhaustion_log) == (b.value, b.witness_host, b.exhaustion_log)

    def test_rejects_edgeless(self):
        with pytest.raises(GraphError):
            exact_matching_size_ramsey(2, empty(3))


class TestGenericSolver:
    def test_edge_edge(self):
        assert exact_generic_size_ramsey(complete(2), complete(2)).value == 1

    @pytest.mark.parametrize("G", [path(3), star(3), cycle(4), matching(2)], ids=["P3", "S3", "C4", "2K2"])
    def test_edge_against_anything(self, G):
        assert exact_generic_size_ramsey(complete(2), G).value == G.m

    def test_two_matchings(self):
        r = exact_generic_size_ramsey(matching(2), matching(2))
        host = r.witness_host
        assert brute_arrows(host, lambda red: brute_contains(host.n, red, matching(2)), matching(2))[0]
        for h in enumerate_hosts(r.value - 1):
            assert not brute_arrows(h, lambda red: brute_contains(h.n, red, matching(2)), matching(2))[0]
        assert r.value == 3

    def test_matches_matching_solver(self):
        a = exact_generic_size_ramsey(matching(2), path(3)).value
        b = exact_matching_size_ramsey(2, path(3)).value
        assert a == b

    def test_isolates_ignored(self):
        a = exact_generic_size_ramsey(disjoint_union(complete(2), empty(2)), path(3))
        assert a.value == 2

    def test_caps(self):
        r = exact_generic_size_ramsey(complete(3), complete(3), SolverCaps(max_edges=5))
        assert not r.exact and r.lower == 6


def test_witness_recheck_catches_a_wrong_verdict(monkeypatch):
    from matchwise import solver
    from matchwise.arrowing import ArrowVerdict
    # both re-check procedures disagree with the search, so the solver must raise
    monkeypatch.setattr(solver, "arrows_generic", lambda *a, **k: ArrowVerdict(False, None, "generic-enum"))
    monkeypatch.setattr(solver, "arrows_matching", lambda *a, **k: ArrowVerdict(False, None, "matching-branch"))
    with pytest.raises(RuntimeError):
        exact_matching_size_ramsey(2, path(3))
