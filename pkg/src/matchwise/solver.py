"""Exact size Ramsey numbers by scanning isolate-free hosts edge count by edge count.

Hosts are restricted to isolate-free graphs: an isolated host vertex holds no
edge, so it neither adds to a red matching nor helps a blue copy of the
isolate-free core of the target. Targets are reduced to their cores first.

Arrowing is monotone in the edge count (adding an edge to an arrowing host
keeps it arrowing), so once level ``v`` admits an arrowing host and level
``v - 1`` has been exhausted with no arrowing host, ``v`` is the exact value.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .arrowing import ArrowVerdict, Coloring, arrows, arrows_generic, arrows_matching, choose_method
from .bounds import disjoint_upper, matching_lower
from .errors import CapError, GraphError
from .graph import Graph, canonical_code, canonical_form, isolate_free_core, matching

DEFAULT_MAX_EDGES = 12


@dataclass(frozen=True)
class SolverCaps:
    max_edges: int = DEFAULT_MAX_EDGES
    max_vertices: int | None = None
    host_budget: int | None = None
    time_limit: float | None = None
    jobs: int = 1

    @property
    def vertex_limit(self) -> int:
        return 2 * self.max_edges if self.max_vertices is None else self.max_vertices


@dataclass
class SolveResult:
    """Exact value, or the interval ``[lower, upper]`` when caps were hit.

    ``exhaustion_log`` maps each scanned edge count to the number of
    canonical hosts decided there. ``refutations`` holds one non-arrowing
    certificate per host of the level just below the value.
    """

    t: int | None
    red_target: Graph | None
    target: Graph
    lower: int
    upper: int | None
    value: int | None = None
    witness_host: Graph | None = None
    exhaustion_log: dict[int, int] = field(default_factory=dict)
    refutations: list[tuple[Graph, Coloring]] = field(default_factory=list)
    undecided: int = 0

    @property
    def exact(self) -> bool:
        return self.value is not None


@lru_cache(maxsize=None)
def _hosts(m: int) -> tuple[Graph, ...]:
    if m == 1:
        return (Graph(2, (2, 1)),)
    found: dict[bytes, Graph] = {}
    for g in _hosts(m - 1):
        n = g.n
        cands = []
        for u in range(n):
            for v in range(u + 1, n):
                if not g.adjacent(u, v):
                    cands.append((n, u, v))
            cands.append((n + 1, u, n))
        cands.append((n + 2, n, n + 1))
        for size, u, v in cands:
            rows = list(g.rows) + [0] * (size - n)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            h = Graph._trusted(size, tuple(rows))
            code = canonical_code(h)
            if code not in found:
                found[code] = canonical_form(h)
    return tuple(found[c] for c in sorted(found, key=lambda c: (c[0], c)))


def enumerate_hosts(m: int, max_n: int | None = None) -> list[Graph]:
    """One graph per isomorphism class of isolate-free graphs with ``m`` edges.

    Ordered by vertex count, then canonical code; each graph is returned in
    canonical labelling.
    """
    if m < 1:
        raise GraphError("host edge count must be at least 1")
    if max_n is not None and max_n > 64:
        raise CapError("max_n exceeds the vertex cap")
    hosts = _hosts(m)
    if max_n is None:
        return list(hosts)
    return [h for h in hosts if h.n <= max_n]


def _decide_matching(args) -> ArrowVerdict:
    host, t, target, budget = args
    return arrows(host, t, target, "auto", budget)


def _decide_generic(args) -> ArrowVerdict:
    host, red, blue, budget = args
    return arrows_generic(host, red, blue, budget, edge_cap=None)


def _decide_level(fn, items, jobs: int) -> list[ArrowVerdict]:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def _scan(result: SolveResult, start: int, stop: int | None, caps: SolverCaps,
          make_args, fn) -> SolveResult:
    deadline = None if caps.time_limit is None else time.monotonic() + caps.time_limit
    m = start
    while stop is None or m <= stop:
        if m > caps.max_edges or (deadline is not None and time.monotonic() > deadline):
            result.lower = m
            return result
        all_hosts = enumerate_hosts(m)
        hosts = [h for h in all_hosts if h.n <= caps.vertex_limit]
        verdicts = _decide_level(fn, [make_args(h) for h in hosts], caps.jobs)
        result.exhaustion_log[m] = len(hosts)
        for h, vd in zip(hosts, verdicts):
            if vd.arrows:
                result.value = result.lower = result.upper = m
                result.witness_host = h
                return result
        undecided = sum(1 for vd in verdicts if vd.arrows is None)
        result.undecided += undecided
        if undecided or len(hosts) < len(all_hosts):
            # level m not exhausted; no sound claim beyond it
            result.lower = m
            return result
        m += 1
        result.lower = m
    raise RuntimeError(f"no arrowing host up to {stop} edges; the upper bound is violated")


def _confirm_below(result: SolveResult, caps: SolverCaps, make_args, fn) -> None:
    below = result.value - 1
    if below < 1 or below in result.exhaustion_log:
        return
    hosts = enumerate_hosts(below)
    verdicts = _decide_level(fn, [make_args(h) for h in hosts], caps.jobs)
    result.exhaustion_log[below] = len(hosts)
    for h, vd in zip(hosts, verdicts):
        if vd.arrows:
            raise RuntimeError(f"host {h} with {below} edges arrows; the lower bound is violated")
        if vd.arrows is None:
            result.undecided += 1
        else:
            result.refutations.append((h, vd.certificate))


def exact_matching_size_ramsey(t: int, G: Graph, caps: SolverCaps = SolverCaps(),
                               confirm: bool = True) -> SolveResult:
    """r(tK_2, G), scanning upward from the degree lower bound.

    With ``confirm`` the level just below the value is exhausted as well,
    which certifies minimality independently of the lower-bound formula.
    """
    if t < 1:
        raise GraphError("t must be at least 1")
    core, _ = isolate_free_core(G)
    if core.m == 0:
        raise GraphError("target graph must have at least one edge")
    lower, upper = matching_lower(core, t), disjoint_upper(core, t)
    result = SolveResult(t, None, core, lower, upper)
    make_args = lambda h: (h, t, core, caps.host_budget)  # noqa: E731
    _scan(result, lower, upper, caps, make_args, _decide_matching)
    if result.exact:
        _recheck_witness(result.witness_host, t, core)
        if confirm:
            _confirm_below(result, caps, make_args, _decide_matching)
    return result


def _recheck_witness(host: Graph, t: int, target: Graph) -> None:
    """Re-decide the witness with a procedure other than the one that found it."""
    if choose_method(host, target) == "cover":
        verdict = arrows_matching(host, t, target, edge_cap=None)
    else:
        verdict = arrows_generic(host, matching(t), target, edge_cap=None)
    if verdict.arrows is not True:
        raise RuntimeError(f"witness {host} failed its independent re-check")


def exact_generic_size_ramsey(G: Graph, H: Graph, caps: SolverCaps = SolverCaps(8),
                              confirm: bool = True) -> SolveResult:
    """r(G, H) for tiny G, H by exhaustive colouring of every host.

    Both targets are replaced by their isolate-free cores; isolated vertices
    can always be supplied without adding edges.
    """
    red, _ = isolate_free_core(G)
    blue, _ = isolate_free_core(H)
    if red.m == 0 or blue.m == 0:
        raise GraphError("both targets must have at least one edge")
    lower = max(red.m, blue.m)
    result = SolveResult(None, red, blue, lower, None)
    make_args = lambda h: (h, red, blue, caps.host_budget)  # noqa: E731
    _scan(result, lower, None, caps, make_args, _decide_generic)
    if result.exact:
        if all(d == 1 for d in red.degrees):  # red target is a matching
            _recheck_witness(result.witness_host, red.m, blue)
        if confirm:
            _confirm_below(result, caps, make_args, _decide_generic)
    return result
