"""Randomised and swept checks of the structural laws behind r(tK_2, G).

Each property draws its instances from its own generator seeded by
``(seed, property name)``, so results do not depend on execution order or on
how many workers run them. Failures carry graph6 strings and parameters and
can be replayed without the generator.

Sampling model: small targets are drawn uniformly over isomorphism classes
of isolate-free graphs with a given edge count (via the host enumerator);
hosts are drawn by uniform edge sampling and then reduced to their
isolate-free core.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .arrowing import arrows, arrows_bipartite_cover, arrows_generic, arrows_matching, check_certificate
from .bounds import disjoint_upper, graph_bounds, matching_lower, ratio_envelope
from .constructions import BundleParams, UtParams, build_bundle, build_ut, embed_bundle_after_deletion, \
    pad_with_isolates, top_after_removal
from .graph import Graph, add_edge, build_from_edges, canonical_code, contains_subgraph, delete_vertices, \
    disjoint_union, graph6_encode, is_bipartite, isolate_free_core, matching
from .report import SCHEMA
from .solver import SolveResult, SolverCaps, enumerate_hosts, exact_matching_size_ramsey


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    max_n: int = 8
    max_m: int = 12
    max_t: int = 3
    instances: int = 50
    jobs: int = 1


@dataclass
class PropertyResult:
    name: str
    law: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SuiteReport:
    seed: int
    results: list[PropertyResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self, timing: bool = False) -> dict:
        out = {"schema": SCHEMA, "seed": self.seed, "passed": self.passed, "properties": []}
        for r in self.results:
            rec = {"name": r.name, "law": r.law, "instances": r.instances,
                   "passed": r.passed, "failures": r.failures}
            if timing:
                rec["runtime"] = round(r.runtime, 3)
            out["properties"].append(rec)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self) -> str:
        lines = [f"verify suite, seed {self.seed}"]
        for r in self.results:
            status = "PASS" if r.passed else f"FAIL ({len(r.failures)})"
            lines.append(f"  {r.name:<24} {r.instances:>5} instances  {status}")
        lines.append("all properties pass" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


# ------------------------------------------------------------------ sampling

def _g6(G: Graph) -> str:
    return graph6_encode(G)


def sample_target(rng: random.Random, max_m: int, bipartite_only: bool = False) -> Graph:
    """Uniform over isolate-free classes with an edge count drawn from 1..max_m."""
    while True:
        pool = enumerate_hosts(rng.randint(1, max_m))
        G = rng.choice(pool)
        if not bipartite_only or is_bipartite(G):
            return G


def sample_host(rng: random.Random, max_n: int, max_m: int) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        pairs = list(combinations(range(n), 2))
        m = rng.randint(1, min(max_m, len(pairs)))
        core, _ = isolate_free_core(build_from_edges(n, rng.sample(pairs, m)))
        if core.m:
            return core


def sample_bipartite_host(rng: random.Random, max_side: int, max_m: int) -> Graph:
    while True:
        a, b = rng.randint(1, max_side), rng.randint(1, max_side)
        pairs = [(x, a + y) for x in range(a) for y in range(b)]
        m = rng.randint(1, min(max_m, len(pairs)))
        core, _ = isolate_free_core(build_from_edges(a + b, rng.sample(pairs, m)))
        if core.m:
            return core


class _Solved:
    """Memo of exact values for tiny instances."""

    def __init__(self, max_edges: int):
        self.caps = SolverCaps(max_edges=max_edges)
        self.cache: dict[tuple, SolveResult | None] = {}

    def result(self, t: int, G: Graph) -> SolveResult | None:
        core = isolate_free_core(G)[0]
        key = (t, canonical_code(core))
        if key not in self.cache:
            if disjoint_upper(core, t) > self.caps.max_edges:
                self.cache[key] = None
            else:
                r = exact_matching_size_ramsey(t, G, self.caps, confirm=False)
                self.cache[key] = r if r.exact else None
        return self.cache[key]

    def __call__(self, t: int, G: Graph) -> int | None:
        r = self.result(t, G)
        return None if r is None else r.value


def _arrowing_hosts(rng: random.Random, cfg: SuiteConfig, count: int):
    """(F, t, G) triples with F -> (tK_2, G), from constructions and random search."""
    out = []
    while len(out) < count:
        kind = rng.randrange(3)
        if kind == 0:
            G = sample_target(rng, 3)
            t = rng.randint(1, cfg.max_t)
            F = G
            for _ in range(t - 1):
                F = disjoint_union(F, G)
            if F.m <= 3 * cfg.max_m:
                out.append((F, t, G))
        elif kind == 1:
            ell = sorted((rng.randint(0, 2) for _ in range(2)), reverse=True)
            t = rng.randint(1, cfg.max_t)
            q = UtParams(BundleParams.of(*ell), t)
            if q.n <= 20:
                out.append((build_ut(q), t, build_bundle(q.bundle)))
        else:
            F = sample_host(rng, cfg.max_n, cfg.max_m)
            G = sample_target(rng, 3)
            t = rng.randint(1, cfg.max_t)
            if arrows(F, t, G, "matching").arrows:
                out.append((F, t, G))
    return out


# ---------------------------------------------------------------- properties

def check_padding(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("padding", "F->(tK2,H) implies F+sK1->(tK2,H+sK1); r(tK2,H+sK1)=r(tK2,H)")
    solved = _Solved(min(cfg.max_m, 8))
    for _ in range(cfg.instances):
        F = sample_host(rng, cfg.max_n, cfg.max_m)
        H = sample_target(rng, 4)
        t = rng.randint(1, cfg.max_t)
        s = rng.randint(0, 3)
        res.instances += 1
        if arrows(F, t, H, "matching").arrows:
            Fp, Hp = pad_with_isolates(F, s), pad_with_isolates(H, s)
            if not arrows_matching(Fp, t, Hp).arrows:
                res.failures.append({"level": "arrowing", "F": _g6(F), "H": _g6(H), "t": t, "s": s})
        Ht = sample_target(rng, 3, bipartite_only=True)
        tt = rng.randint(1, 2)
        r = solved.result(tt, Ht)
        if r is not None and not _padded_value_holds(r, s):
            res.failures.append({"level": "value", "H": _g6(Ht), "t": tt, "s": s, "value": r.value})
    return res


def _padded_value_holds(r, s: int) -> bool:
    """r(tK2, H + sK1) = r(tK2, H), checked without the solver's core reduction.

    The padded witness must arrow the padded target, and no padded host one
    edge smaller may.
    """
    target = pad_with_isolates(r.target, s)
    if not arrows_matching(pad_with_isolates(r.witness_host, s), r.t, target).arrows:
        return False
    if r.value == 1:
        return True
    return not any(arrows_matching(pad_with_isolates(h, s), r.t, target).arrows
                   for h in enumerate_hosts(r.value - 1))


def check_vertex_deletion(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("vertex-deletion", "F->(sK2,G), s>=2 implies F-v->((s-1)K2,G)")
    for F, s, G in _arrowing_hosts(rng, cfg, cfg.instances):
        if s < 2:
            continue
        res.instances += 1
        for v in range(F.n):
            Fv, _ = delete_vertices(F, [v])
            if not arrows(Fv, s - 1, G).arrows:
                res.failures.append({"F": _g6(F), "G": _g6(G), "s": s, "v": v})
                break
    return res


def check_subadditivity(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("subadditivity", "F1->(sK2,G), F2->(tK2,G) imply F1+F2->((s+t)K2,G)")
    solved = _Solved(min(cfg.max_m, 8))
    hosts = _arrowing_hosts(rng, cfg, 2 * cfg.instances)
    for _ in range(cfg.instances):
        F1, s, G = rng.choice(hosts)
        F2, t, G2 = rng.choice(hosts)
        if G2 != G or F1.n + F2.n > 64:
            # pair hosts for one target: reuse F1's target with t disjoint copies
            t = rng.randint(1, 2)
            F2 = G
            for _ in range(t - 1):
                F2 = disjoint_union(F2, G)
        if F1.n + F2.n > 64:
            continue
        res.instances += 1
        if not arrows(disjoint_union(F1, F2), s + t, G).arrows:
            res.failures.append({"level": "arrowing", "F1": _g6(F1), "F2": _g6(F2),
                                 "G": _g6(G), "s": s, "t": t})
        Gv = sample_target(rng, 2)
        a, b = rng.randint(1, 2), rng.randint(1, 2)
        vals = solved(a + b, Gv), solved(a, Gv), solved(b, Gv)
        if None not in vals and vals[0] > vals[1] + vals[2]:
            res.failures.append({"level": "value", "G": _g6(Gv), "s": a, "t": b, "values": list(vals)})
    return res


def check_core_invariance(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("core-reduction", "r(tK2,G) = r(tK2,core(G)) and bounds agree")
    solved = _Solved(min(cfg.max_m, 8))
    for _ in range(cfg.instances):
        core = sample_target(rng, 3)
        G = pad_with_isolates(core, rng.randint(1, 3))
        t = rng.randint(1, 2)
        res.instances += 1
        # the solver reduces to the core itself, so the value is checked by
        # explicit arrowing on padded hosts instead
        r_core = solved.result(t, core)
        if r_core is None:
            continue
        ok = _padded_value_holds(r_core, G.n - core.n)
        ok = ok and graph_bounds(G, t) == graph_bounds(core, t)
        if not ok:
            res.failures.append({"G": _g6(G), "t": t})
    return res


def check_oracle_equivalence(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("oracle-equivalence", "cover, matching-branch and exhaustive colouring agree")
    for _ in range(cfg.instances):
        F = sample_bipartite_host(rng, 7, min(cfg.max_m, 14))
        G = sample_target(rng, 4, bipartite_only=rng.random() < 0.8)
        t = rng.randint(1, cfg.max_t)
        res.instances += 1
        verdicts = [arrows_bipartite_cover(F, t, G), arrows_matching(F, t, G),
                    arrows_generic(F, matching(t), G)]
        answers = [v.arrows for v in verdicts]
        if len(set(answers)) != 1:
            res.failures.append({"F": _g6(F), "G": _g6(G), "t": t, "verdicts": answers})
    return res


def check_certificates(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("certificate-soundness", "every negative verdict's colouring avoids both targets")
    for _ in range(cfg.instances):
        F = sample_host(rng, cfg.max_n, cfg.max_m)
        G = sample_target(rng, 4)
        t = rng.randint(1, cfg.max_t)
        for method in ("matching", "generic", "cover"):
            if method == "cover" and not all(G.rows):
                continue
            try:
                v = arrows(F, t, G, method)
            except ValueError:
                continue
            res.instances += 1
            if v.arrows is False and not check_certificate(v.certificate, t, G):
                res.failures.append({"F": _g6(F), "G": _g6(G), "t": t, "method": method})
    return res


def check_monotonicity(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("edge-monotonicity", "F->(tK2,G) implies F+e->(tK2,G)")
    for F, t, G in _arrowing_hosts(rng, cfg, cfg.instances):
        non_edges = [(u, v) for u, v in combinations(range(F.n), 2) if not F.adjacent(u, v)]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        res.instances += 1
        if not arrows(add_edge(F, u, v), t, G).arrows:
            res.failures.append({"F": _g6(F), "G": _g6(G), "t": t, "edge": [u, v]})
    return res


def check_domination(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("star-domination", "after dropping <= t-1 star sizes the top k dominate l")
    for k in (2, 3):
        for t in range(1, cfg.max_t + 2):
            for _ in range(cfg.instances):
                ell = tuple(sorted((rng.randint(0, 6) for _ in range(k)), reverse=True))
                total = k + t - 1
                drop = set(rng.sample(range(total), rng.randint(0, t - 1)))
                res.instances += 1
                top = top_after_removal(ell, t, drop)
                if len(top) < k or any(a < b for a, b in zip(top, ell)):
                    res.failures.append({"ell": list(ell), "t": t, "dropped": sorted(drop)})
    return res


def check_bundle_embedding(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("bundle-embedding", "U_t - S contains B for |S| <= t-1")
    for _ in range(cfg.instances):
        k = rng.choice((2, 3))
        ell = tuple(sorted((rng.randint(0, 3) for _ in range(k)), reverse=True))
        t = rng.randint(1, cfg.max_t)
        q = UtParams(BundleParams(k, ell), t)
        if q.n > 40:
            continue
        host = build_ut(q)
        S = rng.sample(range(host.n), rng.randint(0, t - 1))
        res.instances += 1
        remaining, _ = delete_vertices(host, S)
        try:
            embed_bundle_after_deletion(q, S)
            found = contains_subgraph(remaining, build_bundle(q.bundle)) is not None
        except AssertionError:
            found = False
        if not found:
            res.failures.append({"ell": list(ell), "t": t, "S": sorted(S)})
    return res


def check_fekete(cfg: SuiteConfig, rng: random.Random) -> PropertyResult:
    res = PropertyResult("ratio-envelope", "running infimum nonincreasing; ratios in [1/m, 1]; sandwich")
    solved = _Solved(min(cfg.max_m, 8))
    for _ in range(cfg.instances):
        G = sample_target(rng, 5)
        t_max = rng.randint(1, 12)
        exact = {}
        for t in (1, 2):
            v = solved(t, G)
            if v is not None:
                exact[t] = v
        env = ratio_envelope(G, t_max, exact=exact)
        res.instances += 1
        inf = env.running_inf
        ok = all(a >= b for a, b in zip(inf, inf[1:]))
        for t in range(1, t_max + 1):
            for r in (env.upper_ratio(t), env.lower_ratio(t)):
                ok = ok and 1 / env.m <= r <= 1
        ok = ok and 0 <= env.max_lower <= env.inf_upper <= 1
        for t, v in exact.items():
            ok = ok and matching_lower(G, t) <= v <= disjoint_upper(G, t)
        if not ok:
            res.failures.append({"G": _g6(G), "t_max": t_max})
    return res


PROPERTIES: dict[str, Callable[[SuiteConfig, random.Random], PropertyResult]] = {
    "padding": check_padding,
    "vertex-deletion": check_vertex_deletion,
    "subadditivity": check_subadditivity,
    "core-reduction": check_core_invariance,
    "oracle-equivalence": check_oracle_equivalence,
    "certificate-soundness": check_certificates,
    "edge-monotonicity": check_monotonicity,
    "star-domination": check_domination,
    "bundle-embedding": check_bundle_embedding,
    "ratio-envelope": check_fekete,
}


def run_property(name: str, cfg: SuiteConfig) -> PropertyResult:
    rng = random.Random(f"{cfg.seed}:{name}")
    start = time.perf_counter()
    res = PROPERTIES[name](cfg, rng)
    res.runtime = time.perf_counter() - start
    return res


def _run_named(args):
    return run_property(*args)


def run_suite(cfg: SuiteConfig = SuiteConfig(), names=None) -> SuiteReport:
    names = list(PROPERTIES) if names is None else list(names)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_named, [(n, cfg) for n in names]))
    else:
        results = [run_property(n, cfg) for n in names]
    return SuiteReport(cfg.seed, results)
