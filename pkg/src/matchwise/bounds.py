"""Closed-form bounds on r(tK_2, G), the ratio envelope for the limit
r_inf(G) = inf_t r(tK_2, G) / (t |E(G)|), and the bundle families whose limit
tends to a prescribed value.

All bound arithmetic is exact: integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import BundleParams, bundle_stats
from .errors import GraphError
from .graph import Graph, stats
from .matching import matching_number

# provenance tags attached to every bound
TRIVIAL_LOWER = "edge-count-lower"        # fewer than t edges hold no tK_2
DEGREE_LOWER = "degree-lower"             # (t-1) max_degree + |E(G)|
DISJOINT_UPPER = "disjoint-copies-upper"  # t disjoint copies of G
BUNDLE_UPPER = "bundle-host-upper"        # |E(U_t)| for bundles
EXACT = "exact-solver"
BASE = "single-edge-base"                 # r(K_2, G) = |E(G)|


@dataclass(frozen=True)
class BoundReport:
    t: int
    lower: int
    upper: int
    lower_src: str
    upper_src: str

    def __post_init__(self):
        if self.lower < self.t:
            raise GraphError(f"lower bound {self.lower} below t={self.t}")
        if self.lower > self.upper:
            raise GraphError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def _nonempty(G: Graph) -> None:
    if G.m == 0:
        raise GraphError("target graph must have at least one edge")


def base_value(G: Graph) -> int:
    """r(K_2, G) = |E(G)|."""
    _nonempty(G)
    return G.m


def _degree_lower(m: int, delta: int, t: int) -> int:
    return max(t, (t - 1) * delta + m)


def matching_lower(G: Graph, t: int) -> int:
    _nonempty(G)
    if t < 1:
        raise GraphError("t must be at least 1")
    s = stats(G)
    return _degree_lower(s.m, s.max_degree, t)


def disjoint_upper(G: Graph, t: int) -> int:
    _nonempty(G)
    if t < 1:
        raise GraphError("t must be at least 1")
    return t * G.m


def _lower_src(m: int, delta: int, t: int) -> str:
    return DEGREE_LOWER if (t - 1) * delta + m >= t else TRIVIAL_LOWER


def graph_bounds(G: Graph, t: int) -> BoundReport:
    """Degree lower bound against the disjoint-copies upper bound."""
    s = stats(G)
    return BoundReport(t, matching_lower(G, t), disjoint_upper(G, t),
                       _lower_src(s.m, s.max_degree, t), DISJOINT_UPPER)


def bundle_upper(p: BundleParams, t: int) -> int:
    """n + (t-1) l_1 + (k+t-1)^2 - 2k, the edge count of U_t."""
    return p.n + (t - 1) * p.ell[0] + (p.k + t - 1) ** 2 - 2 * p.k


def bundle_two_sided(p: BundleParams, t: int) -> BoundReport:
    """Degree lower bound and U_t upper bound for B(l_1..l_k)."""
    if t < 1:
        raise GraphError("t must be at least 1")
    n, m, delta = bundle_stats(p)
    return BoundReport(t, _degree_lower(m, delta, t), bundle_upper(p, t),
                       _lower_src(m, delta, t), BUNDLE_UPPER)


def bundle_best(p: BundleParams, t: int) -> BoundReport:
    """Like :func:`bundle_two_sided` but the upper side is the better of U_t and t disjoint copies."""
    r = bundle_two_sided(p, t)
    copies = t * bundle_stats(p)[1]
    if copies < r.upper:
        return BoundReport(t, r.lower, copies, r.lower_src, DISJOINT_UPPER)
    return r


@dataclass(frozen=True)
class RatioSequence:
    """Bounds on r(tK_2, G) for t = 1..t_max and the bracket they give on r_inf(G).

    ``running_inf[i]`` is the least upper ratio over t <= i+1; by subadditivity
    the limit equals the infimum, so every entry is an upper bound on r_inf.
    """

    m: int
    max_degree: int
    reports: tuple[BoundReport, ...]
    running_inf: tuple[Fraction, ...] = field(repr=False)

    @property
    def inf_upper(self) -> Fraction:
        return self.running_inf[-1]

    @property
    def max_lower(self) -> Fraction:
        return Fraction(self.max_degree, self.m)

    @property
    def width(self) -> Fraction:
        return self.inf_upper - self.max_lower

    def upper_ratio(self, t: int) -> Fraction:
        return Fraction(self.reports[t - 1].upper, t * self.m)

    def lower_ratio(self, t: int) -> Fraction:
        return Fraction(self.reports[t - 1].lower, t * self.m)


def ratio_envelope(target: Graph | BundleParams, t_max: int,
                   source: Callable[[int], BoundReport] | None = None,
                   exact: Mapping[int, int] | None = None) -> RatioSequence:
    """Bracket r_inf(target) using bounds for t = 1..t_max.

    ``source`` maps t to a BoundReport; by default graphs use
    :func:`graph_bounds` and bundles :func:`bundle_best`. Values in ``exact``
    (t -> r(tK_2, G)) replace both sides for that t.
    """
    if t_max < 1:
        raise GraphError("t_max must be at least 1")
    if isinstance(target, BundleParams):
        _, m, delta = bundle_stats(target)
        default = lambda t: bundle_best(target, t)  # noqa: E731
    else:
        _nonempty(target)
        s = stats(target)
        m, delta = s.m, s.max_degree
        default = lambda t: graph_bounds(target, t)  # noqa: E731
    source = source or default
    exact = exact or {}
    reports = []
    running = []
    best = None
    for t in range(1, t_max + 1):
        if t in exact:
            r = BoundReport(t, exact[t], exact[t], EXACT, EXACT)
        else:
            r = source(t)
        reports.append(r)
        ratio = Fraction(r.upper, t * m)
        best = ratio if best is None else min(best, ratio)
        running.append(best)
    return RatioSequence(m, delta, tuple(reports), tuple(running))


def self_ramsey_upper(G: Graph, rGG_upper: int) -> Fraction:
    """Upper bound r_inf(G) <= r(G, G) / (nu(G) |E(G)|).

    ``rGG_upper`` must be a certified upper bound on r(G, G).
    """
    _nonempty(G)
    nu, _ = matching_number(G)
    return Fraction(rGG_upper, nu * G.m)


@dataclass(frozen=True)
class FamilySpec:
    """Bundle B(l) on N vertices chosen so that r_inf(B) is close to alpha.

    ``q``, ``a``, ``r`` are only set for alpha = 0, where k = q = floor(sqrt N)
    and N - 2q = a q + r.
    """

    alpha: Fraction
    N: int
    case: str
    k: int
    s: int
    ell: tuple[int, ...]
    q: int | None = None
    a: int | None = None
    r: int | None = None

    @property
    def bundle(self) -> BundleParams:
        return BundleParams(self.k, self.ell)


def family_for_alpha(alpha, N: int) -> FamilySpec:
    """Bundle parameters of the N-vertex family for the target limit ``alpha``.

    For alpha > 0: k = max(2, ceil(1/alpha)), l_1 = floor(alpha (N-2k)) and
    the rest of N-2k is filled greedily with parts no larger than l_1. If
    that fill cannot reach N-2k, k is raised by one; if it still cannot,
    GraphError. For alpha = 0 the square-root split is used and N >= 4 is
    required.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise GraphError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha == 0:
        q = math.isqrt(N) if N >= 0 else 0
        if q < 2:
            raise GraphError(f"N={N} too small; the alpha=0 family needs N >= 4")
        s = N - 2 * q
        a, r = divmod(s, q)
        ell = (a + 1,) * r + (a,) * (q - r)
        return FamilySpec(alpha, N, "alpha=0", q, s, ell, q, a, r)
    k0 = max(2, math.ceil(1 / alpha))
    # With k alpha = 1 exactly the fill fails whenever k does not divide N - 2k
    # (e.g. alpha = 1/2 and odd N); k + 1 has k alpha > 1 and always works for large N.
    for k in (k0, k0 + 1):
        s = N - 2 * k
        first = math.floor(alpha * s) if s >= 0 else -1
        rest = s - first
        if s >= 0 and rest <= (k - 1) * first:
            break
    else:
        raise GraphError(f"N={N} too small for the alpha={alpha} family (tried k={k0}, {k0 + 1})")
    ell = [first]
    for _ in range(k - 1):
        x = min(ell[-1], rest)
        ell.append(x)
        rest -= x
    return FamilySpec(alpha, N, "alpha>0", k, s, tuple(ell))


@dataclass(frozen=True)
class AsymptoticParams:
    c: float
    M: float
    K_c: float
    C_delta: float | None = None

    def __post_init__(self):
        if self.c <= 1:
            raise GraphError("degree bound c must exceed 1")
        if self.M < 1:
            raise GraphError("core order M must be at least 1")
        if self.K_c <= 0 or (self.C_delta is not None and self.C_delta <= 0):
            raise GraphError("constants must be positive")


def core_growth_envelope(a: AsymptoticParams) -> float:
    """K_c (log M / M)^(1/(c-1))."""
    if a.M < 2:
        raise GraphError("envelope needs M >= 2")
    return a.K_c * (math.log(a.M) / a.M) ** (1 / (a.c - 1))


def krss_bound(delta: int, n: float, C: float) -> float:
    """C n^(2 - 1/delta) (log n)^(1/delta), the bounded-degree self-Ramsey bound."""
    if delta < 2 or n < 2 or C <= 0:
        raise GraphError("need delta >= 2, n >= 2 and C > 0")
    return C * n ** (2 - 1 / delta) * math.log(n) ** (1 / delta)


def core_growth_chain(G: Graph, c: int, rGG_upper: int) -> list[tuple[str, Fraction]]:
    """Successive upper bounds on r_inf of an isolate-free G with max degree < c.

    Each entry is no smaller than the previous one:
    r(G,G)/(nu m) <= c r(G,G)/m^2 <= 4c r(G,G)/M^2 with M = |V(G)|, using
    nu >= m/c (edge colouring with max_degree+1 <= c colours) and m >= M/2.
    """
    _nonempty(G)
    s = stats(G)
    if s.isolate_count:
        raise GraphError("chain applies to isolate-free graphs")
    if s.max_degree >= c:
        raise GraphError(f"max degree {s.max_degree} is not below c={c}")
    nu, _ = matching_number(G)
    return [
        ("self-ramsey", Fraction(rGG_upper, nu * s.m)),
        ("edge-colouring", Fraction(c * rGG_upper, s.m ** 2)),
        ("core-order", Fraction(4 * c * rGG_upper, s.n ** 2)),
    ]
