"""Exact and greedy optimizers for both cover variants, an independent
exhaustive oracle, distance-k domination, and the general bound battery.

All exact paths return the lexicographically least optimal vertex set, so
repeated runs are bit-identical apart from timing statistics.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cover import (
    PairChoices,
    StrongWitness,
    feasible_from_pairs,
    path_edge_mask,
    source_pairs,
    strong_feasible,
    weak_cover_set,
)
from .graph import (
    DEFAULT_GEODESIC_CAP,
    UNREACHABLE,
    DisconnectedGraphError,
    Graph,
    bfs_distances,
    diameter,
    enumerate_geodesics,
    maximal_cliques,
    require_connected,
    simplicial_vertices,
)

WEAK = "weak"
STRONG = "strong"
VARIANTS = (WEAK, STRONG)


class SizeLimitError(RuntimeError):
    """Instance exceeds a configured exact-solver limit."""


@dataclass(frozen=True)
class SolverLimits:
    weak: int = 40
    strong: int = 34
    oracle: int = 12


DEFAULT_LIMITS = SolverLimits()


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    elapsed_s: float


@dataclass(frozen=True)
class SolveResult:
    variant: str
    k: int
    optimum: int
    set: tuple[int, ...]
    witness: StrongWitness | None
    status: str  # "exact" or "heuristic"
    stats: SolveStats


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# Branch-and-bound set cover over bitmasks. Used for the weak variant, the
# distance-k domination number, and minimum vertex cover.
# ---------------------------------------------------------------------------

def _min_cover(
    masks: Sequence[int],
    allowed: Iterable[int],
    universe: int,
    pre: int = 0,
    cap: int | None = None,
    nodes: list[int] | None = None,
) -> tuple[int, tuple[int, ...]] | None:
    """Minimum number of masks from ``allowed`` whose union with ``pre``
    covers ``universe``. Returns None when impossible, or when ``cap`` is
    given and no cover strictly smaller than ``cap`` exists."""
    rem0 = universe & ~pre
    if rem0 == 0:
        return 0, ()
    active = [i for i in allowed if masks[i] & rem0]
    total = pre
    for i in active:
        total |= masks[i]
    if total & universe != universe:
        return None
    coverers = {e: [i for i in active if masks[i] >> e & 1]
                for e in _bits(rem0)}

    # greedy upper bound
    sel: list[int] = []
    cov = pre
    while cov & universe != universe:
        best_i, best_gain = -1, 0
        for i in active:
            gain = (masks[i] & ~cov & universe).bit_count()
            if gain > best_gain:
                best_i, best_gain = i, gain
        sel.append(best_i)
        cov |= masks[best_i]
    best_size = len(sel)
    best_sel: tuple[int, ...] | None = tuple(sorted(sel))
    if cap is not None and cap <= best_size:
        best_size = cap
        best_sel = None

    def dfs(cover: int, chosen: list[int]) -> None:
        nonlocal best_size, best_sel
        if nodes is not None:
            nodes[0] += 1
        rem = universe & ~cover
        if not rem:
            best_size = len(chosen)
            best_sel = tuple(sorted(chosen))
            return
        max_gain = 0
        for i in active:
            gain = (masks[i] & rem).bit_count()
            if gain > max_gain:
                max_gain = gain
        if max_gain == 0:
            return
        lower = -(-rem.bit_count() // max_gain)
        if len(chosen) + lower >= best_size:
            return
        e = min(_bits(rem), key=lambda b: len(coverers[b]))
        options = sorted(coverers[e],
                         key=lambda i: -(masks[i] & rem).bit_count())
        for i in options:
            if len(chosen) + 1 >= best_size:
                break
            chosen.append(i)
            dfs(cover | masks[i], chosen)
            chosen.pop()

    dfs(pre, [])
    if best_sel is None:
        return None
    return best_size, best_sel


def _cover_within(
    masks: Sequence[int],
    allowed: Iterable[int],
    universe: int,
    pre: int,
    budget: int,
    nodes: list[int] | None = None,
) -> bool:
    return _min_cover(masks, allowed, universe, pre, cap=budget + 1,
                      nodes=nodes) is not None


def _lex_least_cover(
    masks: Sequence[int],
    universe: int,
    size: int,
    nodes: list[int] | None = None,
) -> tuple[int, ...]:
    """Lexicographically least index set of ``size`` masks covering
    ``universe``; assumes such a cover exists."""
    chosen: list[int] = []
    cover = 0
    n = len(masks)
    for v in range(n):
        if len(chosen) == size:
            break
        budget = size - len(chosen) - 1
        if _cover_within(masks, range(v + 1, n), universe,
                         cover | masks[v], budget, nodes):
            chosen.append(v)
            cover |= masks[v]
    if cover & universe != universe or len(chosen) != size:
        raise AssertionError("lexicographic completion failed")
    return tuple(chosen)


# ---------------------------------------------------------------------------
# Exact solvers
# ---------------------------------------------------------------------------

def _solve_weak_exact(G: Graph, k: int, limits: SolverLimits) -> SolveResult:
    if G.n > limits.weak:
        raise SizeLimitError(
            f"n={G.n} exceeds the weak exact-solver limit {limits.weak}")
    require_connected(G)
    start = time.perf_counter()
    nodes = [0]
    universe = G.full_edge_mask()
    if universe == 0:
        return SolveResult(WEAK, k, 0, (), None, "exact",
                           SolveStats(0, time.perf_counter() - start))
    masks = [weak_cover_set(G, v, k) for v in range(G.n)]
    found = _min_cover(masks, range(G.n), universe, nodes=nodes)
    if found is None:
        raise AssertionError("a connected graph is always weakly coverable")
    size = found[0]
    chosen = _lex_least_cover(masks, universe, size, nodes)
    return SolveResult(WEAK, k, size, chosen, None, "exact",
                       SolveStats(nodes[0], time.perf_counter() - start))


def _clique_lower_bound(G: Graph) -> int:
    """Sum of (s - 1) over maximal cliques containing s >= 2 simplicial
    vertices. Edges between two simplicial vertices lie on no geodesic other
    than themselves, so covering them needs a vertex cover of the clique they
    span; simplicial vertices belong to exactly one maximal clique, so the
    cliques never share them."""
    simp = simplicial_vertices(G)
    if not simp:
        return 0
    bound = 0
    for clique in maximal_cliques(G):
        s = sum(1 for v in clique if v in simp)
        if s >= 2:
            bound += s - 1
    return bound


def _degree_lower_bound(G: Graph, k: int) -> int | None:
    """ceil(m (D-2) / (D ((D-1)^k - 1))) for maximum degree D >= 3; a single
    source covers at most D ((D-1)^k - 1) / (D-2) edges weakly."""
    if G.n == 0:
        return None
    deg_max = max((G.degree(v) for v in range(G.n)), default=0)
    if deg_max < 3:
        return None
    num = G.m * (deg_max - 2)
    den = deg_max * ((deg_max - 1) ** k - 1)
    return -(-num // den)


def _solve_strong_exact(G: Graph, k: int, limits: SolverLimits) -> SolveResult:
    if G.n > limits.strong:
        raise SizeLimitError(
            f"n={G.n} exceeds the strong exact-solver limit {limits.strong}")
    require_connected(G)
    start = time.perf_counter()
    nodes = [0]
    universe = G.full_edge_mask()
    if universe == 0:
        return SolveResult(STRONG, k, 0, (), None, "exact",
                           SolveStats(0, time.perf_counter() - start))
    n = G.n
    weak_masks = [weak_cover_set(G, v, k) for v in range(n)]

    weak_opt = _min_cover(weak_masks, range(n), universe, nodes=nodes)[0]
    lb = max(weak_opt,
             domination_number(G, k, limits),
             _clique_lower_bound(G),
             _degree_lower_bound(G, k) or 0)

    pairs_by_source = [source_pairs(G, v, k) for v in range(n)]
    # which vertices can weakly cover each edge (necessary for strong)
    vcover = [0] * G.m
    for v in range(n):
        for e in _bits(weak_masks[v]):
            vcover[e] |= 1 << v
    suffix_or = [0] * (n + 1)
    suffix_vmask = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix_or[v] = suffix_or[v + 1] | weak_masks[v]
        suffix_vmask[v] = suffix_vmask[v + 1] | (1 << v)

    def needs_more_than(cov: int, pool_vmask: int, budget: int) -> bool:
        """Greedy count of uncovered edges with pairwise-disjoint candidate
        vertex sets; each needs a distinct new pick."""
        used = 0
        count = 0
        for e in _bits(universe & ~cov):
            avail = vcover[e] & pool_vmask
            if avail == 0:
                return True
            if avail & used == 0:
                count += 1
                if count > budget:
                    return True
                used |= avail
        return False

    found: tuple[tuple[int, ...], StrongWitness] | None = None

    def search(size: int, start_v: int, chosen: list[int], cov: int) -> None:
        nonlocal found
        if found is not None:
            return
        nodes[0] += 1
        need = size - len(chosen)
        if need == 0:
            if cov == universe:
                pair_list: list[PairChoices] = []
                for v in chosen:
                    pair_list.extend(pairs_by_source[v])
                witness = feasible_from_pairs(G, tuple(pair_list))
                if witness is not None:
                    found = (tuple(chosen), witness)
            return
        if cov | suffix_or[start_v] != universe:
            return
        if needs_more_than(cov, suffix_vmask[start_v], need):
            return
        for v in range(start_v, n - need + 1):
            chosen.append(v)
            search(size, v + 1, chosen, cov | weak_masks[v])
            chosen.pop()
            if found is not None:
                return

    for size in range(max(lb, 1), n + 1):
        search(size, 0, [], 0)
        if found is not None:
            chosen, witness = found
            return SolveResult(
                STRONG, k, size, chosen, witness, "exact",
                SolveStats(nodes[0], time.perf_counter() - start))
    raise AssertionError("the full vertex set is always a strong cover")


def solve_exact(
    G: Graph, k: int, variant: str, limits: SolverLimits = DEFAULT_LIMITS
) -> SolveResult:
    """Provably optimal cover of the requested variant.

    Weak: branch-and-bound set cover over per-vertex coverage masks, then a
    lexicographic minimization pass. Strong: candidate sizes ascend from the
    largest applicable lower bound; size-s subsets are enumerated in
    lexicographic order, pruned by the necessary condition that every edge be
    weakly coverable by some chosen vertex, and checked with the exact
    fixed-geodesic search.
    """
    _check_variant(variant)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if variant == WEAK:
        return _solve_weak_exact(G, k, limits)
    return _solve_strong_exact(G, k, limits)


# ---------------------------------------------------------------------------
# Greedy heuristics
# ---------------------------------------------------------------------------

def _greedy_weak(G: Graph, k: int, start: float) -> SolveResult:
    universe = G.full_edge_mask()
    masks = [weak_cover_set(G, v, k) for v in range(G.n)]
    chosen: list[int] = []
    cover = 0
    steps = 0
    while cover != universe:
        best_v, best_gain = -1, 0
        for v in range(G.n):
            gain = (masks[v] & ~cover).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        steps += 1
        chosen.append(best_v)
        cover |= masks[best_v]
    return SolveResult(WEAK, k, len(chosen), tuple(sorted(chosen)), None,
                       "heuristic",
                       SolveStats(steps, time.perf_counter() - start))


def _greedy_pair_gain(pairs: tuple[PairChoices, ...], cover: int) -> int:
    """Coverage gained by greedily assigning one path per pair."""
    gained = 0
    for p in pairs:
        best_mask, best_gain = 0, 0
        for m in p.masks:
            gain = (m & ~(cover | gained)).bit_count()
            if gain > best_gain:
                best_mask, best_gain = m, gain
        gained |= best_mask
    return gained


def _greedy_strong(G: Graph, k: int, start: float) -> SolveResult:
    universe = G.full_edge_mask()
    pairs_by_source = [source_pairs(G, v, k) for v in range(G.n)]
    chosen: list[int] = []
    in_set = [False] * G.n
    cover = 0
    steps = 0
    while cover != universe and len(chosen) < G.n:
        best_v, best_gain = -1, -1
        for v in range(G.n):
            if in_set[v]:
                continue
            gain = (_greedy_pair_gain(pairs_by_source[v], cover)
                    & ~cover).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        steps += 1
        chosen.append(best_v)
        in_set[best_v] = True
        cover |= _greedy_pair_gain(pairs_by_source[best_v], cover)
    witness = strong_feasible(G, chosen, k)
    while witness is None:
        # defensive fallback; the greedy union already covered every edge,
        # so this loop is not expected to run
        for v in range(G.n):
            if not in_set[v]:
                chosen.append(v)
                in_set[v] = True
                break
        witness = strong_feasible(G, chosen, k)
    return SolveResult(STRONG, k, len(chosen), tuple(sorted(chosen)), witness,
                       "heuristic",
                       SolveStats(steps, time.perf_counter() - start))


def solve_greedy(G: Graph, k: int, variant: str) -> SolveResult:
    """Valid cover by greedy max-new-coverage selection; never better than
    the exact optimum, often equal on the small instances here."""
    _check_variant(variant)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    require_connected(G)
    start = time.perf_counter()
    if G.m == 0:
        return SolveResult(variant, k, 0, (), None, "heuristic",
                           SolveStats(0, time.perf_counter() - start))
    if variant == WEAK:
        return _greedy_weak(G, k, start)
    return _greedy_strong(G, k, start)


# ---------------------------------------------------------------------------
# Naive oracle: exhaustive subset enumeration in ascending size, with strong
# feasibility decided by exhaustive per-pair geodesic choice enumeration.
# Deliberately a different algorithmic skeleton from solve_exact.
# ---------------------------------------------------------------------------

def _oracle_weak_mask(G: Graph, u: int, k: int) -> int:
    """Weak coverage from ``u`` by brute-force geodesic enumeration."""
    dist = bfs_distances(G, u).dist
    mask = 0
    for v in range(G.n):
        if v != u and 1 <= dist[v] <= k:
            for path in enumerate_geodesics(G, u, v):
                mask |= path_edge_mask(G, path)
    return mask


def _oracle_strong_feasible(
    G: Graph, pair_list: list[PairChoices]
) -> StrongWitness | None:
    """Try every combination of one geodesic per pair, in pair order, with
    memoization on (pair index, covered mask) only."""
    full = G.full_edge_mask()
    chosen: list[int] = []
    seen: set[tuple[int, int]] = set()

    def walk(idx: int, mask: int) -> bool:
        if mask == full:
            return True
        if idx == len(pair_list):
            return False
        if (idx, mask) in seen:
            return False
        for pi, pmask in enumerate(pair_list[idx].masks):
            chosen.append(pi)
            if walk(idx + 1, mask | pmask):
                return True
            chosen.pop()
        seen.add((idx, mask))
        return False

    if not walk(0, 0):
        return None
    assignments = []
    covered = 0
    for idx, pi in enumerate(chosen):
        p = pair_list[idx]
        assignments.append(((p.source, p.target), p.paths[pi]))
        covered |= p.masks[pi]
    assignments.sort()
    return StrongWitness(tuple(assignments), covered)


def naive_oracle(
    G: Graph, k: int, variant: str, limits: SolverLimits = DEFAULT_LIMITS
) -> SolveResult:
    """Reference optimum by exhaustive enumeration; hard-limited in size."""
    _check_variant(variant)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if G.n > limits.oracle:
        raise SizeLimitError(
            f"n={G.n} exceeds the oracle limit {limits.oracle}")
    require_connected(G)
    start = time.perf_counter()
    universe = G.full_edge_mask()
    tried = 0
    if variant == WEAK:
        masks = [_oracle_weak_mask(G, v, k) for v in range(G.n)]
        for size in range(G.n + 1):
            for combo in combinations(range(G.n), size):
                tried += 1
                mask = 0
                for v in combo:
                    mask |= masks[v]
                if mask == universe:
                    return SolveResult(
                        WEAK, k, size, combo, None, "exact",
                        SolveStats(tried, time.perf_counter() - start))
    else:
        pairs_by_source = [source_pairs(G, v, k) for v in range(G.n)]
        for size in range(G.n + 1):
            for combo in combinations(range(G.n), size):
                tried += 1
                pair_list: list[PairChoices] = []
                for v in combo:
                    pair_list.extend(pairs_by_source[v])
                witness = _oracle_strong_feasible(G, pair_list)
                if witness is not None:
                    return SolveResult(
                        STRONG, k, size, combo, witness, "exact",
                        SolveStats(tried, time.perf_counter() - start))
    raise AssertionError("the full vertex set always covers")


# ---------------------------------------------------------------------------
# Distance-k domination and the bound battery
# ---------------------------------------------------------------------------

def domination_number(
    G: Graph, k: int, limits: SolverLimits = DEFAULT_LIMITS
) -> int:
    """Minimum size of a set D with every vertex within distance k of D."""
    if G.n > limits.weak:
        raise SizeLimitError(
            f"n={G.n} exceeds the domination solver limit {limits.weak}")
    require_connected(G)
    if G.n == 0:
        return 0
    balls = []
    for v in range(G.n):
        dist = bfs_distances(G, v).dist
        mask = 0
        for x in range(G.n):
            if dist[x] != UNREACHABLE and dist[x] <= k:
                mask |= 1 << x
        balls.append(mask)
    universe = (1 << G.n) - 1
    return _min_cover(balls, range(G.n), universe)[0]


@dataclass(frozen=True)
class Bounds:
    """General bounds at distance k; None marks an inapplicable bound.

    Lower bounds pair as: domination_lb and clique_lb bound the strong
    optimum, degree_lb bounds the weak optimum (hence the strong one too).
    Upper bounds trivial_ub and order_diameter_ub hold for the strong
    optimum. diameter_ub and half_ub are monitored claims: they are reported
    and compared but violations are findings, not errors.
    """

    k: int
    domination_lb: int
    degree_lb: int | None
    clique_lb: int
    trivial_ub: int
    order_diameter_ub: int | None
    diameter_ub: int | None
    half_ub: int | None

    def as_dict(self) -> dict:
        return {
            "domination_lb": self.domination_lb,
            "degree_lb": self.degree_lb,
            "clique_lb": self.clique_lb,
            "trivial_ub": self.trivial_ub,
            "order_diameter_ub": self.order_diameter_ub,
            "diameter_ub": self.diameter_ub,
            "half_ub": self.half_ub,
        }


def compute_bounds(
    G: Graph, k: int, limits: SolverLimits = DEFAULT_LIMITS
) -> Bounds:
    """Evaluate every general bound with its applicability predicate."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    require_connected(G)
    if G.n < 1:
        raise DisconnectedGraphError("bounds require at least one vertex")
    d = diameter(G)
    min_deg = min((G.degree(v) for v in range(G.n)), default=0)
    dom = domination_number(G, k, limits)
    order_diameter_ub = G.n - k + 1 if k <= d else None
    diameter_ub = None
    if d >= 2:
        diameter_ub = G.n - (d + 1) + -(-(d + 1) // (2 * k + 1))
    half_ub = G.n // 2 if (k == 2 and min_deg >= 1) else None
    return Bounds(
        k=k,
        domination_lb=dom,
        degree_lb=_degree_lower_bound(G, k),
        clique_lb=_clique_lower_bound(G),
        trivial_ub=G.n - 1,
        order_diameter_ub=order_diameter_ub,
        diameter_ub=diameter_ub,
        half_ub=half_ub,
    )
