"""Exact high-order traces of hypergraph adjacency tensors.

The d-th order trace of an order-m tensor reduces, for adjacency tensors of
m-uniform hypergraphs, to a weighted count of closed arc sequences: every
vertex i picks a multiset of incident edges (d_i picks in total across all
vertices, sum d_i = d), each pick contributes the m-1 arcs from i into the
rest of the edge, and the resulting arc multiset must support a closed walk
using every arc exactly once.  Walk counts come from the arborescence form of
the Eulerian-circuit count (matrix-tree determinant, exact integers); the
per-vertex pick multisets are enumerated directly in their balanced form,
which prunes the search to configurations with equal in- and out-degree at
every vertex.

Everything here is exact: Python integers and fractions.Fraction throughout.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import multiprocessing

from .hypergraph import UniformHypergraph

ArcMultiset = tuple[tuple[int, int, int], ...]  # ((tail, head, multiplicity), ...)


class FeasibilityError(RuntimeError):
    """Raised when a computation would exceed its enumeration budget."""


@dataclass(frozen=True)
class Budget:
    """Resource limits for exact computations."""

    max_degree: int = 128  # largest eigenvalue count for full-spectrum work
    max_selections: int = 10**9  # predicted edge-pick configurations per trace order


@dataclass(frozen=True)
class TraceSequence:
    """Traces of orders 0..D; values[d] is the exact d-th order trace."""

    m: int
    n: int
    values: tuple[Fraction, ...]


def trace_d(
    h: UniformHypergraph,
    d: int,
    budget: Budget | None = None,
    threads: int = 1,
) -> Fraction:
    """Exact d-th order trace of the adjacency tensor.

    Order 0 is the eigenvalue count n(m-1)^(n-1) by convention.  Orders
    1..m-1 vanish; order m equals m^(m-1) (m-1)^(n-m) |E|.
    """
    return sum(vertex_trace_terms(h, d, budget, threads), Fraction(0))


def trace_sequence(
    h: UniformHypergraph,
    max_d: int,
    budget: Budget | None = None,
    threads: int = 1,
) -> TraceSequence:
    """Traces of all orders 0..max_d (the spectral power sums, by order)."""
    if max_d < 0:
        raise ValueError("max_d must be >= 0")
    values = tuple(trace_d(h, d, budget, threads) for d in range(max_d + 1))
    return TraceSequence(h.m, h.n, values)


def vertex_trace_term(
    h: UniformHypergraph,
    d: int,
    j: int,
    budget: Budget | None = None,
    threads: int = 1,
) -> Fraction:
    """Per-vertex share of the d-th trace for vertex j (1-based).

    The shares sum to trace_d over j = 1..n; the order-0 share is
    (m-1)^(n-1) for every vertex.
    """
    if not 1 <= j <= h.n:
        raise ValueError(f"vertex {j} outside 1..{h.n}")
    return vertex_trace_terms(h, d, budget, threads)[j - 1]


def vertex_trace_terms(
    h: UniformHypergraph,
    d: int,
    budget: Budget | None = None,
    threads: int = 1,
    cross_check: bool = False,
) -> tuple[Fraction, ...]:
    """All n per-vertex trace shares of order d, exactly.

    With cross_check=True, every walk count obtained from the determinant
    route is re-derived by direct memoised walk enumeration whenever the arc
    multiset has at most 16 arcs; a mismatch raises RuntimeError.
    """
    if d < 0:
        raise ValueError("trace order d must be >= 0")
    budget = budget or Budget()
    if d == 0:
        share = Fraction((h.m - 1) ** (h.n - 1))
        return tuple([share] * h.n)
    if not h.edges:
        return tuple([Fraction(0)] * h.n)

    ctx = _EnumerationContext(h)
    candidates = _sigma_candidates(ctx, d, budget)
    if not candidates:
        return tuple([Fraction(0)] * h.n)

    threads = max(1, threads)
    if threads == 1 or len(candidates) < 2 * threads:
        acc = _accumulate(ctx, candidates, cross_check)
    else:
        chunks = [candidates[i::threads] for i in range(threads)]
        mp = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=mp) as pool:
            partials = list(
                pool.map(
                    _accumulate_worker,
                    [(h.m, h.n, h.edges, chunk, cross_check) for chunk in chunks],
                )
            )
        acc = [sum(col, Fraction(0)) for col in zip(*partials)]
    scale = (h.m - 1) ** h.n
    return tuple(a * scale for a in acc)


class _EnumerationContext:
    """Edge/vertex incidence tables shared by the enumeration passes."""

    def __init__(self, h: UniformHypergraph):
        self.m = h.m
        self.n = h.n
        self.edges = [tuple(v - 1 for v in e) for e in h.edges]
        self.incidence: list[list[int]] = [[] for _ in range(h.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                self.incidence[v].append(idx)
        # last edge index touching each vertex: the point where its pick
        # total is final and divisibility can be checked
        self.last_edge = [inc[-1] if inc else -1 for inc in self.incidence]


def _sigma_candidates(ctx: _EnumerationContext, d: int, budget: Budget) -> list[tuple[int, ...]]:
    """Per-edge pick totals sigma with sum d whose vertex totals are all
    divisible by m (necessary for in/out balance), connected active support,
    and cumulative predicted work within budget."""
    m, edges = ctx.m, ctx.edges
    n_edges = len(edges)
    infeasible = FeasibilityError(
        f"trace enumeration infeasible (n={ctx.n}, m={ctx.m}, d={d}): "
        f"predicted selection count exceeds {budget.max_selections}"
    )
    if math.comb(d + n_edges - 1, n_edges - 1) > budget.max_selections:
        raise infeasible
    finalize_at: list[list[int]] = [[] for _ in range(n_edges)]
    for v, last in enumerate(ctx.last_edge):
        if last >= 0:
            finalize_at[last].append(v)
    vertex_total = [0] * ctx.n
    sigma = [0] * n_edges
    out: list[tuple[int, ...]] = []
    predicted = 0

    def rec(i: int, remaining: int) -> None:
        nonlocal predicted
        choices = [remaining] if i == n_edges - 1 else range(remaining + 1)
        for s in choices:
            sigma[i] = s
            for v in edges[i]:
                vertex_total[v] += s
            if all(vertex_total[v] % m == 0 for v in finalize_at[i]):
                if i == n_edges - 1:
                    if _active_connected(edges, sigma):
                        cand = tuple(sigma)
                        predicted += _predicted_tables(cand, m)
                        if predicted > budget.max_selections:
                            raise infeasible
                        out.append(cand)
                else:
                    rec(i + 1, remaining - s)
            for v in edges[i]:
                vertex_total[v] -= s
        sigma[i] = 0

    rec(0, d)
    return out


def _predicted_tables(sigma: tuple[int, ...], m: int) -> int:
    pred = 1
    for s in sigma:
        if s:
            pred *= math.comb(s + m - 1, m - 1)
    return pred


def _active_connected(edges: list[tuple[int, ...]], sigma: list[int]) -> bool:
    active = [e for e, s in zip(edges, sigma) if s > 0]
    if not active:
        return False
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in active:
        for v in e:
            parent.setdefault(v, v)
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    roots = {find(v) for v in parent}
    return len(roots) == 1


def _accumulate_worker(args) -> list[Fraction]:
    m, n, edges, chunk, cross_check = args
    from .hypergraph import UniformHypergraph

    ctx = _EnumerationContext(UniformHypergraph(m, n, edges))
    return _accumulate(ctx, chunk, cross_check)


def _accumulate(
    ctx: _EnumerationContext,
    candidates: list[tuple[int, ...]],
    cross_check: bool,
) -> list[Fraction]:
    """Sum the per-vertex contributions of every pick configuration.

    For a configuration with per-edge totals sigma, vertex v makes
    s_v = (sum of sigma over edges at v)/m picks; each way x of splitting
    the totals (x[v,e] picks of edge e by vertex v, row sums s_v, column
    sums sigma_e) is one balanced arc multiset, weighted by

        s_v! / (prod_e x[v,e]!)           per active vertex (pick orderings)
        1 / ((m-1) s_v)!                  per active vertex (normalisation)
        Eulerian cycle classes of the     (arborescence determinant times
        arc multiset                       prod_v (outdeg(v)-1)!)

    The caller multiplies the final vector by (m-1)^n: the global
    (m-1)^(n-1) together with one m-1 per start-vertex arc share.
    """
    m, n, edges = ctx.m, ctx.n, ctx.edges
    acc = [Fraction(0)] * n
    for sigma in candidates:
        s = [0] * n
        for e_idx, se in enumerate(sigma):
            if se:
                for v in edges[e_idx]:
                    s[v] += se
        for v in range(n):
            s[v] //= m
        table_sum = _sum_over_tables(ctx, sigma, s, cross_check)
        if table_sum == 0:
            continue
        factor = Fraction(1)
        for v in range(n):
            if s[v]:
                factor *= Fraction(math.factorial(s[v]), math.factorial((m - 1) * s[v]))
        total = factor * table_sum
        for v in range(n):
            if s[v]:
                acc[v] += total * s[v]
    return acc


def _sum_over_tables(
    ctx: _EnumerationContext,
    sigma: tuple[int, ...],
    s: list[int],
    cross_check: bool,
) -> Fraction:
    """Sum of cycle_count / prod(x!) over all splits x consistent with sigma, s."""
    m, edges = ctx.m, ctx.edges
    active = [i for i, se in enumerate(sigma) if se > 0]
    # how much each vertex can still pick from edges later in the order
    cap_after: list[dict[int, int]] = []
    running: dict[int, int] = {}
    for i in reversed(active):
        cap_after.insert(0, dict(running))
        for v in edges[i]:
            running[v] = running.get(v, 0) + sigma[i]
    remaining = list(s)
    picks: dict[tuple[int, int], int] = {}
    total = Fraction(0)

    def edge_rec(pos: int) -> None:
        nonlocal total
        if pos == len(active):
            total += _table_value(ctx, sigma, s, picks, cross_check)
            return
        e_idx = active[pos]
        verts = edges[e_idx]
        caps = cap_after[pos]

        def split_rec(vi: int, left: int) -> None:
            if vi == len(verts) - 1:
                v = verts[vi]
                if left <= remaining[v]:
                    remaining[v] -= left
                    if all(remaining[u] <= caps.get(u, 0) for u in verts):
                        if left:
                            picks[(v, e_idx)] = left
                        edge_rec(pos + 1)
                        picks.pop((v, e_idx), None)
                    remaining[v] += left
                return
            v = verts[vi]
            for x in range(min(left, remaining[v]) + 1):
                remaining[v] -= x
                if x:
                    picks[(v, e_idx)] = x
                split_rec(vi + 1, left - x)
                picks.pop((v, e_idx), None)
                remaining[v] += x

        split_rec(0, sigma[e_idx])

    edge_rec(0)
    return total


def _table_value(
    ctx: _EnumerationContext,
    sigma: tuple[int, ...],
    s: list[int],
    picks: dict[tuple[int, int], int],
    cross_check: bool,
) -> Fraction:
    arcs: dict[tuple[int, int], int] = {}
    fact_den = 1
    for (v, e_idx), x in picks.items():
        fact_den *= math.factorial(x)
        for u in ctx.edges[e_idx]:
            if u != v:
                arcs[(v, u)] = arcs.get((v, u), 0) + x
    sig: ArcMultiset = tuple(sorted((u, v, c) for (u, v), c in arcs.items()))
    cycles = _cycle_classes(sig)
    if cross_check and sum(c for _, _, c in sig) <= 16:
        _verify_by_walks(sig, cycles)
    return Fraction(cycles, fact_den)


@lru_cache(maxsize=1 << 18)
def _cycle_classes(sig: ArcMultiset) -> int:
    """Eulerian cycle classes of a balanced arc multiset, parallel arcs
    distinguishable: arborescence count times prod (outdeg(v)-1)!."""
    outdeg: dict[int, int] = {}
    for u, v, c in sig:
        outdeg[u] = outdeg.get(u, 0) + c
    support = sorted(outdeg)
    root = support[0]
    index = {v: i for i, v in enumerate(support[1:])}
    size = len(index)
    lap = [[0] * size for _ in range(size)]
    for v, i in index.items():
        lap[i][i] = outdeg[v]
    for u, v, c in sig:
        if u != root and v != root:
            lap[index[u]][index[v]] -= c
    trees = _det_bareiss(lap)
    count = trees
    for v in support:
        count *= math.factorial(outdeg[v] - 1)
    return count


def _det_bareiss(mat: list[list[int]]) -> int:
    """Exact integer determinant, fraction-free Gaussian elimination."""
    size = len(mat)
    if size == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def _verify_by_walks(sig: ArcMultiset, cycles: int) -> None:
    """Independent route: enumerate closed walks over the arc multiset and
    compare with the determinant-based count."""
    arcs = {(u, v): c for u, v, c in sig}
    outdeg: dict[int, int] = {}
    parallel = 1
    for (u, _v), c in arcs.items():
        outdeg[u] = outdeg.get(u, 0) + c
        parallel *= math.factorial(c)
    start = min(outdeg)
    walks = _walks_based_at(sig, start)
    if walks * parallel != outdeg[start] * cycles:
        raise RuntimeError(
            f"Eulerian count mismatch on {sig}: walks={walks}, cycle classes={cycles}"
        )


def _walks_based_at(sig: ArcMultiset, start: int) -> int:
    """Closed walks from `start` using the arc multiset exactly (arcs with the
    same endpoints indistinct), by memoised consumption."""
    arc_list = [(u, v) for u, v, _ in sig]
    counts = tuple(c for _, _, c in sig)
    heads_from: dict[int, list[int]] = {}
    for i, (u, _v) in enumerate(arc_list):
        heads_from.setdefault(u, []).append(i)

    @lru_cache(maxsize=None)
    def go(current: int, remaining: tuple[int, ...]) -> int:
        if not any(remaining):
            return 1 if current == start else 0
        total = 0
        for i in heads_from.get(current, []):
            if remaining[i] > 0:
                nxt = list(remaining)
                nxt[i] -= 1
                total += go(arc_list[i][1], tuple(nxt))
        return total

    result = go(start, counts)
    go.cache_clear()
    return result
