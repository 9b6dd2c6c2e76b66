"""Size bounds for t-deletion permutation codes and the confusability graph.

All logarithms are base 2. The graph helpers enumerate S_n outright and are
meant for n up to about 7.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ulamcodes.perm import Permutation, all_permutations, apply_translocation, rank, translocations

MAX_GRAPH_N = 7


class DomainError(ValueError):
    pass


def gv_lower(n: int, t: int) -> int:
    """ceil(n! / (C(n,t) * t! * C(n,t))): the greedy (Gilbert-Varshamov) floor."""
    _check_nt(n, t)
    c = math.comb(n, t)
    return -(-math.factorial(n) // (c * math.factorial(t) * c))


def sphere_upper(n: int, t: int) -> int:
    """floor(n! / (t! * C(n,t))): sphere packing of deletion balls."""
    _check_nt(n, t)
    return math.factorial(n) // (math.factorial(t) * math.comb(n, t))


def confusable_ball_bound(n: int, t: int) -> int:
    """Upper bound C(n,t) * t! * C(n,t) on the number of confusable permutations."""
    c = math.comb(n, t)
    return c * math.factorial(t) * c


def _check_nt(n: int, t: int) -> None:
    if not 0 <= t < n:
        raise ValueError(f"need 0 <= t < n, got n={n}, t={t}")


def gabrys_size(n: int, t: int) -> Fraction:
    """((2n/t)!)^(t/2) / ((n+1)^(3t/2 - 4) * (2n/t)^(t/2)), exactly.

    Defined for even t dividing 2n. It is an asymptotic statement and can
    exceed n! for small n.
    """
    if t <= 0 or t % 2 or (2 * n) % t:
        raise DomainError(f"need even t dividing 2n, got n={n}, t={t}")
    m = 2 * n // t
    half = t // 2
    return Fraction(math.factorial(m) ** half, m**half) / Fraction(n + 1) ** (3 * half - 4)


def gabrys_log2(n: int, t: int) -> float | None:
    """log2 of the same expression for any t dividing 2n (odd t allowed); None otherwise."""
    if t <= 0 or (2 * n) % t:
        return None
    m = 2 * n // t
    return (t / 2) * math.log2(math.factorial(m)) - (1.5 * t - 4) * math.log2(n + 1) - (t / 2) * math.log2(m)


def bollobas_bound(V: int, max_degree: int, triangles: int) -> float:
    """V/(10*Delta) * (log Delta - 1/2 log(T/V)), the independence lower bound for sparse-triangle graphs.

    A triangle-free graph (T = 0) is evaluated as if T = 1.
    """
    if max_degree < 1 or V < 1 or triangles < 0:
        raise ValueError("need Delta >= 1, V >= 1, T >= 0")
    T = max(triangles, 1)
    return V / (10 * max_degree) * (math.log2(max_degree) - 0.5 * math.log2(T / V))


@dataclass
class ConfusabilityGraph:
    """Permutations of [n] joined when their Ulam distance is at most t.

    Vertex k is the permutation of lexicographic rank k; ``adjacency[k]`` is
    the sorted tuple of neighbor ranks.
    """

    n: int
    t: int
    vertices: list[Permutation]
    adjacency: list[tuple[int, ...]]
    _triangles: int | None = field(default=None, repr=False)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.adjacency[u]
        i = bisect.bisect_left(adj, v)
        return i < len(adj) and adj[i] == v

    @property
    def triangles(self) -> int:
        if self._triangles is None:
            self._triangles = triangle_count(self)
        return self._triangles


def build_graph(n: int, t: int, cap: int = MAX_GRAPH_N) -> ConfusabilityGraph:
    """Build G_{n,t}.

    Neighbors are generated as everything within t translocations, which is
    the same set as everything sharing a common subsequence of length n - t.
    """
    if n > cap:
        raise ValueError(f"refusing to build a graph on {n}! vertices (cap n <= {cap})")
    vertices = list(all_permutations(n))
    moves = list(translocations(n))
    adjacency = []
    for k, v in enumerate(vertices):
        frontier = {v}
        seen = {v}
        for _ in range(t):
            nxt = set()
            for u in frontier:
                for phi in moves:
                    w = apply_translocation(u, phi)
                    if w not in seen:
                        seen.add(w)
                        nxt.add(w)
            frontier = nxt
        seen.discard(v)
        adjacency.append(tuple(sorted(rank(w) for w in seen)))
    return ConfusabilityGraph(n=n, t=t, vertices=vertices, adjacency=adjacency)


def triangle_count(g: ConfusabilityGraph) -> int:
    """Number of unordered vertex triples that are pairwise adjacent."""
    nbrs = [set(a) for a in g.adjacency]
    total = 0
    for u, adj in enumerate(g.adjacency):
        for v in adj:
            if v <= u:
                continue
            total += sum(1 for w in nbrs[u] & nbrs[v] if w > v)
    return total


def greedy_independent_set(g: ConfusabilityGraph, order: Sequence[int] | None = None) -> list[Permutation]:
    """Scan vertices in ``order`` (default: lexicographic) keeping each with no kept neighbor."""
    order = range(g.V) if order is None else order
    blocked = [False] * g.V
    chosen = []
    for k in order:
        if blocked[k]:
            continue
        chosen.append(g.vertices[k])
        blocked[k] = True
        for w in g.adjacency[k]:
            blocked[w] = True
    return chosen


def bounds_report(n: int, t: int, graph: bool = False) -> dict:
    gab_log = gabrys_log2(n, t)
    try:
        gab = gabrys_size(n, t)
        gab_exact = str(gab)
    except DomainError:
        gab_exact = None
    report = {
        "schema_version": 1,
        "n": n,
        "t": t,
        "gv_lower": gv_lower(n, t),
        "sphere_upper": sphere_upper(n, t),
        "confusable_ball_bound": confusable_ball_bound(n, t),
        "redundancy_floor_bits": math.log2(math.factorial(n) / sphere_upper(n, t)),
        "gabrys": gab_exact,
        "gabrys_log2": gab_log,
        "gabrys_exceeds_n_factorial": None if gab_log is None else gab_log > math.log2(math.factorial(n)),
    }
    if graph:
        g = build_graph(n, t)
        T = g.triangles
        alpha = len(greedy_independent_set(g))
        measured = {
            "V": g.V,
            "edges": g.edge_count,
            "max_degree": g.max_degree,
            "triangles": T,
            "greedy_alpha": alpha,
            "bollobas_value": bollobas_bound(g.V, g.max_degree, T) if g.max_degree >= 1 else None,
            "bollobas_triangle_free_substitution": T == 0,
        }
        report["measured"] = measured
    return report
