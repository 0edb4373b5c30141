"""Maximum average cycle weight of a complete digraph.

Two independent routes: Karp's dynamic program over walk lengths (O(n^3)) and
exhaustive enumeration of simple cycles. Both report the same canonical
witness: among the cycles attaining the maximum, the shortest one, and among
those the lexicographically smallest node sequence starting at its minimum
node.

The heavy lifting runs on integer matrices: weights are scaled by a common
denominator first, which keeps every comparison exact without paying for
Fraction arithmetic in the inner loops.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import permutations
from typing import Iterator

from .core import (
    CapExceededError,
    Cycle,
    NoCycleError,
    WeightGraph,
    common_denominator,
    scaled_ints,
)

BRUTEFORCE_CAP = 8
TABLE_CAP = 5


def _require_cycles(n: int) -> None:
    if n < 2:
        raise NoCycleError(f"no cycles exist in a graph with {n} node(s)")


def _check_cap(n: int, cap: int | None, what: str) -> None:
    if cap is not None and n > cap:
        raise CapExceededError(f"{what}: n = {n} exceeds cap {cap}")


def _karp_tables(w: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """``best[k][v]``: heaviest k-arc walk ending at v (any start); ``parent[k][v]``: its previous node."""
    n = len(w)
    others = [[u for u in range(n) if u != v] for v in range(n)]
    best = [[0] * n]
    parent = [[-1] * n]
    for _ in range(n):
        prev = best[-1]
        row, prow = [], []
        for v in range(n):
            bu, bval = -1, None
            for u in others[v]:
                val = prev[u] + w[u][v]
                if bval is None or val > bval:
                    bu, bval = u, val
            row.append(bval)
            prow.append(bu)
        best.append(row)
        parent.append(prow)
    return best, parent


def _karp_optimum(best: list[list[int]]) -> tuple[int, int, int]:
    """Return ``(num, den, v)`` with ``num/den`` the maximum mean and ``v`` an argmax node."""
    n = len(best) - 1
    top = best[n]
    res_num, res_den, res_v = 0, 0, -1
    for v in range(n):
        # min over k of (top[v] - best[k][v]) / (n - k)
        m_num, m_den = top[v] - best[0][v], n
        for k in range(1, n):
            num, den = top[v] - best[k][v], n - k
            if num * m_den < m_num * den:
                m_num, m_den = num, den
        if res_v < 0 or m_num * res_den > res_num * m_den:
            res_num, res_den, res_v = m_num, m_den, v
    return res_num, res_den, res_v


def max_mean_int(w: list[list[int]]) -> tuple[int, int]:
    """Maximum cycle mean of an integer-weighted complete digraph as ``(num, den)``, den > 0.

    Value-only variant of :func:`macw_karp` for solver inner loops.
    """
    n = len(w)
    prev = [0] * n
    cols = [
        ([u for u in range(n) if u != v], [w[u][v] for u in range(n) if u != v])
        for v in range(n)
    ]
    levels = [prev]
    for _ in range(n):
        prev = [max([prev[u] + x for u, x in zip(us, ws)]) for us, ws in cols]
        levels.append(prev)
    num, den, _ = _karp_optimum(levels)
    return num, den


def _walk_loop(parent: list[list[int]], v: int) -> list[int]:
    n = len(parent) - 1
    walk = [v]
    for k in range(n, 0, -1):
        walk.append(parent[k][walk[-1]])
    walk.reverse()
    seen: dict[int, int] = {}
    for idx, x in enumerate(walk):
        if x in seen:
            return walk[seen[x]:idx]
        seen[x] = idx
    raise AssertionError("an n-arc walk on n nodes must repeat a node")


def _loop_total(w: list[list[int]], nodes: list[int] | tuple[int, ...]) -> int:
    k = len(nodes)
    return sum(w[nodes[t]][nodes[(t + 1) % k]] for t in range(k))


def canonical_witness(w: list[list[int]], num: int, den: int) -> tuple[int, ...]:
    """Shortest, then lexicographically smallest, cycle with mean exactly ``num/den``.

    ``num/den`` must be the maximum cycle mean. After subtracting it every cycle
    has weight <= 0, longest-path potentials exist, and the optimal cycles are
    exactly the cycles made of tight arcs (zero reduced weight). The search is
    then a BFS on the tight subgraph.
    """
    n = len(w)
    red = [[den * w[u][v] - num for v in range(n)] for u in range(n)]
    pot = [0] * n
    for _ in range(n):
        changed = False
        for u in range(n):
            pu = pot[u]
            ru = red[u]
            for v in range(n):
                if u != v and pu + ru[v] > pot[v]:
                    pot[v] = pu + ru[v]
                    changed = True
        if not changed:
            break
    tight = [
        [u != v and pot[u] + red[u][v] == pot[v] for v in range(n)] for u in range(n)
    ]

    best_len, best_start, best_dist = None, -1, None
    for s in range(n):
        # distances to s through nodes > s only
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in range(s + 1, n):
                if dist[y] < 0 and tight[y][x]:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        lengths = [dist[v] + 1 for v in range(s + 1, n) if tight[s][v] and dist[v] >= 0]
        if lengths and (best_len is None or min(lengths) < best_len):
            best_len, best_start, best_dist = min(lengths), s, dist
    if best_len is None:
        raise AssertionError("no tight cycle: value is not the maximum cycle mean")

    s, dist = best_start, best_dist
    seq = [s]
    cur, remaining = s, best_len
    while remaining > 1:
        cur = next(v for v in range(s + 1, n) if tight[cur][v] and dist[v] == remaining - 1)
        seq.append(cur)
        remaining -= 1
    return tuple(seq)


def macw_karp(g: WeightGraph) -> tuple[Fraction, Cycle]:
    """Maximum average cycle weight and a witness cycle, via Karp's recurrence.

    The witness first comes from the loop on the maximizing n-arc walk; it is
    then replaced by the canonical (shortest, lexicographically smallest)
    optimal cycle so the result matches :func:`macw_bruteforce` exactly.
    """
    n = g.n
    _require_cycles(n)
    scale = common_denominator(g.weights)
    w = scaled_ints(g.weights, scale)
    best, parent = _karp_tables(w)
    num, den, v = _karp_optimum(best)

    loop = _walk_loop(parent, v)
    assert _loop_total(w, loop) * den == num * len(loop), "walk loop is not optimal"

    nodes = canonical_witness(w, num, den)
    mu = Fraction(num, den * scale)
    witness = Cycle.in_graph(g, nodes)
    assert witness.average_weight == mu
    return mu, witness


def simple_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """All simple cycles of the complete digraph on ``n`` nodes, by (length, node sequence).

    Each cycle is listed once, starting at its minimum node.
    """
    for k in range(2, n + 1):
        for s in range(n):
            for rest in permutations(range(s + 1, n), k - 1):
                yield (s, *rest)


def macw_bruteforce(g: WeightGraph, cap: int | None = BRUTEFORCE_CAP) -> tuple[Fraction, Cycle]:
    n = g.n
    _require_cycles(n)
    _check_cap(n, cap, "macw_bruteforce")
    scale = common_denominator(g.weights)
    w = scaled_ints(g.weights, scale)
    best_nodes, best_total = None, 0
    for nodes in simple_cycles(n):
        total = _loop_total(w, nodes)
        if best_nodes is None or total * len(best_nodes) > best_total * len(nodes):
            best_nodes, best_total = nodes, total
    witness = Cycle.in_graph(g, best_nodes)
    return witness.average_weight, witness


def all_cycle_averages(g: WeightGraph, cap: int | None = TABLE_CAP) -> list[tuple[Cycle, Fraction]]:
    n = g.n
    _require_cycles(n)
    _check_cap(n, cap, "all_cycle_averages")
    out = []
    for nodes in simple_cycles(n):
        c = Cycle.in_graph(g, nodes)
        out.append((c, c.average_weight))
    return out
