"""Maximum-value perfect matching between agents and objects.

The Hungarian algorithm runs on the valuation matrix scaled to integers, so
the dual potentials it leaves behind are exact. An assignment is optimal iff
it uses only tight edges (zero reduced cost), which is what the lexicographic
post-pass and :func:`all_max_value_matchings` rely on.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .core import (
    Allocation,
    CapExceededError,
    Instance,
    common_denominator,
    scaled_ints,
)

BRUTEFORCE_CAP = 9


def _hungarian_min(cost: list[list[int]]) -> tuple[list[int], list[int], list[int]]:
    """Min-cost assignment. Returns ``(row_to_col, u, v)`` with u[i] + v[j] <= cost[i][j]."""
    n = len(cost)
    inf = float("inf")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta, j1 = inf, 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta, j1 = minv[j], j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assignment = [0] * n
    for j in range(1, n + 1):
        assignment[p[j] - 1] = j - 1
    return assignment, u[1:], v[1:]


def _tight_edges(inst: Instance) -> list[list[bool]]:
    n = inst.n
    scale = common_denominator(inst.values)
    cost = [[-x for x in row] for row in scaled_ints(inst.values, scale)]
    _, u, v = _hungarian_min(cost)
    return [[cost[i][j] - u[i] - v[j] == 0 for j in range(n)] for i in range(n)]


def _completable(tight: list[list[bool]], agents: list[int], free: set[int]) -> bool:
    """Can ``agents`` be perfectly matched into ``free`` objects using tight edges (Kuhn)?"""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for o in free:
            if tight[i][o] and o not in seen:
                seen.add(o)
                if o not in owner or augment(owner[o], seen):
                    owner[o] = i
                    return True
        return False

    return all(augment(i, set()) for i in agents)


def max_value_matching(inst: Instance) -> Allocation:
    """Lexicographically smallest allocation of maximum total value."""
    n = inst.n
    tight = _tight_edges(inst)
    free = set(range(n))
    assignment = []
    for i in range(n):
        for o in sorted(free):
            if tight[i][o] and _completable(tight, list(range(i + 1, n)), free - {o}):
                assignment.append(o)
                free.discard(o)
                break
        else:
            raise AssertionError("tight subgraph lost its perfect matching")
    return Allocation(tuple(assignment))


def all_max_value_matchings(inst: Instance) -> Iterator[Allocation]:
    """Every maximum-value allocation, in lexicographic order."""
    n = inst.n
    tight = _tight_edges(inst)

    def extend(prefix: list[int], free: set[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for o in sorted(free):
            rest = free - {o}
            if tight[i][o] and _completable(tight, list(range(i + 1, n)), rest):
                yield from extend(prefix + [o], rest)

    for a in extend([], set(range(n))):
        yield Allocation(a)


def max_value_matching_bruteforce(inst: Instance, cap: int | None = BRUTEFORCE_CAP) -> Allocation:
    n = inst.n
    if cap is not None and n > cap:
        raise CapExceededError(f"max_value_matching_bruteforce: n = {n} exceeds cap {cap}")
    v = inst.values
    best, best_val = None, None
    for perm in permutations(range(n)):
        val = sum(v[i][perm[i]] for i in range(n))
        if best_val is None or val > best_val:
            best, best_val = perm, val
    return Allocation(best)
