"""MACW-minimizing allocation solvers.

* :func:`solve_zero_offset`: a maximum-value matching, optimal when there is no offset graph.
* :func:`solve_exact`: enumeration of all n! allocations, for any offset graph.
* :func:`solve_local_search`: best-improvement descent over 2- and 3-cycle switches.

Ties are always broken toward the lexicographically smallest assignment.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable

from .core import (
    METHOD_EXACT,
    METHOD_LOCAL,
    METHOD_MATCHING,
    Allocation,
    CapExceededError,
    Instance,
    NoCycleError,
    Solution,
    WeightGraph,
    check_same_size,
    common_denominator,
    scaled_ints,
    total_value,
)
from .cycles import macw_karp, max_mean_int
from .envy import difference_graph, envy_graph
from .matching import max_value_matching

log = logging.getLogger(__name__)

EXACT_CAP = 9

Ratio = tuple[int, int]  # (num, den) with den > 0


def _lt(a: Ratio, b: Ratio) -> bool:
    return a[0] * b[1] < b[0] * a[1]


class OffsetObjective:
    """Fast evaluation of MACW(G_A - G_O) for many allocations of one instance.

    Values and offsets are scaled to integers once; each evaluation is then an
    integer Karp pass. Results are ``(num, den)`` pairs in scaled units.
    """

    def __init__(self, inst: Instance, g_o: WeightGraph):
        self.n = check_same_size(inst, g_o)
        self.scale = common_denominator(inst.values, g_o.weights)
        self.values = scaled_ints(inst.values, self.scale)
        self.offset = scaled_ints(g_o.weights, self.scale)

    def __call__(self, perm: tuple[int, ...]) -> Ratio:
        n, v, o = self.n, self.values, self.offset
        w = []
        for i in range(n):
            vi, oi = v[i], o[i]
            own = vi[perm[i]]
            w.append([vi[perm[j]] - own - oi[j] for j in range(n)])
        return max_mean_int(w)

    def total(self, perm: tuple[int, ...]) -> int:
        return sum(self.values[i][perm[i]] for i in range(self.n))

    def to_fraction(self, r: Ratio) -> Fraction:
        return Fraction(r[0], r[1] * self.scale)


def _require_cycles(inst: Instance) -> None:
    if inst.n < 2:
        raise NoCycleError(f"no cycles exist with n = {inst.n}: MACW is undefined")


def _solution(inst: Instance, g_o: WeightGraph, perm: Iterable[int], method: str,
              optimal: bool, **info) -> Solution:
    alloc = Allocation(tuple(perm))
    graph = difference_graph(envy_graph(inst, alloc), g_o)
    mu, witness = macw_karp(graph)
    return Solution(alloc, mu, witness, total_value(inst, alloc), method, optimal, info)


def solve_zero_offset(inst: Instance) -> Solution:
    _require_cycles(inst)
    alloc = max_value_matching(inst)
    mu, witness = macw_karp(envy_graph(inst, alloc))
    return Solution(alloc, mu, witness, total_value(inst, alloc), METHOD_MATCHING, True)


def _exact_chunk(args: tuple[Instance, WeightGraph, int]) -> tuple[Ratio, tuple[int, ...]]:
    inst, g_o, first = args
    f = OffsetObjective(inst, g_o)
    rest = [o for o in range(f.n) if o != first]
    best_val, best_perm = None, None
    for tail in permutations(rest):
        perm = (first, *tail)
        val = f(perm)
        if best_val is None or _lt(val, best_val):
            best_val, best_perm = val, perm
    return best_val, best_perm


def _map(fn, jobs: list, workers: int) -> list:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def solve_exact(inst: Instance, g_o: WeightGraph, cap: int | None = EXACT_CAP,
                workers: int = 1) -> Solution:
    """Global minimizer of MACW(G_A - G_O) by enumerating every allocation.

    The permutation space is split by agent 0's object; with ``workers > 1``
    the parts run in separate processes. The reduction visits parts in
    object order, so the answer does not depend on ``workers``.
    """
    _require_cycles(inst)
    n = check_same_size(inst, g_o)
    if cap is not None and n > cap:
        raise CapExceededError(f"solve_exact: n = {n} exceeds cap {cap}")
    results = _map(_exact_chunk, [(inst, g_o, first) for first in range(n)], workers)
    best_val, best_perm = results[0]
    for val, perm in results[1:]:
        if _lt(val, best_val):
            best_val, best_perm = val, perm
    return _solution(inst, g_o, best_perm, METHOD_EXACT, True, evaluated=_factorial(n))


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class LocalSearchParams:
    max_iters: int = 1000
    restarts: int = 4
    seed: int = 0


def switch_neighbors(perm: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """Allocations reachable by switching objects along one 2-cycle or 3-cycle of agents."""
    n = len(perm)
    for i, j in combinations(range(n), 2):
        p = list(perm)
        p[i], p[j] = p[j], p[i]
        yield tuple(p)
    for i, j, k in combinations(range(n), 3):
        p = list(perm)
        p[i], p[j], p[k] = perm[j], perm[k], perm[i]
        yield tuple(p)
        p[i], p[j], p[k] = perm[k], perm[i], perm[j]
        yield tuple(p)


def _descend(f: OffsetObjective, start: tuple[int, ...], max_iters: int) -> tuple[Ratio, tuple[int, ...], int, int]:
    cur, cur_val = start, f(start)
    iters = evals = 0
    while iters < max_iters:
        best_val, best_perm = None, None
        for nb in switch_neighbors(cur):
            val = f(nb)
            evals += 1
            if best_val is None or _lt(val, best_val) or (
                not _lt(best_val, val) and nb < best_perm
            ):
                best_val, best_perm = val, nb
        if best_val is None or not _lt(best_val, cur_val):
            break
        cur, cur_val = best_perm, best_val
        iters += 1
    return cur_val, cur, iters, evals


def solve_local_search(inst: Instance, g_o: WeightGraph,
                       params: LocalSearchParams = LocalSearchParams()) -> Solution:
    """Heuristic minimizer of MACW(G_A - G_O); never worse than the max-value matching.

    The first descent starts at the max-value matching. Each restart starts at a
    random permutation drawn from its own seed, derived from ``params.seed``.
    """
    _require_cycles(inst)
    n = check_same_size(inst, g_o)
    f = OffsetObjective(inst, g_o)
    master = random.Random(params.seed)
    starts = [max_value_matching(inst).assignment]
    for _ in range(params.restarts):
        rng = random.Random(master.getrandbits(64))
        perm = list(range(n))
        rng.shuffle(perm)
        starts.append(tuple(perm))

    start_val = f(starts[0])
    best_val, best_perm = None, None
    total_iters = total_evals = 0
    for start in starts:
        val, perm, iters, evals = _descend(f, start, params.max_iters)
        total_iters += iters
        total_evals += evals
        if best_val is None or _lt(val, best_val) or (not _lt(best_val, val) and perm < best_perm):
            best_val, best_perm = val, perm
    log.debug("local search: %d starts, %d moves, %d evaluations", len(starts), total_iters, total_evals)
    return _solution(
        inst, g_o, best_perm, METHOD_LOCAL, False,
        starts=len(starts), iterations=total_iters, evaluations=total_evals,
        start_macw=f.to_fraction(start_val),
    )
