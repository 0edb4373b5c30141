"""Envy graphs, arcwise differences, and cycle decomposition of reallocations."""

from __future__ import annotations

from fractions import Fraction

from .core import Allocation, Instance, WeightGraph, check_same_size


def envy_graph(inst: Instance, a: Allocation) -> WeightGraph:
    """Arc i->j weighs ``v_i(A_j) - v_i(A_i)``: how much i prefers j's object to its own."""
    n = check_same_size(inst, a)
    v = inst.values
    rows = []
    for i in range(n):
        own = v[i][a[i]]
        rows.append(tuple(Fraction(0) if i == j else v[i][a[j]] - own for j in range(n)))
    return WeightGraph(tuple(rows))


def difference_graph(g_a: WeightGraph, g_o: WeightGraph) -> WeightGraph:
    n = check_same_size(g_a, g_o)
    return WeightGraph(
        tuple(tuple(g_a.weights[i][j] - g_o.weights[i][j] for j in range(n)) for i in range(n))
    )


def cycle_decomposition(a: Allocation, b: Allocation) -> list[tuple[int, ...]]:
    """Split the move from ``a`` to ``b`` into object switches along agent cycles.

    In each returned cycle ``(c0, c1, ..., ck-1)`` agent ``c_t`` receives the
    object that ``c_{t+1}`` holds under ``a`` (indices mod k), so the cycle's
    weight in the envy graph of ``a`` is exactly the value gained by the switch.
    Cycles start at their smallest agent and are sorted by that agent; agents
    whose object is unchanged appear in no cycle.
    """
    n = check_same_size(a, b)
    holder = [0] * n
    for agent, obj in enumerate(a.assignment):
        holder[obj] = agent
    succ = [holder[b[i]] for i in range(n)]

    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start] or succ[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = succ[i]
        cycles.append(tuple(cyc))
    return cycles


def apply_switches(a: Allocation, cycles: list[tuple[int, ...]]) -> Allocation:
    """Give each cycle member the object its successor holds under ``a``."""
    assignment = list(a.assignment)
    for cyc in cycles:
        k = len(cyc)
        for t in range(k):
            assignment[cyc[t]] = a[cyc[(t + 1) % k]]
    return Allocation(tuple(assignment))
