"""Random instances and the empirical gap search.

A gap report compares the true offset optimum against the best max-value
matching evaluated under the same offset. A positive gap means no max-value
matching is optimal once the offset graph is taken into account.

Randomness comes from the stdlib Mersenne Twister (``random.Random``, MT19937,
seed version 2). Entries are drawn with ``randint`` in row-major order, so a
given (n, seed, range) always yields the same instance with this package.
"""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import (
    Allocation,
    CapExceededError,
    Instance,
    MACWError,
    WeightGraph,
    check_same_size,
)
from .solve import EXACT_CAP, OffsetObjective, _lt, _map


def _check_range(lo: int, hi: int, positive: bool) -> None:
    if int(lo) != lo or int(hi) != hi:
        raise MACWError(f"range bounds must be integers, got [{lo}, {hi}]")
    if lo > hi:
        raise MACWError(f"invalid range [{lo}, {hi}]: lo > hi")
    if positive and lo <= 0:
        raise MACWError(f"invalid value range [{lo}, {hi}]: values must be positive")


def _check_n(n: int) -> None:
    if n < 2:
        raise MACWError(f"n must be at least 2, got {n}")


def generate_instance(n: int, seed: int, value_range: tuple[int, int] = (1, 9)) -> Instance:
    _check_n(n)
    lo, hi = value_range
    _check_range(lo, hi, positive=True)
    rng = random.Random(seed)
    return Instance.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def generate_offset(n: int, seed: int, weight_range: tuple[int, int] = (-3, 3)) -> WeightGraph:
    _check_n(n)
    lo, hi = weight_range
    _check_range(lo, hi, positive=False)
    rng = random.Random(seed)
    return WeightGraph.from_rows(
        [[0 if i == j else rng.randint(lo, hi) for j in range(n)] for i in range(n)]
    )


@dataclass(frozen=True)
class GapReport:
    instance: Instance
    offset: WeightGraph
    exact_macw: Fraction
    best_matching_macw: Fraction
    gap: Fraction
    exact_allocation: Allocation
    index: int = -1

    def __post_init__(self) -> None:
        assert self.gap == self.best_matching_macw - self.exact_macw
        assert self.gap >= 0


def gap_report(inst: Instance, offset: WeightGraph, index: int = -1,
               cap: int | None = EXACT_CAP) -> GapReport:
    """Exact optimum and best max-value matching under ``offset``, in one pass over all n! allocations."""
    n = check_same_size(inst, offset)
    if cap is not None and n > cap:
        raise CapExceededError(f"gap_report: n = {n} exceeds cap {cap}")
    f = OffsetObjective(inst, offset)
    best_val = best_perm = None
    top_total = matching_val = None
    for perm in permutations(range(n)):
        val = f(perm)
        if best_val is None or _lt(val, best_val):
            best_val, best_perm = val, perm
        total = f.total(perm)
        if top_total is None or total > top_total:
            top_total, matching_val = total, val
        elif total == top_total and _lt(val, matching_val):
            matching_val = val
    exact = f.to_fraction(best_val)
    matching = f.to_fraction(matching_val)
    return GapReport(inst, offset, exact, matching, matching - exact, Allocation(best_perm), index)


@dataclass(frozen=True)
class GapSearchConfig:
    n: int = 4
    count: int = 100
    seed: int = 0
    value_range: tuple[int, int] = (1, 9)
    weight_range: tuple[int, int] = (-3, 3)


def pair_seeds(config: GapSearchConfig) -> list[tuple[int, int]]:
    """(instance seed, offset seed) for every pair, derived from ``config.seed``."""
    master = random.Random(config.seed)
    return [(master.getrandbits(64), master.getrandbits(64)) for _ in range(config.count)]


def _gap_job(args: tuple[GapSearchConfig, int, int, int]) -> GapReport:
    config, index, inst_seed, offset_seed = args
    inst = generate_instance(config.n, inst_seed, config.value_range)
    offset = generate_offset(config.n, offset_seed, config.weight_range)
    return gap_report(inst, offset, index)


def search_gap(config: GapSearchConfig, workers: int = 1,
               extra: list[tuple[Instance, WeightGraph]] = ()) -> list[GapReport]:
    """Gap reports for ``config.count`` random pairs plus any ``extra`` fixed pairs.

    Fixed pairs get negative indices (-1, -2, ...). Reports are sorted by
    descending gap, then by index, so the output is identical for any
    ``workers``.
    """
    _check_n(config.n)
    if config.n > EXACT_CAP:
        raise CapExceededError(f"search_gap: n = {config.n} exceeds cap {EXACT_CAP}")
    _check_range(*config.value_range, positive=True)
    _check_range(*config.weight_range, positive=False)
    jobs = [(config, k, s1, s2) for k, (s1, s2) in enumerate(pair_seeds(config))]
    reports = _map(_gap_job, jobs, workers)
    reports += [gap_report(inst, off, -(k + 1)) for k, (inst, off) in enumerate(extra)]
    return sorted(reports, key=lambda r: (-r.gap, r.index))


def summarize(reports: list[GapReport]) -> dict:
    gaps = [r.gap for r in reports]
    positive = [g for g in gaps if g > 0]
    return {
        "pairs": len(gaps),
        "positive_gaps": len(positive),
        "positive_rate": len(positive) / len(gaps) if gaps else 0.0,
        "max_gap": max(gaps) if gaps else Fraction(0),
        "mean_gap": statistics.mean(gaps) if gaps else Fraction(0),
        "min_gap": min(gaps) if gaps else Fraction(0),
    }
