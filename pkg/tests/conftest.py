from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

import pytest

from macw import Instance, WeightGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

EX1_VALUES = [[3, 2, 1], [3, 5, 7], [7, 8, 9]]
EX2_OFFSET = [[0, 0, 0], [0, 0, -2], [0, 0, 0]]


@pytest.fixture
def ex1() -> Instance:
    return Instance.from_rows(EX1_VALUES)


@pytest.fixture
def ex2_offset() -> WeightGraph:
    return WeightGraph.from_rows(EX2_OFFSET)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def random_instance(rng: random.Random, n: int, lo: int = 1, hi: int = 9) -> Instance:
    return Instance.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_graph(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> WeightGraph:
    return WeightGraph.from_rows(
        [[0 if i == j else rng.randint(lo, hi) for j in range(n)] for i in range(n)]
    )


def oracle_cycle_averages(weights) -> dict[tuple[int, ...], Fraction]:
    """Every simple cycle (rotated to start at its minimum) with its average, computed directly."""
    n = len(weights)
    out = {}
    for k in range(2, n + 1):
        for subset in combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for order in permutations(rest):
                nodes = (first, *order)
                total = sum(Fraction(weights[nodes[t]][nodes[(t + 1) % k]]) for t in range(k))
                out[nodes] = total / k
    return out


def oracle_macw(weights) -> Fraction:
    return max(oracle_cycle_averages(weights).values())


def oracle_envy(values, perm, offset=None):
    n = len(values)
    return [
        [
            0 if i == j else Fraction(values[i][perm[j]]) - values[i][perm[i]]
            - (Fraction(offset[i][j]) if offset else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
