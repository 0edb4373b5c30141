import random
from fractions import Fraction
from itertools import permutations

import pytest

from macw import (
    Allocation,
    GapSearchConfig,
    MACWError,
    WeightGraph,
    gap_report,
    generate_instance,
    generate_offset,
    search_gap,
    solve_exact,
    total_value,
)
from macw.explore import summarize

from conftest import oracle_envy, oracle_macw


def test_instance_generator_determinism_and_range():
    assert generate_instance(3, 12, (1, 9)) == generate_instance(3, 12, (1, 9))
    assert generate_instance(3, 12, (1, 9)) != generate_instance(3, 13, (1, 9))
    flat = generate_instance(3, 5, (5, 5))
    assert all(x == 5 for row in flat.values for x in row)
    inst = generate_instance(4, 8, (1, 9))
    assert all(1 <= x <= 9 for row in inst.values for x in row)


def test_offset_generator():
    assert generate_offset(3, 1, (0, 0)).is_zero()
    g = generate_offset(3, 1, (-2, -2))
    assert all(g.weights[i][j] == (0 if i == j else -2) for i in range(3) for j in range(3))
    g = generate_offset(5, 4, (-7, 7))
    assert all(g.weights[i][i] == 0 for i in range(5))
    assert generate_offset(5, 4, (-7, 7)) == g


@pytest.mark.parametrize(
    "call",
    [
        lambda: generate_instance(3, 0, (0, 5)),
        lambda: generate_instance(3, 0, (5, 4)),
        lambda: generate_instance(1, 0, (1, 2)),
        lambda: generate_offset(3, 0, (2, 1)),
    ],
)
def test_generator_errors(call):
    with pytest.raises(MACWError):
        call()


def test_example_gap(ex1, ex2_offset):
    # the max-value matching (o1,o3,o2) is itself the offset optimum
    r = gap_report(ex1, ex2_offset)
    assert r.exact_macw == Fraction(1, 2)
    assert r.best_matching_macw == Fraction(1, 2)
    assert r.gap == 0
    assert r.exact_allocation == Allocation((0, 2, 1))


def test_gap_report_against_oracle():
    rng = random.Random(3)
    for k in range(40):
        n = rng.randint(2, 5)
        inst = generate_instance(n, rng.getrandbits(32), (1, 4))
        offset = generate_offset(n, rng.getrandbits(32), (-3, 3))
        r = gap_report(inst, offset)
        perms = list(permutations(range(n)))
        macws = {p: oracle_macw(oracle_envy(inst.values, p, offset.weights)) for p in perms}
        totals = {p: total_value(inst, Allocation(p)) for p in perms}
        top = max(totals.values())
        assert r.exact_macw == min(macws.values())
        assert r.best_matching_macw == min(macws[p] for p in perms if totals[p] == top)
        assert r.gap >= 0
        assert r.exact_macw == solve_exact(inst, offset).macw


def test_zero_offsets_have_zero_gap():
    reports = search_gap(GapSearchConfig(n=4, count=30, seed=5, weight_range=(0, 0)))
    assert len(reports) == 30
    assert all(r.gap == 0 for r in reports)


def test_search_sorted_and_deterministic(ex1, ex2_offset):
    config = GapSearchConfig(n=4, count=40, seed=11)
    a = search_gap(config, extra=[(ex1, ex2_offset)])
    b = search_gap(config, workers=2, extra=[(ex1, ex2_offset)])
    assert a == b
    gaps = [r.gap for r in a]
    assert gaps == sorted(gaps, reverse=True)
    assert any(r.index == -1 for r in a)
    assert all(r.gap >= 0 for r in a)


def test_positive_gap_exists_at_n4():
    reports = search_gap(GapSearchConfig(n=4, count=100, seed=0))
    positive = [r for r in reports if r.gap > 0]
    assert positive
    top = positive[0]
    # certificate: no max-value matching reaches the exact optimum
    assert top.best_matching_macw > top.exact_macw


def test_summary():
    reports = search_gap(GapSearchConfig(n=3, count=20, seed=1))
    s = summarize(reports)
    assert s["pairs"] == 20
    assert s["min_gap"] >= 0
    assert s["max_gap"] == reports[0].gap
