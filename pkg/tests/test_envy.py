import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macw import (
    Allocation,
    DimensionError,
    Instance,
    WeightGraph,
    apply_switches,
    cycle_decomposition,
    difference_graph,
    envy_graph,
)
from macw.cycles import all_cycle_averages

from conftest import random_instance


def test_example_arcs(ex1):
    g = envy_graph(ex1, Allocation((0, 1, 2)))
    assert g.weights[0][2] == -2
    assert g.weights[2][0] == -2
    assert g.weights[1][2] == 2
    assert g.weights[2][1] == -1


def test_constant_rows_give_zero_graph():
    inst = Instance.from_rows([[4, 4, 4], [1, 1, 1], [7, 7, 7]])
    for perm in permutations(range(3)):
        assert envy_graph(inst, Allocation(perm)).is_zero()


def test_difference_with_example_offset(ex1, ex2_offset):
    d = difference_graph(envy_graph(ex1, Allocation((0, 1, 2))), ex2_offset)
    assert d.weights[1][2] == 4
    averages = {c.nodes: avg for c, avg in all_cycle_averages(d)}
    assert averages[(1, 2)] == Fraction(3, 2)


def test_difference_identities():
    rng = random.Random(7)
    g = envy_graph(random_instance(rng, 4), Allocation((3, 1, 0, 2)))
    assert difference_graph(g, WeightGraph.zeros(4)) == g
    assert difference_graph(g, g).is_zero()
    with pytest.raises(DimensionError):
        difference_graph(g, WeightGraph.zeros(3))


def test_envy_dimension_mismatch(ex1):
    with pytest.raises(DimensionError):
        envy_graph(ex1, Allocation((1, 0)))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((0, 1, 2), (0, 2, 1), [(1, 2)]),
        ((0, 1, 2), (0, 1, 2), []),
        ((0, 1, 2), (1, 2, 0), [(0, 1, 2)]),
        ((0, 1, 2, 3, 4), (1, 0, 2, 4, 3), [(0, 1), (3, 4)]),
    ],
)
def test_cycle_decomposition_examples(a, b, expected):
    assert cycle_decomposition(Allocation(a), Allocation(b)) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_reconstruction_exhaustive(n):
    perms = [Allocation(p) for p in permutations(range(n))]
    for a in perms:
        for b in perms:
            cycles = cycle_decomposition(a, b)
            assert apply_switches(a, cycles) == b
            moved = {i for c in cycles for i in c}
            assert moved == {i for i in range(n) if a[i] != b[i]}
            for c in cycles:
                assert len(c) >= 2 and c[0] == min(c)
            assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)


def test_reconstruction_exhaustive_n6_from_identity():
    # every pair (a, b) is a relabelling of (identity, b o a^-1)
    ident = Allocation(tuple(range(6)))
    for p in permutations(range(6)):
        b = Allocation(p)
        assert apply_switches(ident, cycle_decomposition(ident, b)) == b


def test_reconstruction_random_large():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(7, 30)
        a, b = list(range(n)), list(range(n))
        rng.shuffle(a)
        rng.shuffle(b)
        a, b = Allocation(tuple(a)), Allocation(tuple(b))
        assert apply_switches(a, cycle_decomposition(a, b)) == b


def test_cycle_weight_is_switch_gain():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 6)
        inst = random_instance(rng, n)
        a = Allocation(tuple(rng.sample(range(n), n)))
        b = Allocation(tuple(rng.sample(range(n), n)))
        g = envy_graph(inst, a)
        v = inst.values
        for c in cycle_decomposition(a, b):
            k = len(c)
            in_graph = sum(g.weights[c[t]][c[(t + 1) % k]] for t in range(k))
            succ = {c[t]: c[(t + 1) % k] for t in range(k)}
            displayed = sum(v[i][a[succ[i]]] for i in c) - sum(v[i][a[i]] for i in c)
            assert in_graph == displayed
            # and the gain is exactly what switching along c alone does
            b_c = apply_switches(a, [c])
            assert displayed == sum(v[i][b_c[i]] - v[i][a[i]] for i in c)


square = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(1, 30), min_size=n, max_size=n), min_size=n, max_size=n),
        st.permutations(range(n)),
    )
)


@given(square, st.data())
def test_agent_shift_invariance_and_zero_diagonal(case, data):
    rows, perm = case
    n = len(rows)
    agent = data.draw(st.integers(0, n - 1))
    c = data.draw(st.fractions(min_value=0, max_value=100, max_denominator=50))
    a = Allocation(tuple(perm))
    g = envy_graph(Instance.from_rows(rows), a)
    shifted = [list(r) for r in rows]
    shifted[agent] = [x + c for x in shifted[agent]]
    assert envy_graph(Instance.from_rows(shifted), a) == g
    assert all(g.weights[i][i] == 0 for i in range(n))
