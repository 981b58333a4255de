import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from replicaplace.model import NetworkError
from replicaplace.oracle import path_enumeration_costs, random_connected_arcs
from replicaplace.topology import QUOTED_ENTRIES, canonical_matrix, costs_from_arcs
from replicaplace.model import validate_network, FileMeta


def test_single_edge():
    assert costs_from_arcs(2, [(1, 2, 5)]).rows == ((0, 5), (5, 0))


def test_triangle_shortcut():
    m = costs_from_arcs(3, [(1, 2, 2), (2, 3, 2), (1, 3, 7)])
    assert m[1, 3] == 4
    assert m[3, 1] == 4


def test_parallel_arcs_take_cheapest():
    assert costs_from_arcs(2, [(1, 2, 5), (2, 1, 3)])[1, 2] == 3


def test_disconnected_reports_pair():
    with pytest.raises(NetworkError, match="zone 3 unreachable from zone 1"):
        costs_from_arcs(3, [(1, 2, 1)])


@pytest.mark.parametrize("arc", [(1, 2, 0), (1, 2, -3), (1, 1, 2), (1, 4, 2)])
def test_bad_arcs(arc):
    with pytest.raises(NetworkError):
        costs_from_arcs(3, [arc, (1, 2, 1), (2, 3, 1)])


def test_matches_path_enumeration_small_graphs():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 6)
        arcs = random_connected_arcs(rng, n)
        assert [list(r) for r in costs_from_arcs(n, arcs).rows] == path_enumeration_costs(n, arcs)


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(1, 8))
    seed = draw(st.integers(0, 2**32 - 1))
    return n, random_connected_arcs(random.Random(seed), n, max_weight=draw(st.integers(1, 50)))


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_shortest_paths_are_a_metric(graph):
    n, arcs = graph
    m = costs_from_arcs(n, arcs)
    for i in m.zones:
        assert m[i, i] == 0
        for j in m.zones:
            assert m[i, j] == m[j, i]
            for k in m.zones:
                assert m[i, j] <= m[i, k] + m[k, j]


def test_canonical_matrix_quoted_entries():
    m = canonical_matrix()
    assert m[2, 5] == 2
    assert m[3, 5] == 1
    for (i, j), v in QUOTED_ENTRIES.items():
        assert m[i, j] == v == m[j, i]
    # the four unquoted pairs stay inside the bounds forced by the Y=0 caching grid
    assert m[1, 4] <= 5 and m[2, 3] <= 5 and m[2, 6] <= 5 and m[4, 5] >= 6


def test_canonical_matrix_validates(net):
    assert net.costs == canonical_matrix()
    validate_network(canonical_matrix(), {1: [0] * 6}, [FileMeta(1, 1)])
