import random

from replicaplace.canonical import canonical_search, divergence_notes
from replicaplace.model import MIN_COST, FileMeta, validate_network
from replicaplace.oracle import (
    brute_best_location,
    brute_min_cost_cover,
    matrix_constraint_search,
    path_enumeration_costs,
    random_network,
)
from replicaplace.topology import FROZEN_FREE_VALUES, canonical_matrix


def test_brute_best_location_examples(net):
    assert brute_best_location(6, net.demand, net.costs, 6, net.relocation) == 4
    one = validate_network([[0]], {1: [5]}, [FileMeta(1, 1)])
    assert brute_best_location(1, one.demand, one.costs) == 1


def test_min_cover_trivial_cases(net):
    assert brute_min_cost_cover(1, 1, [], net.demand, net.costs, 5) == ()
    for i in range(2, 7):
        cover = brute_min_cost_cover(1, 1, [i], net.demand, net.costs, 0)
        assert cover == (i,)


def test_min_cover_canonical_file6(net):
    cover = brute_min_cost_cover(6, 4, [2, 3, 5, 6], net.demand, net.costs, 5)
    assert len(cover) <= 2
    assert cover == (2,)


def test_search_with_no_free_entries():
    m = canonical_matrix()
    fixed = {(i, j): m[i, j] for i in range(1, 7) for j in range(i + 1, 7)}
    hits = matrix_constraint_search(fixed, {}, [lambda _: True])
    assert len(hits) == 1 and hits[0].matrix == m


def test_search_contradictory_constraints_empty():
    m = canonical_matrix()
    fixed = {(i, j): m[i, j] for i in range(1, 7) for j in range(i + 1, 7) if (i, j) != (4, 5)}
    hits = matrix_constraint_search(
        fixed, {(4, 5): range(1, 10)}, [lambda c: c[4, 5] >= 6, lambda c: c[4, 5] <= 5]
    )
    assert hits == []


def test_canonical_search_contains_frozen(canonical):
    hits = canonical_search(canonical)
    values = [h.values for h in hits]
    assert values
    assert min(values) == FROZEN_FREE_VALUES
    frozen = next(h for h in hits if h.values == FROZEN_FREE_VALUES)
    assert frozen.matrix == canonical_matrix()


def test_canonical_search_under_cost_rule_is_empty(canonical):
    assert canonical_search(canonical, rule=MIN_COST) == []


def test_divergence_notes(canonical):
    assert divergence_notes(canonical) == [
        "divergence: fetching Y=5000: derived 6 duplicates, published 5",
        "divergence: fetching Y=10000: derived 5 duplicates, published 4",
    ]
    cost_notes = divergence_notes(canonical, rule=MIN_COST)
    assert "divergence: file 4 relocated to zone 1, published zone 3" in cost_notes


def test_path_enumeration_disconnected():
    assert path_enumeration_costs(3, [(1, 2, 4)]) == [[0, 4, None], [4, 0, None], [None, None, 0]]


def test_random_network_bounds():
    rng = random.Random(0)
    for _ in range(100):
        net = random_network(rng)
        assert 1 <= net.n <= 6 and 1 <= len(net.catalog) <= 6
        assert all(0 <= v <= 9 for row in net.costs.rows for v in row)
        assert all(0 <= h <= 200_000 for f in net.demand for h in net.demand[f])
