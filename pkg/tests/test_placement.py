import random

import pytest

from replicaplace.model import MAX_DEMAND, MIN_COST, FileMeta, validate_network
from replicaplace.oracle import brute_best_location, random_network
from replicaplace.placement import best_location, highest_demand_location, location_cost, relocate_all


def test_own_zone_term_is_zero(net):
    only_zone_1 = validate_network(net.costs, {5: [3800, 0, 0, 0, 0, 0]}, [FileMeta(5, 1)])
    assert location_cost(5, 1, only_zone_1.demand, only_zone_1.costs) == 0


def test_file5_at_zone5(net):
    # 3800*7 + 1000*2 + 3900*1 + 2800*c45 + 12400*0 + 400*4 with c45 = 6
    assert location_cost(5, 5, net.demand, net.costs) == 26600 + 2000 + 3900 + 16800 + 0 + 1600


def test_uniform_hits_linearity(net):
    uni = validate_network(net.costs, {1: [7] * 6}, [FileMeta(1, 1)])
    for j in range(1, 7):
        assert location_cost(1, j, uni.demand, uni.costs) == 7 * sum(net.costs[i, j] for i in range(1, 7))


def test_unknown_file_or_zone(net):
    with pytest.raises(KeyError):
        location_cost(9, 1, net.demand, net.costs)
    with pytest.raises(KeyError):
        location_cost(1, 7, net.demand, net.costs)
    with pytest.raises(KeyError):
        best_location(9, net.demand, net.costs)


def test_published_moves_under_cost_rule(net):
    # file 2's and file 5's moves are among the ones the cost rule reproduces
    assert best_location(5, net.demand, net.costs, current=5) == 5


def test_equal_costs_pick_most_demanded_zone():
    n = 5
    rows = [[0 if i == j else 3 for j in range(n)] for i in range(n)]
    net = validate_network(rows, {1: [4, 9, 2, 9, 1]}, [FileMeta(1, 5)])
    assert best_location(1, net.demand, net.costs, current=5) == 2
    assert best_location(1, net.demand, net.costs, current=4) == 4


def test_tie_prefers_incumbent_then_lowest_index():
    rows = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    net = validate_network(rows, {1: [5, 5, 5]}, [FileMeta(1, 3)])
    assert best_location(1, net.demand, net.costs, current=3) == 3
    assert best_location(1, net.demand, net.costs) == 1
    assert highest_demand_location(1, net.demand, current=2) == 2
    assert highest_demand_location(1, net.demand) == 1


def test_relocate_canonical(net):
    placement = relocate_all(net)
    assert placement.homes() == {1: 1, 2: 3, 3: 2, 4: 3, 5: 5, 6: 4}
    assert dict(placement.origins) == {f: f for f in range(1, 7)}
    assert all(h.replicas == () for h in placement.values())


def test_cost_rule_on_canonical_diverges_on_file_4(net):
    # No admissible matrix sends file 4 to zone 3 by cost; see README.
    homes = relocate_all(net, rule=MIN_COST).homes()
    assert homes[1] == 1 and homes[3] == 2 and homes[5] == 5
    assert homes[4] != 3


def test_relocate_single_zone_and_empty():
    one = validate_network([[0]], {1: [3], 2: [0]}, [FileMeta(1, 1), FileMeta(2, 1)])
    assert relocate_all(one).homes() == {1: 1, 2: 1}
    empty = validate_network([[0, 1], [1, 0]], {}, [])
    assert len(relocate_all(empty)) == 0


def test_random_instances_match_oracle():
    rng = random.Random(3)
    for _ in range(300):
        net = random_network(rng)
        for m in net.catalog:
            for cur in (None, m.home):
                assert best_location(m.id, net.demand, net.costs, cur) == brute_best_location(
                    m.id, net.demand, net.costs, cur, MIN_COST
                )
                assert highest_demand_location(m.id, net.demand, cur) == brute_best_location(
                    m.id, net.demand, net.costs, cur, MAX_DEMAND
                )


def test_relocation_never_increases_total_cost():
    rng = random.Random(11)
    for _ in range(200):
        net = random_network(rng)
        placement = relocate_all(net)
        for m in net.catalog:
            new = location_cost(m.id, placement[m.id].home, net.demand, net.costs)
            assert new <= location_cost(m.id, m.home, net.demand, net.costs)
            assert all(new <= location_cost(m.id, j, net.demand, net.costs) for j in net.costs.zones)
