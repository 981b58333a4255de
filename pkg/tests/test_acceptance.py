"""Exit criteria for the build, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import pytest

from replicaplace import cli
from replicaplace.accounting import break_even, replica_gains, run, sweep
from replicaplace.canonical import canonical_search, divergence_notes
from replicaplace.duplication import Strategy
from replicaplace.model import Thresholds
from replicaplace.topology import FROZEN_FREE_VALUES, canonical_matrix
from replicaplace.verify import (
    check_best_location,
    check_coverage,
    check_counts,
    check_determinism,
    check_effective_cost,
    check_gains,
    check_topology,
    random_instances,
)

criterion = pytest.mark.criterion

CACHING_GRID = """\
        Zone 1  Zone 2  Zone 3  Zone 4  Zone 5  Zone 6
File 1  o       .       .       .       x       x
File 2  .       .       o       x       .       x
File 3  .       o       .       x       .       .
File 4  .       .       o       x       .       x
File 5  x       .       .       x       o       .
File 6  .       x       x       o       x       x
"""

FETCHING_GRID = """\
        Zone 1  Zone 2  Zone 3  Zone 4  Zone 5  Zone 6
File 1  o       x       x       .       .       .
File 2  x       x       o       .       .       .
File 3  x       o       .       .       .       .
File 4  x       x       o       .       .       .
File 5  x       .       x       .       o       .
File 6  .       x       x       o       .       .
"""

Y_GRID = [0, 5000, 10000, 20000]


def _cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    assert code == 0, err
    return out, err


@criterion(1, "relocation reproduces published best locations")
def test_relocation(capsys):
    out, _ = _cli(capsys, "best-locate")
    homes = {int(r.split(",")[0]): int(r.split(",")[2]) for r in out.splitlines()[1:]}
    assert homes == {1: 1, 2: 3, 3: 2, 4: 3, 5: 5, 6: 4}


@criterion(2, "caching grid at A=5, Y=0 matches the reference grid")
def test_caching_grid(capsys):
    out, _ = _cli(capsys, "duplicate", "--strategy", "caching", "--A", "5", "--Y", "0")
    assert out.split("\n\n")[0] + "\n" == CACHING_GRID


@criterion(3, "fetching grid at A=5, Y=0 matches the reference grid")
def test_fetching_grid(capsys):
    out, _ = _cli(capsys, "duplicate", "--strategy", "fetching", "--A", "5", "--Y", "0")
    assert out.split("\n\n")[0] + "\n" == FETCHING_GRID


@criterion(4, "File 5 in zone 1: gain 26600 from zone 1, 0 from zones 2-6")
def test_worked_gain(canonical):
    res = run(canonical.network, Strategy.CACHING, Thresholds(5, 0), canonical.tariff)
    credits = replica_gains(res.before, res.after, canonical.network.demand, canonical.network.costs)
    assert credits[5, 1] == {1: 26600, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0}


@criterion(5, "duplicate counts: caching 13/7/6/2, fetching 11/6/5/2 with divergence notes")
def test_duplicate_counts(capsys, canonical):
    caching = sweep(canonical.network, Strategy.CACHING, 5, Y_GRID, canonical.tariff)
    fetching = sweep(canonical.network, Strategy.FETCHING, 5, Y_GRID, canonical.tariff)
    assert [r.duplicates for r in caching] == [13, 7, 6, 2]
    assert [r.duplicates for r in fetching] == [11, 6, 5, 2]
    _, err = _cli(capsys, "sweep", "--strategy", "fetching", "--A", "5", "--Y-list", "0,5000,10000,20000")
    assert "divergence: fetching Y=5000: derived 6 duplicates, published 5" in err
    assert "divergence: fetching Y=10000: derived 5 duplicates, published 4" in err
    _, err = _cli(capsys, "sweep", "--strategy", "caching", "--A", "5", "--Y-list", "0,5000,10000,20000")
    assert "divergence" not in err
    assert len(divergence_notes(canonical)) == 2


@criterion(6, "net gain is negative at Y=0 for both strategies")
def test_loss_at_zero(canonical):
    for strategy in Strategy:
        assert run(canonical.network, strategy, Thresholds(5, 0), canonical.tariff).net_gain < 0


@criterion(7, "fetching breaks even at a lower Y than caching")
def test_break_even_order(canonical):
    for grid in (Y_GRID, list(range(0, 20001, 1000))):
        be = {
            s: break_even(sweep(canonical.network, s, 5, grid, canonical.tariff))
            for s in Strategy
        }
        assert be[Strategy.CACHING] is not None and be[Strategy.FETCHING] is not None
        assert be[Strategy.FETCHING] < be[Strategy.CACHING]


@pytest.fixture(scope="module")
def instances():
    nets = random_instances(seed=2024, count=500)
    assert len(nets) >= 500
    return nets


@criterion(8, "property suite on 500 random instances agrees with the oracles")
def test_property_suite(instances):
    results = [
        check_best_location(instances),
        check_effective_cost(instances),
        check_gains(instances),
        check_counts(instances),
        check_coverage(instances),
        check_determinism(instances),
    ]
    for r in results:
        assert r.cases >= 500
        assert r.passed, r.line()


@criterion(9, "canonical matrix search is non-empty and contains the frozen matrix")
def test_canonical_search(canonical):
    hits = canonical_search(canonical)
    assert hits
    frozen = [h for h in hits if h.values == FROZEN_FREE_VALUES]
    assert frozen and frozen[0].matrix == canonical_matrix() == canonical.network.costs


@criterion(10, "costs_from_arcs equals path enumeration on 200 random connected graphs")
def test_topology():
    result = check_topology(seed=2024, count=200)
    assert result.cases == 200
    assert result.passed, result.line()
