"""Access cost, gain, hosting cost and net gain; threshold sweeps."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .duplication import DuplicationTrace, Strategy, duplicate
from .model import Cost, CostMatrix, DemandMatrix, InvariantError, Network, Placement, Tariff, Thresholds
from .placement import relocate_all


def _frac(x: float | int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


def effective_cost(i: int, f: int, placement: Placement, costs: CostMatrix) -> Cost:
    """Cheapest cost for a zone-``i`` consumer to reach any copy of ``f``."""
    return min(costs[i, k] for k in placement[f].zones)


def cost_matrix_by_cell(placement: Placement, demand: DemandMatrix, costs: CostMatrix) -> dict[tuple[int, int], Cost]:
    """hits x effective cost for every (file, consumer zone)."""
    return {
        (f, i): demand.hits(f, i) * effective_cost(i, f, placement, costs)
        for f in placement
        for i in costs.zones
    }


def total_access_cost(placement: Placement, demand: DemandMatrix, costs: CostMatrix) -> Cost:
    return sum(cost_matrix_by_cell(placement, demand, costs).values())


@dataclass(frozen=True)
class Gain:
    cells: dict[tuple[int, int], Cost]

    @property
    def total(self) -> Cost:
        return sum(self.cells.values())

    def by_file(self) -> dict[int, Cost]:
        out: dict[int, Cost] = {}
        for (f, _), g in self.cells.items():
            out[f] = out.get(f, 0) + g
        return out

    def by_zone(self) -> dict[int, Cost]:
        out: dict[int, Cost] = {}
        for (_, i), g in sorted(self.cells.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            out[i] = out.get(i, 0) + g
        return out


def access_gain(before: Placement, after: Placement, demand: DemandMatrix, costs: CostMatrix) -> Gain:
    """Per (file, consumer zone) reduction in hits-weighted access cost."""
    if before.homes() != after.homes():
        raise ValueError("placements disagree on home zones; gain is only defined for added replicas")
    b = cost_matrix_by_cell(before, demand, costs)
    a = cost_matrix_by_cell(after, demand, costs)
    return Gain({key: b[key] - a[key] for key in b})


def serving_zone(i: int, f: int, placement: Placement, costs: CostMatrix) -> int:
    """Copy of ``f`` that serves zone ``i``: cheapest host, earliest placed on ties (home first)."""
    hosts = placement[f].zones
    return min(hosts, key=lambda k: (costs[i, k], hosts.index(k)))


def replica_gains(
    before: Placement, after: Placement, demand: DemandMatrix, costs: CostMatrix
) -> dict[tuple[int, int], dict[int, Cost]]:
    """Gain credited to each new replica, per consumer zone.

    Every consumer zone's gain goes to the copy that serves it in ``after``,
    so a replica gets nothing from zones another copy serves more cheaply.
    Keys are (file, replica zone); the credits add up to the total gain.
    """
    gain = access_gain(before, after, demand, costs)
    out: dict[tuple[int, int], dict[int, Cost]] = {}
    for f, hosts in after.items():
        new = [k for k in hosts.replicas if k not in before[f]]
        for k in new:
            out[f, k] = {i: 0 for i in costs.zones}
        for i in costs.zones:
            k = serving_zone(i, f, after, costs)
            if (f, k) in out:
                out[f, k][i] = gain.cells[f, i]
    return out


def hosting_cost(n_duplicates: int, size_tb: float, tariff: Tariff) -> float:
    return float(n_duplicates * _frac(size_tb) * _frac(tariff.per_tb_cost))


def placement_hosting_cost(placement: Placement, network: Network, tariff: Tariff) -> float:
    """Hosting cost of every replica in ``placement``, using each file's own size."""
    tb = sum(len(h.replicas) * _frac(network.meta(f).size_tb) for f, h in placement.items())
    return float(tb * _frac(tariff.per_tb_cost))


def monetize(raw: Cost, tariff: Tariff) -> float:
    return float(_frac(raw) * _frac(tariff.hit_cost) * _frac(tariff.cost_scale))


def net_gain(gain_raw: Cost, n_duplicates: int, tariff: Tariff, size_tb: float) -> float:
    exact = (
        _frac(gain_raw) * _frac(tariff.hit_cost) * _frac(tariff.cost_scale)
        - n_duplicates * _frac(size_tb) * _frac(tariff.per_tb_cost)
    )
    return float(exact)


@dataclass(frozen=True)
class RunResult:
    """One relocate + duplicate + account run."""

    strategy: Strategy
    thresholds: Thresholds
    before: Placement
    after: Placement
    trace: DuplicationTrace
    cost_before: Cost
    cost_after: Cost
    gain: Gain
    hosting: float
    gain_money: float
    cells_before: dict[tuple[int, int], Cost]

    @property
    def duplicates(self) -> int:
        return self.after.replica_count()

    @property
    def net_gain(self) -> float:
        return self.gain_money - self.hosting


def run(network: Network, strategy: Strategy | str, thresholds: Thresholds, tariff: Tariff | None = None) -> RunResult:
    tariff = tariff or Tariff()
    strategy = Strategy(strategy)
    before = relocate_all(network)
    after, trace = duplicate(before, network.demand, network.costs, thresholds, strategy)
    if after.homes() != before.homes():
        raise InvariantError("duplication changed a home zone")
    cells_before = cost_matrix_by_cell(before, network.demand, network.costs)
    cost_before = sum(cells_before.values())
    cost_after = total_access_cost(after, network.demand, network.costs)
    gain = access_gain(before, after, network.demand, network.costs)
    if gain.total != cost_before - cost_after:
        raise InvariantError("per-cell gains do not sum to total gain")
    if any(g < 0 for g in gain.cells.values()):
        raise InvariantError("negative per-cell gain")
    return RunResult(
        strategy=strategy,
        thresholds=thresholds,
        before=before,
        after=after,
        trace=trace,
        cost_before=cost_before,
        cost_after=cost_after,
        gain=gain,
        hosting=placement_hosting_cost(after, network, tariff),
        gain_money=monetize(gain.total, tariff),
        cells_before=cells_before,
    )


@dataclass(frozen=True)
class SweepRow:
    Y: Cost
    duplicates: int
    gain: Cost
    gain_money: float
    hosting: float
    net_gain: float
    result: RunResult


def sweep(
    network: Network,
    strategy: Strategy | str,
    A: Cost,
    Y_values: Iterable[Cost],
    tariff: Tariff | None = None,
) -> list[SweepRow]:
    """One independent run per demand threshold, rows in ascending Y."""
    Ys = sorted(set(Y_values))
    if not Ys:
        raise ValueError("sweep needs at least one Y value")
    rows = []
    for Y in Ys:
        res = run(network, strategy, Thresholds(A, Y), tariff)
        rows.append(SweepRow(Y, res.duplicates, res.gain.total, res.gain_money, res.hosting, res.net_gain, res))
    return rows


def break_even(rows: Sequence[SweepRow]) -> float | None:
    """Y where net gain first turns non-negative, linearly interpolated.

    Returns ``None`` when net gain never crosses from negative to
    non-negative between adjacent rows; returns the first Y if the sweep
    already starts non-negative.
    """
    if not rows:
        return None
    if rows[0].net_gain >= 0:
        return float(rows[0].Y)
    for lo, hi in zip(rows, rows[1:]):
        if lo.net_gain < 0 <= hi.net_gain:
            span = hi.net_gain - lo.net_gain
            return float(lo.Y) + float(hi.Y - lo.Y) * (-lo.net_gain) / span
    return None


def best_row(rows: Sequence[SweepRow]) -> SweepRow:
    """Row with the largest net gain (lowest Y on ties)."""
    return max(rows, key=lambda r: (r.net_gain, -r.Y))
