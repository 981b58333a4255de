"""Per-file home relocation."""

from __future__ import annotations

from .model import MAX_DEMAND, MIN_COST, Cost, CostMatrix, DemandMatrix, Hosts, Network, Placement


def location_cost(f: int, j: int, demand: DemandMatrix, costs: CostMatrix) -> Cost:
    """Total hits-weighted access cost of serving file ``f`` entirely from zone ``j``."""
    if not 1 <= j <= costs.n:
        raise KeyError(f"unknown zone {j}")
    row = demand[f]
    return sum(h * costs[i, j] for i, h in enumerate(row, start=1))


def _pick(scores: dict[int, Cost], incumbent: int | None, best_is_min: bool) -> int:
    target = min(scores.values()) if best_is_min else max(scores.values())
    if incumbent is not None and scores.get(incumbent) == target:
        return incumbent
    return min(z for z, s in scores.items() if s == target)


def best_location(f: int, demand: DemandMatrix, costs: CostMatrix, current: int | None = None) -> int:
    """Zone minimizing :func:`location_cost` for file ``f``.

    Ties keep ``current`` when it is among the minimizers, otherwise the
    lowest zone index wins.
    """
    if f not in demand:
        raise KeyError(f"unknown file {f}")
    scores = {j: location_cost(f, j, demand, costs) for j in costs.zones}
    return _pick(scores, current, best_is_min=True)


def highest_demand_location(f: int, demand: DemandMatrix, current: int | None = None) -> int:
    """Zone with the most hits on ``f``, same tie rules as :func:`best_location`."""
    if f not in demand:
        raise KeyError(f"unknown file {f}")
    scores = dict(enumerate(demand[f], start=1))
    return _pick(scores, current, best_is_min=False)


def relocate_all(network: Network, rule: str | None = None) -> Placement:
    """Move every file to its best zone; replica sets start empty.

    ``rule`` defaults to the network's configured relocation rule:
    ``"min-cost"`` (hits-weighted cost argmin) or ``"max-demand"`` (argmax of
    hits).
    """
    rule = rule or network.relocation
    hosts = {}
    origins = {}
    for meta in network.catalog:
        if rule == MIN_COST:
            home = best_location(meta.id, network.demand, network.costs, current=meta.home)
        elif rule == MAX_DEMAND:
            home = highest_demand_location(meta.id, network.demand, current=meta.home)
        else:
            raise ValueError(f"unknown relocation rule {rule!r}")
        hosts[meta.id] = Hosts(home)
        origins[meta.id] = meta.home
    return Placement(hosts, origins)
