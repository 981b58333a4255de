"""Randomized agreement checks between the main algorithms and the brute-force oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import oracle
from .accounting import access_gain, effective_cost, run, total_access_cost
from .duplication import Strategy, duplicate, triggers
from .io import format_grid, trace_jsonl
from .model import MAX_DEMAND, MIN_COST, NetworkError, Thresholds
from .placement import best_location, highest_demand_location, relocate_all
from .topology import FROZEN_FREE_VALUES, costs_from_arcs

A_VALUES = (0, 2, 5, 9)
Y_VALUES = (0, 1000, 50_000, 150_000)


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name} ({self.cases} cases){extra}"


def random_instances(seed: int, count: int):
    rng = random.Random(seed)
    return [oracle.random_network(rng) for _ in range(count)]


def check_best_location(nets) -> CheckResult:
    bad = []
    for k, net in enumerate(nets):
        for m in net.catalog:
            got = best_location(m.id, net.demand, net.costs, m.home)
            want = oracle.brute_best_location(m.id, net.demand, net.costs, m.home, MIN_COST)
            if got != want:
                bad.append(f"instance {k} file {m.id}: {got} != {want}")
            got = highest_demand_location(m.id, net.demand, m.home)
            want = oracle.brute_best_location(m.id, net.demand, net.costs, m.home, MAX_DEMAND)
            if got != want:
                bad.append(f"instance {k} file {m.id} (max-demand): {got} != {want}")
    return CheckResult("best_location == brute_best_location", len(nets), bad)


def check_effective_cost(nets) -> CheckResult:
    bad = []
    for k, net in enumerate(nets):
        res = run(net, Strategy.CACHING, Thresholds(2, 0))
        for f, hosts in res.after.items():
            for i in net.costs.zones:
                if effective_cost(i, f, res.after, net.costs) != oracle.brute_effective_cost(i, hosts.zones, net.costs):
                    bad.append(f"instance {k} file {f} zone {i}")
    return CheckResult("effective_cost == exhaustive host minimum", len(nets), bad)


def check_gains(nets) -> CheckResult:
    bad = []
    for k, net in enumerate(nets):
        for strategy in Strategy:
            res = run(net, strategy, Thresholds(3, 0))
            gain = access_gain(res.before, res.after, net.demand, net.costs)
            before = oracle.brute_total_cost({f: h.zones for f, h in res.before.items()}, net.demand, net.costs)
            after = oracle.brute_total_cost({f: h.zones for f, h in res.after.items()}, net.demand, net.costs)
            if any(g < 0 for g in gain.cells.values()):
                bad.append(f"instance {k} {strategy.value}: negative cell gain")
            if gain.total != before - after or total_access_cost(res.after, net.demand, net.costs) != after:
                bad.append(f"instance {k} {strategy.value}: gain {gain.total} != {before} - {after}")
    return CheckResult("per-cell gains >= 0 and sum to total gain", len(nets), bad)


def check_counts(nets) -> CheckResult:
    bad = []
    for k, net in enumerate(nets):
        placement = relocate_all(net)
        counts = {}
        for A in A_VALUES:
            for Y in Y_VALUES:
                th = Thresholds(A, Y)
                trig = triggers(placement, net.demand, net.costs, th)
                cached, _ = duplicate(placement, net.demand, net.costs, th, Strategy.CACHING)
                fetched, _ = duplicate(placement, net.demand, net.costs, th, Strategy.FETCHING)
                counts[A, Y] = cached.replica_count()
                if cached.replica_count() != len(trig):
                    bad.append(f"instance {k} A={A} Y={Y}: caching {cached.replica_count()} != triggers {len(trig)}")
                if fetched.replica_count() > cached.replica_count():
                    bad.append(f"instance {k} A={A} Y={Y}: fetching exceeds caching")
        for A in A_VALUES:
            ys = [counts[A, Y] for Y in Y_VALUES]
            if ys != sorted(ys, reverse=True):
                bad.append(f"instance {k} A={A}: caching count increases with Y: {ys}")
        for Y in Y_VALUES:
            as_ = [counts[A, Y] for A in A_VALUES]
            if as_ != sorted(as_, reverse=True):
                bad.append(f"instance {k} Y={Y}: caching count increases with A: {as_}")
    return CheckResult("caching == triggers, monotone in Y and A; fetching <= caching", len(nets), bad)


def check_coverage(nets) -> CheckResult:
    bad = []
    for k, net in enumerate(nets):
        placement = relocate_all(net)
        for A in A_VALUES:
            th = Thresholds(A, 0)
            trig = triggers(placement, net.demand, net.costs, th)
            for strategy in Strategy:
                after, trace = duplicate(placement, net.demand, net.costs, th, strategy)
                if trace.skipped():
                    continue
                for i, f in trig:
                    if effective_cost(i, f, after, net.costs) > A:
                        bad.append(f"instance {k} {strategy.value} A={A}: zone {i} file {f} not covered")
            fetched, trace = duplicate(placement, net.demand, net.costs, th, Strategy.FETCHING)
            if trace.skipped():
                continue
            for f, hosts in fetched.items():
                zones = [i for i, ff in trig if ff == f]
                cover = oracle.brute_min_cost_cover(f, hosts.home, zones, net.demand, net.costs, A)
                if len(cover) > len(hosts.replicas) or len(hosts.replicas) > len(zones):
                    bad.append(f"instance {k} A={A} file {f}: optimal {len(cover)}, fetching {len(hosts.replicas)}")
    return CheckResult("post-duplication coverage and optimal <= fetching <= caching", len(nets), bad)


def _emit(net) -> str:
    out = []
    for strategy in Strategy:
        res = run(net, strategy, Thresholds(4, 1000))
        out.append(format_grid(res.after, net.n) + trace_jsonl(res.trace) + repr(sorted(res.gain.cells.items())))
    return "\n".join(out)


def check_determinism(nets) -> CheckResult:
    bad = [f"instance {k}" for k, net in enumerate(nets) if _emit(net) != _emit(net)]
    return CheckResult("full pipeline determinism", len(nets), bad)


def check_topology(seed: int, count: int) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for k in range(count):
        n = rng.randint(1, 6)
        arcs = oracle.random_connected_arcs(rng, n)
        got = [list(r) for r in costs_from_arcs(n, arcs).rows]
        want = oracle.path_enumeration_costs(n, arcs)
        if got != want:
            bad.append(f"graph {k}: {arcs}")
    return CheckResult("costs_from_arcs == path enumeration", count, bad)


def check_canonical_search(config=None) -> CheckResult:
    from .canonical import canonical_search

    try:
        hits = canonical_search(config)
    except NetworkError as exc:
        return CheckResult("canonical matrix search", 0, [str(exc)])
    bad = []
    if not hits:
        bad.append("reference tables unreproducible under the implemented semantics")
    elif tuple(FROZEN_FREE_VALUES) not in {h.values for h in hits}:
        bad.append(f"frozen values {FROZEN_FREE_VALUES} not among {len(hits)} solutions")
    return CheckResult(f"canonical matrix search ({len(hits)} solutions)", 9**4, bad)


def run_verification(instances: int = 500, graphs: int = 200, seed: int = 0) -> list[CheckResult]:
    nets = random_instances(seed, instances)
    return [
        check_best_location(nets),
        check_effective_cost(nets),
        check_gains(nets),
        check_counts(nets),
        check_coverage(nets),
        check_determinism(nets),
        check_topology(seed, graphs),
        check_canonical_search(),
    ]
