"""Brute-force reference implementations for small instances.

Nothing here calls into placement, duplication or accounting for the
quantity it checks; only the model types are shared. The canonical matrix
search is the exception by design: its constraints are predicates over the
full pipeline output.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass

from .model import MAX_DEMAND, MIN_COST, Cost, CostMatrix, DemandMatrix, FileMeta, Network, validate_network


def brute_best_location(
    f: int, demand: DemandMatrix, costs: CostMatrix, current: int | None = None, rule: str = MIN_COST
) -> int:
    row = demand[f]
    n = len(costs.rows)
    best_zone, best_score = None, None
    for j in range(n):
        if rule == MIN_COST:
            score = 0
            for i in range(n):
                score += row[i] * costs.rows[i][j]
            better = best_score is None or score < best_score
        else:
            score = row[j]
            better = best_score is None or score > best_score
        if better:
            best_zone, best_score = j + 1, score
    if current is not None:
        j = current - 1
        cur = row[j] if rule == MAX_DEMAND else sum(row[i] * costs.rows[i][j] for i in range(n))
        if cur == best_score:
            return current
    return best_zone


def brute_effective_cost(i: int, hosts: Iterable[int], costs: CostMatrix) -> Cost:
    best = None
    for k in hosts:
        c = costs.rows[i - 1][k - 1]
        if best is None or c < best:
            best = c
    return best


def brute_total_cost(hosts_by_file: Mapping[int, Iterable[int]], demand: DemandMatrix, costs: CostMatrix) -> Cost:
    total = 0
    for f, hosts in hosts_by_file.items():
        hosts = list(hosts)
        for i in range(1, costs.n + 1):
            total += demand[f][i - 1] * brute_effective_cost(i, hosts, costs)
    return total


def path_enumeration_costs(n: int, arcs: Iterable[tuple[int, int, Cost]]) -> list[list[Cost | None]]:
    """Cheapest simple path between every zone pair by exhaustive DFS; ``None`` if unreachable."""
    adj: dict[int, dict[int, Cost]] = {z: {} for z in range(1, n + 1)}
    for a, b, w in arcs:
        if b not in adj[a] or w < adj[a][b]:
            adj[a][b] = w
            adj[b][a] = w
    out: list[list[Cost | None]] = [[None] * n for _ in range(n)]

    def walk(start: int, node: int, acc: Cost, seen: set[int]) -> None:
        cur = out[start - 1][node - 1]
        if cur is None or acc < cur:
            out[start - 1][node - 1] = acc
        for nxt, w in adj[node].items():
            if nxt not in seen:
                seen.add(nxt)
                walk(start, nxt, acc + w, seen)
                seen.remove(nxt)

    for s in range(1, n + 1):
        walk(s, s, 0, {s})
    return out


def brute_min_cost_cover(
    f: int, home: int, trigger_zones: Iterable[int], demand: DemandMatrix, costs: CostMatrix, A: Cost
) -> tuple[int, ...]:
    """Smallest replica set putting every trigger zone within ``A`` of some copy of ``f``.

    Ties go to the lower total access cost for ``f``, then the
    lexicographically smallest zone tuple.
    """
    targets = sorted(set(trigger_zones))
    n = costs.n
    others = [z for z in range(1, n + 1) if z != home]
    for size in range(len(others) + 1):
        best_key, best_set = None, None
        for combo in itertools.combinations(others, size):
            hosts = (home, *combo)
            if all(brute_effective_cost(t, hosts, costs) <= A for t in targets):
                key = (brute_total_cost({f: hosts}, demand, costs), combo)
                if best_key is None or key < best_key:
                    best_key, best_set = key, combo
        if best_set is not None:
            return best_set
    raise ValueError(f"file {f}: no replica set covers zones {targets} within A={A}")


@dataclass(frozen=True)
class SearchHit:
    values: tuple[Cost, ...]
    matrix: CostMatrix


Constraint = Callable[[CostMatrix], bool]


def matrix_constraint_search(
    fixed_entries: Mapping[tuple[int, int], Cost],
    free_entry_domains: Mapping[tuple[int, int], Iterable[Cost]],
    constraints: Sequence[Constraint],
    n: int | None = None,
) -> list[SearchHit]:
    """Enumerate every assignment of the free pair costs and keep those passing all constraints.

    Pairs are 1-based and symmetric; the diagonal is zero. Constraints are
    evaluated in order and short-circuit, so put cheap ones first.
    """
    pairs = list(free_entry_domains)
    if len(pairs) > 6:
        raise ValueError("at most 6 free entries are supported")
    if n is None:
        n = max(max(p) for p in [*fixed_entries, *pairs]) if (fixed_entries or pairs) else 1
    domains = [list(free_entry_domains[p]) for p in pairs]
    hits = []
    for values in itertools.product(*domains):
        rows = [[0] * n for _ in range(n)]
        filled = {(i, i) for i in range(1, n + 1)}
        for (i, j), v in [*fixed_entries.items(), *zip(pairs, values)]:
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = v
            filled |= {(i, j), (j, i)}
        if len(filled) != n * n:
            missing = sorted({(i, j) for i in range(1, n + 1) for j in range(1, n + 1)} - filled)
            raise ValueError(f"pairs without a fixed or free cost: {missing[:4]}")
        matrix = CostMatrix(tuple(tuple(r) for r in rows))
        if all(c(matrix) for c in constraints):
            hits.append(SearchHit(tuple(values), matrix))
    return hits


def random_network(
    rng: random.Random,
    max_zones: int = 6,
    max_files: int = 6,
    max_cost: int = 9,
    max_hits: int = 200_000,
    rule: str = MIN_COST,
) -> Network:
    n = rng.randint(1, max_zones)
    nf = rng.randint(1, max_files)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randint(0, max_cost)
    # a coarse hit scale makes exact ties (and thus the tie-break rules) common
    step = rng.choice((1, 1000, max_hits // 4 or 1))
    hits = {f: [rng.randint(0, max_hits // step) * step for _ in range(n)] for f in range(1, nf + 1)}
    catalog = [FileMeta(f, rng.randint(1, n), rng.choice((1, 50, 100))) for f in range(1, nf + 1)]
    return validate_network(rows, hits, catalog, rule)


def random_connected_arcs(rng: random.Random, n: int, max_weight: int = 9) -> list[tuple[int, int, int]]:
    """Random spanning tree plus random extra arcs (parallel arcs allowed)."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    arcs = []
    for idx in range(1, n):
        a, b = order[idx], order[rng.randrange(idx)]
        arcs.append((a, b, rng.randint(1, max_weight)))
    for _ in range(rng.randint(0, n * (n - 1) // 2 + 1)):
        a, b = rng.sample(range(1, n + 1), 2) if n > 1 else (1, 1)
        if a != b:
            arcs.append((a, b, rng.randint(1, max_weight)))
    return arcs
