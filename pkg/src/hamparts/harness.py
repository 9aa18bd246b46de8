"""Exhaustive and randomized verification sweeps with machine-readable reports.

The exhaustive sweep enumerates every labeled balanced k-partite graph on the
canonical block partition whose minimum degree meets a floor.  Cross-part
vertex pairs are ordered lexicographically and toggled like a binary counter
(pair 0 is the most significant bit); a subtree is skipped as soon as some
vertex can no longer reach the floor with the toggles that remain.  Shards
fix the high-order bits of that counter, so shards partition the subset space
exactly and their counters merge by addition.

Reports serialize to JSON with a schema version; apart from the
``wall_time_seconds`` field they are byte-identical across repeat runs with
equal parameters and seed.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .families import build_family_F, recognize
from .graphs import (
    GraphError,
    KPartiteGraph,
    SizeGuardError,
    blocks_partition,
    decode,
    encode,
    is_independent,
)
from .solver import (
    BipartiteDegreeOne,
    ExhaustiveSearch,
    IndependentSetTooLarge,
    SmallCut,
    _ham_search,
    find_hamiltonian_cycle,
    non_hamiltonicity_witness,
    witness_certifies,
)
from .thresholds import (
    _ceil_div,
    check_appendix_facts,
    is_exception,
    required_degree,
    scan_domcycle_threshold,
    scan_eq4_identity,
    theorem_threshold,
)

SCHEMA_VERSION = 1
EXHAUSTIVE_MAX_N = 9
CHARACTERIZATION_NS = (8, 12)


@dataclass
class VerificationReport:
    """Machine-readable outcome of one verification run."""

    kind: str
    params: dict
    counters: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    exceptional: list = field(default_factory=list)
    self_check_ok: bool | None = None
    wall_time_seconds: float = 0.0
    schema_version: int = SCHEMA_VERSION
    artifact_version: str = __version__

    @property
    def ok(self) -> bool:
        if self.counterexamples:
            return False
        if self.kind == "characterization":
            return all(entry.get("classification") for entry in self.exceptional)
        return True

    def to_json(self, *, indent: int | None = 2) -> str:
        payload = {
            "schema_version": self.schema_version,
            "artifact_version": self.artifact_version,
            "kind": self.kind,
            "params": self.params,
            "counters": self.counters,
            "counterexamples": self.counterexamples,
            "exceptional": self.exceptional,
            "self_check_ok": self.self_check_ok,
            "wall_time_seconds": self.wall_time_seconds,
        }
        return json.dumps(payload, indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        payload = json.loads(text)
        return cls(
            kind=payload["kind"],
            params=payload["params"],
            counters=payload["counters"],
            counterexamples=payload["counterexamples"],
            exceptional=payload["exceptional"],
            self_check_ok=payload.get("self_check_ok"),
            wall_time_seconds=payload.get("wall_time_seconds", 0.0),
            schema_version=payload["schema_version"],
            artifact_version=payload["artifact_version"],
        )

    def write(self, path) -> None:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(self.to_json())
            handle.write("\n")


def cross_pairs(n: int, k: int) -> list[tuple[int, int]]:
    """Cross-part vertex pairs of the block partition, lexicographic order."""
    part_of = blocks_partition(n, k)
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]


def _witness_payload(witness) -> dict:
    if isinstance(witness, IndependentSetTooLarge):
        return {"type": "independent_set", "vertices": sorted(witness.vertices)}
    if isinstance(witness, SmallCut):
        return {"type": "small_cut", "vertices": sorted(witness.vertices)}
    if isinstance(witness, BipartiteDegreeOne):
        return {
            "type": "bipartite_degree_one",
            "a_side": sorted(witness.a_side),
            "vertex": witness.vertex,
        }
    if isinstance(witness, ExhaustiveSearch):
        return {"type": "exhaustive_search", "nodes": witness.nodes}
    return {"type": "none"}


def _enumerate_shard(
    n: int,
    k: int,
    floor: int,
    shards: int,
    shard_id: int,
    visit,
) -> tuple[int, int]:
    """Run ``visit(subset_id, adj)`` for every floor-satisfying graph in the
    shard.  Returns (edge subsets covered, graphs visited)."""
    pairs = cross_pairs(n, k)
    total_pairs = len(pairs)
    prefix_bits = min((shards - 1).bit_length(), total_pairs) if shards > 1 else 0
    # rem_after[i][v]: pairs with index > i incident to v.
    rem = [0] * n
    rem_after = [None] * (total_pairs + 1)
    rem_after[total_pairs] = tuple(rem)
    for i in range(total_pairs - 1, -1, -1):
        u, v = pairs[i]
        rem = list(rem_after[i + 1])
        rem[u] += 1
        rem[v] += 1
        rem_after[i] = tuple(rem)
    pair_bit = [1 << (total_pairs - 1 - i) for i in range(total_pairs)]
    ubits = [1 << u for u, _ in pairs]
    vbits = [1 << v for _, v in pairs]

    adj = [0] * n
    deg = [0] * n
    visited = 0

    def rec(i: int, sid: int) -> None:
        nonlocal visited
        if i == total_pairs:
            visited += 1
            visit(sid, adj)
            return
        u, v = pairs[i]
        nxt = rem_after[i + 1]
        adj[u] |= vbits[i]
        adj[v] |= ubits[i]
        deg[u] += 1
        deg[v] += 1
        rec(i + 1, sid | pair_bit[i])
        adj[u] &= ~vbits[i]
        adj[v] &= ~ubits[i]
        deg[u] -= 1
        deg[v] -= 1
        if deg[u] + nxt[u] >= floor and deg[v] + nxt[v] >= floor:
            rec(i + 1, sid)

    if any(rem_after[0][v] < floor for v in range(n)):
        # No graph on this partition can meet the floor; space still counted.
        prefixes = range(1 << prefix_bits)
        owned = sum(1 for p in prefixes if p % shards == shard_id)
        return owned << (total_pairs - prefix_bits), 0

    space = 0
    for prefix in range(1 << prefix_bits):
        if shards > 1 and prefix % shards != shard_id:
            continue
        space += 1 << (total_pairs - prefix_bits)
        # Apply the fixed high-order decisions for this prefix.
        feasible = True
        applied = []
        sid = 0
        for i in range(prefix_bits):
            u, v = pairs[i]
            present = (prefix >> (prefix_bits - 1 - i)) & 1
            if present:
                adj[u] |= vbits[i]
                adj[v] |= ubits[i]
                deg[u] += 1
                deg[v] += 1
                applied.append(i)
                sid |= pair_bit[i]
            else:
                nxt = rem_after[i + 1]
                if deg[u] + nxt[u] < floor or deg[v] + nxt[v] < floor:
                    feasible = False
                    break
        if feasible:
            rec(prefix_bits, sid)
        for i in applied:
            u, v = pairs[i]
            adj[u] &= ~vbits[i]
            adj[v] &= ~ubits[i]
            deg[u] -= 1
            deg[v] -= 1
    return space, visited


def _run_exhaustive_shard(args) -> dict:
    """Worker: enumerate one shard, decide Hamiltonicity of every graph."""
    n, k, floor, shards, shard_id = args
    part_of = blocks_partition(n, k)
    part_masks = [0] * k
    for v, p in enumerate(part_of):
        part_masks[p] |= 1 << v
    # Parts are independent sets regardless of which edges are present, so
    # their masks feed the solver's cardinality prune with no per-graph cost.
    unions = sorted(set(part_masks))
    non_ham: list[tuple[int, tuple[int, ...]]] = []
    ham_count = 0

    def visit(sid: int, adj: list[int]) -> None:
        nonlocal ham_count
        order, _ = _ham_search(n, tuple(adj), unions)
        if order is None:
            non_ham.append((sid, tuple(adj)))
        else:
            ham_count += 1

    space, visited = _enumerate_shard(n, k, floor, shards, shard_id, visit)
    return {
        "space": space,
        "meeting_floor": visited,
        "hamiltonian": ham_count,
        "non_hamiltonian": non_ham,
    }


def _expectation_mode(n: int, k: int, floor: int) -> str:
    if is_exception(n, k) and floor == theorem_threshold(n, k):
        return "characterize"
    return "assert_hamiltonian"


def _finish_exhaustive(
    n: int,
    k: int,
    floor: int,
    shards: int,
    shard_id: int | None,
    shard_results: list[dict],
    kind: str,
    started: float,
    classify: bool,
) -> VerificationReport:
    counters = {
        "graphs_enumerated": sum(r["space"] for r in shard_results),
        "graphs_above_threshold": sum(r["meeting_floor"] for r in shard_results),
        "hamiltonian_found": sum(r["hamiltonian"] for r in shard_results),
        "witnesses_found": 0,
    }
    non_ham = sorted(
        (item for r in shard_results for item in r["non_hamiltonian"]),
        key=lambda item: item[0],
    )
    part_of = blocks_partition(n, k)
    mode = _expectation_mode(n, k, floor)
    counterexamples = []
    exceptional = []
    for sid, adj in non_ham:
        g = KPartiteGraph(part_of, adj)
        witness = non_hamiltonicity_witness(g)
        if witness is not None:
            counters["witnesses_found"] += 1
        entry = {
            "graph": encode(g),
            "witness": _witness_payload(witness) if witness else None,
        }
        if mode == "characterize":
            if classify and n == 2 * k and n % 4 == 0:
                entry["classification"] = recognize(g)
            else:
                entry["classification"] = None
            exceptional.append(entry)
        else:
            counterexamples.append(entry)
    report = VerificationReport(
        kind=kind,
        params={
            "n": n,
            "k": k,
            "degree_floor": floor,
            "shards": shards,
            "shard_id": shard_id,
            "seed": None,
            "trials": None,
        },
        counters=counters,
        counterexamples=counterexamples,
        exceptional=exceptional,
    )
    report.self_check_ok = _self_check(report)
    report.wall_time_seconds = round(time.monotonic() - started, 6)
    return report


def _self_check(report: VerificationReport) -> bool:
    """Re-decode and re-solve every recorded graph; statuses must reproduce."""
    for entry in report.counterexamples + report.exceptional:
        graph_text = entry.get("graph")
        if graph_text is None:
            continue
        g = decode(graph_text)
        if g.n >= 3 and find_hamiltonian_cycle(g) is not None:
            return False
        witness = entry.get("witness")
        if witness is not None and witness["type"] != "exhaustive_search":
            rebuilt = _witness_from_payload(witness)
            if rebuilt is not None and not witness_certifies(g, rebuilt):
                return False
    return True


def _witness_from_payload(payload: dict):
    kind = payload.get("type")
    if kind == "small_cut":
        return SmallCut(frozenset(payload["vertices"]))
    if kind == "independent_set":
        return IndependentSetTooLarge(frozenset(payload["vertices"]))
    if kind == "bipartite_degree_one":
        return BipartiteDegreeOne(frozenset(payload["a_side"]), payload["vertex"])
    if kind == "exhaustive_search":
        return ExhaustiveSearch(payload["nodes"])
    return None


def exhaustive_verify(
    n: int,
    k: int,
    degree_floor: int | None = None,
    *,
    shards: int = 1,
    shard_id: int | None = None,
    jobs: int = 1,
    max_n: int = EXHAUSTIVE_MAX_N,
    _kind: str = "exhaustive",
    _classify: bool = True,
) -> VerificationReport:
    """Enumerate every balanced k-partite graph with min degree >= the floor
    and assert Hamiltonicity (or collect the exceptional graphs when the
    floor sits exactly at the threshold inside an exception regime)."""
    started = time.monotonic()
    if k < 2 or n % k != 0 or n < 3:
        raise ValueError(f"need k >= 2, k | n, n >= 3; got n={n} k={k}")
    if n > max_n:
        raise SizeGuardError(f"exhaustive enumeration guarded at n <= {max_n}, got {n}")
    if shards < 1:
        raise ValueError(f"shards must be positive, got {shards}")
    if shard_id is not None and not 0 <= shard_id < shards:
        raise ValueError(f"shard_id must lie in [0, {shards}), got {shard_id}")
    floor = required_degree(n, k) if degree_floor is None else degree_floor
    if shard_id is not None:
        results = [_run_exhaustive_shard((n, k, floor, shards, shard_id))]
        return _finish_exhaustive(
            n, k, floor, shards, shard_id, results, _kind, started, _classify
        )
    shard_args = [(n, k, floor, shards, i) for i in range(shards)]
    if jobs > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, shards)) as pool:
            results = list(pool.map(_run_exhaustive_shard, shard_args))
    else:
        results = [_run_exhaustive_shard(args) for args in shard_args]
    return _finish_exhaustive(
        n, k, floor, shards, None, results, _kind, started, _classify
    )


def characterization_check(
    n: int, k: int, *, shards: int = 1, jobs: int = 1, long_run: bool = False
) -> VerificationReport:
    """Enumerate min degree >= n/2 - 1 graphs in the n = 2k exception regime
    and classify every non-Hamiltonian one; unrecognized graphs are
    violations."""
    if n != 2 * k or n % 4 != 0:
        raise ValueError(f"characterization regime needs n = 2k with 4 | n, got n={n} k={k}")
    allowed = CHARACTERIZATION_NS if long_run else CHARACTERIZATION_NS[:1]
    if n not in allowed:
        raise SizeGuardError(
            f"characterization guarded at n in {allowed}, got {n}"
        )
    report = exhaustive_verify(
        n,
        k,
        theorem_threshold(n, k),
        shards=shards,
        jobs=jobs,
        max_n=max(allowed),
        _kind="characterization",
    )
    return report


def sample_verify(
    n: int,
    k: int,
    trials: int,
    seed: int,
    *,
    degree_floor: int | None = None,
    max_retries: int = 200,
    size_limit: int = 40,
) -> VerificationReport:
    """Random near-threshold graphs conditioned on the degree floor; asserts
    Hamiltonicity (or classifies, in the exception-at-threshold mode).

    Each cross-part pair is included independently with probability p, where
    p sweeps a small grid placing the expected degree at floor, floor+1 and
    floor+2; rejection sampling enforces the floor, with bounded retries.
    """
    started = time.monotonic()
    if k < 2 or n % k != 0 or n < 3:
        raise ValueError(f"need k >= 2, k | n, n >= 3; got n={n} k={k}")
    if n > size_limit:
        raise SizeGuardError(f"sampling guarded at n <= {size_limit}, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    floor = required_degree(n, k) if degree_floor is None else degree_floor
    mode = _expectation_mode(n, k, floor)
    part_of = blocks_partition(n, k)
    pairs = cross_pairs(n, k)
    m = n // k
    cross_degree = n - m
    grid = [min(1.0, (floor + bump) / cross_degree) for bump in (0, 1, 2)]
    rng = random.Random(seed)
    counters = {
        "graphs_enumerated": 0,
        "graphs_above_threshold": 0,
        "hamiltonian_found": 0,
        "witnesses_found": 0,
        "infeasible_trials": 0,
    }
    counterexamples = []
    exceptional = []
    classify_ok = n == 2 * k and n % 4 == 0 and n <= 16
    for trial in range(trials):
        p = grid[trial % len(grid)]
        adj = None
        for _ in range(max_retries):
            counters["graphs_enumerated"] += 1
            candidate = [0] * n
            for u, v in pairs:
                if rng.random() < p:
                    candidate[u] |= 1 << v
                    candidate[v] |= 1 << u
            if min(row.bit_count() for row in candidate) >= floor:
                adj = candidate
                break
        if adj is None:
            counters["infeasible_trials"] += 1
            continue
        counters["graphs_above_threshold"] += 1
        g = KPartiteGraph(part_of, adj)
        if find_hamiltonian_cycle(g) is not None:
            counters["hamiltonian_found"] += 1
            continue
        witness = non_hamiltonicity_witness(g)
        if witness is not None:
            counters["witnesses_found"] += 1
        entry = {
            "graph": encode(g),
            "witness": _witness_payload(witness) if witness else None,
        }
        if mode == "characterize":
            entry["classification"] = recognize(g) if classify_ok else None
            exceptional.append(entry)
        else:
            counterexamples.append(entry)
    report = VerificationReport(
        kind="sample",
        params={
            "n": n,
            "k": k,
            "degree_floor": floor,
            "shards": 1,
            "shard_id": None,
            "seed": seed,
            "trials": trials,
        },
        counters=counters,
        counterexamples=counterexamples,
        exceptional=exceptional,
    )
    report.self_check_ok = _self_check(report)
    report.wall_time_seconds = round(time.monotonic() - started, 6)
    return report


def tightness_scan(
    k_max: int, m_max: int, *, solver_limit: int = 12
) -> VerificationReport:
    """Build the canonical threshold-minus-one family member for every (k, m)
    and verify its degree and its oversized-independent-set certificate; the
    solver double-checks non-Hamiltonicity up to ``solver_limit`` vertices."""
    started = time.monotonic()
    if k_max < 2 or m_max < 1:
        raise ValueError("k_max must be >= 2 and m_max >= 1")
    counters = {
        "members_checked": 0,
        "certificates_valid": 0,
        "solver_confirmed": 0,
        "infeasible_specs": 0,
    }
    counterexamples = []
    for k in range(2, k_max + 1):
        for m in range(1, m_max + 1):
            n = m * k
            if n < 3:
                continue
            try:
                g = build_family_F(k, m)
            except GraphError as exc:
                counters["infeasible_specs"] += 1
                counterexamples.append(
                    {"k": k, "m": m, "failure": f"infeasible default sizes: {exc}"}
                )
                continue
            counters["members_checked"] += 1
            failures = []
            expected = theorem_threshold(n, k) - 1
            if g.min_degree() != expected:
                failures.append(
                    f"min degree {g.min_degree()} != threshold-1 = {expected}"
                )
            designated = g.meta["independent_set"]
            target = _ceil_div(n + 1, 2)
            if len(designated) != target or not is_independent(g, designated):
                failures.append("independent-set certificate invalid")
            else:
                counters["certificates_valid"] += 1
            if n <= solver_limit:
                if find_hamiltonian_cycle(g) is not None:
                    failures.append("solver found a Hamiltonian cycle")
                else:
                    counters["solver_confirmed"] += 1
            if failures:
                counterexamples.append(
                    {"k": k, "m": m, "graph": encode(g), "failure": "; ".join(failures)}
                )
    report = VerificationReport(
        kind="tightness",
        params={
            "k_max": k_max,
            "m_max": m_max,
            "solver_limit": solver_limit,
            "seed": None,
        },
        counters=counters,
        counterexamples=counterexamples,
    )
    report.self_check_ok = _self_check(report)
    report.wall_time_seconds = round(time.monotonic() - started, 6)
    return report


def facts_report(k_max: int, m_max: int) -> VerificationReport:
    """Wrap the exact-arithmetic scans in a report: supporting facts, the
    floor identity, and the long-cycle threshold comparison."""
    started = time.monotonic()
    facts = check_appendix_facts(k_max, m_max)
    eq_failures = scan_eq4_identity(k_max, m_max)
    dom_failures = scan_domcycle_threshold(k_max, m_max)
    unexpected_dom = [pair for pair in dom_failures if pair != (8, 4)]
    counterexamples = [
        {"fact": name, "n": n, "k": k} for name, n, k in facts.violations
    ]
    counterexamples.extend(
        {"fact": "eq4_identity", "n": n, "k": k} for n, k in eq_failures
    )
    counterexamples.extend(
        {"fact": "domcycle_threshold", "n": n, "k": k} for n, k in unexpected_dom
    )
    counters = dict(sorted(facts.checked.items()))
    counters["eq4_checked"] = sum(
        1 for k in range(2, k_max + 1) for m in range(1, m_max + 1)
    )
    counters["domcycle_checked"] = sum(
        1 for k in range(3, k_max + 1) for m in range(2, m_max + 1)
    )
    counters["domcycle_expected_failures"] = sum(
        1 for pair in dom_failures if pair == (8, 4)
    )
    report = VerificationReport(
        kind="facts",
        params={"k_max": k_max, "m_max": m_max, "seed": None},
        counters=counters,
        counterexamples=counterexamples,
    )
    report.self_check_ok = True
    report.wall_time_seconds = round(time.monotonic() - started, 6)
    return report


__all__ = [
    "VerificationReport",
    "characterization_check",
    "cross_pairs",
    "exhaustive_verify",
    "facts_report",
    "sample_verify",
    "tightness_scan",
]
