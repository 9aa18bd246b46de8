"""Sufficient-condition predicates and cycle diagnostics.

Three checkers live here: the sorted-degree implication that forces a
Hamiltonian cycle in a balanced bipartite graph, the strongly-dominating
property of a cycle (everything off the cycle is independent and no two
neighbours of outside vertices sit consecutively on it), and a diagnostic
that reads off the successor/predecessor sets of an outside vertex along a
cycle together with the inequalities they are expected to satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    CycleCertificate,
    GraphError,
    KPartiteGraph,
    SizeGuardError,
    _bits,
    connected_components,
    is_independent,
)
from .solver import (
    enumerate_longest_cycles,
    find_hamiltonian_cycle,
    verify_cycle,
)
from .thresholds import _ceil_div

HOLDS = "holds"
NOT_APPLICABLE = "not_applicable"
VIOLATED = "violated"


def chvatal_bipartite_condition(h: KPartiteGraph, u_part: int = 0) -> bool:
    """Sorted-degree test on a balanced bipartite graph.

    With the two sides' degree sequences sorted ascending as u_1..u_{n/2} and
    v_1..v_{n/2}, returns True iff for every t < n/2, d(v_t) <= t implies
    d(u_{n/2-t}) >= n/2 - t + 1.  A True return forces a Hamiltonian cycle;
    False implies nothing.  The test is directional, so the caller designates
    which part plays U via ``u_part``.
    """
    if h.k != 2:
        raise GraphError(f"chvatal test needs a 2-partite graph, got k={h.k}")
    if u_part not in (0, 1):
        raise GraphError(f"u_part must be 0 or 1, got {u_part}")
    u_members = h.part_members(u_part)
    v_members = h.part_members(1 - u_part)
    if len(u_members) != len(v_members):
        raise GraphError(
            f"sides must have equal size, got {len(u_members)} and {len(v_members)}"
        )
    if h.n < 4:
        raise GraphError(f"chvatal test needs n >= 4, got n={h.n}")
    half = h.n // 2
    du = sorted(h.degree(v) for v in u_members)
    dv = sorted(h.degree(v) for v in v_members)
    for t in range(1, half):
        if dv[t - 1] <= t and du[half - t - 1] < half - t + 1:
            return False
    return True


def is_strongly_dominating(g: KPartiteGraph, cycle: CycleCertificate) -> bool:
    """True iff vertices off the cycle form an independent set and no two of
    their neighbours appear consecutively on the cycle."""
    if not verify_cycle(g, cycle):
        raise GraphError("certificate is not a cycle of this graph")
    on_cycle = 0
    for v in cycle.vertices:
        on_cycle |= 1 << v
    outside = ((1 << g.n) - 1) ^ on_cycle
    if any(g.adj[v] & outside for v in _bits(outside)):
        return False
    touched = 0
    for v in _bits(outside):
        touched |= g.adj[v]
    vs = cycle.vertices
    length = len(vs)
    for i in range(length):
        a, b = vs[i], vs[(i + 1) % length]
        if (touched >> a) & 1 and (touched >> b) & 1:
            return False
    return True


@dataclass(frozen=True)
class DomCycleOutcome:
    status: str
    counter_cycle: CycleCertificate | None = None


def _two_connected(g: KPartiteGraph) -> bool:
    """Connected with no cut vertex (cheaper than full connectivity)."""
    if g.n < 3 or len(connected_components(g)) > 1:
        return False
    return all(
        len(connected_components(g, removed=1 << v)) == 1 for v in range(g.n)
    )


def check_domcycle_lemma(g: KPartiteGraph, *, size_limit: int = 14) -> DomCycleOutcome:
    """Every longest cycle of a 2-connected graph with min degree >= (n+2)/3
    should be strongly dominating; this checks that claim on one graph.

    Returns NOT_APPLICABLE when the hypotheses fail, HOLDS when every longest
    cycle is strongly dominating, and VIOLATED with a counter-cycle otherwise
    (no violation is expected to exist).
    """
    if g.n > size_limit:
        raise SizeGuardError(f"lemma check guarded at n <= {size_limit}, got {g.n}")
    if g.n < 3 or 3 * g.min_degree() < g.n + 2:
        return DomCycleOutcome(NOT_APPLICABLE)
    if not _two_connected(g):
        return DomCycleOutcome(NOT_APPLICABLE)
    # A Hamiltonian graph is immediate: every longest cycle spans the graph,
    # leaving nothing outside.
    if find_hamiltonian_cycle(g) is not None:
        return DomCycleOutcome(HOLDS)
    for cycle in enumerate_longest_cycles(g):
        if not is_strongly_dominating(g, cycle):
            return DomCycleOutcome(VIOLATED, cycle)
    return DomCycleOutcome(HOLDS)


@dataclass(frozen=True)
class SuccessorProfile:
    """Successor/predecessor sets of an off-cycle vertex, with the sanity
    flags the surrounding argument expects of a longest cycle.

    ``succ_set`` is everything off the cycle plus the cycle-successor of each
    on-cycle neighbour of z; ``pred_set`` is the predecessor analogue.
    ``succ_parts``/``pred_parts`` count how many parts each set meets.  The
    boolean flags record, without failing, whether the expected inequalities
    hold for this instance.
    """

    cycle: CycleCertificate
    z: int
    succ_set: frozenset[int]
    pred_set: frozenset[int]
    succ_parts: int
    pred_parts: int
    succ_independent: bool
    pred_independent: bool
    sets_large_enough: bool
    parts_at_least_half: bool
    parts_below_upper: bool


def successor_profile(g: KPartiteGraph, cycle: CycleCertificate, z: int) -> SuccessorProfile:
    """Compute the successor/predecessor diagnostic for off-cycle vertex z."""
    if not verify_cycle(g, cycle):
        raise GraphError("certificate is not a cycle of this graph")
    vs = cycle.vertices
    if z in vs:
        raise GraphError(f"vertex {z} lies on the cycle")
    if not 0 <= z < g.n:
        raise GraphError(f"vertex {z} out of range")
    length = len(vs)
    position = {v: i for i, v in enumerate(vs)}
    outside = frozenset(range(g.n)) - set(vs)
    succ = set(outside)
    pred = set(outside)
    for v in _bits(g.adj[z]):
        if v in position:
            i = position[v]
            succ.add(vs[(i + 1) % length])
            pred.add(vs[(i - 1) % length])
    delta = g.min_degree()
    succ_parts = len({g.part_of[v] for v in succ})
    pred_parts = len({g.part_of[v] for v in pred})
    half_floor = _ceil_div(g.k, 2)
    half_ceil = _ceil_div(g.k + 1, 2)
    return SuccessorProfile(
        cycle=cycle,
        z=z,
        succ_set=frozenset(succ),
        pred_set=frozenset(pred),
        succ_parts=succ_parts,
        pred_parts=pred_parts,
        succ_independent=is_independent(g, succ),
        pred_independent=is_independent(g, pred),
        sets_large_enough=len(succ) >= delta + 1 and len(pred) >= delta + 1,
        parts_at_least_half=succ_parts >= half_floor and pred_parts >= half_floor,
        parts_below_upper=succ_parts + pred_parts < 2 * half_ceil,
    )
