"""Exact Hamiltonian-cycle and longest-cycle search with certified outputs.

The Hamiltonicity search is depth-first path extension over bitmask vertex
sets.  It starts from a minimum-degree vertex, extends toward the candidate
with the fewest remaining options first, and prunes a branch when (a) some
unvisited vertex has fewer than two usable neighbours left, (b) the remaining
graph is disconnected, or (c) an independent union of parts is too large to
fit in the remaining stretch of the cycle.  Tie-breaking is by vertex id
everywhere, so results are reproducible run to run.

Non-Hamiltonicity is reported through checkable witnesses wherever a cheap
certificate exists; exhaustive search is the fallback at small n only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import (
    CycleCertificate,
    GraphError,
    KPartiteGraph,
    SizeGuardError,
    _bits,
    _max_independent,
    connected_components,
    is_independent,
)

HAM_SIZE_LIMIT = 40
LONGEST_SIZE_LIMIT = 20
ENUMERATE_SIZE_LIMIT = 14
ALPHA_WITNESS_LIMIT = 28


@dataclass(frozen=True)
class SmallCut:
    """Removing ``vertices`` leaves more components than vertices removed."""

    vertices: frozenset[int]


@dataclass(frozen=True)
class IndependentSetTooLarge:
    """An independent set on more than half the vertices."""

    vertices: frozenset[int]


@dataclass(frozen=True)
class BipartiteDegreeOne:
    """An independent half ``a_side`` plus a B-side vertex with at most one
    neighbour across the split, so no cycle can alternate through it."""

    a_side: frozenset[int]
    vertex: int


@dataclass(frozen=True)
class ExhaustiveSearch:
    """No cycle found by complete search; ``nodes`` is the search tree size."""

    nodes: int


NonHamWitness = Union[SmallCut, IndependentSetTooLarge, BipartiteDegreeOne, ExhaustiveSearch]


def verify_cycle(g: KPartiteGraph, cert: CycleCertificate) -> bool:
    """True iff the certificate is a genuine cycle of g: distinct in-range
    vertices, length at least 3, consecutively adjacent with wraparound."""
    vs = cert.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def _independent_part_unions(g: KPartiteGraph) -> list[int]:
    """Independent unions of whole parts, grown greedily from each part.

    Used by the cardinality prune: vertices of an independent set must be
    pairwise non-adjacent along the cycle, so no such union may exceed half
    of any remaining stretch.
    """
    k = g.k
    crossing = [0] * k
    for p in range(k):
        mask = g.part_masks[p]
        for v in _bits(mask):
            row = g.adj[v]
            for q in range(k):
                if row & g.part_masks[q]:
                    crossing[p] |= 1 << q
    order = sorted(range(k), key=lambda p: -g.part_masks[p].bit_count())
    unions = set()
    for start in range(k):
        chosen = 1 << start
        blocked = crossing[start]
        for p in order:
            bit = 1 << p
            if chosen & bit or blocked & bit:
                continue
            chosen |= bit
            blocked |= crossing[p]
        mask = 0
        for p in _bits(chosen):
            mask |= g.part_masks[p]
        unions.add(mask)
    return sorted(unions)


def _ham_search(
    n: int,
    adj: tuple[int, ...],
    unions: list[int],
) -> tuple[tuple[int, ...] | None, int]:
    """Core search.  Returns (cycle vertex order or None, nodes expanded)."""
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (adj[v].bit_count(), v))
    sbit = 1 << start
    adj_start = adj[start]
    path = [start]
    nodes = 0

    def extend(u: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if visited == full:
            return bool(adj[u] & sbit)
        unvisited = full ^ visited
        ubit = 1 << u
        # (a) every unvisited vertex still needs two usable neighbours, and
        # the start vertex needs a future way back in.
        if not adj_start & unvisited:
            return False
        for w in _bits(unvisited):
            usable = (unvisited ^ (1 << w)) | ubit | sbit
            if (adj[w] & usable).bit_count() < 2:
                return False
        # (b) the unvisited region plus the current endpoint must be connected.
        target = unvisited | ubit
        seen = ubit
        frontier = ubit
        while frontier:
            grown = 0
            for x in _bits(frontier):
                grown |= adj[x]
            frontier = grown & target & ~seen
            seen |= frontier
        if seen != target:
            return False
        # (c) independent part unions must fit in the remaining stretch.
        cap = (unvisited.bit_count() + 1) // 2
        for mask in unions:
            if (mask & unvisited).bit_count() > cap:
                return False
        cands = sorted(
            _bits(adj[u] & unvisited),
            key=lambda v: ((adj[v] & (unvisited | sbit)).bit_count(), v),
        )
        for v in cands:
            path.append(v)
            if extend(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    if n >= 3 and extend(start, sbit):
        return tuple(path), nodes
    return None, nodes


def _decide_hamiltonian(g: KPartiteGraph) -> tuple[tuple[int, ...] | None, int]:
    if g.min_degree() < 2:
        return None, 0
    if len(connected_components(g)) > 1:
        return None, 0
    return _ham_search(g.n, g.adj, _independent_part_unions(g))


def find_hamiltonian_cycle(
    g: KPartiteGraph, *, size_limit: int = HAM_SIZE_LIMIT
) -> CycleCertificate | None:
    """A Hamiltonian cycle of g, or None if there is none.  Exact."""
    if g.n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got n={g.n}")
    if g.n > size_limit:
        raise SizeGuardError(f"hamiltonian search guarded at n <= {size_limit}, got {g.n}")
    order, _ = _decide_hamiltonian(g)
    if order is None:
        return None
    cert = CycleCertificate(order)
    assert verify_cycle(g, cert)
    return cert


# -- longest cycles -----------------------------------------------------------


def _open_reachable(adj: tuple[int, ...], u: int, open_mask: int) -> int:
    """Vertices of ``open_mask`` reachable from u through ``open_mask``."""
    seen = adj[u] & open_mask
    frontier = seen
    while frontier:
        grown = 0
        for x in _bits(frontier):
            grown |= adj[x]
        frontier = grown & open_mask & ~seen
        seen |= frontier
    return seen


def _longest_search(
    g: KPartiteGraph, *, target: int | None = None
) -> tuple[int, tuple[int, ...] | None, set[tuple[int, ...]]]:
    """Branch-and-bound longest-cycle search.

    With ``target`` set, collects every cycle of exactly that length instead
    (canonicalised up to rotation and reflection); otherwise returns one
    longest cycle.  Cycles are rooted at their minimum vertex, so each one is
    generated from a single anchor, once per direction.
    """
    n, adj = g.n, g.adj
    best_len = 0
    best: tuple[int, ...] | None = None
    found: set[tuple[int, ...]] = set()
    collect = target is not None
    if collect:
        best_len = target

    for anchor in range(n):
        remaining = n - anchor
        if remaining < 3 or remaining < best_len:
            break
        if not collect and remaining == best_len:
            break
        allowed = ((1 << n) - 1) & ~((1 << anchor) - 1)
        abit = 1 << anchor
        path = [anchor]

        def dfs(u: int, visited: int) -> bool:
            nonlocal best_len, best
            plen = len(path)
            if plen >= 3 and (adj[u] >> anchor) & 1:
                if collect:
                    if plen == best_len:
                        seq = tuple(path)
                        mirror = (anchor,) + tuple(reversed(seq[1:]))
                        found.add(min(seq, mirror))
                elif plen > best_len:
                    best_len = plen
                    best = tuple(path)
                    if best_len == n:
                        return True
            open_mask = allowed & ~visited
            bound = plen + _open_reachable(adj, u, open_mask).bit_count()
            if bound < best_len or (not collect and bound == best_len):
                return False
            for v in _bits(adj[u] & open_mask):
                path.append(v)
                if dfs(v, visited | (1 << v)):
                    return True
                path.pop()
            return False

        if dfs(anchor, abit):
            break
    return best_len, best, found


def longest_cycle(
    g: KPartiteGraph, *, size_limit: int = LONGEST_SIZE_LIMIT
) -> CycleCertificate:
    """A maximum-length cycle of g; raises GraphError on acyclic input."""
    if g.n > size_limit:
        raise SizeGuardError(f"longest cycle guarded at n <= {size_limit}, got {g.n}")
    length, order, _ = _longest_search(g)
    if order is None or length < 3:
        raise GraphError("graph contains no cycle")
    cert = CycleCertificate(order)
    assert verify_cycle(g, cert)
    return cert


def enumerate_longest_cycles(
    g: KPartiteGraph, *, size_limit: int = ENUMERATE_SIZE_LIMIT
) -> list[CycleCertificate]:
    """All distinct longest cycles, up to rotation and reflection."""
    if g.n > size_limit:
        raise SizeGuardError(
            f"longest cycle enumeration guarded at n <= {size_limit}, got {g.n}"
        )
    length, order, _ = _longest_search(g)
    if order is None or length < 3:
        raise GraphError("graph contains no cycle")
    _, _, found = _longest_search(g, target=length)
    return [CycleCertificate(seq) for seq in sorted(found)]


# -- non-Hamiltonicity witnesses ----------------------------------------------


def _cut_witness(g: KPartiteGraph) -> SmallCut | None:
    if len(connected_components(g)) > 1:
        return SmallCut(frozenset())
    for v in range(g.n):
        if len(connected_components(g, removed=1 << v)) > 1:
            return SmallCut(frozenset({v}))
    return None


def _bipartite_degree_one_witness(g: KPartiteGraph) -> BipartiteDegreeOne | None:
    if g.n % 2 != 0:
        return None
    half = g.n // 2
    meta = g.meta or {}
    if "x_side" in meta and "y_prime" in meta:
        a = frozenset(meta["x_side"])
        candidate = BipartiteDegreeOne(a, meta["y_prime"])
        if witness_certifies(g, candidate):
            return candidate
    for mask in _independent_part_unions(g):
        if mask.bit_count() != half:
            continue
        other = ((1 << g.n) - 1) ^ mask
        for b in _bits(other):
            if (g.adj[b] & mask).bit_count() <= 1:
                return BipartiteDegreeOne(frozenset(_bits(mask)), b)
    return None


def non_hamiltonicity_witness(
    g: KPartiteGraph,
    *,
    alpha_limit: int = ALPHA_WITNESS_LIMIT,
    search_limit: int = HAM_SIZE_LIMIT,
) -> NonHamWitness | None:
    """Cheapest available evidence that g has no Hamiltonian cycle.

    Tries certificates in order: a designated independent set from family
    metadata (free), a small cut, an oversized independent set by exact
    search at small n, an independent half with a degree-<=1 vertex opposite
    it, and finally exhaustive search at small n.  Returns None when g is
    Hamiltonian or no certificate is found within the guards.
    """
    meta = g.meta or {}
    designated = meta.get("independent_set")
    if designated is not None:
        vs = frozenset(designated)
        if 2 * len(vs) > g.n and is_independent(g, vs):
            return IndependentSetTooLarge(vs)
    witness = _cut_witness(g)
    if witness is not None:
        return witness
    if g.n <= alpha_limit:
        size, mask = _max_independent(g.adj, (1 << g.n) - 1)
        if 2 * size > g.n:
            return IndependentSetTooLarge(frozenset(_bits(mask)))
    witness = _bipartite_degree_one_witness(g)
    if witness is not None:
        return witness
    if g.n <= search_limit and g.n >= 3:
        order, nodes = _decide_hamiltonian(g)
        if order is None:
            return ExhaustiveSearch(nodes)
    return None


def witness_certifies(g: KPartiteGraph, witness: NonHamWitness) -> bool:
    """Independently check a witness against its host graph.

    All variants except ExhaustiveSearch are polynomial-time certificates;
    ExhaustiveSearch is re-checked by running the decision search again.
    """
    if isinstance(witness, SmallCut):
        removed = 0
        for v in witness.vertices:
            if not 0 <= v < g.n:
                return False
            removed |= 1 << v
        if removed.bit_count() >= g.n:
            return False
        pieces = len(connected_components(g, removed=removed))
        return pieces > max(len(witness.vertices), 1)
    if isinstance(witness, IndependentSetTooLarge):
        vs = witness.vertices
        return (
            all(0 <= v < g.n for v in vs)
            and 2 * len(vs) > g.n
            and is_independent(g, vs)
        )
    if isinstance(witness, BipartiteDegreeOne):
        a = witness.a_side
        if not all(0 <= v < g.n for v in a) or witness.vertex in a:
            return False
        if 2 * len(a) != g.n or not 0 <= witness.vertex < g.n:
            return False
        if not is_independent(g, a):
            return False
        a_mask = 0
        for v in a:
            a_mask |= 1 << v
        return (g.adj[witness.vertex] & a_mask).bit_count() <= 1
    if isinstance(witness, ExhaustiveSearch):
        order, _ = _decide_hamiltonian(g)
        return order is None
    raise TypeError(f"unknown witness type {type(witness)!r}")
