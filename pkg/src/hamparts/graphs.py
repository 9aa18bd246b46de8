"""k-partite graphs over bitmask adjacency, with exact structural queries.

Vertices are 0..n-1.  Each vertex carries a part index and a neighbourhood
stored as a Python int bitmask, so neighbourhood intersections, degree counts
and reachability sweeps are word-parallel.  Graphs are immutable after
construction; every derived graph is a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Invalid graph construction, decoding, or query."""


class SizeGuardError(RuntimeError):
    """An exact computation was requested beyond its configured size guard."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class KPartiteGraph:
    """A k-partite graph with an explicit vertex partition.

    ``part_of[v]`` is the part index of vertex v and ``adj[v]`` the bitmask of
    its neighbours.  Adjacency is symmetric, loop-free, and never joins two
    vertices of the same part.  ``build_graph`` additionally enforces that all
    parts have equal size; graphs produced by subgraph operations (such as
    ``induced_bipartite``) may be unbalanced.
    """

    __slots__ = ("n", "k", "part_of", "adj", "part_masks", "meta")

    def __init__(
        self,
        part_of: Iterable[int],
        adj: Iterable[int],
        meta: Mapping | None = None,
    ):
        part_of = tuple(part_of)
        adj = tuple(adj)
        n = len(part_of)
        if n == 0:
            raise GraphError("graph must have at least one vertex")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for {n} vertices")
        k = max(part_of) + 1
        if min(part_of) < 0:
            raise GraphError("negative part index")
        part_masks = [0] * k
        for v, p in enumerate(part_of):
            part_masks[p] |= 1 << v
        if any(mask == 0 for mask in part_masks):
            raise GraphError("part indices must be contiguous and nonempty")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise GraphError(f"vertex {v} has an out-of-range neighbour")
            if row & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            if row & part_masks[part_of[v]]:
                raise GraphError(f"intra-part edge at vertex {v}")
        for v in range(n):
            for u in _bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.k = k
        self.part_of = part_of
        self.adj = adj
        self.part_masks = tuple(part_masks)
        self.meta = dict(meta) if meta else None

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def part_members(self, p: int) -> tuple[int, ...]:
        return tuple(_bits(self.part_masks[p]))

    @property
    def is_balanced(self) -> bool:
        sizes = {mask.bit_count() for mask in self.part_masks}
        return len(sizes) == 1

    def with_meta(self, meta: Mapping | None) -> "KPartiteGraph":
        return KPartiteGraph(self.part_of, self.adj, meta)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, KPartiteGraph):
            return NotImplemented
        return self.part_of == other.part_of and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.part_of, self.adj))

    def __repr__(self) -> str:
        return f"KPartiteGraph(n={self.n}, k={self.k}, edges={self.edge_count()})"


@dataclass(frozen=True)
class CycleCertificate:
    """An ordered list of distinct vertices, closed by a wraparound edge."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def build_graph(
    n: int,
    k: int,
    part_of: Iterable[int],
    edges: Iterable[tuple[int, int]],
    meta: Mapping | None = None,
) -> KPartiteGraph:
    """Construct a balanced k-partite graph, rejecting each invariant breach
    with a distinct error (unbalanced partition, out-of-range vertex,
    self-loop, intra-part edge)."""
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    if n < 1 or n % k != 0:
        raise GraphError(f"k must divide n with n >= 1, got n={n} k={k}")
    part_of = tuple(part_of)
    if len(part_of) != n:
        raise GraphError(f"part_of has {len(part_of)} entries for n={n}")
    if any(p < 0 or p >= k for p in part_of):
        raise GraphError("out-of-range part index")
    sizes = [0] * k
    for p in part_of:
        sizes[p] += 1
    if any(s != n // k for s in sizes):
        raise GraphError(f"unbalanced partition: sizes {sizes} for m={n // k}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"out-of-range vertex in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if part_of[u] == part_of[v]:
            raise GraphError(f"intra-part edge ({u}, {v}) in part {part_of[u]}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return KPartiteGraph(part_of, adj, meta)


def blocks_partition(n: int, k: int) -> tuple[int, ...]:
    """The canonical partition into k consecutive blocks of size n/k."""
    m = n // k
    return tuple(v // m for v in range(n))


def complete_kpartite(k: int, m: int) -> KPartiteGraph:
    """Complete balanced k-partite graph on n = m*k vertices."""
    n = m * k
    part_of = blocks_partition(n, k)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return build_graph(n, k, part_of, edges)


def _mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def degree_between(g: KPartiteGraph, a_side: Iterable[int], b_side: Iterable[int]) -> int:
    """min over v in A of |N(v) & B|, for disjoint vertex sets A and B."""
    a_mask = _mask(a_side, g.n)
    b_mask = _mask(b_side, g.n)
    if a_mask & b_mask:
        raise GraphError("degree_between requires disjoint sets")
    if a_mask == 0:
        raise GraphError("degree_between: empty A side has no minimum")
    return min((g.adj[v] & b_mask).bit_count() for v in _bits(a_mask))


def is_independent(g: KPartiteGraph, vertices: Iterable[int]) -> bool:
    mask = _mask(vertices, g.n)
    return all((g.adj[v] & mask) == 0 for v in _bits(mask))


# -- exact maximum independent set -----------------------------------------


def _max_independent(adj: tuple[int, ...], avail: int) -> tuple[int, int]:
    """(size, witness mask) of a maximum independent subset of ``avail``."""
    if avail == 0:
        return 0, 0
    best_v = -1
    best_d = -1
    for v in _bits(avail):
        d = (adj[v] & avail).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    if best_d <= 1:
        # The available vertices induce a matching plus isolated vertices:
        # one endpoint per edge, everything else entirely.
        chosen = 0
        rest = avail
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            chosen |= low
            rest ^= low
            rest &= ~adj[v]
        return chosen.bit_count(), chosen
    bit = 1 << best_v
    with_size, with_mask = _max_independent(adj, avail & ~adj[best_v] & ~bit)
    with_size += 1
    with_mask |= bit
    without_size, without_mask = _max_independent(adj, avail ^ bit)
    if with_size >= without_size:
        return with_size, with_mask
    return without_size, without_mask


def independence_number(g: KPartiteGraph, *, max_n: int = 64) -> int:
    """Exact maximum independent set size, guarded at ``max_n`` vertices."""
    if g.n > max_n:
        raise SizeGuardError(f"independence_number guarded at n <= {max_n}, got {g.n}")
    size, _ = _max_independent(g.adj, (1 << g.n) - 1)
    return size


def maximum_independent_set(g: KPartiteGraph, *, max_n: int = 64) -> frozenset[int]:
    """A maximum independent set witnessing :func:`independence_number`."""
    if g.n > max_n:
        raise SizeGuardError(f"maximum_independent_set guarded at n <= {max_n}, got {g.n}")
    _, mask = _max_independent(g.adj, (1 << g.n) - 1)
    return frozenset(_bits(mask))


# -- connectivity ------------------------------------------------------------


def connected_components(g: KPartiteGraph, removed: int = 0) -> list[int]:
    """Component masks of the graph with the ``removed`` vertex mask deleted."""
    remaining = ((1 << g.n) - 1) & ~removed
    components = []
    while remaining:
        low = remaining & -remaining
        seen = low
        frontier = low
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= g.adj[v]
            frontier = grown & remaining & ~seen
            seen |= frontier
        components.append(seen)
        remaining &= ~seen
    return components


def is_connected(g: KPartiteGraph) -> bool:
    return len(connected_components(g)) <= 1


def _local_vertex_connectivity(g: KPartiteGraph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths, via unit-capacity flow
    on the vertex-split digraph (v_in = 2v, v_out = 2v+1)."""
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = big if v in (s, t) else 1
    for u in range(n):
        for v in _bits(g.adj[u]):
            cap[(2 * u + 1, 2 * v)] = big
    source, sink = 2 * s + 1, 2 * t
    succ: dict[int, list[int]] = {}
    for (a, b) in list(cap):
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, []).append(a)
        cap.setdefault((b, a), 0)
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in succ.get(a, ()):
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: KPartiteGraph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs."""
    if g.n < 2:
        raise GraphError("vertex_connectivity needs at least 2 vertices")
    full = (1 << g.n) - 1
    nonadjacent = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    if not nonadjacent:
        return g.n - 1
    del full
    best = g.n - 1
    for u, v in nonadjacent:
        best = min(best, _local_vertex_connectivity(g, u, v))
        if best == 0:
            break
    return best


# -- subgraphs ---------------------------------------------------------------


def induced_bipartite(
    g: KPartiteGraph, a_side: Iterable[int], b_side: Iterable[int]
) -> KPartiteGraph:
    """The spanning bipartite graph keeping exactly the A-B edges.

    A and B must partition the vertex set; both sides must be nonempty.  The
    result is 2-partite (part 0 = A, part 1 = B) and in general unbalanced.
    """
    a_mask = _mask(a_side, g.n)
    b_mask = _mask(b_side, g.n)
    if a_mask & b_mask:
        raise GraphError("induced_bipartite: sides overlap")
    if (a_mask | b_mask) != (1 << g.n) - 1:
        raise GraphError("induced_bipartite: sides must cover all vertices")
    if a_mask == 0 or b_mask == 0:
        raise GraphError("induced_bipartite: both sides must be nonempty")
    part_of = tuple(0 if (a_mask >> v) & 1 else 1 for v in range(g.n))
    adj = tuple(
        g.adj[v] & (b_mask if (a_mask >> v) & 1 else a_mask) for v in range(g.n)
    )
    return KPartiteGraph(part_of, adj)


# -- serialization -----------------------------------------------------------


def _g6_encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise GraphError(f"graph6 encoder supports n <= 258047, got {n}")


def graph6_encode(g: KPartiteGraph) -> str:
    """Standard graph6 text for the adjacency (partition not included)."""
    n = g.n
    out = bytearray(_g6_encode_size(n))
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + group)
                group = 0
                nbits = 0
    if nbits:
        out.append(63 + (group << (6 - nbits)))
    return out.decode("ascii")


def graph6_decode(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse graph6 text into (n, edge list)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = data.encode("ascii")
    if not raw:
        raise GraphError("empty graph6 string")
    if raw[0] == 126:
        if len(raw) < 4 or raw[1] == 126:
            raise GraphError("unsupported or truncated graph6 size header")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    if n < 0:
        raise GraphError("invalid graph6 size header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = 0
    for byte in body:
        if not 63 <= byte <= 126:
            raise GraphError(f"invalid graph6 byte {byte}")
    edges = []
    index = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[index // 6] - 63
            if (byte >> (5 - index % 6)) & 1:
                edges.append((i, j))
            index += 1
    del bits
    return n, edges


def encode(g: KPartiteGraph) -> str:
    """Two-line text form: a partition header followed by graph6 adjacency.

    Header format: ``kpart <k>: <part 0 vertices>, <part 1 vertices>, ...``
    with vertices space-separated inside each comma-separated part.
    """
    parts = ", ".join(
        " ".join(str(v) for v in g.part_members(p)) for p in range(g.k)
    )
    return f"kpart {g.k}: {parts}\n{graph6_encode(g)}"


def decode(text: str) -> KPartiteGraph:
    """Inverse of :func:`encode`; validates every graph invariant."""
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise GraphError("expected a partition header line and a graph6 line")
    header, g6 = lines[0].strip(), lines[1].strip()
    if not header.startswith("kpart "):
        raise GraphError("partition header must start with 'kpart'")
    try:
        count_text, parts_text = header[len("kpart "):].split(":", 1)
        k = int(count_text.strip())
    except ValueError as exc:
        raise GraphError(f"malformed partition header: {header!r}") from exc
    part_lists = []
    for chunk in parts_text.split(","):
        try:
            part_lists.append([int(tok) for tok in chunk.split()])
        except ValueError as exc:
            raise GraphError(f"malformed part list: {chunk!r}") from exc
    if len(part_lists) != k:
        raise GraphError(f"header declares {k} parts but lists {len(part_lists)}")
    n, edges = graph6_decode(g6)
    part_of = [-1] * n
    for p, members in enumerate(part_lists):
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"part {p} lists out-of-range vertex {v}")
            if part_of[v] != -1:
                raise GraphError(f"vertex {v} assigned to two parts")
            part_of[v] = p
    if any(p == -1 for p in part_of):
        raise GraphError("partition does not cover all vertices")
    adj = [0] * n
    for u, v in edges:
        if part_of[u] == part_of[v]:
            raise GraphError(f"intra-part edge ({u}, {v}) in decoded graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return KPartiteGraph(part_of, adj)


_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
)


def export_dot(g: KPartiteGraph) -> str:
    """Graphviz DOT text with vertices coloured by part."""
    lines = ["graph G {", "  node [style=filled];"]
    for v in range(g.n):
        color = _DOT_PALETTE[g.part_of[v] % len(_DOT_PALETTE)]
        lines.append(f'  {v} [fillcolor="{color}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
