"""Constructors and recognizers for the extremal families.

Four families witness that the degree threshold cannot be lowered:

* ``F``: complete balanced k-partite graphs with an oversized independent
  set carved out of the first ceil((k+1)/2) parts; minimum degree lands
  exactly one below the threshold at every scale.
* ``F1``: n = 2k graphs built from a transversal clique hanging off a single
  cut vertex; minimum degree n/2 - 1 but connectivity at most 1.
* ``F2``: a single 8-vertex, 2-connected, 4-partite graph with independence
  number 3 and no Hamiltonian cycle.
* ``F3``: n = 2k graphs (4 | n) whose vertex set splits into an independent
  half X and a half Y with one Y-vertex seeing only a single X-neighbour, so
  no cycle can alternate across the split.

Each builder documents its fixed vertex layout; generators are deterministic,
so equal parameters produce identical encodings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    GraphError,
    KPartiteGraph,
    SizeGuardError,
    _bits,
    blocks_partition,
    build_graph,
)
from .thresholds import _ceil_div


# -- family F ----------------------------------------------------------------


def default_sizes(k: int, m: int) -> tuple[int, ...]:
    """Canonical carve-out sizes: as equal as possible, nonincreasing."""
    n = m * k
    groups = _ceil_div(k + 1, 2)
    target = _ceil_div(n + 1, 2)
    q, r = divmod(target, groups)
    return tuple([q + 1] * r + [q] * (groups - r))


def build_family_F(k: int, m: int, sizes: tuple[int, ...] | None = None) -> KPartiteGraph:
    """Complete k-partite graph minus all edges between the carved-out sets.

    Layout: part i occupies vertices [i*m, (i+1)*m); the carved-out set of
    part i (i < ceil((k+1)/2)) is its first ``sizes[i]`` vertices.  The union
    of carved-out sets is independent with ceil((n+1)/2) vertices, and the
    minimum degree is exactly one below the threshold.
    """
    if k < 2:
        raise GraphError(f"family F requires k >= 2, got k={k}")
    n = m * k
    if m < 1 or n < 3:
        raise GraphError(f"family F requires n = m*k >= 3, got m={m} k={k}")
    groups = _ceil_div(k + 1, 2)
    target = _ceil_div(n + 1, 2)
    if sizes is None:
        sizes = default_sizes(k, m)
    sizes = tuple(sizes)
    if len(sizes) != groups:
        raise GraphError(f"family F needs {groups} carve-out sizes, got {len(sizes)}")
    if any(sizes[i] < sizes[i + 1] for i in range(groups - 1)):
        raise GraphError(f"carve-out sizes must be nonincreasing, got {sizes}")
    if any(s > m for s in sizes):
        raise GraphError(f"carve-out sizes must not exceed the part size {m}, got {sizes}")
    if sizes[-1] != target // groups:
        raise GraphError(
            f"smallest carve-out size must be {target // groups}, got {sizes[-1]}"
        )
    if sum(sizes) != target:
        raise GraphError(f"carve-out sizes must sum to {target}, got sum {sum(sizes)}")

    part_of = blocks_partition(n, k)
    carved = [0] * n
    independent = []
    for i, size in enumerate(sizes):
        for v in range(i * m, i * m + size):
            carved[v] = 1
            independent.append(v)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v] and not (carved[u] and carved[v])
    ]
    meta = {"family": "F", "independent_set": tuple(independent)}
    return build_graph(n, k, part_of, edges, meta)


# -- family F1 ---------------------------------------------------------------


def build_family_F1(
    k: int,
    yy_missing: tuple[tuple[int, int], ...] = (),
    xk_missing: tuple[int, ...] = (),
) -> KPartiteGraph:
    """Transversal clique plus a near-complete second transversal, joined
    through one hub vertex.

    Layout: n = 2k with part i = {x_i, y_i} where x_i = i and y_i = k + i.
    The x-vertices form a clique; the hub is x_{k-1}.  Every y_i other than
    y_{k-1} may reach at most the other y-vertices and the hub, and must keep
    at least k - 1 of those k possible neighbours; y_{k-1} keeps all of them.
    ``yy_missing`` lists part-index pairs (i, j) whose y_i y_j edge is absent;
    ``xk_missing`` lists part indices whose y_i loses the hub edge.
    """
    if k < 3:
        raise GraphError(f"family F1 requires k >= 3, got k={k}")
    n = 2 * k
    hub = k - 1
    missing_pairs = set()
    for pair in yy_missing:
        i, j = pair
        if i == j or not (0 <= i < k and 0 <= j < k):
            raise GraphError(f"invalid y-y omission {pair!r}")
        missing_pairs.add((min(i, j), max(i, j)))
    missing_hub = set(xk_missing)
    if any(i == hub or not 0 <= i < k for i in missing_hub):
        raise GraphError(f"invalid hub omissions {sorted(missing_hub)!r}")

    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) not in missing_pairs:
                edges.append((k + i, k + j))
    for i in range(k - 1):
        if i not in missing_hub:
            edges.append((k + i, hub))

    part_of = tuple(list(range(k)) + list(range(k)))
    meta = {"family": "F1", "cut_vertex": hub}
    g = build_graph(n, k, part_of, edges, meta)
    for i in range(k):
        pool = [k + j for j in range(k) if j != i]
        if i != hub:
            pool.append(hub)
        reached = sum(1 for w in pool if g.has_edge(k + i, w))
        if reached < k - 1:
            raise GraphError(
                f"y_{i} keeps only {reached} of its {len(pool)} allowed neighbours; "
                f"needs at least {k - 1}"
            )
    return g


# -- the fixed graph F2 --------------------------------------------------------


_F2_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
    (6, 7), (6, 0), (6, 3), (7, 0), (7, 3),
    (5, 3), (4, 0), (1, 3), (2, 0),
)
_F2_PART_OF = (0, 1, 3, 0, 2, 3, 1, 2)


def build_F2() -> KPartiteGraph:
    """The 8-vertex exceptional graph: a 6-cycle 0..5 with chords 5-3, 4-0,
    1-3, 2-0, plus two extra vertices 6 and 7 joined to each other and to the
    antipodal pair {0, 3}.  Balanced 4-partition: {0,3}, {1,6}, {4,7}, {2,5}.
    """
    meta = {"family": "F2"}
    return build_graph(8, 4, _F2_PART_OF, _F2_EDGES, meta)


# -- family F3 ---------------------------------------------------------------


def build_family_F3(
    k: int,
    y_prime: int | None = None,
    y_dprime: int | None = None,
    x_prime: int | None = None,
    yy_edges: tuple[tuple[int, int], ...] = (),
    xy_edge: bool = False,
) -> KPartiteGraph:
    """Independent half versus near-complete half, with one throttled vertex.

    Layout: n = 2k with part i = {2i, 2i+1}.  The first k/2 parts form the
    independent side X = {0..k-1}; the rest form Y = {k..2k-1}.  All X-Y
    edges are present except that y_dprime misses x_prime (restored by
    ``xy_edge``) and y_prime keeps only x_prime.  y_prime is additionally
    joined to every Y-vertex outside its own part.  ``yy_edges`` adds
    arbitrary cross-part Y-Y edges not incident to y_prime.
    """
    if k < 4 or k % 2 != 0:
        raise GraphError(f"family F3 requires even k >= 4, got k={k}")
    n = 2 * k
    x_side = range(k)
    y_side = range(k, n)
    part_of = blocks_partition(n, k)
    if y_prime is None:
        y_prime = n - 2
    if y_prime not in (n - 2, n - 1):
        raise GraphError(
            f"y_prime must be a vertex of the last part ({n - 2} or {n - 1}), got {y_prime}"
        )
    if y_dprime is None:
        y_dprime = k
    if y_dprime == y_prime or not k <= y_dprime < n:
        raise GraphError(f"y_dprime must be a Y-vertex other than y_prime, got {y_dprime}")
    if x_prime is None:
        x_prime = 0
    if not 0 <= x_prime < k:
        raise GraphError(f"x_prime must be an X-vertex, got {x_prime}")

    edges = []
    for y in y_side:
        if y in (y_prime, y_dprime):
            continue
        edges.extend((x, y) for x in x_side)
    edges.extend((x, y_dprime) for x in x_side if x != x_prime)
    if xy_edge:
        edges.append((x_prime, y_dprime))
    edges.append((x_prime, y_prime))
    y_prime_part = part_of[y_prime]
    edges.extend((y_prime, y) for y in y_side if part_of[y] != y_prime_part)
    for pair in yy_edges:
        u, v = pair
        if not (k <= u < n and k <= v < n):
            raise GraphError(f"optional edge {pair!r} must join two Y-vertices")
        if part_of[u] == part_of[v]:
            raise GraphError(f"optional edge {pair!r} lies inside one part")
        if y_prime in pair:
            raise GraphError(f"optional edge {pair!r} may not touch y_prime")
        edges.append((u, v))

    meta = {"family": "F3", "x_side": tuple(x_side), "y_prime": y_prime}
    return build_graph(n, k, part_of, edges, meta)


# -- family specs --------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A parameterised description of one family member.

    Serialises to a small key/value text document (one ``key: value`` line
    per non-default field) consumed by the CLI ``construct`` command.
    """

    variant: str
    k: int | None = None
    m: int | None = None
    sizes: tuple[int, ...] | None = None
    yy_missing: tuple[tuple[int, int], ...] = ()
    xk_missing: tuple[int, ...] = ()
    y_prime: int | None = None
    y_dprime: int | None = None
    x_prime: int | None = None
    yy_edges: tuple[tuple[int, int], ...] = ()
    xy_edge: bool = False

    def build(self) -> KPartiteGraph:
        if self.variant == "F":
            if self.k is None or self.m is None:
                raise GraphError("family F needs k and m")
            return build_family_F(self.k, self.m, self.sizes)
        if self.variant == "F1":
            if self.k is None:
                raise GraphError("family F1 needs k")
            return build_family_F1(self.k, self.yy_missing, self.xk_missing)
        if self.variant == "F2":
            return build_F2()
        if self.variant == "F3":
            if self.k is None:
                raise GraphError("family F3 needs k")
            return build_family_F3(
                self.k,
                self.y_prime,
                self.y_dprime,
                self.x_prime,
                self.yy_edges,
                self.xy_edge,
            )
        raise GraphError(f"unknown family variant {self.variant!r}")

    def to_text(self) -> str:
        lines = [f"family: {self.variant}"]
        if self.k is not None:
            lines.append(f"k: {self.k}")
        if self.m is not None:
            lines.append(f"m: {self.m}")
        if self.sizes is not None:
            lines.append("sizes: " + " ".join(str(s) for s in self.sizes))
        if self.yy_missing:
            lines.append(
                "yy_missing: " + " ".join(f"{i}-{j}" for i, j in self.yy_missing)
            )
        if self.xk_missing:
            lines.append("xk_missing: " + " ".join(str(i) for i in self.xk_missing))
        if self.y_prime is not None:
            lines.append(f"y_prime: {self.y_prime}")
        if self.y_dprime is not None:
            lines.append(f"y_dprime: {self.y_dprime}")
        if self.x_prime is not None:
            lines.append(f"x_prime: {self.x_prime}")
        if self.yy_edges:
            lines.append("yy_edges: " + " ".join(f"{u}-{v}" for u, v in self.yy_edges))
        if self.xy_edge:
            lines.append("xy_edge: true")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "FamilySpec":
        values: dict[str, str] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise GraphError(f"malformed family spec line: {line!r}")
            key, value = line.split(":", 1)
            values[key.strip()] = value.strip()
        if "family" not in values:
            raise GraphError("family spec must declare 'family'")

        def pairs(text_value: str) -> tuple[tuple[int, int], ...]:
            out = []
            for token in text_value.replace(",", " ").split():
                a, _, b = token.partition("-")
                out.append((int(a), int(b)))
            return tuple(out)

        def ints(text_value: str) -> tuple[int, ...]:
            return tuple(int(tok) for tok in text_value.replace(",", " ").split())

        try:
            return cls(
                variant=values["family"],
                k=int(values["k"]) if "k" in values else None,
                m=int(values["m"]) if "m" in values else None,
                sizes=ints(values["sizes"]) if "sizes" in values else None,
                yy_missing=pairs(values.get("yy_missing", "")),
                xk_missing=ints(values.get("xk_missing", "")),
                y_prime=int(values["y_prime"]) if "y_prime" in values else None,
                y_dprime=int(values["y_dprime"]) if "y_dprime" in values else None,
                x_prime=int(values["x_prime"]) if "x_prime" in values else None,
                yy_edges=pairs(values.get("yy_edges", "")),
                xy_edge=values.get("xy_edge", "false").lower() in ("true", "1", "yes"),
            )
        except ValueError as exc:
            raise GraphError(f"malformed family spec: {exc}") from exc


# -- recognition ---------------------------------------------------------------


def _relabelled_equal(g: KPartiteGraph, h: KPartiteGraph, vmap: dict[int, int]) -> bool:
    """Does the vertex bijection ``vmap`` carry g onto h, parts to parts?"""
    if g.n != h.n or g.k != h.k:
        return False
    for v in range(g.n):
        image = 0
        for u in _bits(g.adj[v]):
            image |= 1 << vmap[u]
        if image != h.adj[vmap[v]]:
            return False
    for p in range(g.k):
        images = {h.part_of[vmap[v]] for v in g.part_members(p)}
        if len(images) != 1:
            return False
    return True


def partition_respecting_isomorphic(g: KPartiteGraph, h: KPartiteGraph) -> bool:
    """Backtracking isomorphism search restricted to part-to-part bijections."""
    if g.n != h.n or g.k != h.k:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    g_parts = [g.part_members(p) for p in range(g.k)]
    h_parts = [h.part_members(p) for p in range(h.k)]
    g_order = [v for p in range(g.k) for v in g_parts[p]]

    def try_assignment(part_image: list[int]) -> bool:
        vmap: dict[int, int] = {}
        used: set[int] = set()

        def place(i: int) -> bool:
            if i == len(g_order):
                return True
            v = g_order[i]
            for hv in h_parts[part_image[g.part_of[v]]]:
                if hv in used or h.degree(hv) != g.degree(v):
                    continue
                if any(h.has_edge(hv, vmap[u]) != g.has_edge(v, u) for u in vmap):
                    continue
                vmap[v] = hv
                used.add(hv)
                if place(i + 1):
                    return True
                del vmap[v]
                used.discard(hv)
            return False

        return place(0)

    def part_maps(idx: int, remaining: list[int], image: list[int]):
        if idx == g.k:
            yield list(image)
            return
        for i, hp in enumerate(remaining):
            if len(h_parts[hp]) != len(g_parts[idx]):
                continue
            image.append(hp)
            yield from part_maps(idx + 1, remaining[:i] + remaining[i + 1:], image)
            image.pop()

    return any(try_assignment(image) for image in part_maps(0, list(range(h.k)), []))


def _clique_transversals(g: KPartiteGraph, c: int):
    """All transversal cliques through c whose non-c members have degree
    exactly k-1 and are adjacent to c."""
    k = g.k
    cpart = g.part_of[c]
    candidate_lists = []
    for p in range(k):
        if p == cpart:
            continue
        vs = [
            v
            for v in g.part_members(p)
            if g.has_edge(v, c) and g.degree(v) == k - 1
        ]
        if not vs:
            return
        candidate_lists.append(vs)
    chosen: list[int] = []

    def extend(i: int):
        if i == len(candidate_lists):
            yield tuple(chosen)
            return
        for v in candidate_lists[i]:
            if all(g.has_edge(v, u) for u in chosen):
                chosen.append(v)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


def _confirm_f1(g: KPartiteGraph, c: int, clique: frozenset[int]) -> bool:
    k = g.k
    cpart = g.part_of[c]
    part_order = [p for p in range(k) if p != cpart] + [cpart]
    new_index = {old: i for i, old in enumerate(part_order)}
    vmap: dict[int, int] = {}
    for p in range(k):
        members = g.part_members(p)
        in_clique = [v for v in members if v in clique]
        outside = [v for v in members if v not in clique]
        if len(in_clique) != 1 or len(outside) != 1:
            return False
        vmap[in_clique[0]] = new_index[p]
        vmap[outside[0]] = k + new_index[p]
    inverse = {new: old for old, new in vmap.items()}
    yy_missing = tuple(
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if not g.has_edge(inverse[k + i], inverse[k + j])
    )
    xk_missing = tuple(
        i for i in range(k - 1) if not g.has_edge(inverse[k + i], inverse[k - 1])
    )
    try:
        built = build_family_F1(k, yy_missing, xk_missing)
    except GraphError:
        return False
    return _relabelled_equal(g, built, vmap)


def _match_f1(g: KPartiteGraph) -> tuple[int, frozenset[int]] | None:
    k = g.k
    for c in range(g.n):
        for transversal in _clique_transversals(g, c):
            clique = frozenset(transversal) | {c}
            rest = [v for v in range(g.n) if v not in clique]
            pool_base = set(rest) | {c}
            ok = True
            for y in rest:
                reached = sum(
                    1 for w in pool_base if w != y and g.has_edge(y, w)
                )
                if reached < k - 1:
                    ok = False
                    break
            if ok and _confirm_f1(g, c, clique):
                return c, clique
    return None


def _confirm_f3(
    g: KPartiteGraph,
    x_parts: tuple[int, ...],
    y1: int,
    ydd: int,
    xp: int,
    xy_flag: bool,
) -> bool:
    k = g.k
    y_parts = [p for p in range(k) if p not in x_parts]
    xp_part = g.part_of[xp]
    y1_part = g.part_of[y1]
    x_order = [xp_part] + [p for p in x_parts if p != xp_part]
    y_order = [p for p in y_parts if p != y1_part] + [y1_part]
    vmap: dict[int, int] = {}
    for i, p in enumerate(x_order):
        members = list(g.part_members(p))
        if p == xp_part:
            members.sort(key=lambda v: v != xp)
        for slot, v in enumerate(members):
            vmap[v] = 2 * i + slot
    for i, p in enumerate(y_order):
        members = list(g.part_members(p))
        if p == y1_part:
            members.sort(key=lambda v: v != y1)
        for slot, v in enumerate(members):
            vmap[v] = k + 2 * i + slot
    y_mask = 0
    for p in y_parts:
        y_mask |= g.part_masks[p]
    yy_extra = set()
    for u in _bits(y_mask):
        if u == y1:
            continue
        for v in _bits(g.adj[u] & y_mask):
            if v == y1 or v < u:
                continue
            yy_extra.add((min(vmap[u], vmap[v]), max(vmap[u], vmap[v])))
    try:
        built = build_family_F3(
            k,
            y_prime=vmap[y1],
            y_dprime=vmap[ydd],
            x_prime=vmap[xp],
            yy_edges=tuple(sorted(yy_extra)),
            xy_edge=xy_flag,
        )
    except GraphError:
        return False
    return _relabelled_equal(g, built, vmap)


def _match_f3(g: KPartiteGraph) -> tuple | None:
    k = g.k
    half = k // 2
    full = (1 << g.n) - 1
    for x_parts in combinations(range(k), half):
        x_mask = 0
        for p in x_parts:
            x_mask |= g.part_masks[p]
        if any(g.adj[v] & x_mask for v in _bits(x_mask)):
            continue
        y_mask = full ^ x_mask
        ys = list(_bits(y_mask))
        for y1 in ys:
            row = g.adj[y1] & x_mask
            if row.bit_count() != 1:
                continue
            xp = row.bit_length() - 1
            missing = []
            for y in ys:
                if y == y1:
                    continue
                gap = x_mask & ~g.adj[y]
                if gap:
                    missing.extend((x, y) for x in _bits(gap))
                    if len(missing) > 1:
                        break
            if len(missing) > 1:
                continue
            if missing:
                mx, my = missing[0]
                if mx != xp:
                    continue
                ydd, xy_flag = my, False
            else:
                ydd = next(y for y in ys if y != y1)
                xy_flag = True
            own_part = g.part_masks[g.part_of[y1]]
            if g.adj[y1] & y_mask != y_mask & ~own_part:
                continue
            if _confirm_f3(g, x_parts, y1, ydd, xp, xy_flag):
                return x_parts, y1, ydd, xp
    return None


def recognize(g: KPartiteGraph, *, max_n: int = 16) -> str | None:
    """Classify g as a member of F1, F2, or F3 (up to part-respecting
    isomorphism), or None.  Only defined in the n = 2k, 4 | n regime."""
    n, k = g.n, g.k
    if n != 2 * k or n % 4 != 0:
        raise GraphError(f"recognizer requires n = 2k with 4 | n, got n={n} k={k}")
    if n > max_n:
        raise SizeGuardError(f"recognizer guarded at n <= {max_n}, got {n}")
    if _match_f1(g) is not None:
        return "F1"
    if n == 8 and partition_respecting_isomorphic(g, build_F2()):
        return "F2"
    if _match_f3(g) is not None:
        return "F3"
    return None
