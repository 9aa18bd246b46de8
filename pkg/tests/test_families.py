"""Extremal families: construction invariants, recognition, determinism."""

import random

import pytest

from hamparts.families import (
    FamilySpec,
    build_F2,
    build_family_F,
    build_family_F1,
    build_family_F3,
    default_sizes,
    partition_respecting_isomorphic,
    recognize,
)
from hamparts.graphs import (
    GraphError,
    KPartiteGraph,
    connected_components,
    complete_kpartite,
    degree_between,
    encode,
    independence_number,
    induced_bipartite,
    is_independent,
    vertex_connectivity,
)
from hamparts.solver import find_hamiltonian_cycle
from hamparts.thresholds import theorem_threshold
from _util import perm_oracle_hamiltonian


# -- family F ------------------------------------------------------------


def test_default_sizes_examples():
    assert default_sizes(2, 4) == (3, 2)
    assert default_sizes(4, 3) == (3, 2, 2)


def test_family_f_small_bipartite():
    g = build_family_F(2, 4)
    assert g.min_degree() == theorem_threshold(8, 2) - 1 == 1
    assert independence_number(g) == 5
    assert find_hamiltonian_cycle(g) is None


def test_family_f_4_parts():
    g = build_family_F(4, 3)
    assert g.min_degree() == theorem_threshold(12, 4) - 1 == 4


def test_family_f_singleton_parts():
    for n in (5, 8, 11):
        g = build_family_F(n, 1)
        designated = g.meta["independent_set"]
        assert len(designated) == (n + 2) // 2
        assert is_independent(g, designated)
        assert 2 * len(designated) > n


def test_family_f_degree_and_certificate_grid():
    for k in range(2, 9):
        for m in range(1, 5):
            n = m * k
            if n < 3:
                continue
            g = build_family_F(k, m)
            assert g.min_degree() == theorem_threshold(n, k) - 1, (k, m)
            designated = g.meta["independent_set"]
            assert len(designated) == (n + 2) // 2
            assert is_independent(g, designated)


def test_family_f_rejects_bad_sizes():
    with pytest.raises(GraphError, match="nonincreasing"):
        build_family_F(2, 4, sizes=(2, 3))
    with pytest.raises(GraphError, match="sum"):
        build_family_F(2, 4, sizes=(4, 2))
    with pytest.raises(GraphError, match="smallest"):
        build_family_F(2, 4, sizes=(4, 1))
    with pytest.raises(GraphError, match="exceed"):
        build_family_F(4, 1, sizes=(2, 1, 1))


def test_family_f_custom_sizes():
    g = build_family_F(4, 3, sizes=(3, 2, 2))
    assert g.min_degree() == theorem_threshold(12, 4) - 1


# -- family F1 -----------------------------------------------------------


def test_family_f1_maximal():
    for k in (3, 4, 6):
        g = build_family_F1(k)
        assert g.n == 2 * k
        assert g.min_degree() == k - 1
        assert vertex_connectivity(g) <= 1
        if k % 2 == 0:
            assert find_hamiltonian_cycle(g) is None


def test_family_f1_hub_is_cut_vertex():
    g = build_family_F1(4)
    hub = g.meta["cut_vertex"]
    assert len(connected_components(g, removed=1 << hub)) > 1


def test_family_f1_with_omissions():
    g = build_family_F1(4, yy_missing=((0, 1),))
    assert g.min_degree() == 3
    g = build_family_F1(4, xk_missing=(0, 1, 2))
    assert g.min_degree() == 3


def test_family_f1_rejects_low_degree():
    with pytest.raises(GraphError, match="needs at least"):
        build_family_F1(4, yy_missing=((0, 1),), xk_missing=(0,))
    with pytest.raises(GraphError, match="needs at least"):
        build_family_F1(4, yy_missing=((0, 3),))


def test_family_f1_rejects_bad_indices():
    with pytest.raises(GraphError, match="invalid"):
        build_family_F1(4, yy_missing=((0, 0),))
    with pytest.raises(GraphError, match="invalid"):
        build_family_F1(4, xk_missing=(3,))


# -- F2 ------------------------------------------------------------------


def test_f2_structure():
    g = build_F2()
    assert g.n == 8 and g.k == 4
    assert g.edge_count() == 15
    assert g.min_degree() == 3
    assert independence_number(g) == 3
    assert vertex_connectivity(g) == 2
    assert len(connected_components(g, removed=(1 << 0) | (1 << 3))) == 3
    assert find_hamiltonian_cycle(g) is None
    assert not perm_oracle_hamiltonian(g)


# -- family F3 -----------------------------------------------------------


def test_family_f3_basic():
    g = build_family_F3(4)
    assert g.n == 8
    assert g.min_degree() == 3
    assert vertex_connectivity(g) >= 2
    assert independence_number(g) == 4
    assert find_hamiltonian_cycle(g) is None


def test_family_f3_with_options():
    yy = ((4, 7), (5, 7))
    g = build_family_F3(4, y_dprime=5, x_prime=2, yy_edges=yy, xy_edge=True)
    assert g.min_degree() >= 3
    assert find_hamiltonian_cycle(g) is None
    assert independence_number(g) == 4


def test_family_f3_y_prime_degree_one_in_bipartite():
    for k in (4, 6):
        g = build_family_F3(k)
        x_side = g.meta["x_side"]
        y_side = [v for v in range(g.n) if v not in x_side]
        h = induced_bipartite(g, x_side, y_side)
        assert h.degree(g.meta["y_prime"]) == 1
        assert degree_between(g, [g.meta["y_prime"]], x_side) == 1


def test_family_f3_larger():
    g = build_family_F3(6)
    assert g.n == 12
    assert g.min_degree() == 5
    assert independence_number(g) == 6
    assert find_hamiltonian_cycle(g) is None


def test_family_f3_rejects_bad_options():
    with pytest.raises(GraphError, match="even k"):
        build_family_F3(5)
    with pytest.raises(GraphError, match="y_prime"):
        build_family_F3(4, y_prime=4)
    with pytest.raises(GraphError, match="y_dprime"):
        build_family_F3(4, y_dprime=2)
    with pytest.raises(GraphError, match="touch y_prime"):
        build_family_F3(4, yy_edges=((6, 4),))
    with pytest.raises(GraphError, match="inside one part"):
        build_family_F3(4, yy_edges=((4, 5),))
    with pytest.raises(GraphError, match="two Y-vertices"):
        build_family_F3(4, yy_edges=((0, 4),))


# -- recognition ---------------------------------------------------------


def test_recognize_self():
    assert recognize(build_F2()) == "F2"
    assert recognize(build_family_F1(4)) == "F1"
    assert recognize(build_family_F3(4)) == "F3"
    assert recognize(build_family_F3(6), max_n=16) == "F3"
    assert recognize(build_family_F1(6), max_n=16) == "F1"


def test_recognize_complete_graph_none():
    assert recognize(complete_kpartite(4, 2)) is None


def test_recognize_requires_regime():
    with pytest.raises(GraphError):
        recognize(complete_kpartite(3, 2))


def test_recognize_f1_variants():
    rng = random.Random(99)
    for trial in range(20):
        k = 4
        pairs = [(i, j) for i in range(k - 1) for j in range(i + 1, k - 1)]
        yy = tuple(p for p in pairs if rng.random() < 0.3)
        xk = tuple(i for i in range(k - 1) if rng.random() < 0.3)
        try:
            g = build_family_F1(k, yy_missing=yy, xk_missing=xk)
        except GraphError:
            continue
        assert recognize(g) == "F1"


def test_recognize_f3_variants():
    rng = random.Random(17)
    y_pairs = [(u, v) for u in range(4, 8) for v in range(u + 1, 8)]
    for trial in range(20):
        yy = tuple(
            (u, v)
            for u, v in y_pairs
            if (u, v) != (4, 5) and (u, v) != (6, 7) and 6 not in (u, v)
            and rng.random() < 0.4
        )
        g = build_family_F3(
            4,
            y_dprime=rng.choice([4, 5, 7]),
            x_prime=rng.randrange(4),
            yy_edges=yy,
            xy_edge=rng.random() < 0.5,
        )
        assert recognize(g) == "F3"


def test_recognize_f1_relabelled():
    g = build_family_F1(4)
    # Shuffle vertex labels while keeping parts intact.
    perm = [3, 0, 2, 1, 7, 4, 6, 5]  # maps part i to part perm-consistent slots
    part_of = [0] * 8
    adj = [0] * 8
    for v in range(8):
        part_of[perm[v]] = g.part_of[v]
    for u in range(8):
        for v in range(u + 1, 8):
            if g.has_edge(u, v):
                adj[perm[u]] |= 1 << perm[v]
                adj[perm[v]] |= 1 << perm[u]
    relabelled = KPartiteGraph(part_of, adj)
    assert recognize(relabelled) == "F1"


def test_partition_respecting_isomorphism_negative():
    assert not partition_respecting_isomorphic(build_F2(), complete_kpartite(4, 2))
    assert partition_respecting_isomorphic(build_F2(), build_F2())


# -- specs ---------------------------------------------------------------


def test_spec_round_trip():
    specs = [
        FamilySpec(variant="F", k=4, m=3),
        FamilySpec(variant="F", k=2, m=4, sizes=(3, 2)),
        FamilySpec(variant="F1", k=4, yy_missing=((0, 1),), xk_missing=(2,)),
        FamilySpec(variant="F2"),
        FamilySpec(
            variant="F3", k=4, y_dprime=5, x_prime=1, yy_edges=((4, 7),), xy_edge=True
        ),
    ]
    for spec in specs:
        assert FamilySpec.from_text(spec.to_text()) == spec
        spec.build()


def test_spec_build_determinism():
    rng = random.Random(31)
    for trial in range(10):
        k, m = rng.choice([(2, 4), (3, 3), (4, 2), (5, 2)])
        spec = FamilySpec(variant="F", k=k, m=m)
        assert encode(spec.build()) == encode(spec.build())
    spec = FamilySpec(variant="F1", k=5)
    assert encode(spec.build()) == encode(spec.build())


def test_spec_rejects_malformed():
    with pytest.raises(GraphError):
        FamilySpec.from_text("k: 4")
    with pytest.raises(GraphError):
        FamilySpec.from_text("family: F\nk: four")
    with pytest.raises(GraphError):
        FamilySpec(variant="F9").build()


def test_family_f_large_member_certificate_only():
    # Certificate-style verification scales far past the solver guard.
    g = build_family_F(100, 5)
    n = g.n
    assert n == 500
    assert g.min_degree() == theorem_threshold(n, 100) - 1
    designated = g.meta["independent_set"]
    assert len(designated) == (n + 2) // 2
    assert is_independent(g, designated)


def test_random_specs_encode_decode_round_trip():
    from hamparts.graphs import decode

    rng = random.Random(1234)
    specs = [FamilySpec(variant="F2")]
    for _ in range(8):
        k, m = rng.choice([(2, 3), (3, 2), (4, 2), (5, 1), (6, 2)])
        if m * k >= 3:
            specs.append(FamilySpec(variant="F", k=k, m=m))
    for k in (3, 4, 5, 6):
        specs.append(FamilySpec(variant="F1", k=k))
    for k in (4, 6):
        specs.append(FamilySpec(variant="F3", k=k, xy_edge=bool(k % 4)))
    for spec in specs:
        g = spec.build()
        assert decode(encode(g)) == g
