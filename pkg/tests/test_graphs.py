"""Graph core: construction, queries, connectivity, serialization."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamparts.graphs import (
    GraphError,
    KPartiteGraph,
    SizeGuardError,
    build_graph,
    complete_kpartite,
    decode,
    degree_between,
    encode,
    export_dot,
    graph6_decode,
    graph6_encode,
    independence_number,
    induced_bipartite,
    is_independent,
    maximum_independent_set,
    vertex_connectivity,
)
from _util import (
    brute_independence_number,
    brute_vertex_connectivity,
    random_graph,
    random_kpartite,
)


def test_build_k22():
    g = build_graph(4, 2, (0, 0, 1, 1), [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert g.edge_count() == 4
    assert g.min_degree() == 2
    assert degree_between(g, [0, 1], [2, 3]) == 2


def test_build_octahedron():
    g = complete_kpartite(3, 2)
    assert g.n == 6
    assert g.min_degree() == 4
    assert g.edge_count() == 12


def test_build_rejects_intra_part_edge():
    with pytest.raises(GraphError, match="intra-part"):
        build_graph(4, 2, (0, 0, 1, 1), [(0, 1)])


def test_build_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(4, 2, (0, 0, 1, 1), [(2, 2)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match="out-of-range"):
        build_graph(4, 2, (0, 0, 1, 1), [(0, 9)])


def test_build_rejects_unbalanced():
    with pytest.raises(GraphError, match="unbalanced"):
        build_graph(4, 2, (0, 0, 0, 1), [])


def test_graph_equality_ignores_meta():
    g1 = build_graph(4, 2, (0, 0, 1, 1), [(0, 2)], meta={"family": "x"})
    g2 = build_graph(4, 2, (0, 0, 1, 1), [(0, 2)])
    assert g1 == g2
    assert hash(g1) == hash(g2)


def test_degree_between_errors():
    g = complete_kpartite(2, 2)
    with pytest.raises(GraphError, match="empty"):
        degree_between(g, [], [0, 1])
    with pytest.raises(GraphError, match="disjoint"):
        degree_between(g, [0, 1], [1, 2])


def test_vertex_connectivity_classics():
    assert vertex_connectivity(complete_kpartite(2, 2)) == 2
    assert vertex_connectivity(complete_kpartite(2, 3)) == 3
    assert vertex_connectivity(complete_kpartite(3, 2)) == 4
    # Complete graph as singleton parts.
    k4 = complete_kpartite(4, 1)
    assert vertex_connectivity(k4) == 3
    # A path has a cut vertex.
    path = build_graph(3, 3, (0, 1, 2), [(0, 1), (1, 2)])
    assert vertex_connectivity(path) == 1
    # Disconnected graph.
    two_edges = build_graph(4, 2, (0, 1, 0, 1), [(0, 1), (2, 3)])
    assert vertex_connectivity(two_edges) == 0


def test_vertex_connectivity_against_brute_force():
    rng = random.Random(42)
    for trial in range(60):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        assert vertex_connectivity(g) == brute_vertex_connectivity(g), encode(g)


def test_independence_number_against_brute_force():
    rng = random.Random(7)
    for trial in range(60):
        n = rng.randint(1, 12)
        k = rng.choice([d for d in range(1, n + 1) if n % d == 0])
        g = random_kpartite(rng, n, k, rng.choice([0.3, 0.5, 0.7]))
        assert independence_number(g) == brute_independence_number(g)
    # A few larger instances against the subset oracle.
    for n, k, p in [(14, 7, 0.4), (16, 4, 0.5), (16, 16, 0.6)]:
        g = random_kpartite(rng, n, k, p)
        assert independence_number(g) == brute_independence_number(g)


def test_independence_witness_is_independent():
    rng = random.Random(11)
    for trial in range(30):
        g = random_graph(rng, rng.randint(2, 10), 0.5)
        witness = maximum_independent_set(g)
        assert is_independent(g, witness)
        assert len(witness) == independence_number(g)


def test_independence_guard():
    g = complete_kpartite(2, 2)
    with pytest.raises(SizeGuardError):
        independence_number(g, max_n=3)


def test_complete_kpartite_alpha_is_part_size():
    for k, m in [(2, 3), (3, 2), (4, 2)]:
        assert independence_number(complete_kpartite(k, m)) == m


def test_induced_bipartite_k222():
    g = complete_kpartite(3, 2)
    h = induced_bipartite(g, [0, 1, 2, 3], [4, 5])
    assert h.k == 2
    assert sorted(len(h.part_members(p)) for p in range(2)) == [2, 4]
    assert h.edge_count() == 8
    assert not h.is_balanced


def test_induced_bipartite_errors():
    g = complete_kpartite(3, 2)
    with pytest.raises(GraphError, match="nonempty"):
        induced_bipartite(g, range(6), [])
    with pytest.raises(GraphError, match="overlap"):
        induced_bipartite(g, [0, 1, 2], [2, 3, 4, 5])
    with pytest.raises(GraphError, match="cover"):
        induced_bipartite(g, [0, 1], [2, 3])


def test_graph6_against_networkx():
    rng = random.Random(3)
    for trial in range(40):
        n = rng.randint(1, 20)
        g = random_graph(rng, n, rng.random())
        text = graph6_encode(g)
        ref = nx.from_graph6_bytes(text.encode("ascii"))
        assert set(ref.edges()) == {tuple(sorted(e)) for e in g.edges()}
        # And the reverse direction against networkx's encoder.
        ref2 = nx.Graph()
        ref2.add_nodes_from(range(n))
        ref2.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(ref2, header=False).strip().decode() == text


def test_graph6_decode_round_trip():
    rng = random.Random(5)
    for trial in range(40):
        n = rng.randint(1, 16)
        g = random_graph(rng, n, rng.random())
        size, edges = graph6_decode(graph6_encode(g))
        assert size == n
        assert set(edges) == {tuple(sorted(e)) for e in g.edges()}


def test_encode_decode_round_trip():
    rng = random.Random(9)
    for trial in range(40):
        n = rng.randint(2, 14)
        k = rng.choice([d for d in range(2, n + 1) if n % d == 0])
        g = random_kpartite(rng, n, k, 0.5)
        assert decode(encode(g)) == g


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_encode_decode_round_trip_property(data):
    k = data.draw(st.integers(min_value=2, max_value=5))
    m = data.draw(st.integers(min_value=1, max_value=3))
    seed = data.draw(st.integers(min_value=0, max_value=2**30))
    g = random_kpartite(random.Random(seed), m * k, k, 0.5)
    assert decode(encode(g)) == g


def test_decode_rejects_intra_part_edge():
    g = build_graph(4, 2, (0, 0, 1, 1), [(0, 2), (1, 3)])
    text = encode(g)
    header = "kpart 2: 0 2, 1 3"  # reassigns parts so edge (0,2) is internal
    with pytest.raises(GraphError, match="intra-part"):
        decode(header + "\n" + text.splitlines()[1])


def test_decode_rejects_malformed():
    with pytest.raises(GraphError):
        decode("nonsense")
    with pytest.raises(GraphError):
        decode("kpart 2: 0 1, 2 3\n")
    with pytest.raises(GraphError):
        decode("kpart 2: 0 1\nA?")  # declares 2 parts but lists 1
    with pytest.raises(GraphError):
        decode("kpart 1: 0 5\nA?")  # out-of-range vertex in a part list
    with pytest.raises(GraphError):
        decode("kpart 2: 0, 1\nA")  # truncated graph6 body


def test_export_dot_k22():
    g = complete_kpartite(2, 2)
    text = export_dot(g)
    node_lines = [line for line in text.splitlines() if "fillcolor" in line]
    edge_lines = [line for line in text.splitlines() if "--" in line]
    assert len(node_lines) == 4
    assert len(edge_lines) == 4
    colors = {line.split('"')[1] for line in node_lines}
    assert len(colors) == 2
