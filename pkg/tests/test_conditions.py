"""Condition checkers: bipartite degree test, dominating cycles, diagnostics."""

import random

import pytest

from hamparts.conditions import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATED,
    check_domcycle_lemma,
    chvatal_bipartite_condition,
    is_strongly_dominating,
    successor_profile,
)
from hamparts.families import build_F2, build_family_F3
from hamparts.graphs import (
    CycleCertificate,
    GraphError,
    build_graph,
    complete_kpartite,
    induced_bipartite,
)
from hamparts.solver import find_hamiltonian_cycle, longest_cycle
from _util import random_kpartite


def test_chvatal_complete_bipartite():
    assert chvatal_bipartite_condition(complete_kpartite(2, 4))


def test_chvatal_f3_bipartite_reduction_fails():
    g = build_family_F3(4)
    x_side = g.meta["x_side"]
    y_side = [v for v in range(g.n) if v not in x_side]
    h = induced_bipartite(g, x_side, y_side)
    # The throttled vertex sits on the V side (part 1 of h).
    assert not chvatal_bipartite_condition(h, u_part=0)


def test_chvatal_isolated_vertex_fails():
    g = build_graph(4, 2, (0, 0, 1, 1), [(0, 2)])
    assert not chvatal_bipartite_condition(g)


def test_chvatal_rejects_unbalanced_sides():
    g = complete_kpartite(3, 2)
    h = induced_bipartite(g, [0, 1, 2, 3], [4, 5])
    with pytest.raises(GraphError, match="equal size"):
        chvatal_bipartite_condition(h)


def test_chvatal_implies_hamiltonian_on_corpus():
    rng = random.Random(404)
    positives = 0
    for trial in range(300):
        m = rng.choice([2, 3, 4])
        g = random_kpartite(rng, 2 * m, 2, rng.choice([0.4, 0.6, 0.8, 0.95]))
        for side in (0, 1):
            if chvatal_bipartite_condition(g, u_part=side):
                assert find_hamiltonian_cycle(g) is not None
                positives += 1
                break
    assert positives > 30


def test_strongly_dominating_hamiltonian_cycle():
    g = complete_kpartite(3, 2)
    cert = find_hamiltonian_cycle(g)
    assert is_strongly_dominating(g, cert)


def test_strongly_dominating_f2_six_cycle_fails():
    g = build_F2()
    # The outside pair {6, 7} is joined by an edge, so the 6-cycle on the rim
    # is not strongly dominating.
    assert not is_strongly_dominating(g, CycleCertificate((0, 1, 2, 3, 4, 5)))


def test_strongly_dominating_c4_plus_apex():
    g = build_graph(
        5, 5, (0, 1, 2, 3, 4), [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)]
    )
    assert is_strongly_dominating(g, CycleCertificate((0, 1, 2, 3)))
    # Make the outside vertex's neighbours consecutive instead.
    g2 = build_graph(
        5, 5, (0, 1, 2, 3, 4), [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]
    )
    assert not is_strongly_dominating(g2, CycleCertificate((0, 1, 2, 3)))


def test_strongly_dominating_invariant_under_rotation_reflection():
    g = build_graph(
        5, 5, (0, 1, 2, 3, 4), [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)]
    )
    base = (0, 1, 2, 3)
    results = set()
    for shift in range(4):
        rotated = tuple(base[(i + shift) % 4] for i in range(4))
        results.add(is_strongly_dominating(g, CycleCertificate(rotated)))
        results.add(is_strongly_dominating(g, CycleCertificate(rotated[::-1])))
    assert results == {True}


def test_strongly_dominating_rejects_invalid_cycle():
    g = complete_kpartite(2, 2)
    with pytest.raises(GraphError):
        is_strongly_dominating(g, CycleCertificate((0, 1, 2, 3)))


def test_domcycle_lemma_k4():
    assert check_domcycle_lemma(complete_kpartite(4, 1)).status == HOLDS


def test_domcycle_lemma_f2_not_applicable():
    assert check_domcycle_lemma(build_F2()).status == NOT_APPLICABLE


def test_domcycle_lemma_low_degree_not_applicable():
    # C5 is 2-connected but its degree 2 falls below (5+2)/3.
    g = build_graph(
        5, 5, (0, 1, 2, 3, 4), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    )
    assert check_domcycle_lemma(g).status == NOT_APPLICABLE


def test_domcycle_lemma_random_sample():
    rng = random.Random(808)
    applicable = 0
    for trial in range(150):
        n = rng.randint(5, 9)
        g = random_kpartite(rng, n, n, rng.choice([0.5, 0.7, 0.9]))
        outcome = check_domcycle_lemma(g)
        assert outcome.status != VIOLATED
        if outcome.status == HOLDS:
            applicable += 1
    assert applicable > 30


def test_successor_profile_c5_plus_outside():
    # 5-cycle plus an outside vertex adjacent to two non-consecutive rim
    # vertices.
    g = build_graph(
        6,
        6,
        (0, 1, 2, 3, 4, 5),
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)],
    )
    cycle = CycleCertificate((0, 1, 2, 3, 4))
    profile = successor_profile(g, cycle, 5)
    assert profile.succ_set == frozenset({5, 1, 3})
    assert profile.pred_set == frozenset({5, 4, 1})
    assert len(profile.succ_set) == 3
    assert profile.succ_parts == 3


def test_successor_profile_rejects_on_cycle_vertex():
    g = complete_kpartite(3, 2)
    cert = find_hamiltonian_cycle(g)
    with pytest.raises(GraphError):
        successor_profile(g, cert, cert.vertices[0])


def test_successor_profile_flags_on_longest_cycle():
    # Non-Hamiltonian instances at the degree threshold whose longest cycles
    # are strongly dominating: every diagnostic flag should hold.
    for g in (build_family_F3(4), build_family_F3(6)):
        cycle = longest_cycle(g)
        outside = [v for v in range(g.n) if v not in cycle.vertices]
        assert outside
        for z in outside:
            profile = successor_profile(g, cycle, z)
            assert profile.succ_independent
            assert profile.pred_independent
            assert profile.sets_large_enough
            assert profile.parts_at_least_half
            assert profile.parts_below_upper


def test_successor_profile_flags_detect_f2():
    # The 8-vertex exceptional graph is the one place a longest cycle fails
    # strong domination; the diagnostic records it instead of failing.
    g = build_F2()
    cycle = longest_cycle(g)
    outside = [v for v in range(g.n) if v not in cycle.vertices]
    profile = successor_profile(g, cycle, outside[0])
    assert not profile.succ_independent
    assert not profile.pred_independent
    assert profile.sets_large_enough
