import json

import numpy as np
import pytest

from clawtrace.canon import canonical_form
from clawtrace.errors import InfeasibleRange, OrderTooLargeForCanonical
from clawtrace.families import (
    BROUSEK_BASES,
    FamilySpec,
    complete,
    complete_plus_isolated,
    complete_split,
    edgeless,
    graph_l,
    net,
    ning_ge,
    nn33,
)
from clawtrace.graph import disjoint_union, from_edges, join, relabel
from clawtrace.hamilton import has_hamilton_path
from clawtrace.enumeration import sample_dense_claw_free
from clawtrace.spectral import spectral_radius
from clawtrace.verify import (
    THEOREM_IDS,
    REGISTRY,
    decide_traceable,
    hunt,
    is_spanning_subgraph_of_pendant_family,
    match_exception,
    verify,
)

import frozen
from oracles import random_graph


def cycle_graph(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_registry_is_complete():
    assert len(THEOREM_IDS) == 17
    assert tuple(REGISTRY) == THEOREM_IDS
    assert "MainMuG" in REGISTRY and "Hong" in REGISTRY


# ---------------------------------------------------------------------------
# traceability decisions


def test_decide_traceable_matches_exact_solver():
    rng = np.random.default_rng(97)
    for _ in range(200):
        n = int(rng.integers(1, 11))
        g = random_graph(rng, n, rng.random())
        assert decide_traceable(g) == has_hamilton_path(g)


def test_decide_traceable_beyond_exact_range():
    dense = sample_dense_claw_free(26, 276, seed=4)
    assert decide_traceable(dense) is True
    assert decide_traceable(nn33(26)) is False  # three pendant vertices
    hub = join(complete(1), disjoint_union(complete(12), complete(13)))
    assert decide_traceable(hub) is True
    spider = join(complete(1), disjoint_union(complete(9), disjoint_union(complete(8), complete(8))))
    assert decide_traceable(spider) is False  # cut vertex leaves 3 components
    assert decide_traceable(cycle_graph(30)) is True


# ---------------------------------------------------------------------------
# exception matching


def test_match_exception_cases():
    fams = [FamilySpec("Nn33", (8,)), FamilySpec("GraphL")]
    rng = np.random.default_rng(101)
    shuffled = relabel(nn33(8), list(rng.permutation(8)))
    assert match_exception(shuffled, fams).kind == "Nn33"
    assert match_exception(cycle_graph(9), [FamilySpec("Nn33", (9,)), FamilySpec("GraphL")]) is None
    assert match_exception(graph_l(), fams + [FamilySpec("GraphL")]) is not None
    # families that cannot be built at this order are skipped, not fatal
    assert match_exception(cycle_graph(5), [FamilySpec("Nn33", (5,))]) is None
    with pytest.raises(OrderTooLargeForCanonical):
        match_exception(complete(17), fams)


def test_spanning_subgraph_of_pendant_family():
    assert is_spanning_subgraph_of_pendant_family(nn33(10))
    assert is_spanning_subgraph_of_pendant_family(
        disjoint_union(complete(7), edgeless(3))
    )
    # losing a clique edge keeps it a spanning subgraph
    g = nn33(9)
    edges = [e for e in g.edges() if e != (0, 1)]
    assert is_spanning_subgraph_of_pendant_family(from_edges(9, edges))
    assert not is_spanning_subgraph_of_pendant_family(cycle_graph(10))
    assert not is_spanning_subgraph_of_pendant_family(complete(9))
    from clawtrace.families import star

    assert not is_spanning_subgraph_of_pendant_family(star(9))  # shared attach point


# ---------------------------------------------------------------------------
# exhaustive verification runs


def test_pendant_exceptions_exact_small_orders():
    r = verify("MainMuG", 6, 7)
    assert r.passed and r.mode == "Exhaustive"
    assert r.exceptions == (
        (frozen.G6_NET, "Nn33(6)"),
        (frozen.G6_PENDANT_7, "Nn33(7)"),
    )
    assert r.checked == frozen.COUNTS[6][2] + frozen.COUNTS[7][2]


def test_edge_count_threshold_small_orders():
    r = verify("EdgeLemma", 6, 7)
    assert r.passed
    assert r.exceptions == (
        (frozen.G6_NET, "Nn33(6)"),
        (frozen.G6_PENDANT_7, "Nn33(7)"),
        (frozen.G6_GRAPH_L, "GraphL"),
    )


def test_minimum_degree_conditions_hold():
    assert verify("Dirac", 2, 7).passed
    assert verify("MatthewsSumner", 2, 8).passed
    assert verify("DegreeSumLemma", 2, 7).passed


def test_forbidden_subgraph_families_traceable():
    a = verify("DGJ", 2, 8)
    assert a.passed and a.exceptions == ()
    b = verify("LBZ", 2, 8)
    assert b.passed and b.exceptions == ()


def test_bound_certifications():
    assert verify("Hong", 2, 6).passed
    assert verify("Hofmeister", 1, 6).passed


def test_isolated_vertex_exception_family():
    r = verify("FiedlerNikiforov1", 2, 6)
    assert r.passed
    assert all(label.startswith("CompletePlusIsolated") for _, label in r.exceptions)
    assert verify("FiedlerNikiforov2", 2, 6).passed


def test_hub_family_exception_at_seven():
    r = verify("NingGe", 7, 7)
    assert r.passed
    assert r.exceptions == ((frozen.G6_HUB_SPLIT_7, "NingGe(7)"),)


def test_hub_threshold_boundary_exception_at_eight():
    # At n = 8 the split graph K_3 v 5K_1 sits exactly on the radius
    # threshold n-3 (the unique order where 1+sqrt(3n-8) equals n-3), is
    # not traceable, and is not the declared exception graph.  The verifier
    # must surface it as Unmatched and fail the run; anything else would be
    # the borderline routing hiding a counterexample.
    r = verify("NingGe", 8, 8)
    assert not r.passed
    assert r.exceptions == (
        (frozen.G6_SPLIT_38, "Unmatched"),
        (frozen.G6_HUB_SPLIT_8, "NingGe(8)"),
    )
    assert frozen.G6_SPLIT_38 in r.borderline
    g = complete_split(3, 8)
    assert abs(spectral_radius(g).value - 5.0) < 1e-12
    assert not has_hamilton_path(g)


def test_two_connected_hamilton_sweep_small():
    r = verify("BrousekOrder9", 3, 8)
    assert r.passed and r.exceptions == ()
    r8 = verify("BrousekOrder9", 8, 8)
    assert r8.checked == frozen.TWO_CONNECTED_CLAW_FREE[8]


def test_constructed_family_sweep():
    r = verify("HamiltonianFamily", 12, 13)
    assert r.passed and r.checked == 8
    assert r.borderline == ()


def test_sampled_modes():
    r = verify("MainComplement", 24, 25, mode="sample", count=10, seed=5)
    assert r.passed and r.mode == "Sampled" and r.checked == 10 and r.seed == 5
    r2 = verify("EdgeLemmaPrime", 24, 24, mode="sample", count=6, seed=11)
    assert r2.passed and r2.checked == 6


def test_sampled_mode_deterministic():
    a = verify("MainComplement", 24, 24, mode="sample", count=6, seed=7)
    b = verify("MainComplement", 24, 24, mode="sample", count=6, seed=7)
    assert a.exceptions == b.exceptions and a.borderline == b.borderline


def test_workers_do_not_change_reports():
    a = verify("MainMuG", 6, 7, workers=1)
    b = verify("MainMuG", 6, 7, workers=2)
    assert a.exceptions == b.exceptions
    assert a.borderline == b.borderline
    assert a.checked == b.checked


def test_cmp_tol_widens_borderline():
    tight = verify("MainMuG", 7, 7)
    loose = verify("MainMuG", 7, 7, cmp_tol=0.5)
    assert tight.passed
    assert len(loose.borderline) > len(tight.borderline)
    # borderline graphs still get their conclusion checked, so widening the
    # tolerance pulls sub-threshold non-traceable graphs in as Unmatched
    extra = set(loose.exceptions) - set(tight.exceptions)
    assert extra and all(label == "Unmatched" for _, label in extra)


def test_report_serializes():
    r = verify("MainMuG", 6, 6)
    d = r.to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["n_range"] == [6, 6] and d["mode"] == "Exhaustive"
    assert d["seed"] is None and d["elapsed_ms"] >= 0


def test_infeasible_ranges_rejected():
    with pytest.raises(InfeasibleRange):
        verify("NoSuchTheorem", 5, 6)
    with pytest.raises(InfeasibleRange):
        verify("MainMuG", 9, 7)
    with pytest.raises(InfeasibleRange):
        verify("MainMuG", 3, 12)
    with pytest.raises(InfeasibleRange):
        verify("MainComplement", 24, 25)  # sampled-only theorem
    with pytest.raises(InfeasibleRange):
        verify("MainMuG", 1, 4)  # below the statement floor
    with pytest.raises(InfeasibleRange):
        verify("MainMuG", 7, 8, mode="sample", count=5)  # seed missing
    with pytest.raises(InfeasibleRange):
        verify("HamiltonianFamily", 12, 12, mode="sample", count=5, seed=1)
    with pytest.raises(InfeasibleRange):
        verify("MainMuG", 7, 7, mode="warp")


def test_exception_families_satisfy_hypothesis_violate_conclusion():
    for n in range(7, 11):
        g = nn33(n)
        assert spectral_radius(g).value >= n - 4 - 1e-9
        assert not has_hamilton_path(g)
        h = ning_ge(n)
        assert spectral_radius(h).value >= n - 3 - 1e-9
        assert not has_hamilton_path(h)
        k = complete_plus_isolated(n)
        assert abs(spectral_radius(k).value - (n - 2)) < 1e-9
        assert not has_hamilton_path(k)


# ---------------------------------------------------------------------------
# hunts


def test_hunt_clean_at_high_density():
    h = hunt("MainMuG", n=8, seed=3, count=40)
    assert h.passed and h.counterexamples == ()
    assert hunt("MainMuG", n=8, seed=3, count=40).near_misses == h.near_misses


def test_hunt_near_misses_sorted_and_deduplicated():
    h = hunt("MainMuG", n=10, seed=4, count=250, density=0.3)
    margins = [m for _, m in h.near_misses]
    assert margins == sorted(margins, reverse=True)
    assert all(m < 0 for m in margins)
    names = [s for s, _ in h.near_misses]
    assert len(names) == len(set(names))
    assert len(h.near_misses) <= 10


def test_hunt_rejects_margin_free_theorems():
    with pytest.raises(InfeasibleRange):
        hunt("DGJ", n=8, seed=1, count=5)
    with pytest.raises(InfeasibleRange):
        hunt("NoSuch", n=8, seed=1, count=5)
    with pytest.raises(InfeasibleRange):
        hunt("MainMuG", n=1, seed=1, count=5)


def test_hunt_report_serializes():
    h = hunt("MainMuG", n=8, seed=2, count=10)
    d = h.to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["theorem"] == "MainMuG" and d["n"] == 8 and d["seed"] == 2
