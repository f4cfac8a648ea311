import math

import numpy as np
import pytest

from clawtrace.errors import DisconnectedInput, InvalidParams, NotConverged
from clawtrace.families import (
    complete,
    complete_plus_isolated,
    complete_split,
    graph_l,
    graph_m,
    net,
    nn33,
    star,
)
from clawtrace.graph import complement, disjoint_union, from_edges
from clawtrace.spectral import (
    DEFAULT_CMP_TOL,
    SpectralEstimate,
    ThresholdVerdict,
    compare_threshold,
    complete_split_radius,
    hofmeister_bound,
    hong_bound,
    resolve_cmp_tol,
    resolve_tol,
    spectral_radius,
    triple_split_radius,
)

import frozen
from oracles import mu_dense, random_graph


def path_graph(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_frozen_anchors():
    assert abs(spectral_radius(net()).value - frozen.MU_NET) < 1e-9
    assert abs(spectral_radius(graph_l()).value - frozen.MU_L) < 1e-9
    assert abs(spectral_radius(graph_m()).value - frozen.MU_M) < 1e-9
    assert abs(spectral_radius(star(9)).value - frozen.MU_STAR_9) < 1e-9
    assert abs(spectral_radius(nn33(7)).value - frozen.MU_PENDANT_7) < 1e-9


def test_exact_values():
    assert abs(spectral_radius(complete(8)).value - 7.0) < 1e-9
    assert abs(spectral_radius(net()).value - (1 + math.sqrt(2))) < 1e-9
    # path eigenvalue 2 cos(pi / (n+1))
    for n in (2, 5, 9):
        want = 2 * math.cos(math.pi / (n + 1))
        assert abs(spectral_radius(path_graph(n)).value - want) < 1e-9


def test_power_iteration_agrees_with_dense_eigensolver():
    rng = np.random.default_rng(41)
    for _ in range(120):
        n = int(rng.integers(1, 13))
        g = random_graph(rng, n, rng.random())
        est = spectral_radius(g)
        assert est.converged
        assert abs(est.value - mu_dense(g)) < 1e-8, (g, est)


def test_bipartite_components_handled():
    # stars, paths and even cycles all have +/- paired spectra where an
    # unshifted iteration oscillates; the shift must still converge
    rng = np.random.default_rng(43)
    for n in (2, 4, 6, 10, 15):
        assert abs(spectral_radius(star(n)).value - math.sqrt(n - 1)) < 1e-9
    c6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert abs(spectral_radius(c6).value - 2.0) < 1e-9
    for _ in range(20):
        n = int(rng.integers(2, 12))
        left = int(rng.integers(1, n))
        edges = [
            (i, j)
            for i in range(left)
            for j in range(left, n)
            if rng.random() < 0.6
        ]
        g = from_edges(n, edges)
        assert abs(spectral_radius(g).value - mu_dense(g)) < 1e-8


def test_disconnected_takes_max_over_components():
    g = disjoint_union(complete(4), star(6))
    assert abs(spectral_radius(g).value - 3.0) < 1e-9
    h = complete_plus_isolated(8)
    assert abs(spectral_radius(h).value - 6.0) < 1e-9


def test_residual_certificate():
    rng = np.random.default_rng(47)
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 12)), 0.5)
        est = spectral_radius(g)
        assert est.residual <= resolve_tol(None)
        if g.m > 0:
            assert est.iterations >= 1


def test_closed_forms_match_each_other_and_the_oracle():
    for k in range(1, 7):
        for n in range(k + 1, 31):
            want = mu_dense(complete_split(k, n))
            assert abs(complete_split_radius(k, n) - want) < 1e-12
    for n in range(4, 41):
        assert abs(triple_split_radius(n) - complete_split_radius(3, n)) < 1e-12
    with pytest.raises(InvalidParams):
        complete_split_radius(5, 5)
    with pytest.raises(InvalidParams):
        triple_split_radius(3)


def test_split_equality_order():
    # 1 + sqrt(3n-8) meets n-3 only at n = 8
    assert abs(triple_split_radius(8) - 5.0) < 1e-12
    for n in (6, 7, 9, 10, 12):
        assert abs(triple_split_radius(n) - (n - 3)) > 1e-6


def test_bound_sandwich_on_random_graphs():
    rng = np.random.default_rng(53)
    for _ in range(100):
        n = int(rng.integers(2, 12))
        g = random_graph(rng, n, rng.random())
        mu = spectral_radius(g).value
        assert hofmeister_bound(g) <= mu + 1e-9
        from clawtrace.graph import is_connected

        if is_connected(g):
            assert mu <= hong_bound(g) + 1e-9


def test_hong_bound_needs_connected():
    with pytest.raises(DisconnectedInput):
        hong_bound(disjoint_union(complete(3), complete(3)))


def test_hong_equality_on_complete_and_star():
    for n in (2, 5, 9):
        g = complete(n)
        assert abs(spectral_radius(g).value - hong_bound(g)) < 1e-9
        s = star(n + 1)
        assert abs(spectral_radius(s).value - hong_bound(s)) < 1e-9
    p = path_graph(5)
    assert spectral_radius(p).value < hong_bound(p) - 1e-6


def test_compare_threshold_verdicts():
    est = SpectralEstimate(5.0, 10, True, 0.0)
    assert compare_threshold(est, 4.0) == ThresholdVerdict.ABOVE
    assert compare_threshold(est, 6.0) == ThresholdVerdict.BELOW
    assert compare_threshold(est, 5.0) == ThresholdVerdict.BORDERLINE
    assert compare_threshold(est, 5.0 - 0.5 * DEFAULT_CMP_TOL) == (
        ThresholdVerdict.BORDERLINE
    )
    assert compare_threshold(est, 4.0, cmp_tol=2.0) == ThresholdVerdict.BORDERLINE
    with pytest.raises(NotConverged):
        compare_threshold(SpectralEstimate(5.0, 99, False, 1.0), 4.0)


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("CMP_TOL", "0.25")
    assert resolve_cmp_tol(None) == 0.25
    assert resolve_cmp_tol(1e-9) == 1e-9  # explicit argument wins
    est = SpectralEstimate(5.2, 10, True, 0.0)
    assert compare_threshold(est, 5.0) == ThresholdVerdict.BORDERLINE
    monkeypatch.setenv("SPECTRAL_TOL", "1e-6")
    assert resolve_tol(None) == 1e-6
    est2 = spectral_radius(complete(6))
    assert est2.converged and abs(est2.value - 5.0) < 1e-5
