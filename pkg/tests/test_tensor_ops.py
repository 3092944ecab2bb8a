import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmebound.errors import DomainError
from gmebound.linalg import trace_norm
from gmebound.measures import purity
from gmebound.states import (
    MultipartiteState,
    basis_state,
    density_of,
    ghz,
    maximally_mixed,
    random_mixed_state,
    random_pure_state,
    w,
)
from gmebound.tensor_ops import (
    Bipartition,
    correlation_matrix_ab,
    enumerate_bipartitions,
    enumerate_reductions,
    partial_trace,
    partial_transpose,
    realign,
    vec,
)
from oracles import brute_partial_trace, brute_partial_transpose, brute_realign


def test_enumerate_bipartitions_three():
    assert [bp.label for bp in enumerate_bipartitions(3)] == ["1|23", "12|3", "13|2"]


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 7), (5, 15)])
def test_enumerate_bipartitions_count(n, count):
    bps = enumerate_bipartitions(n)
    assert len(bps) == count == 2 ** (n - 1) - 1
    seen = {frozenset(bp.x) for bp in bps} | {frozenset(bp.xbar) for bp in bps}
    assert len(seen) == 2 * count
    assert all(1 in bp.x for bp in bps)


def test_bipartition_canonicalizes():
    assert Bipartition.from_parties([2, 3], 3) == Bipartition.from_parties([1], 3)
    assert Bipartition(3, 6).label == "1|23"
    with pytest.raises(DomainError):
        Bipartition(3, 7)
    with pytest.raises(DomainError):
        Bipartition(3, 0)


def test_enumerate_reductions():
    assert enumerate_reductions(3) == [(1,), (2,), (1, 2), (3,), (1, 3), (2, 3), ]
    assert len(enumerate_reductions(2)) == 2
    red = set(enumerate_reductions(4))
    assert len(red) == 14
    assert all(tuple(p for p in range(1, 5) if p not in s) in red for s in red)


def test_partial_trace_examples():
    np.testing.assert_allclose(partial_trace(density_of(ghz(3)), [1]), np.eye(2) / 2)
    prod = density_of(basis_state((0, 0, 0), (2, 2, 2)))
    np.testing.assert_allclose(partial_trace(prod, [2, 3]), np.diag([1, 0, 0, 0]))
    np.testing.assert_allclose(partial_trace(density_of(w(3)), [1]), np.diag([2 / 3, 1 / 3]))


@pytest.mark.parametrize("keep", [[1], [2], [3], [1, 3], [2, 3], [1, 2]])
def test_partial_trace_matches_brute_force(keep):
    dims = (2, 3, 2)
    rho = random_mixed_state(dims, 3, seed=11)
    got = partial_trace(rho, keep)
    np.testing.assert_allclose(got, brute_partial_trace(rho.rho, dims, keep), atol=1e-14)
    assert np.trace(got).real == pytest.approx(1, abs=1e-10)


@pytest.mark.parametrize("keep", [[], [1, 2, 3], [4]])
def test_partial_trace_domain(keep):
    with pytest.raises(DomainError):
        partial_trace(maximally_mixed((2, 2, 2)), keep)


@pytest.mark.parametrize("subset", [[1], [2], [3], [1, 3], [2, 3]])
def test_partial_transpose_matches_brute_force(subset):
    dims = (2, 3, 2)
    rho = random_mixed_state(dims, 4, seed=3)
    got = partial_transpose(rho, subset)
    np.testing.assert_array_equal(got, brute_partial_transpose(rho.rho, dims, subset))
    np.testing.assert_allclose(got, got.conj().T, atol=0)
    assert np.trace(got) == np.trace(rho.rho)


def test_partial_transpose_product_state_and_involution():
    ra = random_mixed_state((2,), 2, seed=1).rho
    rb = random_mixed_state((3,), 2, seed=2).rho
    state = MultipartiteState((2, 3), np.kron(ra, rb))
    pt = partial_transpose(state, [1])
    np.testing.assert_allclose(pt, np.kron(ra.T, rb), atol=1e-15)
    assert np.linalg.eigvalsh(pt)[0] >= -1e-12
    twice = partial_transpose(MultipartiteState((2, 3), 0.5 * (pt + pt.conj().T)), [1])
    np.testing.assert_allclose(twice, state.rho, atol=1e-15)


def test_partial_transpose_ghz_norm():
    assert trace_norm(partial_transpose(density_of(ghz(3)), [1])) == pytest.approx(2, abs=1e-12)


@pytest.mark.parametrize("x", [[1], [2], [3], [1, 2], [1, 3]])
def test_realign_matches_brute_force(x):
    dims = (2, 3, 2)
    rho = random_mixed_state(dims, 3, seed=8)
    bp = Bipartition.from_parties(x, 3)
    got = realign(rho, bp)
    np.testing.assert_array_equal(got, brute_realign(rho.rho, dims, bp.x))


def test_realign_shapes_and_norms():
    bell = density_of(ghz(2))
    assert trace_norm(realign(bell, Bipartition(2, 1))) == pytest.approx(2, abs=1e-12)
    assert trace_norm(realign(maximally_mixed((2, 2)), Bipartition(2, 1))) == pytest.approx(0.5)
    r = realign(density_of(ghz(3)), Bipartition(3, 1))
    assert r.shape == (4, 16)
    assert trace_norm(r) == pytest.approx(2, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3), (2, 4)]))
def test_realign_product_norm(seed, dims):
    ra = random_mixed_state(dims[:1], dims[0], seed=seed).rho
    rb = random_mixed_state(dims[1:], 2, seed=seed + 1).rho
    state = MultipartiteState(dims, np.kron(ra, rb))
    expected = math.sqrt(purity(ra)) * math.sqrt(purity(rb))
    assert trace_norm(realign(state, Bipartition(2, 1))) == pytest.approx(expected, abs=1e-8)


def test_vec_examples():
    np.testing.assert_array_equal(vec(np.eye(2)).ravel(), [1, 0, 0, 1])
    np.testing.assert_array_equal(vec([[1, 2], [3, 4]]).ravel(), [1, 3, 2, 4])
    rho = random_mixed_state((3,), 3, seed=4).rho
    assert np.linalg.norm(vec(rho)) ** 2 == pytest.approx(purity(rho))


def test_correlation_matrix_blocks():
    state = random_mixed_state((2, 2, 2), 3, seed=9)
    bp = Bipartition(3, 1)
    m = correlation_matrix_ab(state, bp, 0.0, 0.0)
    assert m.shape == (5, 17)
    assert not np.any(m[0]) and not np.any(m[:, 0])
    assert trace_norm(m) == pytest.approx(trace_norm(realign(state, bp)), abs=1e-12)
    m = correlation_matrix_ab(state, bp, 2.0, 3.0)
    assert m[0, 0] == 6.0
    np.testing.assert_allclose(m[1:, 0], 3 * partial_trace(state, [1]).ravel())
    np.testing.assert_allclose(m[0, 1:], 2 * partial_trace(state, [2, 3]).ravel())


def test_correlation_matrix_maximally_mixed():
    m = correlation_matrix_ab(maximally_mixed((2, 2, 2)), Bipartition(3, 1), 0, 0)
    assert trace_norm(m) == pytest.approx(1 / (2 * math.sqrt(2)), abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_correlation_matrix_product_is_rank_one(seed):
    # complex reductions: R(rho_A x rho_B) must equal the outer product of the vec blocks
    ra = random_mixed_state((2,), 2, seed=seed).rho
    rb = random_mixed_state((2, 2), 3, seed=seed + 50).rho
    state = MultipartiteState((2, 2, 2), np.kron(ra, rb))
    m = correlation_matrix_ab(state, Bipartition(3, 1), 1.0, 1.0)
    expected = math.sqrt(1 + purity(ra)) * math.sqrt(1 + purity(rb))
    assert trace_norm(m) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("seed", range(10))
def test_schmidt_symmetry(seed):
    dims = ((2, 2, 2), (3, 3, 3), (2, 2, 2, 2))[seed % 3]
    psi = density_of(random_pure_state(dims, seed))
    for bp in enumerate_bipartitions(len(dims)):
        assert purity(partial_trace(psi, bp.x)) == pytest.approx(purity(partial_trace(psi, bp.xbar)), abs=1e-9)
