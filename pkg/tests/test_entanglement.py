import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xxchain.entanglement import (
    SIGMA_YY,
    all_pairwise,
    concurrence,
    concurrence_xstate,
    flipped,
    partial_trace_pair,
    spin_flip,
)
from xxchain.errors import InputError, InvalidStateError
from xxchain.experiments import chain_spectrum
from xxchain.model import ChainSpec
from xxchain.numerics import ground_state_mixture, thermal_state

import oracle

HALF_MAX = 1 / math.sqrt(2) - 1 / 4  # 0.45710678...

BELL = np.zeros((4, 4))
BELL[1:3, 1:3] = 0.5


def projector(psi):
    psi = np.asarray(psi, dtype=float)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi)


@st.composite
def x_states(draw):
    """Random real X states: diagonal plus the (00,11) and (01,10) coherences."""
    pops = np.array(draw(st.lists(st.floats(0, 1), min_size=4, max_size=4)))
    if pops.sum() < 1e-3:
        pops = np.ones(4)
    u, v, w, x = pops / pops.sum()
    rz = draw(st.floats(-1, 1))
    ry = draw(st.floats(-1, 1))
    rho = np.diag([u, v, w, x])
    rho[1, 2] = rho[2, 1] = rz * math.sqrt(v * w)
    rho[0, 3] = rho[3, 0] = ry * math.sqrt(u * x)
    return rho


# ---- partial trace

def test_partial_trace_examples():
    rho = np.zeros((8, 8))
    rho[0, 0] = 1
    np.testing.assert_array_equal(partial_trace_pair(rho, 1, 2), np.diag([1.0, 0, 0, 0]))
    for n in (2, 3, 5):
        mixed = np.eye(2**n) / 2**n
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                np.testing.assert_allclose(partial_trace_pair(mixed, i, j), np.eye(4) / 4, atol=1e-16)
    ghz = projector([1, 0, 0, 0, 0, 0, 0, 1])
    np.testing.assert_allclose(partial_trace_pair(ghz, 1, 2), np.diag([0.5, 0, 0, 0.5]), atol=1e-16)


def test_partial_trace_site_order():
    # |100>: site 1 excited; pair (1,3) sees |10>, pair (2,3) sees |00>
    rho = np.zeros((8, 8))
    rho[4, 4] = 1
    assert partial_trace_pair(rho, 1, 3)[2, 2] == 1
    assert partial_trace_pair(rho, 2, 3)[0, 0] == 1


def test_partial_trace_matches_explicit_sum():
    f = (0.7, 1.3, 1, 2.2, 0.5)
    rho = thermal_state(chain_spectrum(ChainSpec.from_factors(f)), 0.4)
    for i, j in [(1, 2), (1, 5), (2, 4), (3, 5)]:
        ref = oracle.reduce_pair(rho, 5, i, j)
        red = partial_trace_pair(rho, i, j)
        np.testing.assert_allclose(red, ref.real, atol=1e-15)
        assert abs(np.trace(red) - 1) <= 1e-12


@pytest.mark.parametrize("pair", [(1, 1), (2, 1), (0, 2), (1, 4)])
def test_partial_trace_bad_pair(pair):
    with pytest.raises(InputError):
        partial_trace_pair(np.eye(8) / 8, *pair)


# ---- spin flip

def test_spin_flip_examples():
    np.testing.assert_allclose(spin_flip(BELL), BELL, atol=1e-16)
    np.testing.assert_array_equal(spin_flip(np.diag([1.0, 0, 0, 0])), np.zeros((4, 4)))
    np.testing.assert_allclose(spin_flip(np.eye(4) / 4), np.eye(4) / 16, atol=1e-16)


def test_sigma_yy_is_real_form_of_complex_product():
    np.testing.assert_array_equal(SIGMA_YY, np.kron(oracle.SY, oracle.SY).real)
    assert not np.kron(oracle.SY, oracle.SY).imag.any()


# ---- concurrence

def test_concurrence_examples():
    assert concurrence(BELL).value == pytest.approx(1.0, abs=1e-12)
    assert concurrence(projector([0, 1, 0, 0])).value == 0.0
    assert concurrence(projector([1, 0, 0, 1])).value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0])
def test_werner(p):
    rho = p * BELL + (1 - p) * np.eye(4) / 4
    expected = max(0.0, (3 * p - 1) / 2)
    assert concurrence(rho).value == pytest.approx(expected, abs=1e-9)
    assert oracle.concurrence(rho) == pytest.approx(expected, abs=1e-9)


def test_werner_half():
    assert concurrence(0.5 * BELL + 0.5 * np.eye(4) / 4).value == pytest.approx(0.25, abs=1e-12)


def test_uniform_three_chain_half_max():
    rho = ground_state_mixture(chain_spectrum(ChainSpec(3, (1, 1, 1))))
    res = concurrence(partial_trace_pair(rho, 1, 2))
    assert res.value == pytest.approx(HALF_MAX, abs=1e-12)
    assert list(res.lambdas) == sorted(res.lambdas, reverse=True)
    assert res.value == max(res.lambdas[0] - res.lambdas[1] - res.lambdas[2] - res.lambdas[3], 0)


def test_concurrence_rejects_non_states():
    with pytest.raises(InvalidStateError):
        concurrence(np.eye(4))  # trace 4
    with pytest.raises(InvalidStateError):
        concurrence(np.diag([0.6, 0.6, -0.2, 0.0]))
    with pytest.raises(InputError):
        concurrence(np.eye(2) / 2)


# ---- closed form

def test_xstate_examples():
    assert concurrence_xstate(np.diag([0.5, 0, 0, 0.5])) == 0.0
    assert concurrence_xstate(BELL) == pytest.approx(1.0, abs=1e-15)
    rho = np.diag([1 / 8, 3 / 8, 3 / 8, 1 / 8])
    rho[1, 2] = rho[2, 1] = 1 / (2 * math.sqrt(2))
    assert concurrence_xstate(rho) == pytest.approx(HALF_MAX, abs=1e-15)


def test_xstate_rejects_non_x():
    rho = np.eye(4) / 4
    rho[0, 1] = rho[1, 0] = 0.1
    with pytest.raises(InputError):
        concurrence_xstate(rho)


@settings(max_examples=200, deadline=None)
@given(x_states())
def test_oracle_agreement_on_x_states(rho):
    generic = concurrence(rho)
    assert abs(generic.value - concurrence_xstate(rho)) <= 1e-9
    # sum of squared lambdas is tr(rho rho~)
    assert abs(sum(l * l for l in generic.lambdas) - np.trace(spin_flip(rho))) <= 1e-9


@settings(max_examples=100, deadline=None)
@given(x_states(), st.sampled_from([(1, 1), (1, -1), (-1, 1), (-1, -1)]))
def test_local_z_rotation_invariance(rho, signs):
    # R_z(pi) is -i Z, so conjugation acts as Z on each flipped site
    z = np.kron(np.diag([1.0, signs[0]]), np.diag([1.0, signs[1]]))
    assert abs(concurrence(z @ rho @ z).value - concurrence(rho).value) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(x_states())
def test_swap_invariance(rho):
    swap = np.eye(4)[[0, 2, 1, 3]]
    assert abs(concurrence(swap @ rho @ swap).value - concurrence(rho).value) <= 1e-10


def test_generic_path_on_non_x_state():
    rng = np.random.default_rng(11)
    for _ in range(20):
        X = rng.normal(size=(4, 4))
        rho = X @ X.T
        rho /= np.trace(rho)
        assert concurrence(rho).value == pytest.approx(oracle.concurrence(rho), abs=1e-9)


# ---- all pairs

def test_all_pairwise_examples():
    res = all_pairwise(np.eye(16) / 16)
    assert list(res) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert all(r.value == 0 for r in res.values())

    res = all_pairwise(ground_state_mixture(chain_spectrum(ChainSpec(3, (1, 1, 1)))))
    assert res[(1, 2)].value == pytest.approx(HALF_MAX, abs=1e-12)
    assert res[(2, 3)].value == pytest.approx(HALF_MAX, abs=1e-12)
    assert res[(1, 3)].is_zero()

    res = all_pairwise(ground_state_mixture(chain_spectrum(ChainSpec(2, (1, 1)))))
    assert res[(1, 2)].value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "factors,T",
    [((1, 1, 1, 1), 0.0), ((0.1, 1, 1, 0.1), 0.0), ((1, 5, 1, 1), 0.2), ((0.05, 1, 1, 1, 0.05), 0.0),
     ((2, 1, 0.3, 1, 1), 0.7), ((0.1, 1, 10, 10, 1, 0.1), 0.0)],
)
def test_pipeline_against_brute_force(factors, T):
    rho = thermal_state(chain_spectrum(ChainSpec.from_factors(factors)), T)
    ref_rho = oracle.state(factors, T)
    n = len(factors)
    for (i, j), res in all_pairwise(rho).items():
        red = partial_trace_pair(rho, i, j)
        assert abs(res.value - concurrence_xstate(red)) <= 1e-9
        assert abs(res.value - oracle.concurrence(oracle.reduce_pair(ref_rho, n, i, j))) <= 1e-9
