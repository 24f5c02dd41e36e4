from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supergca.exactmath import BaseNumber
from supergca.spinorkit import (
    ETA,
    IndexOutOfRange,
    Omega,
    epsilon_contract,
    madd,
    matmul,
    rho_lower,
    sigma,
    sigma_component,
    sigma_tilde,
    weighted_sym,
)

# plain complex Pauli matrices as an independent reference
_PAULI = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
]


def _cmul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def _tilde(mu):
    return _PAULI[0] if mu == 0 else [[-v for v in row] for row in _PAULI[mu]]


def test_epsilon_conventions():
    assert epsilon_contract("lower", 1, 2) == BaseNumber(1)
    assert epsilon_contract("upper", 1, 2) == BaseNumber(-1)
    assert epsilon_contract("upper", 2, 1) == BaseNumber(1)
    assert epsilon_contract("lower", 1, 1) == BaseNumber(0)
    with pytest.raises(IndexOutOfRange):
        epsilon_contract("lower", 1, 3)


def test_sigma_zero_is_identity():
    assert sigma_component("sigma", 0, 1, 1) == BaseNumber(1)
    assert sigma_component("sigma", 0, 1, 2) == BaseNumber(0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sigma_tilde_flips_spatial(k):
    for a in (1, 2):
        for b in (1, 2):
            assert sigma_component("sigma_tilde", k, a, b) == -sigma_component("sigma", k, a, b)


@pytest.mark.parametrize("mu,nu", [(m, n) for m in range(4) for n in range(4)])
def test_sigma_mn_matches_complex_products(mu, nu):
    a = _cmul(_PAULI[mu], _tilde(nu))
    b = _cmul(_PAULI[nu], _tilde(mu))
    want = [[0.5j * (a[i][j] - b[i][j]) for j in range(2)] for i in range(2)]
    for i in (1, 2):
        for j in (1, 2):
            assert sigma_component("sigma_mn", mu, nu, i, j).to_complex() == pytest.approx(want[i - 1][j - 1], abs=0)


def test_sigma_index_errors():
    with pytest.raises(IndexOutOfRange):
        sigma_component("sigma", 0, 3, 1)
    with pytest.raises(IndexOutOfRange):
        sigma_component("sigma_mn", 4, 0, 1, 1)


def test_clifford_relation():
    # sigma^mu sigma~^nu + sigma^nu sigma~^mu = 2 eta^{mu nu}
    for mu in range(4):
        for nu in range(4):
            s = madd(matmul(sigma(mu), sigma_tilde(nu)), matmul(sigma(nu), sigma_tilde(mu)))
            d = 2 * ETA[mu] if mu == nu else 0
            assert s == [[BaseNumber(d), BaseNumber(0)], [BaseNumber(0), BaseNumber(d)]]


def test_rho_matrices_symmetric():
    for r in range(3):
        m = rho_lower(r)
        assert m[0][1] == m[1][0]


def test_omega_squares_to_minus_one():
    for n2 in (2, 4, 6):
        o = Omega(n2)
        sq = matmul(o, o)
        assert all(sq[i][j] == BaseNumber(-1 if i == j else 0) for i in range(n2) for j in range(n2))
    with pytest.raises(ValueError):
        Omega(3)


@given(st.integers(-9, 9), st.integers(-9, 9))
def test_weighted_sym_half_weight(x, y):
    vals = {(1, 2): BaseNumber(x), (2, 1): BaseNumber(y), (1, 1): BaseNumber(x), (2, 2): BaseNumber(y)}
    sym = weighted_sym("sym", lambda i, j: vals[(i, j)])
    anti = weighted_sym("antisym", lambda i, j: vals[(i, j)])
    assert sym(1, 2) == BaseNumber(x + y) / 2
    assert sym(1, 2) + anti(1, 2) == vals[(1, 2)]
    assert anti(1, 1).is_zero()
    again = weighted_sym("sym", sym)
    assert again(1, 2) == sym(1, 2)
