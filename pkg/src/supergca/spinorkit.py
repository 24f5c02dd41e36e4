"""Spinor index machinery: epsilon tensors, sigma matrices, the symplectic metric.

Spinor indices run over 1, 2; vector indices mu over 0..3 with
eta = diag(+1, -1, -1, -1); internal indices A over 1..2N.
Matrices are nested lists of :class:`BaseNumber`, 0-based internally.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import lru_cache

from .exactmath import BaseNumber

__all__ = [
    "IndexOutOfRange",
    "ETA",
    "Omega",
    "eps_lower",
    "eps_upper",
    "epsilon_contract",
    "identity",
    "matmul",
    "rho_lower",
    "sigma",
    "sigma_component",
    "sigma_tilde",
    "sigma_mn",
    "sigma_tilde_mn",
    "trace",
    "weighted_sym",
]

ZERO = BaseNumber(0)
ONE = BaseNumber(1)
I = BaseNumber(0, 1)
HALF = BaseNumber(1) / 2

ETA = (1, -1, -1, -1)


class IndexOutOfRange(IndexError):
    pass


def _check(idx, lo, hi, what="index"):
    if not isinstance(idx, int) or not lo <= idx <= hi:
        raise IndexOutOfRange(f"{what} {idx!r} outside {lo}..{hi}")


def eps_lower(a: int, b: int) -> int:
    """epsilon_{ab} with epsilon_{12} = 1."""
    _check(a, 1, 2)
    _check(b, 1, 2)
    return 0 if a == b else (1 if a < b else -1)


def eps_upper(a: int, b: int) -> int:
    """epsilon^{ab} with epsilon^{21} = 1."""
    return -eps_lower(a, b)


def epsilon_contract(position: str, a: int, b: int) -> BaseNumber:
    if position == "lower":
        return BaseNumber(eps_lower(a, b))
    if position == "upper":
        return BaseNumber(eps_upper(a, b))
    raise ValueError(f"position must be 'upper' or 'lower', not {position!r}")


# ---------------------------------------------------------------------------
# small matrices
# ---------------------------------------------------------------------------

Matrix = list  # list[list[BaseNumber]]


def identity(n: int) -> Matrix:
    return [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]


def matmul(x: Matrix, y: Matrix) -> Matrix:
    n, m, k = len(x), len(y), len(y[0])
    return [[sum((x[r][j] * y[j][c] for j in range(m)), ZERO) for c in range(k)] for r in range(n)]


def madd(x: Matrix, y: Matrix, s=1) -> Matrix:
    return [[a + b * s for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def mscale(x: Matrix, s) -> Matrix:
    return [[a * s for a in row] for row in x]


def transpose(x: Matrix) -> Matrix:
    return [list(col) for col in zip(*x)]


def trace(x: Matrix) -> BaseNumber:
    return sum((x[k][k] for k in range(len(x))), ZERO)


def _m(rows) -> Matrix:
    return [[BaseNumber.coerce(v) for v in row] for row in rows]


PAULI = (
    _m([[0, 1], [1, 0]]),
    [[ZERO, -I], [I, ZERO]],
    _m([[1, 0], [0, -1]]),
)


@lru_cache(maxsize=None)
def _sigma(mu: int) -> tuple:
    m = identity(2) if mu == 0 else PAULI[mu - 1]
    return tuple(tuple(r) for r in m)


def sigma(mu: int) -> Matrix:
    """(sigma^mu)_{alpha alphadot} = (1, sigma_vec)."""
    _check(mu, 0, 3, "vector index")
    return [list(r) for r in _sigma(mu)]


def sigma_tilde(mu: int) -> Matrix:
    """(sigma~^mu)^{alphadot alpha} = (1, -sigma_vec)."""
    _check(mu, 0, 3, "vector index")
    m = sigma(mu)
    return m if mu == 0 else mscale(m, -1)


def sigma_mn(mu: int, nu: int) -> Matrix:
    """sigma^{mu nu} = i sigma^[mu sigma~^nu], unit-weight antisymmetrization; acts on undotted spinors."""
    a = matmul(sigma(mu), sigma_tilde(nu))
    b = matmul(sigma(nu), sigma_tilde(mu))
    return mscale(madd(a, b, -1), I * HALF)


def sigma_tilde_mn(mu: int, nu: int) -> Matrix:
    a = matmul(sigma_tilde(mu), sigma(nu))
    b = matmul(sigma_tilde(nu), sigma(mu))
    return mscale(madd(a, b, -1), I * HALF)


def sigma_component(which: str, *indices: int) -> BaseNumber:
    """Component of a sigma-type matrix; spinor indices are 1-based.

    ``sigma_component("sigma", mu, a, b)``, ``sigma_component("sigma_mn", mu, nu, a, b)``.
    """
    if which in ("sigma", "sigma_tilde"):
        if len(indices) != 3:
            raise IndexOutOfRange(f"{which} takes (mu, a, b)")
        mu, a, b = indices
        m = sigma(mu) if which == "sigma" else sigma_tilde(mu)
    elif which in ("sigma_mn", "sigma_tilde_mn"):
        if len(indices) != 4:
            raise IndexOutOfRange(f"{which} takes (mu, nu, a, b)")
        mu, nu, a, b = indices
        _check(mu, 0, 3, "vector index")
        _check(nu, 0, 3, "vector index")
        m = sigma_mn(mu, nu) if which == "sigma_mn" else sigma_tilde_mn(mu, nu)
    else:
        raise ValueError(f"unknown sigma kind {which!r}")
    _check(a, 1, 2, "spinor index")
    _check(b, 1, 2, "spinor index")
    return m[a - 1][b - 1]


def rho_lower(r: int) -> Matrix:
    """Symmetric (rho^r)_{ab} with R_ab = R_r (rho^r)_ab.

    Real sl(2) triple: R_11 = R_0 + R_1, R_22 = R_0 - R_1, R_12 = -R_2.
    """
    _check(r, 0, 2, "o(2,1) index")
    return [_m([[1, 0], [0, 1]]), _m([[1, 0], [0, -1]]), _m([[0, -1], [-1, 0]])][r]


def Omega(n2: int) -> Matrix:
    """Jordan form [[0, 1], [-1, 0]] (blocks of size n2/2); Omega^{AB} and Omega_{AB} share components."""
    if n2 <= 0 or n2 % 2:
        raise ValueError("Omega needs a positive even size")
    h = n2 // 2
    out = [[ZERO] * n2 for _ in range(n2)]
    for k in range(h):
        out[k][k + h] = ONE
        out[k + h][k] = -ONE
    return out


def weighted_sym(kind: str, f: Callable) -> Callable:
    """Unit-weight (anti)symmetrization of a two-index expression ``f(i, j)``."""
    if kind == "sym":
        return lambda i, j: (f(i, j) + f(j, i)) * HALF
    if kind == "antisym":
        return lambda i, j: (f(i, j) - f(j, i)) * HALF
    raise ValueError(f"kind must be 'sym' or 'antisym', not {kind!r}")
