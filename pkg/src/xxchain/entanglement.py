"""
Two-site reduced states and Wootters concurrence.

Two routes are provided: :func:`concurrence` works on any real two-qubit
state through symmetric eigenproblems, and
:func:`concurrence_xstate` is the closed form for X-shaped states. The
pipeline only produces X states, so the two can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, InvalidStateError
from .numerics import _eigh_trusted, _psd_sqrt_trusted, check_density_matrix

# sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1)
SIGMA_YY = np.fliplr(np.diag([-1.0, 1.0, 1.0, -1.0]))
SIGMA_YY.flags.writeable = False

# reported as exactly zero when checking qualitative "C = 0" claims
ZERO_THRESHOLD = 1e-8

_X_MASK = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    lambdas: tuple[float, float, float, float]

    def is_zero(self, threshold: float = ZERO_THRESHOLD) -> bool:
        return self.value <= threshold


def n_sites_of(rho: np.ndarray) -> int:
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if dim != 2**n or n < 1:
        raise InvalidStateError(f"density matrix: dimension {dim} is not a power of 2")
    return n


def partial_trace_pair(rho: np.ndarray, i: int, j: int) -> np.ndarray:
    """Reduced 4x4 state of sites i < j (1-based); site i is the left factor."""
    rho = np.asarray(rho, dtype=float)
    n = n_sites_of(rho)
    if not (1 <= i < j <= n):
        raise InputError(f"pair: need 1 <= i < j <= {n}, got ({i}, {j})")
    a, b = i - 1, j - 1
    rows = list(range(n))
    cols = [n + k if k in (a, b) else k for k in range(n)]
    out = [a, b, n + a, n + b]
    tensor = rho.reshape((2,) * (2 * n))
    return np.einsum(tensor, rows + cols, out).reshape(4, 4)


def flipped(rho2: np.ndarray) -> np.ndarray:
    """Spin-flipped state (sy x sy) rho* (sy x sy); rho is real so rho* = rho."""
    return SIGMA_YY @ rho2 @ SIGMA_YY


def spin_flip(rho2: np.ndarray) -> np.ndarray:
    """The (non-symmetric) product rho (sy x sy) rho* (sy x sy)."""
    rho2 = _check_two_qubit(rho2)
    return rho2 @ flipped(rho2)


def concurrence(rho2: np.ndarray) -> ConcurrenceResult:
    """Wootters concurrence max(l1 - l2 - l3 - l4, 0).

    The l_k are square roots of the eigenvalues of rho rho~. For real rho,
    sqrt(rho) rho~ sqrt(rho) = A @ A with the symmetric A = sqrt(rho) Y sqrt(rho),
    Y = sy x sy, so the l_k are the absolute eigenvalues of A. Taking them
    this way avoids square roots of round-off-sized eigenvalues.
    """
    rho2 = _check_two_qubit(rho2)
    root = _psd_sqrt_trusted(rho2)
    A = root @ SIGMA_YY @ root
    ev = _eigh_trusted(0.5 * (A + A.T)).values
    lam = np.sort(np.abs(ev))[::-1]
    value = max(lam[0] - lam[1] - lam[2] - lam[3], 0.0)
    return ConcurrenceResult(float(value), tuple(float(x) for x in lam))


def is_xform(rho2: np.ndarray, tol: float = 1e-8) -> bool:
    return bool(np.abs(np.where(_X_MASK, 0.0, rho2)).max() <= tol)


def concurrence_xstate(rho2: np.ndarray) -> float:
    """Closed-form concurrence of an X state.

    With u, v, w, x the populations of |00>, |01>, |10>, |11>,
    z = rho[01,10] and y = rho[00,11]:
    C = 2 max(0, |z| - sqrt(u x), |y| - sqrt(v w)).
    """
    rho2 = np.asarray(rho2, dtype=float)
    if rho2.shape != (4, 4):
        raise InputError(f"two-qubit state: expected shape (4, 4), got {rho2.shape}")
    if not is_xform(rho2):
        raise InputError("two-qubit state: not of X form")
    u, v, w, x = np.diag(rho2)
    z = rho2[1, 2]
    y = rho2[0, 3]
    # populations may carry -1e-17 round-off
    ux = max(u * x, 0.0)
    vw = max(v * w, 0.0)
    return float(2.0 * max(0.0, abs(z) - np.sqrt(ux), abs(y) - np.sqrt(vw)))


def all_pairwise(rho: np.ndarray) -> dict[tuple[int, int], ConcurrenceResult]:
    """Concurrence of every site pair i < j, in lexicographic order."""
    rho = check_density_matrix(rho)
    n = n_sites_of(rho)
    return {
        (i, j): concurrence(partial_trace_pair(rho, i, j))
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    }


def _check_two_qubit(rho2: np.ndarray) -> np.ndarray:
    rho2 = np.asarray(rho2, dtype=float)
    if rho2.shape != (4, 4):
        raise InputError(f"two-qubit state: expected shape (4, 4), got {rho2.shape}")
    return np.ascontiguousarray(check_density_matrix(rho2))
