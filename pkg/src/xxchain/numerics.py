"""
Dense symmetric eigensolver (cyclic Jacobi), PSD square root, and thermal states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .errors import ConvergenceError, InputError, InvalidStateError

OFF_TOL = 1e-13
MAX_SWEEPS = 100
SYM_TOL = 1e-12
# psd_sqrt: eigenvalues in [-CLAMP_ERROR, 0) are clamped, below that is an error
CLAMP_ERROR = 1e-8
# density matrix validation
STATE_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with eigenvectors as columns (``vectors[:, k]``)."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.values)


@njit(cache=True)
def _jacobi_sweeps(A, V, tol, max_sweeps):
    n = A.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * A[p, q] * A[p, q]
        off = np.sqrt(off)
        if off <= tol:
            return sweep, off
        if sweep == max_sweeps:
            return -1, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for r in range(n):
                    if r != p and r != q:
                        arp = A[r, p]
                        arq = A[r, q]
                        A[r, p] = c * arp - s * arq
                        A[p, r] = A[r, p]
                        A[r, q] = s * arp + c * arq
                        A[q, r] = A[r, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for r in range(n):
                    vrp = V[r, p]
                    vrq = V[r, q]
                    V[r, p] = c * vrp - s * vrq
                    V[r, q] = s * vrp + c * vrq
    return -1, off


@njit(cache=True)
def _jacobi_eigh(A, rel_tol, max_sweeps):
    n = A.shape[0]
    work = A.copy()
    V = np.eye(n)
    tol = rel_tol * np.sqrt(np.sum(A * A))
    sweeps, off = _jacobi_sweeps(work, V, tol, max_sweeps)
    values = np.diag(work).copy()
    order = np.argsort(values, kind="mergesort")
    return values[order], V[:, order].copy(), sweeps, off


def _eigh_trusted(A: np.ndarray) -> Spectrum:
    values, vectors, sweeps, off = _jacobi_eigh(A, OFF_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps", off)
    values.flags.writeable = False
    vectors.flags.writeable = False
    return Spectrum(values, vectors)


def check_symmetric(A: np.ndarray, name: str = "matrix") -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError(f"{name}: expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InputError(f"{name}: contains non-finite entries")
    scale = 1.0 + (np.abs(A).max() if A.size else 0.0)
    if A.size and np.abs(A - A.T).max() > SYM_TOL * scale:
        raise InputError(f"{name}: not symmetric")
    return A


def eigh(A: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Sweeps until the off-diagonal Frobenius norm is at most
    ``1e-13 * ||A||_F``; raises ConvergenceError after 100 sweeps.
    """
    A = check_symmetric(A)
    return _eigh_trusted(np.ascontiguousarray(A, dtype=np.float64))


def eigh_blocks(A: np.ndarray, blocks: Sequence[Sequence[int]]) -> Spectrum:
    """Eigendecomposition of a matrix known to be block diagonal.

    ``blocks`` partitions the indices; entries coupling different blocks
    are assumed to vanish and are not touched. Each block goes through
    :func:`eigh` and the pieces are merged into one ascending spectrum.
    """
    A = check_symmetric(A)
    dim = A.shape[0]
    values = np.empty(dim)
    vectors = np.zeros((dim, dim))
    seen = np.zeros(dim, dtype=bool)
    col = 0
    for block in blocks:
        idx = np.asarray(block, dtype=np.int64)
        if idx.size == 0:
            continue
        if seen[idx].any():
            raise InputError("blocks: index listed twice")
        seen[idx] = True
        sub = _eigh_trusted(np.ascontiguousarray(A[np.ix_(idx, idx)]))
        k = idx.size
        values[col:col + k] = sub.values
        vectors[idx, col:col + k] = sub.vectors
        col += k
    if not seen.all():
        raise InputError("blocks: do not cover every index")
    order = np.argsort(values, kind="stable")
    return _frozen_spectrum(values[order], vectors[:, order])


def _frozen_spectrum(values, vectors):
    values = np.ascontiguousarray(values)
    vectors = np.ascontiguousarray(vectors)
    values.flags.writeable = False
    vectors.flags.writeable = False
    return Spectrum(values, vectors)


def check_density_matrix(
    rho: np.ndarray, tol: float = STATE_TOL, check_psd: bool = False
) -> np.ndarray:
    """Validate shape, symmetry and unit trace; positivity only if asked."""
    rho = check_symmetric(rho, "density matrix")
    dim = rho.shape[0]
    if dim == 0 or dim & (dim - 1):
        raise InvalidStateError(f"density matrix: dimension {dim} is not a power of 2")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise InvalidStateError(f"density matrix: trace {tr!r} differs from 1")
    if check_psd:
        lo = eigh(rho).values[0]
        if lo < -tol:
            raise InvalidStateError(f"density matrix: eigenvalue {lo:.3e} is negative")
    return rho


def psd_sqrt(rho: np.ndarray) -> np.ndarray:
    """Symmetric square root of a positive semidefinite matrix.

    Eigenvalues in [-1e-8, 0) are treated as round-off and clamped to 0.
    """
    rho = check_symmetric(rho)
    return _psd_sqrt_trusted(np.ascontiguousarray(rho, dtype=np.float64))


def _psd_sqrt_trusted(rho):
    spec = _eigh_trusted(rho)
    lo = spec.values[0] if spec.dim else 0.0
    if lo < -CLAMP_ERROR:
        raise InvalidStateError(f"psd_sqrt: eigenvalue {lo:.3e} is negative")
    root = np.sqrt(np.clip(spec.values, 0.0, None))
    S = (spec.vectors * root) @ spec.vectors.T
    return 0.5 * (S + S.T)


def _mixture(vectors: np.ndarray, weights: np.ndarray) -> np.ndarray:
    rho = (vectors * weights) @ vectors.T
    return 0.5 * (rho + rho.T)


def gibbs_state(spec: Spectrum, T: float) -> np.ndarray:
    """Thermal state exp(-H/T)/Z (k_B = 1) built from a spectrum of H."""
    if not np.isfinite(T) or T <= 0:
        raise InputError(f"temperature: gibbs_state needs T > 0, got {T!r}")
    shifted = (spec.values - spec.values[0]) / T
    weights = np.exp(-shifted)
    weights /= weights.sum()
    return _mixture(spec.vectors, weights)


def default_deg_tol(spec: Spectrum) -> float:
    spread = spec.values[-1] - spec.values[0]
    return 1e-9 * spread if spread > 0 else 1e-12


def ground_state_mixture(spec: Spectrum, deg_tol: float | None = None) -> np.ndarray:
    """Equal-weight mixture over the ground multiplet (the T -> 0+ Gibbs limit)."""
    if deg_tol is None:
        deg_tol = default_deg_tol(spec)
    if not deg_tol > 0:
        raise InputError(f"deg_tol: must be > 0, got {deg_tol!r}")
    ground = spec.values <= spec.values[0] + deg_tol
    weights = ground / ground.sum()
    return _mixture(spec.vectors, weights)


def thermal_state(spec: Spectrum, T: float) -> np.ndarray:
    """Gibbs state for T > 0, ground multiplet mixture for T == 0."""
    if T == 0:
        return ground_state_mixture(spec)
    return gibbs_state(spec, T)
