"""
XX open-chain Hamiltonian with site (bond) impurities.

    H = sum_{i=1}^{n-1} J_i J_{i+1} (s+_i s-_{i+1} + s+_{i+1} s-_i)

with the standard ladder operators s+- = (sx +- i sy) / 2, so every bond
term moves one excitation between neighbouring sites.

Basis convention (fixed): bit value 1 is an excited spin, and the
configuration b_1 ... b_n has index sum_k b_k 2^(n-k), i.e. site 1 is the
most significant bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InputError

MIN_SITES = 2
MAX_SITES = 12


@dataclass(frozen=True)
class ChainSpec:
    """Qubit count plus per-site coupling factors J_1..J_n.

    The bond between sites i and i+1 has strength J_i * J_{i+1}.
    """

    n: int
    site_factors: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "site_factors", tuple(float(j) for j in self.site_factors))
        validate_n(self.n)
        if len(self.site_factors) != self.n:
            raise InputError(
                f"site_factors: expected {self.n} values, got {len(self.site_factors)}"
            )
        for k, j in enumerate(self.site_factors, start=1):
            if not math.isfinite(j) or j < 0:
                raise InputError(f"site_factors: J{k}={j!r} must be finite and >= 0")

    @classmethod
    def from_factors(cls, factors: Sequence[float]) -> "ChainSpec":
        return cls(len(factors), tuple(factors))

    @property
    def dim(self) -> int:
        return 2**self.n

    def bond_strengths(self) -> tuple[float, ...]:
        j = self.site_factors
        return tuple(j[i] * j[i + 1] for i in range(self.n - 1))

    def is_palindromic(self) -> bool:
        return self.site_factors == self.site_factors[::-1]


def validate_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InputError(f"n: expected an integer, got {n!r}")
    if not MIN_SITES <= n <= MAX_SITES:
        raise InputError(f"n: must satisfy {MIN_SITES} <= n <= {MAX_SITES}, got {n}")
    return int(n)


def index_to_bits(index: int, n: int) -> tuple[int, ...]:
    """Bit string (b_1, ..., b_n) of a basis index; site 1 first."""
    if not 0 <= index < 2**n:
        raise InputError(f"index {index} out of range for n={n}")
    return tuple((index >> (n - 1 - k)) & 1 for k in range(n))


def bits_to_index(bits: Sequence[int]) -> int:
    index = 0
    for b in bits:
        if b not in (0, 1):
            raise InputError(f"bits: expected 0/1 entries, got {b!r}")
        index = (index << 1) | b
    return index


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Dense 2^n x 2^n real symmetric matrix of the XX chain.

    Each bond (i, i+1) contributes J_i J_{i+1} between configurations that
    differ by moving one excitation across that bond. The diagonal is zero.
    The returned array is read-only.
    """
    n = spec.n
    dim = spec.dim
    H = np.zeros((dim, dim))
    states = np.arange(dim)
    for i, strength in enumerate(spec.bond_strengths()):
        if strength == 0.0:
            continue
        # site i+1 (1-based) sits at bit position n-1-i
        hi = 1 << (n - 1 - i)
        lo = 1 << (n - 2 - i)
        mask = hi | lo
        movable = states[((states & hi) > 0) != ((states & lo) > 0)]
        H[movable ^ mask, movable] = strength
    H.flags.writeable = False
    return H


def magnetization_sectors(n: int) -> tuple[np.ndarray, ...]:
    """Basis indices grouped by excitation count k = 0..n (ascending within each)."""
    return _sectors(validate_n(n))


@lru_cache(maxsize=None)
def _sectors(n):
    counts = np.array([bin(s).count("1") for s in range(2**n)])
    sectors = tuple(np.flatnonzero(counts == k) for k in range(n + 1))
    for sector in sectors:
        sector.flags.writeable = False
    return sectors


def site_reversal_permutation(n: int) -> np.ndarray:
    """perm[s] is the index of configuration s read with sites reversed."""
    n = validate_n(n)
    perm = np.empty(2**n, dtype=np.int64)
    for s in range(2**n):
        perm[s] = int(format(s, f"0{n}b")[::-1], 2)
    return perm


def impurity_pattern(n: int, impurity_site: int, J: float) -> ChainSpec:
    """Chain of ones with factor J on a single (1-based) site."""
    n = validate_n(n)
    if not 1 <= impurity_site <= n:
        raise InputError(f"impurity_site: must be in 1..{n}, got {impurity_site}")
    factors = [1.0] * n
    factors[impurity_site - 1] = J
    return ChainSpec(n, tuple(factors))


def boundary_pattern(n: int, J: float) -> ChainSpec:
    """Chain of ones with factor J on both end sites (J_1 = J_n = J)."""
    n = validate_n(n)
    factors = [1.0] * n
    factors[0] = factors[-1] = J
    return ChainSpec(n, tuple(factors))
