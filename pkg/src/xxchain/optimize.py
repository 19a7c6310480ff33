"""Derivative-free scalar search: golden section and grid-then-refine."""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI2 = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-6
) -> tuple[float, float, int]:
    """Maximise f on [a, b] until the bracket is narrower than tol.

    Assumes f is unimodal on the bracket; otherwise returns a local maximum.
    Returns (x, f(x), evaluations) for the best interior point evaluated.
    The endpoints themselves are never evaluated.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x), 1

    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc = f(c)
    fd = f(d)
    evals = 2
    best = max((fc, c), (fd, d))
    while h > tol:
        h *= INV_PHI
        if fc >= fd:
            b, d, fd = d, c, fc
            c = a + INV_PHI2 * h
            fc = f(c)
            best = max(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * h
            fd = f(d)
            best = max(best, (fd, d))
        evals += 1
    return best[1], best[0], evals
