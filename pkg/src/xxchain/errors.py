"""Exception hierarchy shared by all modules."""


class XXChainError(Exception):
    """Base class for errors raised by this package."""


class InputError(XXChainError, ValueError):
    """Invalid user input (chain spec, site index, temperature, grid...)."""


class InvalidStateError(XXChainError, ValueError):
    """A matrix that should be a density matrix is not one."""


class ConvergenceError(XXChainError, ArithmeticError):
    """Eigensolver failed to converge within its sweep budget."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class SweepError(XXChainError):
    """A numerical failure inside a sweep, tagged with the offending grid point."""

    def __init__(self, message, grid_point):
        super().__init__(f"{message} at J={grid_point[0]!r}, T={grid_point[1]!r}")
        self.grid_point = grid_point
