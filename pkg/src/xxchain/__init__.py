"""Pairwise thermal entanglement in Heisenberg XX open chains with bond impurities."""

from .entanglement import (
    ConcurrenceResult,
    all_pairwise,
    concurrence,
    concurrence_xstate,
    partial_trace_pair,
    spin_flip,
)
from .errors import ConvergenceError, InputError, InvalidStateError, SweepError, XXChainError
from .experiments import (
    ClaimReport,
    Scenario,
    SweepResult,
    chain_spectrum,
    concurrences_at,
    entangled_kernel_scan,
    maximize_concurrence,
    monotone_profile_check,
    run_sweep,
    six_qubit_claim,
    transfer_law_report,
    verify_parity_rule,
)
from .model import ChainSpec, build_hamiltonian, impurity_pattern, magnetization_sectors
from .numerics import Spectrum, eigh, gibbs_state, ground_state_mixture, psd_sqrt

__version__ = "0.1.0"
