"""Search and verification of binary polarization kernels by partial distances."""

from ._kernels import BACKEND
from .codes import (
    Kernel,
    KernelCode,
    SingularKernelError,
    coset_distance,
    coset_distance_direct,
    coset_distance_dual,
    macwilliams,
    min_distance,
    rate_of_polarization,
    verify_kernel,
)
from .gf2 import BitMatrix, BitRow, ContractError
from .pdp import DistanceTable, PdpQuery, check_lemma4, check_lemma5, enumerate_pdps, permute_pdp
from .search import SearchConfig, SearchOutcome, check_candidate, kernel_search

__all__ = [
    "BACKEND",
    "BitMatrix",
    "BitRow",
    "ContractError",
    "DistanceTable",
    "Kernel",
    "KernelCode",
    "PdpQuery",
    "SearchConfig",
    "SearchOutcome",
    "SingularKernelError",
    "check_candidate",
    "check_lemma4",
    "check_lemma5",
    "coset_distance",
    "coset_distance_direct",
    "coset_distance_dual",
    "enumerate_pdps",
    "kernel_search",
    "macwilliams",
    "min_distance",
    "permute_pdp",
    "rate_of_polarization",
    "verify_kernel",
]
