"""Exact Jack polynomials built from Dunkl-type creation operators."""

from .alpha import ALPHA, AlphaPoly, AlphaRational
from .errors import (
    DegenerateGram,
    JackError,
    NonzeroRemainder,
    NotHomogeneous,
    NotSymmetric,
    PartitionTooLong,
    TruncatedExpansion,
)
from .jack import (
    JackResult,
    check_commutator,
    check_eigen,
    check_normalization,
    check_triangularity,
    conjecture_report,
    epsilon,
    rodrigues_jack,
)
from .multipoly import MultiPoly, exact_divide_diff, poly_arith, scale
from .operators import SubsetJ, apply_creation, apply_DJ, apply_dunkl, apply_hamiltonian, apply_swap
from .oracle import gram_schmidt_jack, verify_oracle_self
from .partitions import Partition, dominance_leq, partitions_of, z_of
from .symmetric import MExpansion, m_poly, m_to_p_matrix, p_poly, scalar_product, to_m_expansion

__version__ = "0.1.0"
