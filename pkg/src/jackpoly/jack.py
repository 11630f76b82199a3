"""Jack polynomials from creation operators, and the checks run on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .alpha import AlphaPoly, AlphaRational
from .errors import PartitionTooLong, TruncatedExpansion
from .multipoly import MultiPoly, scale
from .operators import apply_creation, apply_hamiltonian
from .partitions import Partition, dominance_leq
from .symmetric import MExpansion, to_m_expansion

__all__ = [
    "JackResult",
    "ConjectureEntry",
    "ConjectureReport",
    "rodrigues_jack",
    "rodrigues_states",
    "epsilon",
    "check_eigen",
    "check_commutator",
    "conjecture_report",
    "check_triangularity",
    "check_normalization",
]


@dataclass(frozen=True)
class JackResult:
    lam: Partition
    n: int
    poly: MultiPoly
    expansion: MExpansion


@dataclass(frozen=True)
class ConjectureEntry:
    mu: Partition
    v: AlphaRational
    is_integer_poly: bool
    tilde_v: AlphaRational
    is_nonneg_integer_poly: bool


@dataclass(frozen=True)
class ConjectureReport:
    lam: Partition
    entries: tuple[ConjectureEntry, ...]

    @property
    def integrality_failures(self) -> list[ConjectureEntry]:
        return [e for e in self.entries if not e.is_integer_poly]

    @property
    def positivity_failures(self) -> list[ConjectureEntry]:
        return [e for e in self.entries if not e.is_nonneg_integer_poly]

    @property
    def ok(self) -> bool:
        return not self.positivity_failures and not self.integrality_failures


def _check_length(lam: Partition, n: int) -> None:
    if len(lam) > n:
        raise PartitionTooLong(f"partition has {len(lam)} parts but n = {n}")


def _stages(lam: Partition, n: int) -> list[tuple[int, int]]:
    """(k, exponent of B_k^+) in application order, skipping zero exponents."""
    padded = lam.padded(n) + (0,)
    return [(k, padded[k - 1] - padded[k]) for k in range(1, n + 1)
            if padded[k - 1] > padded[k]]


@lru_cache(maxsize=4096)
def _state(label: Partition, n: int) -> MultiPoly:
    # J_label = B_l^+ J_{label - 1^l} with l = len(label): the last creation
    # operator in the staged product for label is B_l^+.
    if not label:
        return MultiPoly.constant(n)
    l = len(label)
    prev = Partition(x - 1 for x in label)
    return apply_creation(_state(prev, n), l)


def rodrigues_states(lam: Partition, n: int, use_symmetry: bool = True) -> list[MultiPoly]:
    """Every state of the staged product, starting from the constant 1.

    The product applies (B_1^+)^(lam_1 - lam_2) first and (B_n^+)^(lam_n) last.
    """
    lam = Partition(lam)
    _check_length(lam, n)
    state = MultiPoly.constant(n)
    label = [0] * n
    out = [state]
    for k, times in _stages(lam, n):
        for _ in range(times):
            for r in range(k):
                label[r] += 1
            if use_symmetry:
                state = _state(Partition(label), n)
            else:
                state = apply_creation(state, k, use_symmetry=False)
            out.append(state)
    return out


def rodrigues_jack(lam: Partition, n: int) -> JackResult:
    lam = Partition(lam)
    _check_length(lam, n)
    poly = rodrigues_states(lam, n)[-1]
    return JackResult(lam, n, poly, to_m_expansion(poly))


def epsilon(lam: Partition, n: int) -> AlphaPoly:
    """Eigenvalue sum_j [alpha lam_j^2 + (n + 1 - 2j) lam_j] of the Sutherland operator."""
    lam = Partition(lam)
    _check_length(lam, n)
    const = sum((n + 1 - 2 * j) * x for j, x in enumerate(lam, start=1))
    return AlphaPoly([const, sum(x * x for x in lam)])


def check_eigen(result: JackResult) -> bool:
    eig = AlphaRational(epsilon(result.lam, result.n))
    return apply_hamiltonian(result.poly) == scale(result.poly, eig)


def check_commutator(lam: Partition, i: int, n: int) -> bool:
    """[H, B_i^+] phi == B_i^+ (2 alpha |lam| + i alpha + i(n - i)) phi, phi built from lam."""
    lam = Partition(lam)
    if len(lam) > i:
        raise PartitionTooLong(f"partition has {len(lam)} parts but i = {i}")
    if i > n:
        raise ValueError(f"creation order {i} exceeds n = {n}")
    phi = rodrigues_states(lam, n)[-1]
    b_phi = apply_creation(phi, i)
    lhs = apply_hamiltonian(b_phi) - apply_creation(apply_hamiltonian(phi), i)
    brace = AlphaRational([i * (n - i), 2 * lam.weight + i])
    rhs = apply_creation(scale(phi, brace), i)
    return lhs == rhs


def _require_full(result: JackResult) -> None:
    if result.n < result.lam.weight:
        raise TruncatedExpansion(
            f"n = {result.n} < |lambda| = {result.lam.weight}; recompute with n >= |lambda|")


def conjecture_report(result: JackResult) -> ConjectureReport:
    _require_full(result)
    entries = []
    for mu, v in result.expansion:
        denom = prod(factorial(m) for m in mu.multiplicities().values())
        tilde = v / denom
        entries.append(ConjectureEntry(
            mu=mu,
            v=v,
            is_integer_poly=v.is_polynomial(),
            tilde_v=tilde,
            is_nonneg_integer_poly=tilde.is_nonneg_polynomial(),
        ))
    return ConjectureReport(result.lam, tuple(entries))


def check_triangularity(result: JackResult) -> bool:
    lam = result.lam
    return all(mu.weight == lam.weight and dominance_leq(mu, lam)
               for mu in result.expansion.coeffs)


def check_normalization(result: JackResult) -> bool:
    _require_full(result)
    N = result.lam.weight
    ones = Partition((1,) * N)
    return result.expansion[ones] == AlphaRational.from_int(factorial(N))
