"""Independent construction of Jack polynomials by Gram-Schmidt in the m-basis.

Nothing here touches the operator code: the polynomials are pinned down by
orthogonality under the power-sum scalar product, dominance triangularity and
the normalization of the m_{1^N} coefficient.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

from .alpha import ONE, AlphaRational
from .errors import DegenerateGram
from .partitions import Partition, dominance_leq, partitions_of
from .symmetric import MExpansion, scalar_product

__all__ = ["gram_schmidt_jack", "oracle_jack", "verify_oracle_self", "ascending_lex", "conjugate_order"]


def ascending_lex(N: int) -> list[Partition]:
    """Reverse of the descending lexicographic enumeration: (1^N) first."""
    return list(reversed(partitions_of(N)))


def conjugate_order(N: int) -> list[Partition]:
    """A second linear extension: descending lex order of the conjugates."""
    return sorted(partitions_of(N), key=lambda p: tuple(p.conjugate()), reverse=True)


def _check_extension(order: Sequence[Partition]) -> None:
    for a, mu in enumerate(order):
        for lam in order[a + 1:]:
            if lam != mu and dominance_leq(lam, mu):
                raise ValueError(f"{lam} < {mu} but is processed later; not a linear extension")


def gram_schmidt_jack(N: int, order: Sequence[Partition] | None = None,
                      require_integral: bool = True) -> dict[Partition, MExpansion]:
    """Jack polynomials of degree N as m-expansions (n = N variables).

    ``order`` is the processing order and must list smaller partitions (in
    dominance) first; it defaults to ascending lexicographic. Each m_lam is
    orthogonalized against the already processed P_mu, giving the monic
    family P_lam, then rescaled so the m_{1^N} coefficient is N!.
    """
    order = list(order) if order is not None else ascending_lex(N)
    if sorted(order) != sorted(partitions_of(N)):
        raise ValueError(f"order must be a permutation of the partitions of {N}")
    _check_extension(order)

    monic: dict[Partition, MExpansion] = {}
    norms: dict[Partition, AlphaRational] = {}
    for lam in order:
        m_lam = MExpansion(N, {lam: ONE})
        p = m_lam
        for mu, p_mu in monic.items():
            ip = scalar_product(m_lam, p_mu)
            if not ip.is_zero():
                p = p - p_mu.scaled(ip / norms[mu])
        norm = scalar_product(p, p)
        if norm.is_zero():
            raise DegenerateGram(f"<P, P> vanished for {lam}")
        monic[lam] = p
        norms[lam] = norm

    ones = Partition((1,) * N)
    target = AlphaRational.from_int(factorial(N))
    out: dict[Partition, MExpansion] = {}
    for lam in partitions_of(N):
        p = monic[lam]
        lead = p[ones]
        if lead.is_zero():
            raise DegenerateGram(f"m_(1^{N}) coefficient of P_{lam} vanished")
        j = p.scaled(target / lead)
        if require_integral and not all(c.is_polynomial() for c in j.coeffs.values()):
            raise ArithmeticError(f"oracle coefficients of J_{lam} did not clear to Z[alpha]")
        out[lam] = j
    return out


@lru_cache(maxsize=None)
def _cached(N: int) -> dict[Partition, MExpansion]:
    return gram_schmidt_jack(N)


def oracle_jack(lam: Partition) -> MExpansion:
    """Cached oracle expansion of a single J_lam."""
    lam = Partition(lam)
    return _cached(lam.weight)[lam]


def verify_oracle_self(N: int) -> bool:
    family = _cached(N)
    keys = list(family)
    target = AlphaRational.from_int(factorial(N))
    ones = Partition((1,) * N)
    for a, lam in enumerate(keys):
        j = family[lam]
        if not all(dominance_leq(mu, lam) for mu in j.coeffs):
            return False
        if j[ones] != target:
            return False
        for mu in keys[a + 1:]:
            if not scalar_product(j, family[mu]).is_zero():
                return False
    return True
