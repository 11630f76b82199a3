"""Monomial and power-sum bases, m-expansions and the alpha-deformed scalar product."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .alpha import ONE, ZERO, AlphaRational, _coerce
from .errors import NotHomogeneous, NotSymmetric
from .multipoly import MultiPoly
from .partitions import Partition, partitions_of, z_of

__all__ = [
    "MExpansion",
    "m_poly",
    "p_poly",
    "to_m_expansion",
    "from_m_expansion",
    "p_in_m_matrix",
    "m_to_p_matrix",
    "scalar_product",
]


@dataclass(frozen=True)
class MExpansion:
    """Symmetric function of fixed degree written in the monomial basis."""

    degree: int
    coeffs: Mapping[Partition, AlphaRational] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Partition, AlphaRational] = {}
        for key, c in self.coeffs.items():
            lam = key if isinstance(key, Partition) else Partition(key)
            if lam.weight != self.degree:
                raise ValueError(f"partition {lam} has weight {lam.weight}, expected {self.degree}")
            c = _coerce(c)
            if not c.is_zero():
                clean[lam] = clean.get(lam, ZERO) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if not v.is_zero()})

    def __getitem__(self, mu) -> AlphaRational:
        return self.coeffs.get(Partition(mu), ZERO)

    def __iter__(self) -> Iterator[tuple[Partition, AlphaRational]]:
        """Terms in descending lexicographic order of the partition."""
        for mu in sorted(self.coeffs, reverse=True):
            yield mu, self.coeffs[mu]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MExpansion):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other: MExpansion) -> MExpansion:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, ZERO) + c
        return MExpansion(self.degree, out)

    def __sub__(self, other: MExpansion) -> MExpansion:
        return self + other.scaled(-1)

    def scaled(self, c) -> MExpansion:
        c = _coerce(c)
        return MExpansion(self.degree, {mu: v * c for mu, v in self.coeffs.items()})

    def truncated(self, n: int) -> MExpansion:
        """Drop the m_mu with more than ``n`` parts (specialization to n variables)."""
        return MExpansion(self.degree, {mu: c for mu, c in self.coeffs.items() if len(mu) <= n})

    def __repr__(self) -> str:
        body = ", ".join(f"{mu}: {c.render()}" for mu, c in self)
        return f"MExpansion({self.degree}, {{{body}}})"


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(items)
    cur: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    return rec()


def m_poly(mu: Partition, n: int) -> MultiPoly:
    mu = Partition(mu)
    if len(mu) > n:
        return MultiPoly.zero(n)
    return MultiPoly._raw(n, {e: ONE for e in _multiset_permutations(mu.padded(n))})


def _power_sum(k: int, n: int) -> MultiPoly:
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = ONE
    return MultiPoly._raw(n, terms)


def p_poly(lam: Partition, n: int) -> MultiPoly:
    out = MultiPoly.constant(n)
    for part in Partition(lam):
        out = out * _power_sum(part, n)
    return out


def to_m_expansion(f: MultiPoly) -> MExpansion:
    """Read off m-coefficients from the sorted (dominant) exponent vectors of f."""
    degrees = f.degrees()
    if len(degrees) > 1:
        raise NotHomogeneous(f"mixed degrees {sorted(degrees)}")
    if not f.is_symmetric():
        raise NotSymmetric("polynomial changes under a variable swap")
    degree = degrees.pop() if degrees else 0
    coeffs = {}
    for mono, c in f.terms.items():
        if all(mono[k] >= mono[k + 1] for k in range(len(mono) - 1)):
            coeffs[Partition(mono)] = c
    return MExpansion(degree, coeffs)


def from_m_expansion(e: MExpansion, n: int) -> MultiPoly:
    out = MultiPoly.zero(n)
    for mu, c in e.coeffs.items():
        if len(mu) <= n:
            out = out + m_poly(mu, n) * c
    return out


@lru_cache(maxsize=None)
def p_in_m_matrix(N: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Rows: p_lam expanded in m_mu, both indexed by partitions_of(N) (n = N)."""
    basis = tuple(partitions_of(N))
    n = max(N, 1)
    rows = []
    for lam in basis:
        e = to_m_expansion(p_poly(lam, n))
        row = []
        for mu in basis:
            c = e[mu]
            assert c.is_polynomial() and c.num.degree <= 0
            row.append(c.num(0))
        rows.append(tuple(row))
    return basis, tuple(rows)


def _invert(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def m_to_p_matrix(N: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """Rows: m_lam expanded in p_rho, indexed by partitions_of(N)."""
    basis, rows = p_in_m_matrix(N)
    inv = _invert(rows)
    # p_lam = sum_mu A[lam][mu] m_mu  =>  m_mu = sum_lam Ainv[mu][lam] p_lam
    return basis, tuple(tuple(r) for r in inv)


def _to_p(e: MExpansion) -> dict[Partition, AlphaRational]:
    basis, inv = m_to_p_matrix(e.degree)
    index = {lam: k for k, lam in enumerate(basis)}
    out: dict[Partition, AlphaRational] = {}
    for mu, c in e.coeffs.items():
        row = inv[index[mu]]
        for k, q in enumerate(row):
            if q:
                rho = basis[k]
                out[rho] = out.get(rho, ZERO) + c * AlphaRational.from_fraction(q)
    return out


def scalar_product(f: MExpansion, g: MExpansion) -> AlphaRational:
    """<f, g> with <p_lam, p_mu> = delta * z_lam * alpha^len(lam)."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    fp, gp = _to_p(f), _to_p(g)
    total = ZERO
    for rho, c in fp.items():
        d = gp.get(rho)
        if d is None:
            continue
        total = total + (c * d * z_of(rho)).shift(len(rho))
    return total
