"""Exact action of the exchange, Dunkl, creation and Sutherland operators.

All variable indices are 1-based. Every operator here is a pure function of
its polynomial argument.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .alpha import AlphaRational
from .errors import NotSymmetric
from .multipoly import Monomial, MultiPoly, _check_index, exact_divide_diff

__all__ = [
    "SubsetJ",
    "subsets",
    "apply_swap",
    "apply_dunkl",
    "apply_DJ",
    "apply_creation",
    "apply_hamiltonian",
]


@dataclass(frozen=True)
class SubsetJ:
    """Strictly increasing tuple of 1-based variable indices."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.indices)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"subset indices must be strictly increasing: {idx}")
        if idx and idx[0] < 1:
            raise ValueError(f"subset indices must be >= 1: {idx}")
        object.__setattr__(self, "indices", idx)

    def validate(self, n: int) -> None:
        if self.indices and self.indices[-1] > n:
            raise ValueError(f"subset {self.indices} not inside 1..{n}")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


def subsets(n: int, size: int) -> list[SubsetJ]:
    """All size-``size`` subsets of 1..n in lexicographic order."""
    return [SubsetJ(c) for c in combinations(range(1, n + 1), size)]


def _accumulate(out: dict, mono: Monomial, c: AlphaRational) -> None:
    prev = out.get(mono)
    out[mono] = c if prev is None else prev + c


def _finish(n: int, out: dict) -> MultiPoly:
    return MultiPoly._raw(n, {m: c for m, c in out.items() if not c.is_zero()})


def apply_swap(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """K_ij: exchange x_i and x_j."""
    _check_index(f.n, i)
    _check_index(f.n, j)
    if i == j:
        return f
    a, b = i - 1, j - 1
    out = {}
    for mono, c in f.terms.items():
        e = list(mono)
        e[a], e[b] = e[b], e[a]
        out[tuple(e)] = c
    return MultiPoly._raw(f.n, out)


def _dunkl_into(out: dict, terms: dict, k: int, n: int) -> None:
    # Euler part alpha * x_k d/dx_k, then the exchange part through the
    # telescoping closed form of x_k/(x_k - x_j) (1 - K_kj) on x_k^a x_j^b.
    for mono, c in terms.items():
        a = mono[k]
        if a:
            _accumulate(out, mono, c.shift(1) * a)
        neg = None
        for j in range(n):
            if j == k:
                continue
            b = mono[j]
            if a == b:
                continue
            e = list(mono)
            if a > b:
                for t in range(a - b):
                    e[k] = b + 1 + t
                    e[j] = a - 1 - t
                    _accumulate(out, tuple(e), c)
            else:
                if neg is None:
                    neg = -c
                for t in range(b - a):
                    e[k] = a + 1 + t
                    e[j] = b - 1 - t
                    _accumulate(out, tuple(e), neg)


def apply_dunkl(f: MultiPoly, i: int) -> MultiPoly:
    """D_i = alpha x_i d/dx_i + sum_{j != i} x_i/(x_i - x_j) (1 - K_ij)."""
    _check_index(f.n, i)
    out: dict = {}
    _dunkl_into(out, f.terms, i - 1, f.n)
    return _finish(f.n, out)


def _shifted_dunkl(f: MultiPoly, i: int, shift: int) -> MultiPoly:
    """(D_i + shift) f."""
    out: dict = {}
    _dunkl_into(out, f.terms, i - 1, f.n)
    if shift:
        for mono, c in f.terms.items():
            _accumulate(out, mono, c * shift)
    return _finish(f.n, out)


def apply_DJ(f: MultiPoly, J: SubsetJ | Sequence[int]) -> MultiPoly:
    """D_J = (D_j1 + 1)(D_j2 + 2)...(D_jl + l); the rightmost factor acts first."""
    if not isinstance(J, SubsetJ):
        J = SubsetJ(tuple(J))
    J.validate(f.n)
    g = f
    for k in range(len(J), 0, -1):
        g = _shifted_dunkl(g, J.indices[k - 1], k)
    return g


def _times_xJ(g: MultiPoly, J: Iterable[int]) -> dict:
    idx = [j - 1 for j in J]
    out = {}
    for mono, c in g.terms.items():
        e = list(mono)
        for k in idx:
            e[k] += 1
        out[tuple(e)] = c
    return out


def _relabel(g: MultiPoly, target: Sequence[int]) -> MultiPoly:
    """Rename variable x_(k+1) to x_(target[k]+1) for every k (0-based target)."""
    out = {}
    for mono, c in g.terms.items():
        e = [0] * g.n
        for k, x in enumerate(mono):
            e[target[k]] = x
        out[tuple(e)] = c
    return MultiPoly._raw(g.n, out)


def _xJ_DJ(args: tuple[MultiPoly, SubsetJ]) -> MultiPoly:
    f, J = args
    return MultiPoly._raw(f.n, _times_xJ(apply_DJ(f, J), J))


def _sum_in_order(n: int, parts: Iterable[MultiPoly]) -> MultiPoly:
    out: dict = {}
    for p in parts:
        for mono, c in p.terms.items():
            _accumulate(out, mono, c)
    return _finish(n, out)


def apply_creation(f: MultiPoly, i: int, jobs: int = 1,
                   use_symmetry: bool = True) -> MultiPoly:
    """B_i^+ f = sum over |J| = i of x_J D_J f.

    For symmetric f only D_{1..i} f is computed; D_J f is obtained from it by
    the order-preserving relabeling 1..i -> J (Dunkl operators are permuted
    covariantly and f is invariant). ``use_symmetry=False`` forces the plain
    subset sum, which ``jobs > 1`` spreads over worker processes; the
    reduction order is fixed either way.
    """
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"creation order {i} out of range 1..{n}")
    Js = subsets(n, i)
    if use_symmetry and f.is_symmetric():
        base = apply_DJ(f, SubsetJ(tuple(range(1, i + 1))))
        parts = []
        for J in Js:
            rest = [k for k in range(n) if k + 1 not in J.indices]
            target = [j - 1 for j in J.indices] + rest
            g = base if target == list(range(n)) else _relabel(base, target)
            parts.append(MultiPoly._raw(n, _times_xJ(g, J)))
        return _sum_in_order(n, parts)
    if jobs > 1 and len(Js) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_xJ_DJ, [(f, J) for J in Js]))
    else:
        parts = [_xJ_DJ((f, J)) for J in Js]
    return _sum_in_order(f.n, parts)


def apply_hamiltonian(f: MultiPoly) -> MultiPoly:
    """Sutherland operator H(alpha) on a symmetric polynomial.

    H = alpha sum_j (x_j d_j)^2 + sum_{j<k} (x_j + x_k)/(x_j - x_k) (x_j d_j - x_k d_k).
    Each divided-difference term goes through exact division by (x_j - x_k).
    """
    if not f.is_symmetric():
        raise NotSymmetric("the Sutherland operator is only defined here on symmetric input")
    n = f.n
    out: dict = {}
    for mono, c in f.terms.items():
        s = sum(e * e for e in mono)
        if s:
            _accumulate(out, mono, c.shift(1) * s)
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            g = {}
            for mono, c in f.terms.items():
                w = mono[j - 1] - mono[k - 1]
                if w:
                    g[mono] = c * w
            if not g:
                continue
            q = exact_divide_diff(MultiPoly._raw(n, g), j, k)
            for J in ((j,), (k,)):
                for mono, c in _times_xJ(q, J).items():
                    _accumulate(out, mono, c)
    return _finish(n, out)

