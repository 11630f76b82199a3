"""Sparse multivariate polynomials over Q(alpha).

Variables are ``x1 .. xn``; public operations take 1-based variable indices.
A monomial is a plain tuple of ``n`` nonnegative exponents.
"""

from __future__ import annotations

import random
import re
from typing import Iterable, Iterator, Mapping, Tuple

from .alpha import ONE, ZERO, AlphaRational, _coerce
from .errors import NonzeroRemainder, ParseError, VariableCountMismatch

Monomial = Tuple[int, ...]

__all__ = [
    "Monomial",
    "MultiPoly",
    "poly_arith",
    "scale",
    "exact_divide_diff",
    "render",
    "parse",
    "grlex_key",
]


def grlex_key(mono: Monomial) -> tuple:
    """Sort key for graded lexicographic order (use with ``reverse=True``)."""
    return (sum(mono), mono)


class MultiPoly:
    """Immutable sparse polynomial in ``n`` variables.

    ``terms`` maps exponent tuples to nonzero ``AlphaRational`` coefficients.
    Treat it as read-only.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, AlphaRational] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for {n} variables")
            c = _coerce(c)
            prev = acc.get(mono)
            acc[mono] = c if prev is None else prev + c
        self.n = n
        self.terms = {m: c for m, c in acc.items() if not c.is_zero()}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> MultiPoly:
        # caller guarantees canonical terms (tuple keys of length n, no zeros)
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> MultiPoly:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> MultiPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> MultiPoly:
        """The variable ``x_i`` (1-based)."""
        _check_index(n, i)
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exponents: Iterable[int], c=1) -> MultiPoly:
        e = tuple(exponents)
        return cls(len(e), {e: c})

    # inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, AlphaRational]]:
        """Iterate ``(monomial, coefficient)`` in canonical order."""
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            yield m, self.terms[m]

    def coeff(self, mono: Iterable[int]) -> AlphaRational:
        return self.terms.get(tuple(mono), ZERO)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_integral(self) -> bool:
        """All coefficients lie in Z[alpha]."""
        return all(c.is_polynomial() for c in self.terms.values())

    def is_symmetric(self) -> bool:
        # adjacent transpositions generate the symmetric group
        for mono, c in self.terms.items():
            for k in range(self.n - 1):
                if mono[k] != mono[k + 1]:
                    swapped = mono[:k] + (mono[k + 1], mono[k]) + mono[k + 2:]
                    if self.terms.get(swapped) != c:
                        return False
        return True

    def substitute_zero(self, i: int) -> MultiPoly:
        """Set ``x_i = 0`` and drop that variable."""
        _check_index(self.n, i)
        k = i - 1
        return MultiPoly._raw(self.n - 1, {
            m[:k] + m[k + 1:]: c for m, c in self.terms.items() if m[k] == 0
        })

    def evaluate(self, point: Iterable, alpha) -> object:
        """Numeric evaluation at a point and an exact value of alpha."""
        xs = list(point)
        total = 0
        for mono, c in self.terms.items():
            v = c.evaluate(alpha)
            for x, e in zip(xs, mono):
                v *= x ** e
            total += v
        return total

    # arithmetic ----------------------------------------------------------

    def _check(self, other: MultiPoly) -> None:
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
        return MultiPoly._raw(self.n, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return scale(self, _coerce(other))
        self._check(other)
        out: dict[Monomial, AlphaRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                prev = out.get(m)
                out[m] = prod if prev is None else prev + prod
        return MultiPoly._raw(self.n, {m: c for m, c in out.items() if not c.is_zero()})

    def __rmul__(self, other) -> MultiPoly:
        return scale(self, _coerce(other))

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.constant(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def __reduce__(self):
        return (MultiPoly._raw, (self.n, self.terms))

    @classmethod
    def random(cls, n: int, max_degree: int, n_terms: int, rng: random.Random,
               coeff_range: int = 3, alpha_degree: int = 1) -> MultiPoly:
        """Random polynomial with small Z[alpha] coefficients (for tests)."""
        terms = []
        for _ in range(n_terms):
            d = rng.randint(0, max_degree)
            e = [0] * n
            for _ in range(d):
                e[rng.randrange(n)] += 1
            c = [rng.randint(-coeff_range, coeff_range) for _ in range(alpha_degree + 1)]
            terms.append((tuple(e), AlphaRational(c)))
        return cls(n, terms)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact ``add``, ``sub`` or ``mul`` of two polynomials in the same ring."""
    if a.n != b.n:
        raise VariableCountMismatch(f"{a.n} vs {b.n} variables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def scale(a: MultiPoly, c) -> MultiPoly:
    c = _coerce(c)
    if c.is_zero():
        return MultiPoly.zero(a.n)
    if c == ONE:
        return a
    return MultiPoly._raw(a.n, {m: v * c for m, v in a.terms.items()})


def exact_divide_diff(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """Return ``q`` with ``q * (x_i - x_j) == f``.

    Synthetic division on the x_i-degree: the term ``c x_i^a R`` contributes
    ``c x_i^(a-1) R`` to the quotient and leaves ``c x_i^(a-1) x_j R`` behind.
    Raises NonzeroRemainder if anything free of x_i survives.
    """
    _check_index(f.n, i)
    _check_index(f.n, j)
    if i == j:
        raise ValueError("i and j must differ")
    ki, kj = i - 1, j - 1
    buckets: dict[int, dict[Monomial, AlphaRational]] = {}
    for m, c in f.terms.items():
        buckets.setdefault(m[ki], {})[m] = c
    quotient: dict[Monomial, AlphaRational] = {}
    top = max(buckets, default=0)
    for a in range(top, 0, -1):
        level = buckets.pop(a, None)
        if not level:
            continue
        lower = buckets.setdefault(a - 1, {})
        for m, c in level.items():
            e = list(m)
            e[ki] -= 1
            q = tuple(e)
            quotient[q] = c
            e[kj] += 1
            r = tuple(e)
            prev = lower.get(r)
            if prev is None:
                lower[r] = c
            else:
                s = prev + c
                if s.is_zero():
                    del lower[r]
                else:
                    lower[r] = s
    if buckets.get(0):
        raise NonzeroRemainder(
            f"polynomial is not divisible by (x{i} - x{j})")
    return MultiPoly._raw(f.n, quotient)


# text grammar --------------------------------------------------------------

def _render_monomial(mono: Monomial) -> str:
    parts = []
    for k, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def render(f: MultiPoly) -> str:
    """Render as ``(c)*x1^2*x2 + (c')`` in canonical order; zero is ``0``."""
    if f.is_zero():
        return "0"
    out = []
    for mono, c in f:
        body = _render_monomial(mono)
        coef = f"({c.render()})"
        out.append(f"{coef}*{body}" if body else coef)
    return " + ".join(out)


_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(s[start:k])
            start = k + 1
    parts.append(s[start:])
    return parts


def parse(text: str, n: int | None = None) -> MultiPoly:
    """Inverse of :func:`render`. ``n`` defaults to the largest variable index seen."""
    s = text.strip()
    raw: list[tuple[dict[int, int], AlphaRational]] = []
    if s != "0":
        for term in _split_top(s, "+"):
            body = term.strip()
            if not body.startswith("("):
                raise ParseError(f"term {term!r} lacks a parenthesized coefficient")
            depth, k = 0, 0
            for k, ch in enumerate(body):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                    if depth == 0:
                        break
            coef = AlphaRational.parse(body[: k + 1])
            rest = body[k + 1:].strip()
            exps: dict[int, int] = {}
            if rest:
                if not rest.startswith("*"):
                    raise ParseError(f"malformed term {term!r}")
                for v in rest[1:].split("*"):
                    m = _VAR_RE.match(v.strip())
                    if not m:
                        raise ParseError(f"malformed variable {v!r}")
                    idx = int(m.group(1))
                    if idx < 1:
                        raise ParseError(f"variable index must be >= 1 in {v!r}")
                    exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
            raw.append((exps, coef))
    seen = max((max(e) for e, _ in raw if e), default=0)
    if n is None:
        n = seen
    elif seen > n:
        raise ParseError(f"variable x{seen} exceeds n = {n}")
    return MultiPoly(n, [(tuple(e.get(k, 0) for k in range(1, n + 1)), c) for e, c in raw])
