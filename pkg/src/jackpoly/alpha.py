"""Exact coefficients in the Jack parameter alpha.

``AlphaPoly`` is an element of Z[a]; ``AlphaRational`` is an element of Q(a)
kept in a canonical reduced form so that equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import ParseError

__all__ = ["AlphaPoly", "AlphaRational", "ALPHA", "ONE", "ZERO"]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class AlphaPoly:
    """Polynomial in alpha with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``a**k``; the empty tuple is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = _trim(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"AlphaPoly coefficients must be int, got {type(x).__name__}")
        self.coeffs = c

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> AlphaPoly:
        # caller guarantees trimmed int tuple
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c: int) -> AlphaPoly:
        return cls._raw((c,) if c else ())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for x in self.coeffs:
            g = gcd(g, x)
        return g

    def primitive(self) -> AlphaPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return AlphaPoly._raw(tuple(x // g for x in self.coeffs))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: AlphaPoly) -> AlphaPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return self if a is self.coeffs else other
        out = list(a)
        for k, x in enumerate(b):
            out[k] += x
        if len(a) == len(b):
            return AlphaPoly._raw(_trim(out))
        return AlphaPoly._raw(tuple(out))

    def __neg__(self) -> AlphaPoly:
        return AlphaPoly._raw(tuple(-x for x in self.coeffs))

    def __sub__(self, other: AlphaPoly) -> AlphaPoly:
        return self + (-other)

    def __mul__(self, other: Union[AlphaPoly, int]) -> AlphaPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO_POLY
            return AlphaPoly._raw(tuple(x * other for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return AlphaPoly._raw(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> AlphaPoly:
        """Multiply by ``a**k``."""
        if not self.coeffs:
            return self
        return AlphaPoly._raw((0,) * k + self.coeffs)

    def pseudo_rem(self, other: AlphaPoly) -> AlphaPoly:
        """Pseudo-remainder of self by other over Z."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for k, y in enumerate(b):
                r[k + shift] -= lr * y
            r = list(_trim(r))
        return AlphaPoly._raw(tuple(r))

    def exact_div(self, other: AlphaPoly) -> AlphaPoly:
        """Quotient of an exact division in Z[a]; raises if not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return ZERO_POLY
        q = [0] * (len(r) - db)
        for shift in range(len(r) - 1 - db, -1, -1):
            lr = r[shift + db]
            if lr % lb:
                raise ArithmeticError("inexact polynomial division")
            c = lr // lb
            q[shift] = c
            if c:
                for k, y in enumerate(b):
                    r[k + shift] -= c * y
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return AlphaPoly._raw(_trim(q))

    def gcd(self, other: AlphaPoly) -> AlphaPoly:
        """Primitive gcd over Q[a] with positive leading coefficient."""
        a, b = self.primitive(), other.primitive()
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            a, b = b, a.pseudo_rem(b).primitive()
        return a.primitive()

    def __call__(self, value):
        acc = 0
        for x in reversed(self.coeffs):
            acc = acc * value + x
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("AlphaPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"AlphaPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    # text ----------------------------------------------------------------

    def render(self, compact: bool = False) -> str:
        """Render in ascending degree, e.g. ``1 + a - 3*a^2``.

        ``compact`` drops spaces and the ``*`` (``1+a-3a^2``).
        """
        if not self.coeffs:
            return "0"
        star = "" if compact else "*"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "a" if k == 1 else f"a^{k}"
                body = var if mag == 1 else f"{mag}{star}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            elif compact:
                parts.append(("+" if c > 0 else "-") + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> AlphaPoly:
        s = text.replace(" ", "")
        if s in ("", "0"):
            if s == "":
                raise ParseError("empty alpha-polynomial")
            return ZERO_POLY
        out: dict[int, int] = {}
        pos = 0
        for m in _TERM_RE.finditer(s):
            if m.start() != pos or not m.group(0):
                break
            sign, num, var, exp = m.groups()
            if num is None and var is None:
                break
            c = int(num) if num is not None else 1
            if sign == "-":
                c = -c
            k = 0 if var is None else (int(exp) if exp else 1)
            out[k] = out.get(k, 0) + c
            pos = m.end()
            if pos == len(s):
                break
        if pos != len(s):
            raise ParseError(f"cannot parse alpha-polynomial {text!r}")
        deg = max(out) if out else -1
        return cls([out.get(k, 0) for k in range(deg + 1)])


_TERM_RE = re.compile(r"([+-])?(\d+)?(?:\*?(a)(?:\^(\d+))?)?")

ZERO_POLY = AlphaPoly._raw(())
ONE_POLY = AlphaPoly._raw((1,))


class AlphaRational:
    """Canonical element of Q(a).

    Canonical form: numerator and denominator are integer polynomials with no
    common factor over Q[a], jointly content-free, denominator with positive
    leading coefficient; zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[AlphaPoly, int, Sequence[int]] = ZERO_POLY,
                 den: Union[AlphaPoly, int, Sequence[int]] = ONE_POLY):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: AlphaPoly, den: AlphaPoly = ONE_POLY) -> AlphaRational:
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_int(cls, c: int) -> AlphaRational:
        return cls._raw(AlphaPoly.constant(c))

    @classmethod
    def from_fraction(cls, q: Fraction) -> AlphaRational:
        return cls(AlphaPoly.constant(q.numerator), AlphaPoly.constant(q.denominator))

    def normalized(self) -> AlphaRational:
        return AlphaRational(self.num, self.den)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_polynomial(self) -> bool:
        """True when the canonical denominator is 1 (coefficients in Z[a])."""
        return self.den.coeffs == (1,)

    def is_nonneg_polynomial(self) -> bool:
        return self.is_polynomial() and all(c >= 0 for c in self.num.coeffs)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other) -> AlphaRational:
        other = _coerce(other)
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return AlphaRational._raw(self.num + other.num)
        if self.den == other.den:
            return AlphaRational(self.num + other.num, self.den)
        return AlphaRational(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> AlphaRational:
        return AlphaRational._raw(-self.num, self.den)

    def __sub__(self, other) -> AlphaRational:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> AlphaRational:
        return _coerce(other) - self

    def __mul__(self, other) -> AlphaRational:
        if isinstance(other, int):
            if self.den.coeffs == (1,):
                return AlphaRational._raw(self.num * other)
            other = AlphaRational.from_int(other)
        else:
            other = _coerce(other)
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return AlphaRational._raw(self.num * other.num)
        return AlphaRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> AlphaRational:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(a)")
        return AlphaRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> AlphaRational:
        return _coerce(other) / self

    def shift(self, k: int = 1) -> AlphaRational:
        """Multiply by ``a**k``."""
        if self.den.coeffs == (1,):
            return AlphaRational._raw(self.num.shift(k))
        return AlphaRational(self.num.shift(k), self.den)

    def evaluate(self, value: Fraction) -> Fraction:
        d = Fraction(self.den(value))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at alpha = {value}")
        return Fraction(self.num(value)) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, AlphaRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, AlphaPoly, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"AlphaRational({list(self.num.coeffs)})"
        return f"AlphaRational({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def render(self, compact: bool = False) -> str:
        if self.is_polynomial():
            return self.num.render(compact)
        n, d = self.num.render(compact), self.den.render(compact)
        return f"({n})/({d})"

    __str__ = render

    @classmethod
    def parse(cls, text: str) -> AlphaRational:
        s = _strip_parens(text)
        depth, split = 0, -1
        for k, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = k
        if split < 0:
            return cls._raw(AlphaPoly.parse(_strip_parens(s)))
        num = AlphaPoly.parse(_strip_parens(s[:split]))
        den = AlphaPoly.parse(_strip_parens(s[split + 1:]))
        if den.is_zero():
            raise ParseError(f"zero denominator in {text!r}")
        return cls(num, den)


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")") and _matching(s) == len(s) - 1:
        s = s[1:-1].strip()
    return s


def _matching(s: str) -> int:
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return k
    return -1


def _as_poly(x) -> AlphaPoly:
    if isinstance(x, AlphaPoly):
        return x
    if isinstance(x, int):
        return AlphaPoly.constant(x)
    return AlphaPoly(x)


def _coerce(x) -> AlphaRational:
    if isinstance(x, AlphaRational):
        return x
    if isinstance(x, int):
        return AlphaRational.from_int(x)
    if isinstance(x, AlphaPoly):
        return AlphaRational._raw(x)
    if isinstance(x, Fraction):
        return AlphaRational.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to AlphaRational")


def _canonical(num: AlphaPoly, den: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    c = gcd(num.content(), den.content())
    if den.lc < 0:
        c = -c
    if c != 1:
        num = AlphaPoly._raw(tuple(x // c for x in num.coeffs))
        den = AlphaPoly._raw(tuple(x // c for x in den.coeffs))
    return num, den


ZERO = AlphaRational._raw(ZERO_POLY)
ONE = AlphaRational._raw(ONE_POLY)
ALPHA = AlphaRational._raw(AlphaPoly._raw((0, 1)))
