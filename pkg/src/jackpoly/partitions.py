"""Integer partitions and the dominance order."""

from __future__ import annotations

from collections import Counter
from itertools import accumulate
from math import factorial, prod
from typing import Iterable

from .errors import ParseError

__all__ = ["Partition", "partitions_of", "dominance_leq", "z_of", "parse_partition"]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed).

    Being a tuple, ordinary comparison is lexicographic and partitions can be
    used directly as dict keys.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        p = [int(x) for x in parts]
        while p and p[-1] == 0:
            p.pop()
        if any(x < 1 for x in p):
            raise ValueError(f"partition parts must be positive: {p}")
        if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {p}")
        return super().__new__(cls, p)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part size i to m_i, the number of parts equal to i."""
        return dict(Counter(self))

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise ValueError(f"cannot pad {self} to length {n}")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > k) for k in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"


def parse_partition(text: str) -> Partition:
    """Parse ``3,1,1``; ``0`` (or an empty string) is the empty partition."""
    s = text.strip()
    if s in ("", "0"):
        return Partition()
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError:
        raise ParseError(f"malformed partition {text!r}") from None
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def partitions_of(N: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of N with at most ``max_length`` parts, descending lex."""
    if N < 0:
        return []
    if max_length is None:
        max_length = N
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(N, N, [])
    return out


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu <= lam in dominance order."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal weights: |{mu}| != |{lam}|")
    n = max(len(mu), len(lam))
    a = accumulate(tuple(mu) + (0,) * (n - len(mu)))
    b = accumulate(tuple(lam) + (0,) * (n - len(lam)))
    return all(x <= y for x, y in zip(a, b))


def z_of(lam: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())
