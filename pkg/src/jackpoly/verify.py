"""Batch verification of the Jack-polynomial identities over all small partitions.

Each check is evaluated on independent *units* (a partition, or a
(partition, i, n) triple for the commutator check). Units may run in worker
processes; results are collected in unit order so reports are deterministic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .jack import (
    JackResult,
    check_commutator,
    check_eigen,
    check_normalization,
    check_triangularity,
    conjecture_report,
    rodrigues_jack,
)
from .multipoly import MultiPoly
from .operators import apply_dunkl, apply_swap
from .oracle import oracle_jack
from .partitions import Partition, partitions_of
from .symmetric import scalar_product

CHECKS = (
    "eigen",
    "orthogonality",
    "triangularity",
    "normalization",
    "integrality",
    "positivity",
    "commutator",
    "dunkl-relations",
    "oracle",
)


@dataclass(frozen=True)
class Outcome:
    check: str
    unit: tuple
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckSummary:
    check: str
    passed: int
    total: int
    first_failure: Outcome | None

    def line(self) -> str:
        return f"{self.check}: {self.passed}/{self.total} pass"


def _vars(lam: Partition) -> int:
    return max(lam.weight, 1)


@lru_cache(maxsize=None)
def _jack(lam: Partition) -> JackResult:
    return rodrigues_jack(lam, _vars(lam))


def _describe(result: JackResult) -> str:
    body = ", ".join(f"{mu}: {c.render()}" for mu, c in result.expansion)
    return f"J[{result.lam}] (n={result.n}) = {{{body}}}"


def _eigen(lam):
    r = _jack(lam)
    return check_eigen(r), _describe(r)


def _orthogonality(lam):
    r = _jack(lam)
    bad = [mu for mu in partitions_of(lam.weight)
           if mu != lam and not scalar_product(r.expansion, _jack(mu).expansion).is_zero()]
    return not bad, f"<J[{lam}], J[mu]> != 0 for mu in {[str(m) for m in bad]}"


def _triangularity(lam):
    r = _jack(lam)
    return check_triangularity(r), _describe(r)


def _normalization(lam):
    r = _jack(lam)
    return check_normalization(r), _describe(r)


def _integrality(lam):
    rep = conjecture_report(_jack(lam))
    bad = rep.integrality_failures
    return not bad, "; ".join(f"v[{e.mu}] = {e.v.render()}" for e in bad)


def _positivity(lam):
    rep = conjecture_report(_jack(lam))
    bad = rep.positivity_failures
    return not bad, "; ".join(f"tilde v[{e.mu}] = {e.tilde_v.render()}" for e in bad)


def _oracle(lam):
    r = _jack(lam)
    expected = oracle_jack(lam)
    return r.expansion == expected, f"rodrigues {_describe(r)} vs oracle {expected!r}"


def _commutator(unit):
    lam, i, n = unit
    return check_commutator(lam, i, n), f"lambda={lam}, i={i}, n={n}"


def dunkl_commutation_holds(f: MultiPoly, i: int, j: int) -> bool:
    """(D_i D_j - D_j D_i) f == (D_j - D_i)(K_ij f)."""
    lhs = apply_dunkl(apply_dunkl(f, j), i) - apply_dunkl(apply_dunkl(f, i), j)
    g = apply_swap(f, i, j)
    return lhs == apply_dunkl(g, j) - apply_dunkl(g, i)


def restricted_identity_holds(f: MultiPoly, i: int, j: int, m: int) -> bool:
    """(D_i + m)(D_j + m + 1) f == (D_j + m)(D_i + m + 1) f for f symmetric in x_i, x_j."""
    def shifted(g, k, s):
        return apply_dunkl(g, k) + g * s

    return shifted(shifted(f, j, m + 1), i, m) == shifted(shifted(f, i, m + 1), j, m)


def _dunkl_relations(lam):
    n = max(2, len(lam))
    f = MultiPoly.monomial(lam.padded(n))
    for i, j in combinations(range(1, n + 1), 2):
        if not dunkl_commutation_holds(f, i, j):
            return False, f"commutation fails for x^{lam.padded(n)}, (i,j)=({i},{j})"
        g = f + apply_swap(f, i, j)
        for m in range(4):
            if not restricted_identity_holds(g, i, j, m):
                return False, f"restricted identity fails for {g}, (i,j)=({i},{j}), m={m}"
    return True, ""


_RUNNERS: dict[str, Callable] = {
    "eigen": _eigen,
    "orthogonality": _orthogonality,
    "triangularity": _triangularity,
    "normalization": _normalization,
    "integrality": _integrality,
    "positivity": _positivity,
    "commutator": _commutator,
    "dunkl-relations": _dunkl_relations,
    "oracle": _oracle,
}


def units(check: str, max_weight: int) -> list:
    """Units of a check: all partitions of weight 0..max_weight (weight ascending,
    descending lex within a weight), or (lam, i, n) with len(lam) <= i <= n <= max_weight."""
    parts = [lam for N in range(max_weight + 1) for lam in partitions_of(N)]
    if check != "commutator":
        return parts
    top = max(max_weight, 1)
    return [(lam, i, n) for lam in parts
            for n in range(max(len(lam), 1), top + 1)
            for i in range(max(len(lam), 1), n + 1)]


def _run(task: tuple[str, object]) -> Outcome:
    check, unit = task
    passed, detail = _RUNNERS[check](unit)
    key = unit if isinstance(unit, tuple) and not isinstance(unit, Partition) else (unit,)
    return Outcome(check, key, bool(passed), "" if passed else detail)


def run_checks(max_weight: int, checks: list[str], jobs: int = 1) -> list[CheckSummary]:
    unknown = [c for c in checks if c not in _RUNNERS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}")
    tasks = [(c, u) for c in checks for u in units(c, max_weight)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = [_run(t) for t in tasks]
    summaries = []
    for c in checks:
        mine = [o for o in outcomes if o.check == c]
        first = next((o for o in mine if not o.passed), None)
        summaries.append(CheckSummary(c, sum(o.passed for o in mine), len(mine), first))
    return summaries
