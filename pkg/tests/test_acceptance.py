"""Exit criteria: every check is exact (zero tolerance)."""

import random
import subprocess
import sys
import time
from itertools import combinations

from jackpoly.jack import (
    _stages,
    check_commutator,
    check_eigen,
    check_normalization,
    check_triangularity,
    conjecture_report,
    rodrigues_jack,
    rodrigues_states,
)
from jackpoly.multipoly import MultiPoly
from jackpoly.operators import apply_swap
from jackpoly.oracle import gram_schmidt_jack
from jackpoly.partitions import partitions_of
from jackpoly.verify import dunkl_commutation_holds, restricted_identity_holds


def _all(max_weight, min_weight=1):
    return [lam for N in range(min_weight, max_weight + 1) for lam in partitions_of(N)]


def test_criterion_1_oracle_equivalence(criterion):
    start = time.perf_counter()
    mismatches, total = [], 0
    for N in range(1, 7):
        oracle = gram_schmidt_jack(N)
        for lam in partitions_of(N):
            total += 1
            if rodrigues_jack(lam, N).expansion != oracle[lam]:
                mismatches.append(lam)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300
    criterion(ok, f"{total - len(mismatches)}/{total} equal to oracle in {elapsed:.1f}s (limit 300s)")
    assert not mismatches, mismatches
    assert elapsed < 300


def test_criterion_2_eigenvalue_equation(criterion):
    cases = [(lam, lam.weight) for lam in _all(6)]
    cases += [(lam, n) for lam in _all(5, 0) for n in range(max(len(lam), 1), 5) if len(lam) <= n]
    bad = [(lam, n) for lam, n in cases if not check_eigen(rodrigues_jack(lam, n))]
    criterion(not bad, f"{len(cases) - len(bad)}/{len(cases)} (lambda, n) eigen-equations exact")
    assert not bad, bad


def test_criterion_3_defining_properties(criterion):
    from jackpoly.symmetric import scalar_product

    pairs = tri = norm = 0
    bad = []
    for N in range(1, 7):
        results = {lam: rodrigues_jack(lam, N) for lam in partitions_of(N)}
        for lam, mu in combinations(results, 2):
            pairs += 1
            if not scalar_product(results[lam].expansion, results[mu].expansion).is_zero():
                bad.append(("orthogonality", lam, mu))
        for lam, r in results.items():
            tri += 1
            norm += 1
            if not check_triangularity(r):
                bad.append(("triangularity", lam))
            if not check_normalization(r):
                bad.append(("normalization", lam))
    criterion(not bad, f"{pairs} orthogonal pairs, {tri} triangular, {norm} normalized; failures={len(bad)}")
    assert not bad, bad


def test_criterion_4_integrality(criterion):
    total, bad = 0, []
    for lam in _all(7):
        rep = conjecture_report(rodrigues_jack(lam, lam.weight))
        total += len(rep.entries)
        bad += [(lam, e.mu, e.v.render()) for e in rep.integrality_failures]
    criterion(not bad, f"{total} coefficients v in Z[a] for |lambda| <= 7; exceptions={len(bad)}")
    assert not bad, bad


def test_criterion_5_positivity(criterion):
    total, findings = 0, []
    for lam in _all(6):
        rep = conjecture_report(rodrigues_jack(lam, lam.weight))
        total += len(rep.entries)
        findings += [{"lambda": str(lam), "mu": str(e.mu), "tilde_v": e.tilde_v.render()}
                     for e in rep.positivity_failures]
    criterion(not findings, f"{total} renormalized coefficients nonnegative integer polys; violations={len(findings)}")
    assert not findings, findings


def _random_monomial(r):
    n = r.randint(2, 4)
    e = [0] * n
    for _ in range(r.randint(0, 5)):
        e[r.randrange(n)] += 1
    return MultiPoly.monomial(e)


def test_criterion_6_operator_identities(criterion):
    r = random.Random(6)
    comm_checks = comm_bad = 0
    for _ in range(200):
        f = _random_monomial(r)
        for i, j in combinations(range(1, f.n + 1), 2):
            comm_checks += 1
            comm_bad += not dunkl_commutation_holds(f, i, j)

    restr_checks = restr_bad = 0
    for _ in range(100):
        n = r.randint(2, 4)
        g = MultiPoly.random(n, 4, 3, r)
        i, j = sorted(r.sample(range(1, n + 1), 2))
        f = g + apply_swap(g, i, j)
        for m in range(4):
            restr_checks += 1
            restr_bad += not restricted_identity_holds(f, i, j, m)

    triples = [(lam, i, n) for n in range(1, 5) for lam in _all(4, 0)
               for i in range(max(len(lam), 1), n + 1) if len(lam) <= i]
    comm17_bad = [t for t in triples if not check_commutator(*t)]

    ok = not comm_bad and not restr_bad and not comm17_bad
    criterion(ok, f"commutation {comm_checks - comm_bad}/{comm_checks}, restricted "
                  f"{restr_checks - restr_bad}/{restr_checks}, commutator "
                  f"{len(triples) - len(comm17_bad)}/{len(triples)}")
    assert ok, (comm_bad, restr_bad, comm17_bad)


def test_criterion_7_structural_invariants(criterion):
    cases = [(lam, lam.weight) for lam in _all(6)]
    cases += [(lam, n) for lam in _all(5) for n in range(len(lam), 5) if n != lam.weight]
    bad, states_seen = [], 0
    for lam, n in cases:
        states = rodrigues_states(lam, n, use_symmetry=False)
        out = states[-1]
        if not (out.is_symmetric() and out.degrees() == {lam.weight}):
            bad.append(("output", lam, n))
        for s in states:
            states_seen += 1
            if not s.is_integral() or not s.is_symmetric() or len(s.degrees()) != 1:
                bad.append(("state", lam, n))
        # each creation operator raises the degree by its index
        degs = [next(iter(s.degrees())) for s in states]
        steps = [k for k, times in _stages(lam, n) for _ in range(times)]
        if degs[0] != 0 or [b - a for a, b in zip(degs, degs[1:])] != steps:
            bad.append(("degree", lam, n))
        if out != rodrigues_jack(lam, n).poly:
            bad.append(("shortcut", lam, n))
    criterion(not bad, f"{len(cases)} outputs symmetric/homogeneous, {states_seen} intermediate states in Z[a]")
    assert not bad, bad


def test_criterion_8_determinism(criterion):
    def run(jobs):
        return subprocess.run([sys.executable, "-m", "jackpoly", "verify", "--max-weight", "5",
                               "--jobs", str(jobs)], capture_output=True, check=False).stdout

    one, eight = run(1), run(8)
    ok = one == eight and one.startswith(b"eigen:")
    criterion(ok, f"--jobs 1 and --jobs 8 reports byte-identical ({len(one)} bytes)")
    assert ok
