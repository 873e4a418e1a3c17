"""Acceptance criteria, one check per criterion.

Run under pytest, or directly (``python tests/test_acceptance.py``) to get
one PASS/FAIL line per criterion.  Every time bound and tolerance is pinned
below.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from orbit_concavity.chevalley import build_constants, jacobi_defect
from orbit_concavity.classifier import (
    Decision,
    decide,
    decide_lemma_iii,
    decide_proposition,
    enumerate_and_crosscheck,
)
from orbit_concavity.cralg import build_spec, enumerate_phis, is_fundamental
from orbit_concavity.exact import conj, gauss, imag, real
from orbit_concavity.leviform import (
    HermitianForm,
    bracket_chain_cases,
    build_real_structure,
    check_real_structure,
    hermitian_signature,
    levi_matrix,
)
from orbit_concavity.rootsys import VALID_RANKS, build_root_system, root_string
from orbit_concavity.satake import ALWAYS_PSEUDOCONCAVE, catalog, conjugation, omega_set, resolve

OMEGA_SECONDS = 1.0
CHEVALLEY_E8_SECONDS = 120.0
CONJUGATION_SECONDS = 60.0
THEOREM_SECONDS = 600.0
EIGEN_TOL = 1e-9
N_RANDOM_MATRICES = 1000
MAX_RANDOM_SIZE = 8
SEED = 20240611


def _e(n, *idx_coeff):
    v = [0] * n
    for i, c in idx_coeff:
        v[i - 1] += c
    return tuple(v)


def criterion_1():
    expected = {
        "su(1,3)": [_e(3, (1, 1), (2, 1), (3, 1))],
        "su(2,2)": [_e(3, (1, 1), (2, 1), (3, 1))],
        "su(1,4)": [_e(4, (1, 1), (2, 1), (3, 1), (4, 1))],
        "su(2,3)": [_e(4, (2, 1), (3, 1)), _e(4, (1, 1), (2, 1), (3, 1), (4, 1))],
        "sp(1,2)": [_e(3, (1, 1), (2, 2), (3, 1))],
        "sp(1,3)": [_e(4, (1, 1), (2, 2), (3, 2), (4, 1))],
    }
    t0 = time.perf_counter()
    got = {name: sorted(omega_set(resolve(name))) for name in expected}
    dt = time.perf_counter() - t0
    bad = [f"{n}: got {got[n]} expected {sorted(e)}" for n, e in expected.items() if got[n] != sorted(e)]
    ok = not bad and dt < OMEGA_SECONDS
    return ok, (f"{len(expected) - len(bad)}/{len(expected)} fixtures, {dt:.3f}s (< {OMEGA_SECONDS}s)"
                + ("; " + "; ".join(bad) if bad else ""))


def criterion_2():
    problems = []
    checked = 0
    for d in catalog(8):
        l = d.rank
        if d.family == "CIIa":
            exp = [_e(l, (2 * h - 1, 1), (l, 1), *[(j, 2) for j in range(2 * h, l)])
                   for h in range(1, d.param("p") + 1)]
        elif d.family == "DIIIb":
            exp = [_e(l, (2 * h - 1, 1), (l - 1, 1), (l, 1), *[(j, 2) for j in range(2 * h, l - 1)])
                   for h in range(1, (l - 1) // 2 + 1)]
        elif d.family == "EIII":
            exp = [(1, 0, 1, 1, 1, 1), (1, 2, 2, 3, 2, 1)]
        elif d.family == "FII":
            exp = [(1, 2, 3, 2)]
        else:
            continue
        checked += 1
        if sorted(omega_set(d)) != sorted(exp):
            problems.append(f"{d.name}: {omega_set(d)} vs {exp}")
    return not problems and checked > 0, f"{checked} forms checked" + ("; " + "; ".join(problems) if problems else "")


def _rank8_systems():
    return [(t, n) for t in "ABCDEFG" for n in range(1, 9) if VALID_RANKS[t](n) and not (t == "C" and n == 2)]


def _chevalley_suite(t, n):
    R = build_root_system(t, n)
    build_constants.cache_clear()
    S = build_constants(R)
    N, add, neg = S.N, R.add, R.neg
    for (a, b), v in N.items():
        up, down = root_string(R, R.roots[a], R.roots[b])
        if abs(v) != down + 1:
            return f"|N| at {R.roots[a]}, {R.roots[b]}"
        if v * N[neg[a], add[a][b]] != -up * (down + 1):
            return f"product identity at {R.roots[a]}, {R.roots[b]}"
        if N[b, a] != -v:
            return f"antisymmetry at {R.roots[a]}, {R.roots[b]}"
    m = len(R.roots)
    # the cyclic sum is alternating in its arguments, so a <= b <= c covers every triple
    for a in range(m):
        for b in range(a, m):
            for c in range(b, m):
                d = jacobi_defect(S, a, b, c)
                if d is not None and (any(d) if isinstance(d, tuple) else d):
                    return f"Jacobi at {R.roots[a]}, {R.roots[b]}, {R.roots[c]}"
    return None


def criterion_3():
    failures = []
    times = {}
    for t, n in _rank8_systems():
        t0 = time.perf_counter()
        err = _chevalley_suite(t, n)
        times[f"{t}{n}"] = time.perf_counter() - t0
        if err:
            failures.append(f"{t}{n}: {err}")
    e8 = times["E8"]
    ok = not failures and e8 < CHEVALLEY_E8_SECONDS
    return ok, (f"{len(times)} systems, E8 {e8:.1f}s (< {CHEVALLEY_E8_SECONDS:.0f}s), all {sum(times.values()):.1f}s"
                + ("; " + "; ".join(failures) if failures else ""))


def criterion_4():
    conjugation.cache_clear()
    build_real_structure.cache_clear()
    t0 = time.perf_counter()
    failures = []
    entries = catalog(8)
    for d in entries:
        c = conjugation(d)
        R = d.system
        if any(c.perm[c.perm[k]] != k for k in range(len(R.roots))) or sorted(c.perm) != list(range(len(R.roots))):
            failures.append(f"{d.name}: sigma* not an involutive permutation")
        for i in d.black:
            if c.sigma_star(R.simple_root(i + 1)) != tuple(-x for x in R.simple_root(i + 1)):
                failures.append(f"{d.name}: black node {i + 1} not negated")
        rs = build_real_structure(d)
        problem = check_real_structure(build_constants(R), c, rs.exponents)
        if problem:
            failures.append(f"{d.name}: {problem}")
        if rs.theta_fixed_dim != d.dim_k:
            failures.append(f"{d.name}: theta-fixed dim {rs.theta_fixed_dim} != {d.dim_k}")
    dt = time.perf_counter() - t0
    ok = not failures and dt < CONJUGATION_SECONDS
    return ok, (f"{len(entries)} catalog entries, {dt:.1f}s (< {CONJUGATION_SECONDS:.0f}s)"
                + ("; " + "; ".join(failures[:5]) if failures else ""))


def criterion_5():
    parts = []
    ok = True
    for name in ("su(2,3)", "sp(1,2)", "sp(1,3)", "fII"):
        cases = bracket_chain_cases(build_real_structure(resolve(name)))
        held = sum(c.holds for c in cases)
        ok &= held == len(cases)
        parts.append(f"{name} {held}/{len(cases)}")
    return ok, ", ".join(parts) + " (su(2,3) has no compact roots, so it has no admissible triple)"


def _decision(name, phi):
    return decide(build_spec(resolve(name), phi))


def criterion_6():
    problems = []
    v = _decision("fII", (1,))
    if v.decision is not Decision.ESSENTIALLY_PSEUDOCONCAVE:
        problems.append("F II {a1}")
    v = _decision("fII", (3,))
    if v.decision is not Decision.NOT or v.witness is None or v.witness.rank != 1:
        problems.append("F II {a3}")
    spec = build_spec(resolve("eIII"), (3,))
    v = decide(spec)
    H = levi_matrix(spec, build_real_structure(spec.diagram), (1, 2, 2, 3, 2, 1))
    if v.decision is not Decision.NOT or hermitian_signature(H).rank != 1:
        problems.append("E III {a3}")
    if _decision("su(1,3)", (2,)).decision is not Decision.ESSENTIALLY_PSEUDOCONCAVE:
        problems.append("su(1,3) {a2}")
    if _decision("su(1,3)", (1,)).decision is not Decision.NOT:
        problems.append("su(1,3) {a1}")
    n_always = 0
    for d in catalog(6):
        if d.family not in ALWAYS_PSEUDOCONCAVE:
            continue
        rs = build_real_structure(d)
        for phi in enumerate_phis(d):
            n_always += 1
            if not decide(build_spec(d, phi), rs).decision.is_yes:
                problems.append(f"{d.name} {phi}")
    return not problems, f"5 endpoints, {n_always} always-list specs" + ("; " + "; ".join(problems[:5]) if problems else "")


def criterion_7():
    t0 = time.perf_counter()
    report = enumerate_and_crosscheck(6)
    dt = time.perf_counter() - t0
    split_rows = [r for r in report.rows if r.label.startswith("split(") and r.phi]
    split_ok = all(r.status == "excluded: non-fundamental" for r in split_rows)
    agree = sum(r.status == "agree" for r in report.rows)
    ok = not report.disagreements and split_ok and dt < THEOREM_SECONDS
    return ok, (f"{len(report.rows)} rows, {agree} agree, {len(report.disagreements)} disagreements, "
                f"{len(split_rows)} split rows excluded as non-fundamental, {dt:.1f}s (< {THEOREM_SECONDS:.0f}s)")


def criterion_8():
    n = mismatches = 0
    for d in catalog(5):
        rs = build_real_structure(d)
        for phi in enumerate_phis(d):
            spec = build_spec(d, phi)
            if not is_fundamental(spec):
                continue
            n += 1
            if decide_proposition(spec, rs, True).decision is not decide_lemma_iii(spec, rs, True).decision:
                mismatches += 1
    return mismatches == 0 and n > 0, f"{n} fundamental specs, {mismatches} mismatches"


def _random_hermitian(rng):
    n = rng.randint(1, MAX_RANDOM_SIZE)
    q = lambda: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    if rng.random() < 0.3:
        # low rank B D B* exercises exact zero eigenvalues
        k = rng.randint(0, n)
        B = [[gauss(q(), q()) for _ in range(k)] for _ in range(n)]
        D = [gauss(q()) for _ in range(k)]
        return [[sum((B[i][t] * D[t] * conj(B[j][t]) for t in range(k)), gauss(0)) for j in range(n)]
                for i in range(n)]
    rows = [[gauss(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = gauss(q())
        for j in range(i + 1, n):
            v = gauss(q(), q()) if rng.random() < 0.7 else gauss(0)
            rows[i][j], rows[j][i] = v, conj(v)
    return rows


def criterion_9():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(N_RANDOM_MATRICES):
        rows = _random_hermitian(rng)
        n = len(rows)
        H = HermitianForm(tuple((k,) for k in range(n)), tuple(tuple(r) for r in rows))
        sig = hermitian_signature(H)
        A = np.array([[complex(float(real(v)), float(imag(v))) for v in r] for r in rows])
        ev = np.linalg.eigvalsh(A)
        ref = (int((ev > EIGEN_TOL).sum()), int((ev < -EIGEN_TOL).sum()))
        if (sig.n_plus, sig.n_minus) != ref:
            bad += 1
    return bad == 0, f"{N_RANDOM_MATRICES} matrices (size <= {MAX_RANDOM_SIZE}, seed {SEED}, |lambda| > {EIGEN_TOL}), {bad} mismatches"


CRITERIA = [
    (1, "Omega fixtures", criterion_1),
    (2, "gamma families", criterion_2),
    (3, "Chevalley property suite, rank <= 8", criterion_3),
    (4, "conjugation and real-structure suite", criterion_4),
    (5, "bracket-chain formula", criterion_5),
    (6, "endpoint decisions", criterion_6),
    (7, "classification reproduced at rank 6", criterion_7),
    (8, "real-root criterion agrees with the full criterion, rank <= 5", criterion_8),
    (9, "exact signature vs float eigenvalues", criterion_9),
]


def _line(num, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} [{num}] {title}: {detail}"


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check):
    ok, detail = check()
    line = _line(num, title, ok, detail)
    print(line)
    assert ok, line


def main() -> int:
    failed = 0
    for num, title, check in CRITERIA:
        ok, detail = check()
        print(_line(num, title, ok, detail), flush=True)
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
