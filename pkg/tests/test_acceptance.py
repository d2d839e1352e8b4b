"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (shown with ``pytest -s``
and collected into the terminal summary).  Run standalone with
``python3 tests/test_acceptance.py`` for the lines alone.
"""
from __future__ import annotations

import time

import pytest

from fcrweyl import howe
from fcrweyl import weyl as W
from fcrweyl.exactlin import AffineSubspace
from fcrweyl.fcr import FCR, FINITE, NOT_FCR, fcr_decide
from fcrweyl.ideals import canonicalize, corpus, is_dominant, is_strongly_dominant, point_ideal, simple_coroot
from fcrweyl.oracles import density_oracle
from fcrweyl.rootsys import build
from fcrweyl.verify import Statement, check_duality, fuzz_systems, select_systems, suite_section2, suite_section4

RESULTS: list = []


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _stmt(report: dict, name: str) -> dict:
    return next(s for s in report["statements"] if s["name"] == name)


@pytest.fixture(scope="module")
def section2():
    t0 = time.perf_counter()
    rep = suite_section2(max_rank=4)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def fuzz_corpus():
    return {rs.label: (rs, corpus(rs, 200, seed=0)) for rs in fuzz_systems(3)}


def test_c01_inversion_sum_identity():
    t0 = time.perf_counter()
    checked = failures = 0
    for kind, n, order in [("A", 3, 24), ("B", 3, 48), ("C", 3, 48), ("D", 4, 192)]:
        rs = build(kind, n)
        group = W.enumerate_group(rs)
        assert len(group) == order
        for w in group:
            lhs = tuple(a - b for a, b in zip(rs.rho, w.inverse().apply(rs.rho)))
            checked += 1
            failures += lhs != W.root_sum(W.inversion_list(rs, w), rs.ambient_dim)
    elapsed = time.perf_counter() - t0
    record(1, "rho - w^-1 rho = sum Q(w)", failures == 0 and checked == 312 and elapsed < 1.0,
           f"{checked} elements, {failures} failures, {elapsed:.2f}s (limit 1s)")


def test_c02_stabilizer_pairing_dichotomy(section2):
    rep, elapsed = section2
    s = _stmt(rep, "stabilizer pairing dichotomy")
    record(2, "pairing dichotomy over all B1 in rank <= 4", s["failures"] == 0 and s["checked"] > 0 and elapsed < 30.0,
           f"{s['checked']} stabilizing pairs over {', '.join(rep['params']['systems'])}, {s['failures']} failures, {elapsed:.1f}s (limit 30s)")


def test_c03_stabilizer_factorization(section2):
    rep, _ = section2
    s = _stmt(rep, "stabilizer factorization")
    record(3, "W0 = W1 T bijective and length-additive", s["failures"] == 0 and s["checked"] > 0,
           f"{s['checked']} subsystems, {s['failures']} failures")


def test_c04_longest_element_involution(section2):
    rep, _ = section2
    s = _stmt(rep, "longest-element involution on Q(t)")
    record(4, "kappa permutes Q(t), swaps signs, zero pairing", s["failures"] == 0 and s["checked"] > 0,
           f"{s['checked']} elements t, {s['failures']} failures")


def test_c05_dot_duality():
    stmt = Statement("dot-action duality", "(w.h)(mu) = h(w^-1.mu)")
    systems = select_systems(("A", "B", "C", "D", "GL"), 4)
    for rs in systems:
        check_duality(rs, 1000, 0, stmt)
    record(5, "(w.h)(mu) = h(w^-1.mu)", stmt.failures == 0 and stmt.checked == 1000 * len(systems),
           f"{stmt.checked} triples over {len(systems)} systems, {stmt.failures} failures")


@pytest.mark.slow
def test_c06_strong_dominance_vs_oracle(fuzz_corpus):
    agree = disagree = unstable = 0
    for rs, ideals in fuzz_corpus.values():
        for om in ideals:
            verdict, stable = density_oracle(rs, om.variety)
            if not stable:
                unstable += 1
                continue
            if verdict == is_strongly_dominant(om):
                agree += 1
            else:
                disagree += 1
    total = agree + disagree + unstable
    record(6, "strong dominance agrees with enumeration oracle", disagree == 0 and agree > 0,
           f"{agree} agree, {disagree} disagree, {unstable} unstabilized of {total} ideals")


def test_c07_strongly_dominant_implies_dominant(fuzz_corpus):
    checked = bad = 0
    for rs, ideals in fuzz_corpus.values():
        for om in ideals:
            if is_strongly_dominant(om):
                checked += 1
                bad += not is_dominant(om)
    record(7, "strongly dominant implies dominant", bad == 0 and checked > 0,
           f"{checked} strongly dominant ideals, {bad} counterexamples")


@pytest.mark.slow
def test_c08_fcr_classification_sweeps():
    rep = suite_section4(count=200, seed=0, max_rank=3)
    parts = ", ".join(f"{s['name']} {s['checked']}/{s['failures']}" for s in rep["statements"])
    record(8, "translate, stabilizer, transport and witness checks", rep["failures"] == 0 and rep["checked"] > 0,
           f"{rep['checked']} ideals; checked/failures: {parts}")


def test_c09_case_A_closures():
    t0 = time.perf_counter()
    cases = bad = 0
    regimes = set()
    for n in range(1, 7):
        for p in range(0, n + 1):
            for k in range(1, 7):
                rep = howe.closure_case_A(p, n - p, k, bound=3)
                cases += 1
                regimes.add(rep.params["regime"])
                ok = rep.oracle_agreement and rep.stabilized
                ok &= rep.full_space if n <= k else all(d == k for d in rep.dims)
                bad += not ok
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and regimes == {"n<=k", "k<n<=2k", "2k<=n"} and elapsed < 60.0
    record(9, "(GL_k, gl_n) closures for n <= 6, k <= 6", ok,
           f"{cases} cases, regimes {sorted(regimes)}, {bad} failures, {elapsed:.1f}s (limit 60s)")


def test_c10_case_A_witnesses():
    checked = bad = 0
    for n in range(2, 7):
        for k in range(1, n):
            for i in range(0, n - k + 1):
                checked += 1
                bad += not howe.check_witness_case_A(i, n, k).ok
    record(10, "w_i.Omega_{n-k} = Omega_i with w_i in W^lambda", bad == 0 and checked > 0,
           f"{checked} witnesses, {bad} failures")


def test_c11_case_B():
    closures = fcr_checks = bad = 0
    for n in range(1, 6):
        for p in (1, 2):
            rep = howe.closure_case_B(n, p, bound=3)
            closures += 1
            ok = rep.oracle_agreement and rep.stabilized
            if p < n:
                ok &= list(rep.dims) == [p - i for i in rep.index_set]
                fcr_checks += 1
                ok &= howe.case_B_fcr(n, p).ok
            else:
                ok &= rep.full_space
            bad += not ok
    odd_certified = odd_full = 0
    for n in (1, 2, 3):
        for k in (1, 3):
            rep = howe.odd_k_case_B(n, k)
            if k < 2 * n:
                odd_certified += rep.certified
                bad += not rep.certified
            else:
                # the closure is all of h*, outside the range of the emptiness claim
                odd_full += 1
                bad += rep.applicable or rep.components != (AffineSubspace.whole(n),)
    record(11, "(O_k, sp_2n) closures, FCR of Omega_0, odd-k emptiness", bad == 0,
           f"{closures} closures, {fcr_checks} FCR checks, {odd_certified} odd-k certificates, "
           f"{odd_full} odd-k case with k >= 2n (full space), {bad} failures")


def test_c12_canonical_answers():
    timings = []
    t0 = time.perf_counter()
    finite = fcr_decide(point_ideal(build("C", 3), (2, 1, 0))).status
    timings.append(time.perf_counter() - t0)
    a1 = build("A", 1)
    t0 = time.perf_counter()
    sl2 = fcr_decide(canonicalize(a1, [(simple_coroot(a1, 1), 2)])).status
    timings.append(time.perf_counter() - t0)
    t0 = time.perf_counter()
    top = fcr_decide(howe.omega_case_B(0, 3, 1)).status
    timings.append(time.perf_counter() - t0)
    ok = (finite, sl2, top) == (FINITE, NOT_FCR, FCR) and max(timings) < 1.0
    record(12, "canonical fcr_decide answers", ok,
           f"point -> {finite}, (H1+2) -> {sl2}, top component -> {top}; slowest {max(timings):.3f}s (limit 1s)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
