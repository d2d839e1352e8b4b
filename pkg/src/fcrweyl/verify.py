"""Exhaustive and seeded verification suites.

Each suite returns a JSON-ready report: one entry per checked statement with
its name, the identity being tested, pass/fail counts and the first
counterexample.  Failures are data; nothing here raises on a mismatch.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import howe
from . import weyl as W
from .exactlin import fmt_rat
from .fcr import WitnessDivergence, fcr_decide, lambda_set, annihilator_contains
from .ideals import (
    corpus,
    dot_act,
    dot_functional,
    integral_root_data,
    is_dominant,
    is_strongly_dominant,
    tau_invariant,
)
from .oracles import density_oracle
from .rootsys import KINDS, RootSystem, build

SUITES = ("section2", "section3", "section4", "howe-a", "howe-b", "ideals-fuzz")


class VerifyError(ValueError):
    pass


@dataclass
class Statement:
    name: str
    formula: str
    checked: int = 0
    failures: int = 0
    skipped: int = 0
    counterexample: Optional[dict] = None

    def record(self, ok: bool, example: Callable[[], dict]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = example()

    def to_json(self) -> dict:
        out = {"name": self.name, "formula": self.formula, "checked": self.checked, "failures": self.failures}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _report(suite: str, swept: int, statements: Iterable[Statement], params: dict) -> dict:
    statements = list(statements)
    return {
        "suite": suite,
        "params": params,
        "checked": swept,
        "failures": sum(s.failures for s in statements),
        "statements": [s.to_json() for s in statements],
    }


def _word(rs: RootSystem, w: W.WeylElement) -> str:
    return W.format_word(W.reduced_word(rs, w))


def _roots(roots) -> list:
    return [[fmt_rat(x) for x in a] for a in roots]


# ---------------------------------------------------------------------------
# system selection


def system_for(kind: str, rank: int) -> RootSystem:
    """Semisimple rank ``rank``; ``GL`` of rank ``r`` is ``GL(r+1)``."""
    if kind not in KINDS:
        raise VerifyError(f"unknown type {kind!r}")
    if rank < 1:
        raise VerifyError("rank must be positive")
    return build(kind, rank + 1 if kind == "GL" else rank)


def select_systems(kinds: Iterable[str], max_rank: int, kind: Optional[str] = None, rank: Optional[int] = None) -> list:
    kinds = [kind] if kind else list(kinds)
    ranks = [rank] if rank else list(range(1, max_rank + 1))
    out = []
    for k in kinds:
        for r in ranks:
            if k == "D" and r < 2:
                continue
            out.append(system_for(k, r))
    return out


# ---------------------------------------------------------------------------
# Weyl group combinatorics


def suite_section2(kind: Optional[str] = None, rank: Optional[int] = None, max_rank: int = 4) -> dict:
    systems = select_systems(("A", "B", "C", "D"), max_rank, kind, rank)
    rho_id = Statement("inversion-sum identity", "rho - w^-1(rho) = sum of Q(w)")
    words = Statement("reduced words", "word(w) evaluates to w and has length |Q(w)|")
    dichotomy = Statement(
        "stabilizer pairing dichotomy",
        "w(R1) = R1 implies (rho', <Q(w)>) >= 0, with equality iff w(B1) = B1",
    )
    equiv = Statement(
        "simple-root stabilizer equivalences",
        "w(B1) = B1 iff w(B1) in R1+ iff l(w s_a) > l(w) for all a in B1 (for w(R1) = R1)",
    )
    rho_sub = Statement("subsystem inversion-sum identity", "rho' - w^-1(rho') = sum of T(w)")
    w1_pos = Statement("positivity on W1", "w in W1, w != 1 implies T(w) = Q(w) and (rho', <Q(w)>) > 0")
    factor = Statement(
        "stabilizer factorization",
        "W0 = W1 x T uniquely, with l(w1 t) = l(w1) + l(t) and |W0| = |W1| |T|",
    )
    kappa = Statement(
        "longest-element involution on Q(t)",
        "v0 permutes Q(t), swaps its rho'-positive and rho'-negative parts, and (rho', <Q(t)>) = 0",
    )
    swept = 0
    for rs in systems:
        group = W.enumerate_group(rs)
        swept += len(group)
        for w in group:
            q = W.inversion_list(rs, w)
            lhs = tuple(a - b for a, b in zip(rs.rho, w.inverse().apply(rs.rho)))
            rhs = W.root_sum(q, rs.ambient_dim)
            rho_id.record(lhs == rhs, lambda: {"system": rs.label, "w": list(w.images)})
            word = W.reduced_word(rs, w)
            words.record(
                W.from_word(rs, word) == w and len(word) == len(q),
                lambda: {"system": rs.label, "w": list(w.images), "word": W.format_word(word)},
            )
        for size in range(rs.rank + 1):
            for b1 in itertools.combinations(rs.simple_roots, size):
                _check_subsystem(rs, group, rs.subsystem(b1), dichotomy, equiv, rho_sub, w1_pos, factor, kappa)
    params = {"types": sorted({rs.kind for rs in systems}), "systems": [rs.label for rs in systems]}
    return _report("section2", swept, [rho_id, words, dichotomy, equiv, rho_sub, w1_pos, factor, kappa], params)


def _check_subsystem(rs, group, sub, dichotomy, equiv, rho_sub, w1_pos, factor, kappa) -> None:
    def where(w=None):
        out = {"system": rs.label, "B1": _roots(sub.simple)}
        if w is not None:
            out["w"] = list(w.images)
        return out

    pos1 = set(sub.positive)
    simple_refl = [W.reflection(rs, a) for a in sub.simple]
    w1_set = set(W.subsystem_group(rs, sub))
    for w in group:
        if not W.stabilizes(w, sub):
            continue
        fixes = W.fixes_simple(w, sub)
        pairing = W.inversion_sum_pairing(rs, sub, w)
        dichotomy.record(pairing >= 0 and ((pairing == 0) == fixes), lambda: {**where(w), "pairing": fmt_rat(pairing)})
        into_pos = all(W.apply(w, a) in pos1 for a in sub.simple)
        lw = W.length(rs, w)
        ascents = all(W.length(rs, w * s) > lw for s in simple_refl)
        equiv.record(fixes == into_pos == ascents, lambda: where(w))
        try:
            t = W.subsystem_inversions(rs, sub, w)
            ok = True
        except AssertionError:
            t, ok = frozenset(), False
        rho_sub.record(ok, lambda: where(w))
        if w in w1_set and not w.is_identity:
            w1_pos.record(t == W.inversion_set(rs, w) and pairing > 0, lambda: where(w))
    try:
        dec = W.stabilizer_decomposition(rs, sub, group)
        ok = len(dec.w0) == len(dec.w1) * len(dec.t)
        bad = None
        for w, (u, t) in dec.factorization.items():
            if W.length(rs, w) != W.length(rs, u) + W.length(rs, t):
                ok, bad = False, w
                break
        factor.record(ok, lambda: where(bad))
    except AssertionError:
        factor.record(False, where)
        return
    v = W.longest_element(rs, sub)
    for t in dec.t:
        rep = W.kappa_check(rs, sub, t, v)
        kappa.record(rep.ok, lambda: {**where(t), "pairing": fmt_rat(rep.pairing)})


# ---------------------------------------------------------------------------
# ideals: dot action, duality, density, dominance


def fuzz_systems(max_rank: int = 3, kind: Optional[str] = None, rank: Optional[int] = None) -> list:
    return select_systems(("A", "B", "C", "D", "GL"), max_rank, kind, rank)


def check_duality(rs: RootSystem, count: int, seed: int, stmt: Statement) -> None:
    """``(w.h)(mu) = h(w^-1.mu)`` on random triples; the functional ``h + c``
    is evaluated as ``h(mu) + c``."""
    rng = random.Random(f"duality:{seed}:{rs.label}")
    group = W.enumerate_group(rs)
    dim = rs.ambient_dim
    for _ in range(count):
        w = group[rng.randrange(len(group))]
        h = tuple(rng.randint(-3, 3) for _ in range(dim))
        c = rng.randint(-3, 3)
        mu = tuple(rng.randint(-4, 4) for _ in range(dim))
        h2, c2 = dot_functional(rs, w, h, c)
        lhs = sum(a * b for a, b in zip(h2, mu)) + c2
        nu = W.dot_apply(rs, w.inverse(), mu)
        rhs = sum(a * b for a, b in zip(h, nu)) + c
        stmt.record(lhs == rhs, lambda: {"system": rs.label, "w": list(w.images), "h": list(h), "c": c, "mu": list(mu)})


def suite_ideals_fuzz(count: int = 500, seed: int = 0, kind: Optional[str] = None, rank: Optional[int] = None, max_rank: int = 3, duality_count: int = 1000) -> dict:
    systems = fuzz_systems(max_rank, kind, rank)
    duality = Statement("dot-action duality", "(w.h)(mu) = h(w^-1.mu)")
    action = Statement("dot action is a group action on ideals", "(uv).Omega = u.(v.Omega) and 1.Omega = Omega")
    oracle = Statement(
        "density decision matches enumeration",
        "strongly dominant iff enumerated dominant integral points span the variety (stabilized instances)",
    )
    implication = Statement("strongly dominant ideals are dominant", "Omega strongly dominant implies Omega dominant")
    swept = 0
    for rs in systems:
        check_duality(rs, duality_count, seed, duality)
        group = W.enumerate_group(rs)
        rng = random.Random(f"action:{seed}:{rs.label}")
        for omega in corpus(rs, count, seed):
            swept += 1
            u = group[rng.randrange(len(group))]
            v = group[rng.randrange(len(group))]
            lhs = dot_act(u * v, omega)
            rhs = dot_act(u, dot_act(v, omega))
            action.record(
                lhs == rhs and dot_act(W.identity(rs), omega) == omega,
                lambda: {"ideal": omega.to_json(), "u": list(u.images), "v": list(v.images)},
            )
            decided = is_strongly_dominant(omega)
            verdict, stable = density_oracle(rs, omega.variety)
            if stable:
                oracle.record(decided == verdict, lambda: {"ideal": omega.to_json(), "decided": decided, "oracle": verdict})
            else:
                oracle.skipped += 1
            if decided:
                implication.record(is_dominant(omega), lambda: {"ideal": omega.to_json()})
    params = {"systems": [rs.label for rs in systems], "count": count, "seed": seed}
    return _report("ideals-fuzz", swept, [duality, action, oracle, implication], params)


def suite_section3(count: int = 200, seed: int = 0, kind: Optional[str] = None, rank: Optional[int] = None, max_rank: int = 3) -> dict:
    systems = fuzz_systems(max_rank, kind, rank)
    implication = Statement("strongly dominant ideals are dominant", "Omega strongly dominant implies Omega dominant")
    tau = Statement(
        "tau-invariant extremes",
        "tau(1) is empty and tau(longest element of W_lambda) = B_lambda",
    )
    swept = 0
    for rs in systems:
        for omega in corpus(rs, count, seed):
            swept += 1
            if is_strongly_dominant(omega):
                implication.record(is_dominant(omega), lambda: {"ideal": omega.to_json()})
            bl = integral_root_data(omega).b_lambda
            sub = rs.subsystem(bl)
            top = W.longest_element(rs, sub)
            ok = not tau_invariant(rs, bl, W.identity(rs)) and tau_invariant(rs, bl, top) == frozenset(bl)
            tau.record(ok, lambda: {"ideal": omega.to_json()})
    params = {"systems": [rs.label for rs in systems], "count": count, "seed": seed}
    return _report("section3", swept, [implication, tau], params)


# ---------------------------------------------------------------------------
# FCR classification


def suite_section4(count: int = 200, seed: int = 0, kind: Optional[str] = None, rank: Optional[int] = None, max_rank: int = 3, lambda_bound: int = 2) -> dict:
    systems = fuzz_systems(max_rank, kind, rank)
    simple_in_base = Statement("integral simple roots are simple", "Omega strongly dominant implies B_lambda in B")
    stabilizer = Statement("stabilizers preserve B_lambda", "Omega strongly dominant and w.Omega = Omega imply w(B_lambda) = B_lambda")
    translates = Statement(
        "strongly dominant translates",
        "Omega and w.Omega strongly dominant imply w in W^lambda",
    )
    transport = Statement(
        "coset representatives compose",
        "v in W^lambda, Omega1 = v.Omega: B_lambda1 = v(B_lambda) and u in W^lambda1 implies uv in W^lambda",
    )
    witness = Statement("witness consistency", "all strongly dominant bases of Omega' agree on coset membership")
    monotone = Statement(
        "weights on the variety lie above it",
        "mu in V(Omega) dominant integral implies mu in the bounded annihilator set",
    )
    swept = 0
    for rs in systems:
        group = W.enumerate_group(rs)
        bset = set(rs.simple_roots)
        for omega in corpus(rs, count, seed):
            swept += 1
            where = {"system": rs.label, "ideal": omega.to_json()}
            try:
                fcr_decide(omega, group)
                witness.record(True, dict)
            except WitnessDivergence as exc:
                witness.record(False, lambda: {**where, **exc.payload})
            mu = omega.variety.base
            if omega.dim == 0 and rs.is_dominant_integral(mu) and max(rs.simple_pairings(mu)) <= lambda_bound:
                pieces = lambda_set(omega, lambda_bound, group)
                ok = any(p.contains(mu) for p in pieces) and annihilator_contains(omega, mu, group)
                monotone.record(ok, lambda: where)
            if not is_strongly_dominant(omega):
                continue
            data = integral_root_data(omega)
            bl = data.b_lambda
            blset = frozenset(bl)
            simple_in_base.record(blset <= bset, lambda: where)
            reps = []
            for w in group:
                moved = dot_act(w, omega)
                if moved == omega:
                    stabilizer.record(W.image_set(w, bl) == blset, lambda: {**where, "w": list(w.images)})
                in_reps = W.is_min_coset_rep(rs, bl, w)
                if in_reps:
                    reps.append((w, moved))
                if is_strongly_dominant(moved):
                    translates.record(in_reps, lambda: {**where, "w": _word(rs, w)})
            for v, moved in reps:
                bl1 = integral_root_data(moved).b_lambda
                ok = frozenset(bl1) == W.image_set(v, bl)
                if ok:
                    ok = all(W.is_min_coset_rep(rs, bl, u * v) for u in group if W.is_min_coset_rep(rs, bl1, u))
                transport.record(ok, lambda: {**where, "v": _word(rs, v)})
    params = {"systems": [rs.label for rs in systems], "count": count, "seed": seed}
    return _report("section4", swept, [simple_in_base, stabilizer, translates, transport, witness, monotone], params)


# ---------------------------------------------------------------------------
# dual pair decompositions


def suite_howe_a(max_n: int = 6, max_k: int = 6, bound: int = 3) -> dict:
    closure = Statement(
        "closure components (GL_k, gl_n)",
        "closure of the weights = union of V(Omega_m), m in Phi, with hulls agreeing with enumeration",
    )
    stable = Statement("closure stabilizes", "components at radius bound and bound+1 coincide")
    strict = Statement("strict strata convention", "hulls of the exact-length strata give the same components")
    dims = Statement("component dimension", "dim V(Omega_m) = k")
    witnesses = Statement(
        "component witnesses",
        "w_i.Omega_{n-k} = Omega_i, w_i in W^lambda, Omega_0 and Omega_{n-k} strongly dominant",
    )
    swept = 0
    for n in range(1, max_n + 1):
        for p in range(0, n + 1):
            q = n - p
            for k in range(1, max_k + 1):
                swept += 1
                rep = howe.closure_case_A(p, q, k, bound)
                where = {"p": p, "q": q, "k": k}
                closure.record(rep.oracle_agreement, lambda: where)
                stable.record(rep.stabilized, lambda: where)
                strict.record(rep.strict_agreement, lambda: where)
                if not rep.full_space:
                    dims.record(all(d == k for d in rep.dims), lambda: {**where, "dims": list(rep.dims)})
        for k in range(1, n):
            for i in range(0, n - k + 1):
                chk = howe.check_witness_case_A(i, n, k)
                witnesses.record(chk.ok, lambda: {"n": n, "k": k, "i": i})
    params = {"max_n": max_n, "max_k": max_k, "bound": bound}
    return _report("howe-a", swept, [closure, stable, strict, dims, witnesses], params)


def suite_howe_b(max_n: int = 5, max_p: int = 2, bound: int = 3, odd_max_n: int = 3, odd_ks: tuple = (1, 3)) -> dict:
    closure = Statement(
        "closure components (O_k, sp_2n), k = 2p",
        "closure of the weights = union of V(Omega_i), 0 <= i <= min(p, n-p)",
    )
    stable = Statement("closure stabilizes", "components at radius bound and bound+1 coincide")
    strict = Statement("strict strata convention", "hulls of the exact-length strata give the same components")
    dims = Statement("component dimension", "dim V(Omega_i) = p - i")
    fcr = Statement(
        "top component is FCR",
        "w.Omega = Omega_0 for Omega = (H_{p+1}, ..., H_n), w in W^lambda, Omega strongly dominant, verdict FCR",
    )
    odd = Statement("odd k has no finite-dimensional modules", "k odd, k < 2n: no Weyl translate of a component meets P+")
    kernel = Statement("kernel component", "k = 2p < 2n: Omega_0 is the unique component of largest dimension")
    swept = 0
    for n in range(1, max_n + 1):
        for p in range(1, max_p + 1):
            swept += 1
            where = {"n": n, "p": p}
            rep = howe.closure_case_B(n, p, bound)
            closure.record(rep.oracle_agreement, lambda: where)
            stable.record(rep.stabilized, lambda: where)
            strict.record(rep.strict_agreement, lambda: where)
            if p < n:
                idx = list(range(0, min(p, n - p) + 1))
                dims.record(list(rep.dims) == [p - i for i in idx], lambda: {**where, "dims": list(rep.dims)})
                res = howe.case_B_fcr(n, p)
                fcr.record(res.ok, lambda: {**where, **res.to_json()})
                try:
                    kr = howe.kernel_report("B", n, 2 * p)
                    kernel.record(kr.get("kernel_component") == 0, lambda: where)
                except howe.HoweDivergence as exc:
                    kernel.record(False, lambda: {**where, **(exc.payload or {})})
    for n in range(1, odd_max_n + 1):
        for k in odd_ks:
            if k >= 2 * n:
                continue
            rep = howe.odd_k_case_B(n, k, bound)
            odd.record(rep.certified, lambda: rep.to_json())
    params = {"max_n": max_n, "max_p": max_p, "bound": bound, "odd_k": list(odd_ks), "odd_max_n": odd_max_n}
    return _report("howe-b", swept, [closure, stable, strict, dims, fcr, odd, kernel], params)


# ---------------------------------------------------------------------------


def run_suite(name: str, kind: Optional[str] = None, rank: Optional[int] = None, seed: int = 0, count: Optional[int] = None) -> dict:
    if name == "all":
        reports = [run_suite(s, kind, rank, seed, count) for s in SUITES]
        return {
            "suite": "all",
            "checked": sum(r["checked"] for r in reports),
            "failures": sum(r["failures"] for r in reports),
            "suites": reports,
        }
    if name == "section2":
        return suite_section2(kind, rank)
    if name == "section3":
        return suite_section3(count or 200, seed, kind, rank)
    if name == "section4":
        return suite_section4(count or 200, seed, kind, rank)
    if name == "ideals-fuzz":
        return suite_ideals_fuzz(count or 500, seed, kind, rank)
    if name == "howe-a":
        return suite_howe_a()
    if name == "howe-b":
        return suite_howe_b()
    raise VerifyError(f"unknown suite {name!r}")


__all__ = [
    "SUITES",
    "Statement",
    "VerifyError",
    "check_duality",
    "fuzz_systems",
    "run_suite",
    "select_systems",
    "suite_howe_a",
    "suite_howe_b",
    "suite_ideals_fuzz",
    "suite_section2",
    "suite_section3",
    "suite_section4",
    "system_for",
]
