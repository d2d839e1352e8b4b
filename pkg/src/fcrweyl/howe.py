"""Highest weights of two Howe dual pairs and the closures of their sets.

Case A is ``(GL_k, gl_n)`` with ``n = p + q``; Case B is ``(O_k, sp_2n)``;
Case C is ``(Sp_2k, so_2n)`` and is only reported on.  The components of the
Zariski closure of each weight set are given by explicit linear ideals; an
independent oracle recomputes them as affine hulls of enumerated weights.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import weyl as W
from .exactlin import AffineSubspace, fmt_rat
from .fcr import FCR, FcrVerdict, fcr_decide, lambda_set
from .ideals import (
    LinearIdeal,
    canonicalize,
    coordinate,
    dot_act,
    integral_root_data,
    is_strongly_dominant,
    simple_coroot,
)
from .oracles import affine_hull
from .rootsys import build

FULL_SPACE = "FullSpace"


class HoweError(ValueError):
    pass


class HoweDivergence(AssertionError):
    """A computed check disagrees with the stated structure."""

    def __init__(self, message: str, payload: Optional[dict] = None):
        super().__init__(message)
        self.payload = payload or {}


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise HoweError(f"not a partition: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero past the length."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(lam: Partition) -> Partition:
    top = lam.part(1)
    return Partition(tuple(sum(1 for x in lam.parts if x >= i) for i in range(1, top + 1)))


def partitions(max_len: int, max_part: int):
    """Partitions with at most ``max_len`` parts, each at most ``max_part``;
    shorter first, then lexicographic."""
    for length in range(max_len + 1):
        if length and max_part < 1:
            break
        for combo in itertools.combinations_with_replacement(range(max_part, 0, -1), length):
            yield Partition(combo)


# ---------------------------------------------------------------------------
# Case A: (GL_k, gl_n)


def weight_g_case_A(alpha: Partition, beta: Partition, p: int, q: int, k: int) -> tuple:
    return tuple(Fraction(-k - alpha.part(p + 1 - j)) for j in range(1, p + 1)) + tuple(
        Fraction(beta.part(j)) for j in range(1, q + 1)
    )


def weight_K_case_A(alpha: Partition, beta: Partition, p: int, k: int) -> tuple:
    out = [0] * k
    for j in range(1, p + 1):
        if j <= k:
            out[j - 1] = alpha.part(j)
    for j in range(1, len(beta) + 1):
        out[k - j] -= beta.part(j)
    return tuple(out)


def enumerate_case_A(p: int, q: int, k: int, bound: int) -> list:
    """``(alpha, beta, weight_g, weight_K)`` for pairs with ``l(alpha) <= p``,
    ``l(beta) <= q``, ``l(alpha) + l(beta) <= k`` and parts at most ``bound``."""
    _check_nonneg(p=p, q=q, bound=bound)
    if k < 1:
        raise HoweError("k must be positive")
    out = []
    for alpha in partitions(min(p, k), bound):
        for beta in partitions(min(q, k - len(alpha)), bound):
            out.append((alpha, beta, weight_g_case_A(alpha, beta, p, q, k), weight_K_case_A(alpha, beta, p, k)))
    return out


def omega_case_A(m: int, k: int, n: int) -> LinearIdeal:
    """``Omega_m`` over ``gl_n``: ``E_1 + k, ..., E_m + k`` and
    ``E_{m+k+1}, ..., E_n``."""
    if not (1 <= k < n and 0 <= m <= n - k):
        raise HoweError(f"need 1 <= k < n and 0 <= m <= n-k (got m={m}, k={k}, n={n})")
    rs = build("GL", n)
    funcs = [(coordinate(rs, j), k) for j in range(1, m + 1)]
    funcs += [(coordinate(rs, j), 0) for j in range(m + k + 1, n + 1)]
    return canonicalize(rs, funcs)


def _phi_rows(p: int, n: int, k: int) -> list:
    if n <= 2 * k:
        rows = [
            (p <= n - k, range(0, p + 1)),
            (n - k <= p <= k, range(0, n - k + 1)),
            (k <= p <= n, range(p - k, n - k + 1)),
        ]
    else:
        rows = [
            (p <= k, range(0, p + 1)),
            (k <= p <= n - k, range(p - k, p + 1)),
            (p >= n - k, range(p - k, n - k + 1)),
        ]
    return [tuple(r) for ok, r in rows if ok]


def phi_set(p: int, q: int, k: int):
    """Index set of the components for Case A, or :data:`FULL_SPACE`.

    Every applicable row of the regime table is evaluated; rows overlapping at
    a boundary must agree, and the result must equal the range
    ``max(0, p-k) .. min(p, n-k)``.
    """
    _check_nonneg(p=p, q=q)
    n = p + q
    if n <= k:
        return FULL_SPACE
    rows = _phi_rows(p, n, k)
    if not rows:
        raise HoweDivergence(f"no regime row applies to p={p}, n={n}, k={k}")
    if any(r != rows[0] for r in rows):
        raise HoweDivergence(f"regime rows disagree for p={p}, n={n}, k={k}", {"rows": [list(r) for r in rows]})
    direct = tuple(range(max(0, p - k), min(p, n - k) + 1))
    if rows[0] != direct:
        raise HoweDivergence(f"regime row differs from the direct range for p={p}, n={n}, k={k}")
    return rows[0]


def regime_case_A(n: int, k: int) -> str:
    if n <= k:
        return "n<=k"
    return "k<n<=2k" if n <= 2 * k else "2k<=n"


@dataclass(frozen=True)
class ClosureReport:
    case: str
    params: dict
    components: tuple  # LinearIdeal, or empty with full_space
    index_set: tuple
    dims: tuple
    oracle_agreement: bool
    full_space: bool = False
    stabilized: bool = True
    strict_agreement: bool = True
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"case": self.case}
        out.update(self.params)
        key = "phi" if self.case == "A" else "index_set"
        out[key] = FULL_SPACE if self.full_space else list(self.index_set)
        out["components"] = [c.to_json()["functionals"] for c in self.components]
        out["varieties"] = [c.describe() for c in self.components]
        out["dims"] = list(self.dims)
        out["oracle_agreement"] = self.oracle_agreement
        out["stabilized"] = self.stabilized
        out["strict_agreement"] = self.strict_agreement
        out.update(self.notes)
        return out


def _maximal(spaces: Sequence[AffineSubspace]) -> set:
    uniq = list(dict.fromkeys(s for s in spaces if s is not None))
    return {s for s in uniq if not any(t != s and t.contains_subspace(s) for t in uniq)}


def _stratum_hulls_case_A(p: int, q: int, k: int, bound: int) -> tuple:
    """Hulls by ``l(alpha) = p - i``; closure convention keeps every allowed
    ``beta``, strict convention keeps only ``l(beta) = k + i - p``."""
    closure, strict = {}, {}
    for alpha, beta, wg, _ in enumerate_case_A(p, q, k, bound):
        i = p - len(alpha)
        closure.setdefault(i, []).append(wg)
        if len(beta) == k + i - p:
            strict.setdefault(i, []).append(wg)
    return (
        {i: affine_hull(pts) for i, pts in closure.items()},
        {i: affine_hull(pts) for i, pts in strict.items()},
    )


def closure_case_A(p: int, q: int, k: int, bound: int = 3) -> ClosureReport:
    n = p + q
    if n < 1:
        raise HoweError("n = p + q must be positive")
    phi = phi_set(p, q, k)
    params = {"p": p, "q": q, "k": k, "n": n, "bound": bound, "regime": regime_case_A(n, k)}
    hulls, strict = _stratum_hulls_case_A(p, q, k, bound)
    hulls_next, _ = _stratum_hulls_case_A(p, q, k, bound + 1)
    stabilized = hulls == hulls_next
    if phi == FULL_SPACE:
        whole = AffineSubspace.whole(n)
        top = _maximal(hulls.values())
        return ClosureReport("A", params, (), (), (n,), top == {whole}, True, stabilized)
    comps = tuple(omega_case_A(m, k, n) for m in phi)
    dims = tuple(c.dim for c in comps)
    if any(d != k for d in dims):
        raise HoweDivergence("a component has dimension different from k", {"dims": list(dims)})
    _check_incomparable(comps)
    agree = _maximal(hulls.values()) == {c.variety for c in comps}
    # strict strata exist exactly for i in phi; each must already span its component
    strict_ok = all(strict.get(m) == c.variety for m, c in zip(phi, comps))
    by_index = all(hulls.get(m) == c.variety for m, c in zip(phi, comps))
    return ClosureReport("A", params, comps, phi, dims, agree and by_index, False, stabilized, strict_ok)


def witness_w_case_A(i: int, n: int, k: int) -> W.WeylElement:
    """The permutation ``w_i`` with ``w_i.Omega_{n-k} = Omega_i``."""
    if not (1 <= k < n and 0 <= i <= n - k):
        raise HoweError(f"need 1 <= k < n and 0 <= i <= n-k (got i={i}, k={k}, n={n})")

    def target(j: int) -> int:
        if j <= i:
            return j
        if j <= n - k:
            return j + k
        return j - n + k + i

    images = tuple(target(j) for j in range(1, n + 1))
    if sorted(images) != list(range(1, n + 1)):
        raise HoweDivergence("w_i is not a permutation")
    return W.WeylElement(images)


@dataclass(frozen=True)
class WitnessCheck:
    w: W.WeylElement
    maps_to_component: bool
    in_coset_reps: bool
    extremes_strongly_dominant: bool

    @property
    def ok(self) -> bool:
        return self.maps_to_component and self.in_coset_reps and self.extremes_strongly_dominant


def check_witness_case_A(i: int, n: int, k: int) -> WitnessCheck:
    rs = build("GL", n)
    w = witness_w_case_A(i, n, k)
    omega = omega_case_A(n - k, k, n)
    bl = integral_root_data(omega).b_lambda
    extremes = is_strongly_dominant(omega_case_A(0, k, n)) and is_strongly_dominant(omega)
    return WitnessCheck(
        w,
        dot_act(w, omega) == omega_case_A(i, k, n),
        W.is_min_coset_rep(rs, bl, w),
        extremes,
    )


def export_case_A_csv(rows: Sequence[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "beta", "weight_g", "weight_K"])
    for alpha, beta, wg, wk in rows:
        writer.writerow([str(alpha), str(beta), " ".join(fmt_rat(x) for x in wg), " ".join(str(x) for x in wk)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Case B: (O_k, sp_2n)


def weight_case_B(mu: Partition, n: int, k: int) -> tuple:
    half = Fraction(k, 2)
    ell = len(mu)
    return tuple(-half for _ in range(n - ell)) + tuple(-half - mu.part(ell + 1 - j) for j in range(1, ell + 1))


def enumerate_case_B(n: int, k: int, bound: int) -> list:
    """``(mu, weight)`` for partitions with ``mu'_1 + mu'_2 <= k``,
    ``mu'_1 <= n`` and parts at most ``bound``."""
    _check_nonneg(bound=bound)
    if n < 1 or k < 1:
        raise HoweError("n and k must be positive")
    out = []
    for mu in partitions(min(n, k), bound):
        c = conjugate(mu)
        if c.part(1) + c.part(2) <= k:
            out.append((mu, weight_case_B(mu, n, k)))
    return out


def _case_B_range(n: int, p: int) -> range:
    return range(0, min(p, n - p) + 1)


def omega_case_B(i: int, n: int, p: int) -> LinearIdeal:
    """``Omega_i`` over ``sp_2n`` (``k = 2p``) with variety
    ``a_1 = ... = a_r = -p`` and ``a_{r+1} = ... = a_s = -p-1`` where
    ``r = n-p-i`` and ``s = n-p+i``."""
    if not (1 <= p < n and 0 <= i <= min(p, n - p)):
        raise HoweError(f"need 1 <= p < n and 0 <= i <= min(p, n-p) (got i={i}, n={n}, p={p})")
    rs = build("C", n)
    r, s = n - p - i, n - p + i
    funcs = [(coordinate(rs, j), p) for j in range(1, r + 1)]
    funcs += [(coordinate(rs, j), p + 1) for j in range(r + 1, s + 1)]
    return canonicalize(rs, funcs)


def omega_case_B_generator_text(i: int, n: int, p: int) -> LinearIdeal:
    """The generators exactly as written: ``H_1..H_{r-1}``, ``H_r + 1``,
    ``H_{r+1}..H_{s-1}``, ``H_s + ... + H_n + p + 1`` (and the ``i = 0``
    form ``H_1..H_{r-1}``, ``H_r + ... + H_n + p``)."""
    rs = build("C", n)
    r, s = n - p - i, n - p + i

    def tail(start: int, c: int):
        h = [Fraction(0)] * n
        for j in range(start, n + 1):
            for a, x in enumerate(simple_coroot(rs, j)):
                h[a] += x
        return tuple(h), c

    funcs = [(simple_coroot(rs, j), 0) for j in range(1, r)]
    if i == 0:
        funcs.append(tail(r, p))
    else:
        if r >= 1:
            funcs.append((simple_coroot(rs, r), 1))
        funcs += [(simple_coroot(rs, j), 0) for j in range(max(r + 1, 1), s)]
        funcs.append(tail(s, p + 1))
    return canonicalize(rs, funcs)


def _stratum_hulls_case_B(n: int, k: int, bound: int) -> tuple:
    """Hulls by ``mu'_1``; closure convention keeps every ``mu'_2``, strict
    convention keeps only the largest allowed ``mu'_2``."""
    closure, strict = {}, {}
    for mu, wt in enumerate_case_B(n, k, bound):
        c = conjugate(mu)
        ell = c.part(1)
        closure.setdefault(ell, []).append(wt)
        if c.part(2) == min(k - ell, ell):
            strict.setdefault(ell, []).append(wt)
    return (
        {e: affine_hull(pts) for e, pts in closure.items()},
        {e: affine_hull(pts) for e, pts in strict.items()},
    )


def closure_case_B(n: int, p: int, bound: int = 3) -> ClosureReport:
    """Components for ``k = 2p``."""
    if n < 1 or p < 0:
        raise HoweError("need n >= 1 and p >= 0")
    k = 2 * p
    params = {"n": n, "p": p, "k": k, "bound": bound}
    hulls, strict = _stratum_hulls_case_B(n, k, bound)
    hulls_next, _ = _stratum_hulls_case_B(n, k, bound + 1)
    stabilized = hulls == hulls_next
    if k >= 2 * n:
        whole = AffineSubspace.whole(n)
        return ClosureReport("B", params, (), (), (n,), _maximal(hulls.values()) == {whole}, True, stabilized)
    idx = tuple(_case_B_range(n, p))
    comps = tuple(omega_case_B(i, n, p) for i in idx)
    dims = tuple(c.dim for c in comps)
    if dims != tuple(p - i for i in idx):
        raise HoweDivergence("component dimensions differ from p - i", {"dims": list(dims)})
    _check_incomparable(comps)
    agree = _maximal(hulls.values()) == {c.variety for c in comps}
    by_index = all(hulls.get(p + i) == c.variety for i, c in zip(idx, comps))
    strict_ok = all(strict.get(p + i) == c.variety for i, c in zip(idx, comps))
    text = [omega_case_B_generator_text(i, n, p) == c for i, c in zip(idx, comps)]
    notes = {
        "generator_text_matches": text,
        "generator_text_varieties": [omega_case_B_generator_text(i, n, p).describe() for i in idx],
    }
    return ClosureReport("B", params, comps, idx, dims, agree and by_index, False, stabilized, strict_ok, notes)


def witness_case_B(n: int, p: int) -> W.WeylElement:
    """``w(a) = b`` with ``b_i = a_{i+p}`` for ``i <= n-p`` and
    ``b_i = a_{i+p-n}`` otherwise, i.e. ``e_j -> e_{j-p}`` for ``j > p`` and
    ``e_j -> e_{j+n-p}`` for ``j <= p``."""
    if not 1 <= p < n:
        raise HoweError("need 1 <= p < n")
    return W.WeylElement(tuple(j - p if j > p else j + n - p for j in range(1, n + 1)))


def base_ideal_case_B(n: int, p: int) -> LinearIdeal:
    """``(H_{p+1}, ..., H_n)``."""
    rs = build("C", n)
    return canonicalize(rs, [(simple_coroot(rs, j), 0) for j in range(p + 1, n + 1)])


@dataclass(frozen=True)
class CaseBFcr:
    verdict: FcrVerdict
    w: W.WeylElement
    maps_to_omega0: bool
    in_coset_reps: bool
    base_strongly_dominant: bool

    @property
    def ok(self) -> bool:
        return self.maps_to_omega0 and self.in_coset_reps and self.base_strongly_dominant and self.verdict.status == FCR

    def to_json(self) -> dict:
        rs = build("C", len(self.w.images))
        return {
            "w": W.format_word(W.reduced_word(rs, self.w)),
            "maps_to_omega0": self.maps_to_omega0,
            "in_coset_reps": self.in_coset_reps,
            "base_strongly_dominant": self.base_strongly_dominant,
            "verdict": self.verdict.to_json(rs),
        }


def case_B_fcr(n: int, p: int) -> CaseBFcr:
    rs = build("C", n)
    omega = base_ideal_case_B(n, p)
    w = witness_case_B(n, p)
    omega0 = omega_case_B(0, n, p)
    bl = integral_root_data(omega).b_lambda
    return CaseBFcr(
        fcr_decide(omega0),
        w,
        dot_act(w, omega) == omega0,
        W.is_min_coset_rep(rs, bl, w),
        is_strongly_dominant(omega),
    )


@dataclass(frozen=True)
class OddKReport:
    n: int
    k: int
    bound: int
    applicable: bool
    empty: bool
    components: tuple
    certificates: tuple  # per component: (coordinate index, constant value) or None

    @property
    def certified(self) -> bool:
        return self.applicable and self.empty and all(c is not None for c in self.certificates)

    def to_json(self) -> dict:
        return {
            "case": "B",
            "n": self.n,
            "k": self.k,
            "bound": self.bound,
            "applicable": self.applicable,
            "empty": self.empty,
            "components": [LinearIdeal(build("C", self.n), c).describe() for c in self.components],
            "certificates": [
                None if c is None else {"coordinate": c[0], "value": fmt_rat(c[1])} for c in self.certificates
            ],
        }


def _half_integral_coordinate(v: AffineSubspace) -> Optional[tuple]:
    for j in range(v.ambient_dim):
        if all(d[j] == 0 for d in v.directions) and v.base[j].denominator == 2:
            return j + 1, v.base[j]
    return None


def odd_k_case_B(n: int, k: int, bound: int = 3) -> OddKReport:
    """For odd ``k < 2n`` no Weyl translate of any component meets ``P^+``.

    A certificate for a component is a coordinate (the coroot functional of
    a long root) that is a constant half-integer on it; signed permutations
    and the integral shift by ``rho`` keep some coordinate constantly
    half-integral on every translate, so no translate holds an integral
    weight.  Each translate is checked explicitly, and ``lambda_set`` is
    computed for each component as a direct confirmation.  For ``k >= 2n``
    the closure is all of ``h*`` and the statement does not apply.
    """
    if k % 2 == 0:
        raise HoweError("k must be odd")
    rs = build("C", n)
    hulls, _ = _stratum_hulls_case_B(n, k, bound)
    comps = tuple(sorted(_maximal(hulls.values()), key=lambda s: (-s.dim, s.base)))
    if k >= 2 * n:
        return OddKReport(n, k, bound, False, False, comps, tuple(None for _ in comps))
    certs = []
    group = W.enumerate_group(rs)
    rho = rs.rho
    for v in comps:
        cert = _half_integral_coordinate(v)
        if cert is not None:
            for w in group:
                shift = tuple(a - b for a, b in zip(w.apply(rho), rho))
                if _half_integral_coordinate(v.map_affine(w.apply, shift)) is None:
                    cert = None
                    break
        certs.append(cert)
    empty = all(not lambda_set(LinearIdeal(rs, v), bound, group) for v in comps)
    return OddKReport(n, k, bound, True, empty, comps, tuple(certs))


# ---------------------------------------------------------------------------
# kernel and Case C reports


def kernel_report(case: str, n: int, k: int) -> dict:
    """Whether the kernel vanishes (rank of ``g`` at most the rank of
    ``K``) and, for Case B with even ``k``, the component carrying the kernel.

    Ranks: ``gl_n`` / ``GL_k`` give ``n <= k``; ``sp_2n`` / ``O_k`` give
    ``n <= floor(k/2)``, i.e. ``2n <= k``; ``so_2n`` / ``Sp_2k`` give
    ``n <= k``.
    """
    case = case.upper()
    if case not in ("A", "B", "C"):
        raise HoweError("case must be A, B or C")
    out = {"case": case, "n": n, "k": k}
    if case == "A":
        out["rank_g"], out["rank_K"] = n, k
    elif case == "B":
        out["rank_g"], out["rank_K"] = n, k // 2
    else:
        out["rank_g"], out["rank_K"] = n, k
    out["kernel_zero"] = out["rank_g"] <= out["rank_K"]
    if case == "B" and not out["kernel_zero"]:
        if k % 2:
            out["kernel_component"] = None
            out["note"] = "odd k: no finite-dimensional modules"
        else:
            p = k // 2
            idx = list(_case_B_range(n, p))
            dims = [omega_case_B(i, n, p).dim for i in idx]
            top = max(dims)
            if dims.count(top) != 1 or dims.index(top) != 0:
                raise HoweDivergence("the largest component is not unique or not Omega_0", {"dims": dims})
            out["kernel_component"] = 0
            out["component_dims"] = dims
            out["kernel_ideal"] = omega_case_B(0, n, p).to_json()
    return out


def case_C_report(n: int, k: int) -> dict:
    if n < 1 or k < 1:
        raise HoweError("n and k must be positive")
    return {
        "case": "C",
        "n": n,
        "k": k,
        "irreducible": True,
        "full_space": n <= k,
        "fcr": True,
        "source": "taken as given: the closure is irreducible and the algebra has enough finite-dimensional modules",
        "kernel": kernel_report("C", n, k),
    }


# ---------------------------------------------------------------------------
# helpers


def _check_nonneg(**kw) -> None:
    for name, v in kw.items():
        if v < 0:
            raise HoweError(f"{name} must be nonnegative")


def _check_incomparable(comps: Sequence[LinearIdeal]) -> None:
    for a, b in itertools.permutations(comps, 2):
        if a.variety.contains_subspace(b.variety):
            raise HoweDivergence("two components are comparable")
