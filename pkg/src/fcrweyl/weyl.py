"""Weyl group elements of classical root systems.

Every element is an exact orthogonal map that permutes the coordinate axes up
to sign, so it is stored as a signed permutation (see :mod:`._kernels`).
Words in the simple reflections are derived data.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import _kernels as K
from .exactlin import dot, vec
from .rootsys import RootSystem, Subsystem, reflection_images

DEFAULT_CAP = 10**7


class WeylError(ValueError):
    pass


def group_cap() -> int:
    return int(os.environ.get("WEYL_GROUP_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class WeylElement:
    images: tuple
    word: Optional[tuple] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return len(self.images)

    @property
    def matrix(self) -> tuple:
        n = self.dim
        m = [[0] * n for _ in range(n)]
        for i, x in enumerate(self.images):
            m[abs(x) - 1][i] = 1 if x > 0 else -1
        return tuple(tuple(r) for r in m)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(K.compose(self.images, other.images))

    def inverse(self) -> "WeylElement":
        return WeylElement(K.invert(self.images))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.dim:
            raise WeylError("dimension mismatch")
        return K.act(self.images, tuple(v))

    __call__ = apply

    @property
    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(K.identity(rs.ambient_dim), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """``s_i`` for the 1-based simple index ``i``."""
    if not 1 <= i <= rs.rank:
        raise WeylError(f"simple index {i} out of range 1..{rs.rank}")
    return WeylElement(reflection_images(rs.simple_roots[i - 1]), (i,))


def reflection(rs: RootSystem, alpha: Sequence) -> WeylElement:
    return WeylElement(reflection_images(rs.check_root(alpha)))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    word = tuple(word)
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return WeylElement(w.images, word if len(word) == length(rs, w) else None)


def parse_word(text: str) -> tuple:
    """``"s1 s3 s2"`` (or ``"1 3 2"``) to ``(1, 3, 2)``; empty, ``e`` or
    ``id`` mean the identity."""
    out = []
    for tok in text.replace(",", " ").split():
        tok = tok.lower()
        if tok in ("e", "id"):
            continue
        digits = tok[1:] if tok.startswith("s") else tok
        if not digits.isdigit() or int(digits) < 1:
            raise WeylError(f"bad generator {tok!r} in word")
        out.append(int(digits))
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=64)
def _enumerate_cached(rs: RootSystem, cap: int) -> tuple:
    order = rs.group_order()
    if order > cap:
        raise WeylError(f"|W({rs.label})| = {order} exceeds the enumeration cap {cap}")
    gens = list(rs.simple_reflection_images())
    if not gens:
        return (identity(rs),)
    elems, words = K.enumerate_bfs(gens, cap)
    return tuple(WeylElement(e, w) for e, w in zip(elems, words))


def enumerate_group(rs: RootSystem, cap: Optional[int] = None) -> tuple:
    """Every element once, breadth-first by length with simple indices
    ascending; the identity comes first and each element carries a reduced
    word."""
    return _enumerate_cached(rs, group_cap() if cap is None else cap)


def subgroup(rs: RootSystem, generators: Iterable[Sequence]) -> tuple:
    """Elements of the reflection subgroup generated by ``s_beta``."""
    gens = [reflection_images(rs.check_root(b)) for b in generators]
    if not gens:
        return (identity(rs),)
    elems, _ = K.enumerate_bfs(gens, group_cap())
    return tuple(WeylElement(e) for e in elems)


# ---------------------------------------------------------------------------
# actions and inversion sets


def apply(w: WeylElement, mu: Sequence) -> tuple:
    return w.apply(vec(mu))


def dot_apply(rs: RootSystem, w: WeylElement, xi: Sequence) -> tuple:
    """``w.xi = w(xi + rho) - rho``."""
    xi = vec(xi)
    shifted = tuple(a + r for a, r in zip(xi, rs.rho))
    return tuple(a - r for a, r in zip(w.apply(shifted), rs.rho))


def is_negative_root(rs: RootSystem, v: Sequence) -> bool:
    return rs.is_positive_root(tuple(-x for x in v))


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset:
    """``Q(w) = {alpha > 0 : w(alpha) < 0}``."""
    idx = K.negative_indices(w.images, rs.positive_roots)
    return frozenset(rs.positive_roots[k] for k in idx)


def inversion_list(rs: RootSystem, w: WeylElement) -> tuple:
    idx = K.negative_indices(w.images, rs.positive_roots)
    return tuple(rs.positive_roots[k] for k in idx)


def length(rs: RootSystem, w: WeylElement) -> int:
    return K.count_negative(w.images, rs.positive_roots)


def root_sum(roots: Iterable[Sequence], dim: int) -> tuple:
    total = [Fraction(0)] * dim
    for a in roots:
        for j, x in enumerate(a):
            if x:
                total[j] += x
    return tuple(total)


def rho_difference(rs: RootSystem, w: WeylElement) -> tuple:
    """Sum of the inversion set; checked against ``rho - w^{-1} rho``."""
    s = root_sum(inversion_list(rs, w), rs.ambient_dim)
    winv_rho = w.inverse().apply(rs.rho)
    expected = tuple(a - b for a, b in zip(rs.rho, winv_rho))
    if s != expected:
        raise AssertionError(f"rho-difference identity fails for {w.images}")
    return s


def reduced_word(rs: RootSystem, w: WeylElement) -> tuple:
    """Right-descent recursion: peel off the smallest ``i`` with
    ``w(alpha_i) < 0``."""
    word = []
    cur = w
    while True:
        for i, a in enumerate(rs.simple_roots, start=1):
            if is_negative_root(rs, cur.apply(a)):
                word.append(i)
                cur = cur * simple_reflection(rs, i)
                break
        else:
            break
    if not cur.is_identity:
        raise AssertionError("descent recursion did not terminate at the identity")
    return tuple(reversed(word))


def image_set(w: WeylElement, roots: Iterable[Sequence]) -> frozenset:
    return frozenset(K.act(w.images, tuple(a)) for a in roots)


# ---------------------------------------------------------------------------
# subsystem stabilizers


def stabilizes(w: WeylElement, sub: Subsystem) -> bool:
    """``w(R_1) = R_1``."""
    return all(K.act(w.images, a) in sub.roots for a in sub.simple)


def fixes_simple(w: WeylElement, sub: Subsystem) -> bool:
    """``w(B_1) = B_1``."""
    return image_set(w, sub.simple) == frozenset(sub.simple)


def _require_stabilizer(w: WeylElement, sub: Subsystem) -> None:
    if not stabilizes(w, sub):
        raise WeylError("element does not stabilize the subsystem")


def subsystem_inversions(rs: RootSystem, sub: Subsystem, w: WeylElement) -> frozenset:
    """``T(w) = {alpha in R_1^+ : w(alpha) in -R_1^+}``; checks
    ``rho' - w^{-1} rho' = sum T(w)``."""
    _require_stabilizer(w, sub)
    pos = set(sub.positive)
    t = frozenset(a for a in sub.positive if tuple(-x for x in K.act(w.images, a)) in pos)
    lhs = tuple(a - b for a, b in zip(sub.rho_prime, w.inverse().apply(sub.rho_prime)))
    if lhs != root_sum(t, rs.ambient_dim):
        raise AssertionError("rho-prime identity fails")
    return t


def inversion_sum_pairing(rs: RootSystem, sub: Subsystem, w: WeylElement) -> Fraction:
    """``(rho', <Q(w)>)`` for ``w`` stabilizing ``R_1``."""
    _require_stabilizer(w, sub)
    return dot(sub.rho_prime, root_sum(inversion_list(rs, w), rs.ambient_dim))


def subsystem_group(rs: RootSystem, sub: Subsystem) -> tuple:
    return subgroup(rs, sub.simple)


def longest_element(rs: RootSystem, sub: Optional[Subsystem] = None) -> WeylElement:
    """The element of ``W_1`` sending ``R_1^+`` to ``-R_1^+``."""
    if sub is None:
        sub = rs.full_subsystem()
    target = frozenset(tuple(-x for x in a) for a in sub.positive)
    for w in subsystem_group(rs, sub):
        if image_set(w, sub.positive) == target:
            return w
    raise AssertionError("no longest element found")


@dataclass(frozen=True)
class StabilizerDecomposition:
    w0: tuple
    w1: tuple
    t: tuple
    factorization: dict  # w -> (w1, t)


def stabilizer_decomposition(rs: RootSystem, sub: Subsystem, group: Optional[Sequence] = None) -> StabilizerDecomposition:
    """``W_0 = {w : w(R_1) = R_1}``, ``T = {w : w(B_1) = B_1}`` and the
    factorization ``w = w_1 t`` with ``w_1`` in ``W_1``."""
    group = enumerate_group(rs) if group is None else group
    w0 = tuple(w for w in group if stabilizes(w, sub))
    t = tuple(w for w in w0 if fixes_simple(w, sub))
    w1 = subsystem_group(rs, sub)
    tset = {x.images: x for x in t}
    fact = {}
    for w in w0:
        found = []
        for u in w1:
            rest = u.inverse() * w
            if rest.images in tset:
                found.append((u, tset[rest.images]))
        if len(found) != 1:
            raise AssertionError(f"factorization of {w.images} is not unique ({len(found)} found)")
        fact[w] = found[0]
    return StabilizerDecomposition(w0, w1, t, fact)


@dataclass(frozen=True)
class KappaReport:
    permutes: bool
    swaps_signs: bool
    pairing: Fraction
    q_plus: frozenset
    q_minus: frozenset

    @property
    def ok(self) -> bool:
        return self.permutes and self.swaps_signs and self.pairing == 0


def kappa_check(rs: RootSystem, sub: Subsystem, t: WeylElement, v: Optional[WeylElement] = None) -> KappaReport:
    """For ``t`` with ``t(B_1) = B_1``: ``alpha -> v alpha`` (``v`` longest in
    ``W_1``) permutes ``Q(t)``, swaps the positive and negative parts with
    respect to ``rho'``, and ``(rho', <Q(t)>) = 0``."""
    if not fixes_simple(t, sub):
        raise WeylError("t does not fix the simple roots of the subsystem")
    v = longest_element(rs, sub) if v is None else v
    q = inversion_set(rs, t)
    img = image_set(v, q)
    q_plus = frozenset(a for a in q if dot(sub.rho_prime, a) > 0)
    q_minus = frozenset(a for a in q if dot(sub.rho_prime, a) < 0)
    swaps = image_set(v, q_plus) == q_minus and image_set(v, q_minus) == q_plus
    pairing = dot(sub.rho_prime, root_sum(q, rs.ambient_dim))
    return KappaReport(img == q, swaps, pairing, q_plus, q_minus)


# ---------------------------------------------------------------------------
# parabolic-style cosets


def is_min_coset_rep(rs: RootSystem, b_lambda: Iterable[Sequence], w: WeylElement) -> bool:
    """``w(B_lambda)`` is contained in ``R^+``."""
    return all(rs.is_positive_root(K.act(w.images, tuple(a))) for a in b_lambda)


def coset_decompose(rs: RootSystem, b_lambda: Sequence[Sequence], w: WeylElement) -> tuple:
    """``w = u v`` with ``u(B_lambda) > 0`` and ``v`` in the group generated by
    the reflections in ``B_lambda``."""
    b_lambda = [rs.check_root(a) for a in b_lambda]
    if not all(rs.is_positive_root(a) for a in b_lambda):
        raise WeylError("B_lambda must consist of positive roots")
    refl = {a: WeylElement(reflection_images(a)) for a in b_lambda}
    u = w
    v = WeylElement(K.identity(rs.ambient_dim))
    steps = 0
    limit = len(rs.positive_roots) + 1
    while True:
        bad = next((a for a in b_lambda if not rs.is_positive_root(K.act(u.images, a))), None)
        if bad is None:
            break
        u = u * refl[bad]
        v = refl[bad] * v
        steps += 1
        if steps > limit:
            raise AssertionError("coset descent did not terminate")
    return u, v
