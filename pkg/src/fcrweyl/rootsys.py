"""Classical root systems in epsilon coordinates.

Supported kinds:

``GL``  the reductive ``gl_n`` realization on ``Q^n`` (roots ``e_i - e_j``);
``A``   type ``A_n`` realized on ``Q^(n+1)``, treated as semisimple;
``B``, ``C``, ``D``  the usual realizations on ``Q^n``.

All roots have integer coordinates and are stored as tuples of ``int``;
weights are tuples of ``Fraction``.  The invariant form is the standard dot
product, which only rescales the Killing form on each simple factor and so
leaves every coroot pairing unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .exactlin import dot, fmt_rat, rref, vec

KINDS = ("GL", "A", "B", "C", "D")
MAX_RANK = 8


class RootSystemError(ValueError):
    pass


def _unit(n: int, i: int, c: int = 1) -> tuple:
    v = [0] * n
    v[i] = c
    return tuple(v)


def _plus(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _minus(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


def lex_positive(v: Sequence) -> bool:
    """First nonzero coordinate is positive (the positivity rule of every
    positive system built here)."""
    for a in v:
        if a:
            return a > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    kind: str
    n: int
    ambient_dim: int
    positive_roots: tuple
    simple_roots: tuple
    rho: tuple
    is_semisimple: bool
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())
    _positive_set: frozenset = field(repr=False, compare=False, default=frozenset())

    # -- basic data ---------------------------------------------------------

    @property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(_neg(a) for a in self.positive_roots)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.n}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n}

    def is_root(self, alpha: Sequence) -> bool:
        return tuple(alpha) in self._root_set

    def is_positive_root(self, alpha: Sequence) -> bool:
        return tuple(alpha) in self._positive_set

    def check_root(self, alpha: Sequence) -> tuple:
        a = tuple(int(x) if Fraction(x).denominator == 1 else x for x in alpha)
        if a not in self._root_set:
            raise RootSystemError(f"{list(map(fmt_rat, a))} is not a root of {self.label}")
        return a

    # -- form, coroots, weights ----------------------------------------------

    def form(self, mu: Sequence, nu: Sequence) -> Fraction:
        return dot(mu, nu)

    def coroot(self, alpha: Sequence) -> tuple:
        a = self.check_root(alpha)
        return coroot_vector(a)

    def simple_coroots(self) -> tuple:
        return tuple(coroot_vector(a) for a in self.simple_roots)

    def simple_pairings(self, mu: Sequence) -> tuple:
        return tuple(dot(mu, h) for h in self.simple_coroots())

    def is_dominant_integral(self, mu: Sequence) -> bool:
        """All simple coroot pairings are nonnegative integers.

        For ``GL`` and ``A`` the central coordinate is unconstrained.
        """
        mu = vec(mu)
        if len(mu) != self.ambient_dim:
            raise RootSystemError("weight has the wrong dimension")
        return all(v >= 0 and v.denominator == 1 for v in self.simple_pairings(mu))

    def fundamental_weights(self) -> tuple:
        n, k = self.ambient_dim, self.kind
        half = Fraction(1, 2)

        def prefix(i, c=Fraction(1)):
            return tuple(c if j < i else Fraction(0) for j in range(n))

        if k in ("GL", "A"):
            return tuple(prefix(i) for i in range(1, n))
        if k == "C":
            return tuple(prefix(i) for i in range(1, n + 1))
        if k == "B":
            return tuple(prefix(i) for i in range(1, n)) + (prefix(n, half),)
        # D
        ws = [prefix(i) for i in range(1, n - 1)]
        spin_minus = tuple(half if j < n - 1 else -half for j in range(n))
        ws.append(spin_minus)
        ws.append(prefix(n, half))
        return tuple(ws)

    def root_lattice_contains(self, mu: Sequence) -> bool:
        """``mu`` is an integer combination of roots."""
        mu = vec(mu)
        if not self.simple_roots:
            return not any(mu)
        # solve sum c_i alpha_i = mu; simple roots are a Z-basis of the root lattice
        m = len(self.simple_roots)
        rows = [[Fraction(self.simple_roots[i][j]) for i in range(m)] + [mu[j]] for j in range(self.ambient_dim)]
        red, piv = rref(rows)
        if piv and piv[-1] == m:
            return False
        coeffs = [Fraction(0)] * m
        for r, p in zip(red, piv):
            coeffs[p] = r[m]
        return all(c.denominator == 1 for c in coeffs)

    # -- Weyl group generators -------------------------------------------------

    def simple_reflection_images(self) -> tuple:
        return tuple(reflection_images(a) for a in self.simple_roots)

    def group_order(self) -> int:
        n = self.ambient_dim
        if self.kind in ("GL", "A"):
            return factorial(n)
        if self.kind in ("B", "C"):
            return 2**n * factorial(n)
        return 2 ** (n - 1) * factorial(n)

    # -- subsystems ------------------------------------------------------------

    def subsystem(self, generators: Iterable[Sequence]) -> "Subsystem":
        gens = [self.check_root(g) for g in generators]
        closure = set(gens) | {_neg(g) for g in gens}
        changed = True
        while changed:
            changed = False
            current = list(closure)
            for b in current:
                bv = coroot_vector(b)
                for g in current:
                    r = reflect(g, b, bv)
                    if r not in closure:
                        closure.add(r)
                        changed = True
        assert closure <= self._root_set
        positive = tuple(a for a in self.positive_roots if a in closure)
        simple = indecomposable_simples(positive)
        return Subsystem(self, frozenset(closure), positive, simple, half_sum(positive, self.ambient_dim))

    def full_subsystem(self) -> "Subsystem":
        return Subsystem(self, self._root_set, self.positive_roots, self.simple_roots, self.rho)


@dataclass(frozen=True)
class Subsystem:
    parent: RootSystem
    roots: frozenset
    positive: tuple
    simple: tuple
    rho_prime: tuple

    def contains(self, alpha: Sequence) -> bool:
        return tuple(alpha) in self.roots


def coroot_vector(alpha: Sequence) -> tuple:
    aa = sum(x * x for x in alpha)
    return tuple(Fraction(2 * x, aa) for x in alpha)


def reflect(v: Sequence, alpha: Sequence, alpha_check: Sequence = None) -> tuple:
    """``s_alpha(v) = v - (v, alpha^vee) alpha``; integer input stays integer."""
    if alpha_check is None:
        alpha_check = coroot_vector(alpha)
    c = dot(v, alpha_check)
    out = tuple(x - c * a for x, a in zip(v, alpha))
    if all(Fraction(x).denominator == 1 for x in out):
        return tuple(int(x) for x in out)
    return out


def reflection_images(alpha: Sequence) -> tuple:
    """The reflection ``s_alpha`` as a signed permutation (kernel encoding)."""
    n = len(alpha)
    ac = coroot_vector(alpha)
    img = []
    for i in range(n):
        e = _unit(n, i)
        r = reflect(e, alpha, ac)
        nz = [(j, x) for j, x in enumerate(r) if x]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise RootSystemError("reflection is not a signed permutation")
        j, x = nz[0]
        img.append(j + 1 if x > 0 else -(j + 1))
    return tuple(img)


def half_sum(roots: Iterable[Sequence], dim: int) -> tuple:
    total = [Fraction(0)] * dim
    for a in roots:
        for j, x in enumerate(a):
            total[j] += x
    return tuple(x / 2 for x in total)


def indecomposable_simples(positive_subset: Sequence[Sequence]) -> tuple:
    """Elements of a positive system not expressible as a sum of two of its
    elements; for the positive part of a root subsystem these are its simple
    roots."""
    pos = [tuple(a) for a in positive_subset]
    pset = set(pos)
    return tuple(a for a in pos if not any(_minus(a, b) in pset for b in pos))


@lru_cache(maxsize=None)
def build(kind: str, n: int) -> RootSystem:
    """Build ``GL(n)``, ``A(n)`` (on ``Q^(n+1)``), ``B(n)``, ``C(n)`` or ``D(n)``."""
    kind = str(kind).upper()
    if kind not in KINDS:
        raise RootSystemError(f"unsupported kind {kind!r}; expected one of {KINDS}")
    n = int(n)
    if n < 1 or (kind == "D" and n < 2):
        raise RootSystemError(f"unsupported rank {n} for kind {kind}")
    dim = n + 1 if kind == "A" else n
    rank = dim - 1 if kind in ("GL", "A") else n
    if rank > MAX_RANK:
        raise RootSystemError(f"rank {rank} exceeds the supported maximum {MAX_RANK}")
    e = lambda i: _unit(dim, i)  # noqa: E731
    pos = []
    simple = []
    for i in range(dim):
        for j in range(i + 1, dim):
            pos.append(_minus(e(i), e(j)))
    if kind in ("GL", "A"):
        simple = [_minus(e(i), e(i + 1)) for i in range(dim - 1)]
    else:
        if kind in ("B", "C", "D"):
            for i in range(dim):
                for j in range(i + 1, dim):
                    pos.append(_plus(e(i), e(j)))
        if kind == "B":
            pos.extend(e(i) for i in range(dim))
        elif kind == "C":
            pos.extend(_unit(dim, i, 2) for i in range(dim))
        simple = [_minus(e(i), e(i + 1)) for i in range(dim - 1)]
        if kind == "B":
            simple.append(e(dim - 1))
        elif kind == "C":
            simple.append(_unit(dim, dim - 1, 2))
        else:
            simple.append(_plus(e(dim - 2), e(dim - 1)))
    pos = sorted(pos, key=lambda a: (_height(a, simple), tuple(-x for x in a)))
    pos = tuple(pos)
    roots = frozenset(pos) | frozenset(_neg(a) for a in pos)
    rho = half_sum(pos, dim)
    return RootSystem(
        kind=kind,
        n=n,
        ambient_dim=dim,
        positive_roots=pos,
        simple_roots=tuple(simple),
        rho=rho,
        is_semisimple=(kind != "GL"),
        _root_set=roots,
        _positive_set=frozenset(pos),
    )


def _height(alpha, simple) -> int:
    m = len(simple)
    dim = len(alpha)
    rows = [[Fraction(simple[i][j]) for i in range(m)] + [Fraction(alpha[j])] for j in range(dim)]
    red, piv = rref(rows)
    return int(sum(r[m] for r, p in zip(red, piv) if p < m))


def from_json(obj: dict) -> RootSystem:
    try:
        return build(obj["kind"], obj["n"])
    except KeyError as exc:
        raise RootSystemError(f"root system object is missing {exc}") from None
