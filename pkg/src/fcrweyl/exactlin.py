"""Exact rational linear algebra over ``fractions.Fraction``.

Vectors are plain tuples of ``Fraction`` (integers are accepted anywhere a
rational is expected).  Nothing in this module ever rounds.

The main objects are :class:`AffineSubspace` (kept in a canonical form so that
equality is structural), :class:`AffineLattice` (integer points of an affine
subspace with respect to a family of affine functionals) and the cone test
:func:`cone_is_fulldim` used by the strong-dominance decision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Iterable, Optional, Sequence

RatVec = tuple  # tuple[Fraction, ...]
Functional = tuple  # (RatVec h, Fraction c) meaning mu -> h.mu + c

__all__ = [
    "AffineLattice",
    "AffineSubspace",
    "cone_is_fulldim",
    "cone_witness",
    "dot",
    "fmt_rat",
    "hnf_rows",
    "integral_points",
    "parse_rat",
    "rref",
    "solve_affine",
    "vec",
]


# ---------------------------------------------------------------------------
# scalars and vectors


def vec(entries: Iterable) -> RatVec:
    return tuple(Fraction(x) for x in entries)


def parse_rat(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted; pass rationals as strings like '1/2'")
    return Fraction(str(text).strip())


def fmt_rat(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale(c, u):
    return tuple(c * a for a in u)


def _is_zero(u) -> bool:
    return not any(u)


# ---------------------------------------------------------------------------
# row reduction


def rref(matrix: Sequence[Sequence]) -> tuple[tuple[RatVec, ...], tuple[int, ...]]:
    """Reduced row-echelon form.

    Returns the reduced matrix (same shape, zero rows last) and the pivot
    columns in increasing order.
    """
    rows = [list(map(Fraction, r)) for r in matrix]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(rows):
            break
        sel = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[top], rows[sel] = rows[sel], rows[top]
        piv = rows[top][col]
        if piv != 1:
            rows[top] = [a / piv for a in rows[top]]
        prow = rows[top]
        for i, r in enumerate(rows):
            if i != top and r[col]:
                f = r[col]
                rows[i] = [a - f * b for a, b in zip(r, prow)]
        pivots.append(col)
        top += 1
    return tuple(tuple(r) for r in rows), tuple(pivots)


def _row_basis(vectors: Sequence[Sequence], dim: int) -> tuple[tuple[RatVec, ...], tuple[int, ...]]:
    if not vectors:
        return (), ()
    red, piv = rref(vectors)
    return red[: len(piv)], piv


def _nullspace(rows: Sequence[RatVec], dim: int) -> list[RatVec]:
    """Basis of {x : r.x = 0 for every row r}."""
    red, piv = _row_basis(rows, dim)
    free = [c for c in range(dim) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * dim
        x[f] = Fraction(1)
        for r, p in zip(red, piv):
            x[p] = -r[f]
        basis.append(tuple(x))
    return basis


def _reduce_by(v: RatVec, basis: Sequence[RatVec], pivots: Sequence[int]) -> RatVec:
    """Reduce v against an RREF basis (zeroes the pivot coordinates)."""
    out = list(v)
    for r, p in zip(basis, pivots):
        c = out[p]
        if c:
            for j, a in enumerate(r):
                if a:
                    out[j] -= c * a
    return tuple(out)


# ---------------------------------------------------------------------------
# affine subspaces


@dataclass(frozen=True)
class AffineSubspace:
    """``base + span(directions)`` in canonical form.

    ``directions`` is the nonzero part of a reduced row-echelon basis and
    ``base`` has zero entries in every pivot column of it, so two equal
    subspaces compare equal as dataclasses.  Build instances with
    :meth:`make` rather than the raw constructor.
    """

    base: RatVec
    directions: tuple
    ambient_dim: int
    pivots: tuple = ()

    @classmethod
    def make(cls, base: Sequence, directions: Iterable[Sequence] = ()) -> "AffineSubspace":
        base = vec(base)
        dim = len(base)
        dirs = [vec(d) for d in directions]
        if any(len(d) != dim for d in dirs):
            raise ValueError("direction dimension mismatch")
        red, piv = _row_basis(dirs, dim) if dirs else ((), ())
        base = _reduce_by(base, red, piv)
        return cls(base, tuple(red), dim, tuple(piv))

    @classmethod
    def point(cls, p: Sequence) -> "AffineSubspace":
        return cls.make(p)

    @classmethod
    def whole(cls, dim: int) -> "AffineSubspace":
        eye = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        return cls.make([0] * dim, eye)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def contains(self, p: Sequence) -> bool:
        r = _reduce_by(_sub(vec(p), self.base), self.directions, self.pivots)
        return _is_zero(r)

    def contains_direction(self, d: Sequence) -> bool:
        return _is_zero(_reduce_by(vec(d), self.directions, self.pivots))

    def contains_subspace(self, other: "AffineSubspace") -> bool:
        return self.contains(other.base) and all(self.contains_direction(d) for d in other.directions)

    def at(self, t: Sequence) -> RatVec:
        """The point ``base + sum t_k directions_k``."""
        out = list(self.base)
        for tk, d in zip(t, self.directions):
            if tk:
                for j, a in enumerate(d):
                    out[j] += tk * a
        return tuple(out)

    def restrict(self, h: Sequence, c=0) -> tuple[Fraction, RatVec]:
        """Write ``mu -> h.mu + c`` on this subspace as ``const + coeffs.t``."""
        return dot(h, self.base) + Fraction(c), tuple(dot(h, d) for d in self.directions)

    def equations(self) -> list[tuple[RatVec, Fraction]]:
        """Canonical affine equations ``h.mu + c = 0`` cutting out the subspace.

        The linear parts form a reduced row-echelon basis of the annihilator of
        the direction space.
        """
        normals = _nullspace(self.directions, self.ambient_dim) if self.directions else [
            tuple(Fraction(int(i == j)) for j in range(self.ambient_dim)) for i in range(self.ambient_dim)
        ]
        if not normals:
            return []
        red, piv = _row_basis(normals, self.ambient_dim)
        return [(h, -dot(h, self.base)) for h in red]

    def map_affine(self, linear, shift: Sequence = None) -> "AffineSubspace":
        """Image under ``x -> linear(x) + shift`` (``linear`` is a callable)."""
        b = linear(self.base)
        if shift is not None:
            b = _add(b, shift)
        return AffineSubspace.make(b, [linear(d) for d in self.directions])

    def join(self, other: "AffineSubspace") -> "AffineSubspace":
        """Affine hull of the union."""
        return AffineSubspace.make(
            self.base, list(self.directions) + list(other.directions) + [_sub(other.base, self.base)]
        )


def solve_affine(functionals: Iterable[tuple], ambient_dim: int) -> Optional[AffineSubspace]:
    """Solution set of ``h_j.mu + c_j = 0``; ``None`` when inconsistent."""
    rows = []
    for h, c in functionals:
        h = vec(h)
        if len(h) != ambient_dim:
            raise ValueError("functional dimension mismatch")
        rows.append(h + (-Fraction(c),))
    if not rows:
        return AffineSubspace.whole(ambient_dim)
    red, piv = rref(rows)
    if piv and piv[-1] == ambient_dim:
        return None
    base = [Fraction(0)] * ambient_dim
    for r, p in zip(red, piv):
        base[p] = r[ambient_dim]
    lin = [r[:ambient_dim] for r in red[: len(piv)]]
    return AffineSubspace.make(base, _nullspace(lin, ambient_dim))


# ---------------------------------------------------------------------------
# integer linear algebra


def _int_row_echelon(a: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Integer row echelon form ``E = T a`` with ``T`` unimodular.

    Returns ``(E, T, pivot_columns)``; the nonzero rows of ``E`` come first.
    """
    m = len(a)
    ncols = len(a[0]) if m else 0
    e = [list(r) for r in a]
    t = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    top = 0
    for col in range(ncols):
        if top == m:
            break
        while True:
            live = [i for i in range(top, m) if e[i][col]]
            if not live:
                break
            best = min(live, key=lambda i: abs(e[i][col]))
            e[top], e[best] = e[best], e[top]
            t[top], t[best] = t[best], t[top]
            done = True
            for i in range(top + 1, m):
                if e[i][col]:
                    q = e[i][col] // e[top][col]
                    e[i] = [x - q * y for x, y in zip(e[i], e[top])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[top])]
                    if e[i][col]:
                        done = False
            if done:
                break
        if top < m and e[top][col]:
            if e[top][col] < 0:
                e[top] = [-x for x in e[top]]
                t[top] = [-x for x in t[top]]
            pivots.append(col)
            top += 1
    return e, t, pivots


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form of an integer matrix (zero rows dropped)."""
    if not rows:
        return []
    e, _, piv = _int_row_echelon([list(map(int, r)) for r in rows])
    e = e[: len(piv)]
    for k, p in enumerate(piv):
        for i in range(k):
            q = e[i][p] // e[k][p]
            if q:
                e[i] = [x - q * y for x, y in zip(e[i], e[k])]
    return e


def _common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def _solve_integer(n_rows: list[list[int]], rhs: list[int], m: int):
    """All integer ``s`` with ``N s = rhs`` as ``(s0, kernel_basis)`` or ``None``."""
    if not n_rows:
        eye = [tuple(int(i == j) for j in range(m)) for i in range(m)]
        return tuple([0] * m), eye
    # row-reduce N^T: T N^T = E, hence N T^T = E^T
    nt = [[n_rows[j][i] for j in range(len(n_rows))] for i in range(m)]
    e, t, piv = _int_row_echelon(nt)
    q = list(rhs)
    y = [0] * m
    for k, p in enumerate(piv):
        coeff = e[k][p]
        if q[p] % coeff:
            return None
        y[k] = q[p] // coeff
        if y[k]:
            q = [a - y[k] * b for a, b in zip(q, e[k])]
    if any(q):
        return None
    rank = len(piv)
    s0 = tuple(sum(y[k] * t[k][i] for k in range(m)) for i in range(m))
    kernel = [tuple(t[k]) for k in range(rank, m)]
    return s0, kernel


# ---------------------------------------------------------------------------
# affine lattices


@dataclass(frozen=True)
class AffineLattice:
    """``base + Z-span(lattice_basis) + Q-span(free_basis)``.

    ``free_basis`` collects the directions along which every defining
    functional is constant; it is empty whenever the functionals separate the
    direction space.  Both bases are in triangular canonical form.
    """

    base: RatVec
    lattice_basis: tuple
    free_basis: tuple = ()

    def at(self, coeffs: Sequence[int], free: Sequence = ()) -> RatVec:
        out = list(self.base)
        for n, b in zip(coeffs, self.lattice_basis):
            for j, a in enumerate(b):
                out[j] += n * a
        for x, b in zip(free, self.free_basis):
            for j, a in enumerate(b):
                out[j] += x * a
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.lattice_basis)


def _canonical_lattice(base: RatVec, lattice: list[RatVec], free: list[RatVec]) -> AffineLattice:
    dim = len(base)
    fred, fpiv = _row_basis(free, dim) if free else ((), ())
    base = _reduce_by(base, fred, fpiv)
    lattice = [_reduce_by(v, fred, fpiv) for v in lattice]
    lattice = [v for v in lattice if not _is_zero(v)]
    if lattice:
        den = _common_denominator(x for v in lattice for x in v)
        h = hnf_rows([[int(x * den) for x in v] for v in lattice])
        basis = [tuple(Fraction(x, den) for x in r) for r in h]
        b = list(base)
        for r in basis:
            p = next(j for j, a in enumerate(r) if a)
            k = floor(b[p] / r[p])
            if k:
                b = [x - k * y for x, y in zip(b, r)]
        base = tuple(b)
    else:
        basis = []
    return AffineLattice(tuple(base), tuple(basis), tuple(fred))


def integral_points(space: AffineSubspace, functionals: Iterable[tuple]) -> Optional[AffineLattice]:
    """Points of ``space`` where every functional takes an integer value.

    Each functional ``(h, c)`` means ``mu -> h.mu + c`` and must be
    non-constant on ``space``.  Returns ``None`` when there is no such point.
    """
    funcs = [(vec(h), Fraction(c)) for h, c in functionals]
    d = space.dim
    g0 = []
    g = []
    for h, c in funcs:
        const, lin = space.restrict(h, c)
        if _is_zero(lin):
            raise ValueError("functional is constant on the subspace")
        g0.append(const)
        g.append(lin)
    m = len(funcs)
    if m == 0:
        return AffineLattice(space.base, (), space.directions)

    # left null space of G describes the column space of G
    gt = [tuple(g[i][k] for i in range(m)) for k in range(d)]
    left = _nullspace(gt, m)
    n_rows, rhs = [], []
    for y in left:
        den = _common_denominator(y)
        yi = [int(a * den) for a in y]
        gg = 0
        for a in yi:
            gg = gcd(gg, a)
        yi = [a // gg for a in yi]
        val = dot(yi, g0)
        if val.denominator != 1:
            return None
        n_rows.append(yi)
        rhs.append(int(val))
    sol = _solve_integer(n_rows, rhs, m)
    if sol is None:
        return None
    s0, kernel = sol

    # linear solver t = M y valid for y in col(G): rref of [G | I]
    aug = [list(g[i]) + [Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    red, piv = rref(aug)

    def solve_t(y):
        t = [Fraction(0)] * d
        for r, p in zip(red, piv):
            if p >= d:
                break
            t[p] = dot(r[d:], y)
        return t

    t0 = solve_t(_sub(s0, g0))
    base = space.at(t0)
    lattice = []
    for k in kernel:
        tk = solve_t(k)
        lattice.append(_sub(space.at(tk), space.base))
    free_t = _nullspace(g, d) if g else []
    free = [_sub(space.at(t), space.base) for t in free_t]
    return _canonical_lattice(base, lattice, free)


# ---------------------------------------------------------------------------
# cones


def _normalize_ineq(a: tuple, b: Fraction) -> tuple:
    lead = next((abs(x) for x in a if x), None)
    if lead is None:
        return a, b
    return tuple(x / lead for x in a), b / lead


def _fm_eliminate(ineqs: set, k: int) -> set:
    pos, neg, rest = [], [], set()
    for a, b in ineqs:
        if a[k] > 0:
            pos.append((a, b))
        elif a[k] < 0:
            neg.append((a, b))
        else:
            rest.add((a, b))
    for ap, bp in pos:
        for an, bn in neg:
            cp, cn = 1 / ap[k], 1 / -an[k]
            a = tuple(cp * x + cn * y for x, y in zip(ap, an))
            b = cp * bp + cn * bn
            rest.add(_normalize_ineq(a, b))
    return rest


def cone_witness(direction_dim: int, functionals: Sequence[Sequence]) -> Optional[RatVec]:
    """A vector ``d`` with ``f(d) > 0`` for every functional, or ``None``.

    Decided by Fourier-Motzkin elimination on the scaled system ``f(d) >= 1``.
    """
    funcs = [vec(f) for f in functionals]
    if any(len(f) != direction_dim for f in funcs):
        raise ValueError("functional dimension mismatch")
    if any(_is_zero(f) for f in funcs):
        return None
    system = {_normalize_ineq(f, Fraction(1)) for f in funcs}
    stages = [system]
    for k in range(direction_dim):
        system = _fm_eliminate(system, k)
        stages.append(system)
    if any(b > 0 for _, b in system):
        return None
    x = [Fraction(0)] * direction_dim
    for k in reversed(range(direction_dim)):
        lo, hi = None, None
        for a, b in stages[k]:
            if not a[k]:
                continue
            rest = b - sum(a[j] * x[j] for j in range(k + 1, direction_dim))
            bound = rest / a[k]
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = hi
    d = tuple(x)
    assert all(dot(f, d) > 0 for f in funcs), "Fourier-Motzkin back-substitution failed"
    return d


def cone_is_fulldim(direction_dim: int, functionals: Sequence[Sequence]) -> bool:
    """True iff the cone ``{f_j >= 0}`` has nonempty interior."""
    return cone_witness(direction_dim, functionals) is not None
