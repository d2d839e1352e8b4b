"""Independent brute-force oracles used by the tests and verification suites.

None of these share code paths with the decision procedures they check
beyond exact row reduction: they enumerate bounded sets explicitly.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .exactlin import AffineSubspace, dot, rref


def _affine_hull(points: Sequence[Sequence], extra_dirs: Sequence[Sequence] = ()) -> Optional[AffineSubspace]:
    if not points:
        return None
    p0 = points[0]
    dirs = [tuple(a - b for a, b in zip(p, p0)) for p in points[1:]]
    return AffineSubspace.make(p0, dirs + list(extra_dirs))


def affine_hull(points: Sequence[Sequence]) -> Optional[AffineSubspace]:
    return _affine_hull([tuple(Fraction(x) for x in p) for p in points])


# ---------------------------------------------------------------------------
# density of dominant integral points


def _value_map(rs, variety: AffineSubspace):
    """Simple-coroot values on ``variety`` as ``consts[i] + lin[i].t``.

    Returns ``None`` when a constant value is not a natural number, otherwise
    the lists for the coroots that vary.
    """
    consts, lin = [], []
    for h in rs.simple_coroots():
        c, l = variety.restrict(h)
        if any(l):
            consts.append(c)
            lin.append(l)
        elif c < 0 or c.denominator != 1:
            return None
    return consts, lin


def dominant_value_points(consts, lin, bound: int) -> list:
    """Integral nonnegative value vectors reachable on the variety.

    A maximal independent subset of the varying coroot values is boxed in
    ``0..bound``; the remaining values are determined and filtered.
    Arithmetic is scaled to integers for speed.
    """
    m, d = len(lin), len(lin[0])
    _, indep = rref([tuple(lin[i][k] for i in range(m)) for k in range(d)])
    k = len(indep)
    sub = [list(lin[i]) + [Fraction(int(a == b)) for b in range(k)] for a, i in enumerate(indep)]
    red, piv = rref(sub)
    tmat = [[Fraction(0)] * k for _ in range(d)]
    for r, p in zip(red, piv):
        if p < d:
            tmat[p] = list(r[d:])
    # values = A y + b where y are the boxed values
    a = [[sum(lin[i][q] * tmat[q][j] for q in range(d)) for j in range(k)] for i in range(m)]
    b = [consts[i] - sum(a[i][j] * consts[indep[j]] for j in range(k)) for i in range(m)]
    den = lcm(*(x.denominator for row in a for x in row), *(x.denominator for x in b))
    ai = [[int(x * den) for x in row] for row in a]
    bi = [int(x * den) for x in b]
    out = []
    for ys in itertools.product(range(bound + 1), repeat=k):
        vals = []
        for i in range(m):
            v = bi[i] + sum(c * y for c, y in zip(ai[i], ys))
            if v < 0 or v % den:
                break
            vals.append(v // den)
        else:
            out.append(tuple(vals))
    return out


def _upper_hull_spans(points: Sequence[tuple], rank: int) -> bool:
    """Some point ``x`` has ``rank`` independent differences ``y - x`` with
    ``y >= x`` componentwise among the enumerated points."""
    for x in points:
        ups = [tuple(Fraction(a - b) for a, b in zip(y, x)) for y in points if y != x and all(a >= b for a, b in zip(y, x))]
        if len(ups) >= rank and len(rref(ups)[1]) == rank:
            return True
    return False


def _integrality_obstruction(consts, lin, coeff: int) -> bool:
    """Small integer ``y`` with ``y.lin = 0`` and ``y.consts`` not integral."""
    m, d = len(lin), len(lin[0])
    for y in itertools.product(range(-coeff, coeff + 1), repeat=m):
        if any(y) and all(sum(y[i] * lin[i][q] for i in range(m)) == 0 for q in range(d)):
            if sum(y[i] * consts[i] for i in range(m)).denominator != 1:
                return True
    return False


def _cone_obstruction(lin, coeff: int) -> bool:
    """Small natural ``lam != 0`` with ``sum lam_i lin_i = 0``."""
    m, d = len(lin), len(lin[0])
    for lam in itertools.product(range(coeff + 1), repeat=m):
        if any(lam) and all(sum(lam[i] * lin[i][q] for i in range(m)) == 0 for q in range(d)):
            return True
    return False


def density_oracle_at(rs, variety: AffineSubspace, bound: int) -> Optional[bool]:
    """Brute-force density verdict with search radius ``bound``.

    ``True`` is certified by enumerated dominant points: a point together with
    points above it in every coroot value whose differences span the variety
    (so a full-rank semigroup of translates stays dominant).  ``False`` is
    certified by a constant coroot value outside the naturals, a small integer
    relation forcing a non-integral value, or a small nonnegative relation
    among the varying values (which pins one of them to a bounded range).
    ``None`` means neither certificate was found within the radius.
    """
    vm = _value_map(rs, variety)
    if vm is None:
        return False
    consts, lin = vm
    if not lin:
        return True
    rank = len(rref(lin)[1])
    if _upper_hull_spans(dominant_value_points(consts, lin, bound), rank):
        return True
    if _integrality_obstruction(consts, lin, bound) or _cone_obstruction(lin, bound):
        return False
    return None


def density_oracle(rs, variety: AffineSubspace, bounds: Sequence[int] = (5, 6)) -> tuple:
    """``(dense, stabilized)``: stabilized when every radius gives the same
    certified verdict."""
    verdicts = [density_oracle_at(rs, variety, b) for b in bounds]
    stable = verdicts[0] is not None and all(v == verdicts[0] for v in verdicts)
    return verdicts[-1], stable


# ---------------------------------------------------------------------------
# cones


def grid_cone_oracle(direction_dim: int, functionals: Sequence[Sequence], radius: int = 3, dens: Sequence[int] = (1, 2, 3)) -> bool:
    """Search a rational grid for ``d`` with every ``f(d) > 0``."""
    values = sorted({Fraction(a, q) for q in dens for a in range(-radius * q, radius * q + 1)})
    for d in itertools.product(values, repeat=direction_dim):
        if all(dot(f, d) > 0 for f in functionals):
            return True
    return False
