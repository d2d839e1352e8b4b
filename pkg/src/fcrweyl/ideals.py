"""Prime ideals of S(h) generated by affine-linear elements.

An element ``h + c`` of degree at most one is the affine functional
``mu -> h.mu + c`` on ``h*`` (``h`` in epsilon coordinates).  A proper ideal
generated by such elements is determined by its variety, an affine subspace,
so :class:`LinearIdeal` stores the canonical variety and derives a canonical
generating set from it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import weyl as W
from .exactlin import (
    AffineSubspace,
    cone_is_fulldim,
    dot,
    fmt_rat,
    integral_points,
    parse_rat,
    solve_affine,
    vec,
)
from . import rootsys
from .rootsys import RootSystem, RootSystemError, coroot_vector, indecomposable_simples


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class LinearIdeal:
    rs: RootSystem
    variety: AffineSubspace

    @property
    def functionals(self) -> list:
        """Canonical generators as ``(h, c)`` pairs (reduced echelon in ``h``)."""
        return self.variety.equations()

    @property
    def dim(self) -> int:
        return self.variety.dim

    def contains_point(self, mu: Sequence) -> bool:
        return self.variety.contains(mu)

    def to_json(self) -> dict:
        return {
            "system": self.rs.to_json(),
            "functionals": [
                {"h": [fmt_rat(x) for x in h], "c": fmt_rat(c)} for h, c in self.functionals
            ],
        }

    def describe(self) -> dict:
        v = self.variety
        return {
            "base_point": [fmt_rat(x) for x in v.base],
            "directions": [[fmt_rat(x) for x in d] for d in v.directions],
            "dim": v.dim,
        }


def canonicalize(rs: RootSystem, functionals: Iterable[tuple]) -> LinearIdeal:
    """The ideal generated by the affine functionals ``(h, c)``."""
    funcs = [(vec(h), Fraction(c)) for h, c in functionals]
    for h, _ in funcs:
        if len(h) != rs.ambient_dim:
            raise IdealError(f"functional has dimension {len(h)}, expected {rs.ambient_dim}")
    v = solve_affine(funcs, rs.ambient_dim)
    if v is None:
        raise IdealError("generators are inconsistent: the ideal is the whole ring")
    return LinearIdeal(rs, v)


def from_variety(rs: RootSystem, variety: AffineSubspace) -> LinearIdeal:
    if variety.ambient_dim != rs.ambient_dim:
        raise IdealError("variety lives in the wrong ambient space")
    return LinearIdeal(rs, variety)


def point_ideal(rs: RootSystem, mu: Sequence) -> LinearIdeal:
    """``M_mu``, the maximal ideal of the point ``mu``."""
    mu = vec(mu)
    if len(mu) != rs.ambient_dim:
        raise IdealError("weight has the wrong dimension")
    return LinearIdeal(rs, AffineSubspace.point(mu))


def simple_coroot(rs: RootSystem, i: int) -> tuple:
    """``H_i`` in epsilon coordinates (1-based)."""
    if not 1 <= i <= rs.rank:
        raise IdealError(f"simple coroot index {i} out of range 1..{rs.rank}")
    return coroot_vector(rs.simple_roots[i - 1])


def coordinate(rs: RootSystem, j: int) -> tuple:
    """``E_j``, the j-th coordinate functional (1-based)."""
    if not 1 <= j <= rs.ambient_dim:
        raise IdealError(f"coordinate index {j} out of range 1..{rs.ambient_dim}")
    return tuple(Fraction(int(k == j - 1)) for k in range(rs.ambient_dim))


def parse_functional(rs: RootSystem, obj: dict) -> tuple:
    c = parse_rat(obj.get("c", "0"))
    keys = [k for k in ("h", "H", "E") if k in obj]
    if len(keys) != 1:
        raise IdealError(f"functional needs exactly one of h, H, E: {obj}")
    if keys[0] == "h":
        return vec(parse_rat(x) for x in obj["h"]), c
    if keys[0] == "H":
        return simple_coroot(rs, int(obj["H"])), c
    return coordinate(rs, int(obj["E"])), c


def from_json(obj: dict) -> LinearIdeal:
    try:
        rs = _system_from_json(obj["system"])
        funcs = [parse_functional(rs, f) for f in obj["functionals"]]
    except KeyError as exc:
        raise IdealError(f"ideal object is missing {exc}") from None
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, IdealError):
            raise
        raise IdealError(str(exc)) from None
    return canonicalize(rs, funcs)


def _system_from_json(obj) -> RootSystem:
    try:
        return rootsys.from_json(obj)
    except RootSystemError as exc:
        raise IdealError(str(exc)) from None


# ---------------------------------------------------------------------------
# dot action


def dot_functional(rs: RootSystem, w: W.WeylElement, h: Sequence, c) -> tuple:
    """Image of the generator ``h + c`` under ``w``: ``wh + c - h(sum Q(w))``."""
    h = vec(h)
    shift = W.root_sum(W.inversion_list(rs, w), rs.ambient_dim)
    return w.apply(h), Fraction(c) - dot(h, shift)


def dot_act(w: W.WeylElement, omega: LinearIdeal) -> LinearIdeal:
    """``w.Omega``; generators move by :func:`dot_functional` and the variety
    is checked to be the dot image ``w.V(Omega)``."""
    rs = omega.rs
    funcs = [dot_functional(rs, w, h, c) for h, c in omega.functionals]
    out = canonicalize(rs, funcs)
    rho = rs.rho
    shift = tuple(a - b for a, b in zip(w.apply(rho), rho))
    expected = omega.variety.map_affine(w.apply, shift)
    if out.variety != expected:
        raise AssertionError("dot action on generators disagrees with the dot action on the variety")
    return out


# ---------------------------------------------------------------------------
# integral root data


@dataclass(frozen=True)
class IntegralRootData:
    r_lambda: frozenset
    b_lambda: tuple
    constants: dict  # root -> integer value of (., alpha^vee) on the variety

    @property
    def positive(self) -> tuple:
        return tuple(a for a in self.constants if any(a) and _lex_pos(a))

    def subgroup(self, rs: RootSystem) -> tuple:
        """``W_lambda``."""
        return W.subgroup(rs, self.b_lambda)

    def is_min_coset_rep(self, rs: RootSystem, w: W.WeylElement) -> bool:
        """``w`` lies in ``W^lambda``."""
        return W.is_min_coset_rep(rs, self.b_lambda, w)

    def to_json(self) -> dict:
        return {
            "r_lambda": [[str(x) for x in a] for a in sorted(self.r_lambda, key=_root_key)],
            "b_lambda": [[str(x) for x in a] for a in self.b_lambda],
            "constants": [
                {"root": [str(x) for x in a], "value": str(v)}
                for a, v in sorted(self.constants.items(), key=lambda kv: _root_key(kv[0]))
            ],
        }


def _lex_pos(a) -> bool:
    for x in a:
        if x:
            return x > 0
    return False


def _root_key(a):
    return tuple(-x for x in a)


def integral_root_data(omega: LinearIdeal) -> IntegralRootData:
    """Roots whose coroot pairing is a constant integer on the variety."""
    rs = omega.rs
    consts = {}
    for a in rs.roots:
        const, lin = omega.variety.restrict(coroot_vector(a))
        if not any(lin) and const.denominator == 1:
            consts[a] = int(const)
    pos = [a for a in rs.positive_roots if a in consts]
    return IntegralRootData(frozenset(consts), indecomposable_simples(pos), consts)


def b_lambda(omega: LinearIdeal) -> tuple:
    return integral_root_data(omega).b_lambda


# ---------------------------------------------------------------------------
# strong dominance, dominance, Lambda^+ classes


@dataclass(frozen=True)
class DensityCertificate:
    dense: bool
    reason: str
    constant_values: tuple = ()
    lattice_base: Optional[tuple] = None
    cone_rank: int = 0


def strong_dominance_certificate(omega: LinearIdeal) -> DensityCertificate:
    rs = omega.rs
    v = omega.variety
    consts = []
    moving = []
    for i, hv in enumerate(rs.simple_coroots(), start=1):
        const, lin = v.restrict(hv)
        if any(lin):
            moving.append((hv, lin))
        else:
            consts.append((i, const))
            if const < 0 or const.denominator != 1:
                return DensityCertificate(False, f"H{i} is constantly {fmt_rat(const)} on the variety", tuple(consts))
    if not moving:
        return DensityCertificate(True, "all simple coroots are constant naturals", tuple(consts))
    # the cone test is cheaper, so it runs first; the verdict is the same
    if not cone_is_fulldim(v.dim, [lin for _, lin in moving]):
        return DensityCertificate(False, "dominance cone is not full dimensional", tuple(consts))
    lat = integral_points(v, [(hv, 0) for hv, _ in moving])
    if lat is None:
        return DensityCertificate(False, "no point with integral coroot values", tuple(consts))
    return DensityCertificate(True, "integral lattice meets an open dominance cone", tuple(consts), lat.base, len(moving))


def is_strongly_dominant(omega: LinearIdeal) -> bool:
    """Dominant integral points are Zariski dense in the variety."""
    return strong_dominance_certificate(omega).dense


def shifted_values(omega: LinearIdeal, data: Optional[IntegralRootData] = None) -> dict:
    """``v_alpha = n_alpha + (rho, alpha^vee)`` on ``R_lambda``."""
    rs = omega.rs
    data = integral_root_data(omega) if data is None else data
    return {a: n + dot(rs.rho, coroot_vector(a)) for a, n in data.constants.items()}


def is_dominant(omega: LinearIdeal) -> bool:
    """Every root of ``R_lambda`` with positive shifted value is positive."""
    rs = omega.rs
    return all(rs.is_positive_root(a) for a, val in shifted_values(omega).items() if val > 0)


def lambda_plus_class(omega: LinearIdeal) -> str:
    """``strict`` / ``weak`` / ``neither`` from the shifted values on ``B_lambda``."""
    data = integral_root_data(omega)
    vals = shifted_values(omega, data)
    bvals = [vals[a] for a in data.b_lambda]
    if all(x > 0 for x in bvals):
        return "strict"
    if all(x >= 0 for x in bvals):
        return "weak"
    return "neither"


def tau_invariant(rs: RootSystem, b_lambda: Sequence[Sequence], w: W.WeylElement) -> frozenset:
    """``{alpha in B_lambda : w(alpha) < 0}`` (linear action)."""
    return frozenset(tuple(a) for a in b_lambda if W.is_negative_root(rs, w.apply(tuple(a))))


# ---------------------------------------------------------------------------
# random corpus


def _random_direction(rng: random.Random, dim: int) -> tuple:
    while True:
        d = tuple(Fraction(rng.randint(-2, 2), rng.choice((1, 1, 2))) for _ in range(dim))
        if any(d):
            return d


def dominant_base_point(rs: RootSystem, coeffs: Sequence[int], centre=0) -> tuple:
    mu = [Fraction(0)] * rs.ambient_dim
    for c, wt in zip(coeffs, rs.fundamental_weights()):
        for j, x in enumerate(wt):
            mu[j] += c * x
    if rs.kind in ("GL", "A") and centre:
        mu = [x + centre for x in mu]
    return tuple(mu)


def random_ideal(rs: RootSystem, rng: random.Random, dim: Optional[int] = None) -> LinearIdeal:
    """A variety through a random dominant integral point (simple coroot
    values 0 or 1) with random small rational directions; ``dim`` defaults to
    a uniform choice in ``0..ambient_dim``."""
    if dim is None:
        dim = rng.randint(0, rs.ambient_dim)
    coeffs = [rng.randint(0, 1) for _ in range(rs.rank)]
    centre = rng.choice((0, 0, 1, Fraction(1, 2))) if rs.kind in ("GL", "A") else 0
    base = dominant_base_point(rs, coeffs, centre)
    dirs = [_random_direction(rng, rs.ambient_dim) for _ in range(dim)]
    return LinearIdeal(rs, AffineSubspace.make(base, dirs))


def random_translate(rs: RootSystem, rng: random.Random, omega: LinearIdeal, group=None) -> tuple:
    group = W.enumerate_group(rs) if group is None else group
    w = group[rng.randrange(len(group))]
    return w, dot_act(w, omega)


def corpus(rs: RootSystem, count: int, seed: int = 0) -> list:
    """``count`` seeded ideals; every second one is moved by a random dot
    translate so that constant and integrality obstructions also occur."""
    rng = random.Random(f"{seed}:{rs.label}")
    group = W.enumerate_group(rs)
    out = []
    for k in range(count):
        omega = random_ideal(rs, rng)
        if k % 2:
            omega = random_translate(rs, rng, omega, group)[1]
        out.append(omega)
    return out
