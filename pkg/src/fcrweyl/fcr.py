"""FCR classification of the prime factors attached to linear ideals.

The decision sweeps the Weyl group for a strongly dominant base ``Omega``
with ``Omega' = w.Omega`` and then tests ``w`` against the minimal coset
representatives ``W^lambda`` of that base.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import weyl as W
from .exactlin import AffineSubspace, fmt_rat, solve_affine, vec
from .ideals import (
    LinearIdeal,
    dot_act,
    integral_root_data,
    is_strongly_dominant,
)
from .rootsys import RootSystem

FINITE = "FiniteDimensional"
FCR = "FCR"
NOT_FCR = "NotFCR"
UNKNOWN = "UnknownReductive"


class FcrError(ValueError):
    pass


class WitnessDivergence(AssertionError):
    """Two strongly dominant bases disagree on coset membership."""

    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


@dataclass(frozen=True)
class Witness:
    w: W.WeylElement
    base: LinearIdeal
    b_lambda: tuple
    in_coset_reps: bool


@dataclass(frozen=True)
class FcrVerdict:
    status: str
    witness_w: Optional[W.WeylElement] = None
    base_ideal: Optional[LinearIdeal] = None
    b_lambda: Optional[tuple] = None
    witnesses: tuple = field(default=(), compare=False, repr=False)

    def to_json(self, rs: RootSystem) -> dict:
        out = {"status": self.status}
        if self.witness_w is not None:
            out["witness"] = W.format_word(W.reduced_word(rs, self.witness_w))
        if self.b_lambda is not None:
            out["b_lambda"] = [[str(x) for x in a] for a in self.b_lambda]
        if self.base_ideal is not None:
            out["base_ideal"] = self.base_ideal.to_json()
        out["witness_count"] = len(self.witnesses)
        return out


def _check_dominant_weight(rs: RootSystem, mu) -> tuple:
    mu = vec(mu)
    if len(mu) != rs.ambient_dim:
        raise FcrError("weight has the wrong dimension")
    if not rs.is_dominant_integral(mu):
        raise FcrError("weight is not dominant integral")
    return mu


def annihilator_contains(omega: LinearIdeal, mu, group=None) -> bool:
    """Some ``w.mu`` lies on the variety (containment of annihilators)."""
    rs = omega.rs
    mu = _check_dominant_weight(rs, mu)
    group = W.enumerate_group(rs) if group is None else group
    return any(omega.variety.contains(W.dot_apply(rs, w, mu)) for w in group)


def _dominant_box_piece(rs: RootSystem, values: Sequence[int]) -> AffineSubspace:
    """Weights with the given simple-coroot values (a point, or a line along
    the centre for the ``GL`` and ``A`` realizations)."""
    funcs = [(h, -v) for h, v in zip(rs.simple_coroots(), values)]
    out = solve_affine(funcs, rs.ambient_dim)
    assert out is not None
    return out


def lambda_set(omega: LinearIdeal, bound: int, group=None) -> tuple:
    """Dominant integral weights with simple-coroot values in ``0..bound``
    whose dot orbit meets the variety.

    For ``B``, ``C``, ``D`` every piece is a single weight.  For ``GL`` and
    ``A`` the centre is unconstrained, so a piece is the part of a centre
    line that qualifies (a point or the whole line).  Pieces are computed as
    the union over ``w`` of ``{mu : w.mu in V}`` and returned in box order.
    """
    if bound < 0:
        raise FcrError("bound must be nonnegative")
    rs = omega.rs
    group = W.enumerate_group(rs) if group is None else group
    rho = rs.rho
    # w.mu in V  <=>  mu in w^{-1}.V
    pulled = []
    for w in group:
        winv = w.inverse()
        shift = tuple(a - b for a, b in zip(winv.apply(rho), rho))
        pulled.append(omega.variety.map_affine(winv.apply, shift))
    pulled = list(dict.fromkeys(pulled))
    pulled_eqs = [v.equations() for v in pulled]
    out = []
    for values in itertools.product(range(bound + 1), repeat=rs.rank):
        box = _dominant_box_piece(rs, values)
        if box.dim == 0:
            if any(v.contains(box.base) for v in pulled):
                out.append(box)
            continue
        box_eqs = box.equations()
        pieces = [p for p in (solve_affine(box_eqs + e, rs.ambient_dim) for e in pulled_eqs) if p is not None]
        if not pieces:
            continue
        best = max(pieces, key=lambda p: p.dim)
        if best.dim == box.dim:
            out.append(box)
        else:
            out.extend(dict.fromkeys(pieces))
    return tuple(out)


def lambda_weights(pieces: Sequence[AffineSubspace]) -> list:
    return [p.base for p in pieces if p.dim == 0]


def _witnesses(omega_prime: LinearIdeal, group) -> list:
    rs = omega_prime.rs
    found = []
    for w in group:
        base = dot_act(w.inverse(), omega_prime)
        if is_strongly_dominant(base):
            bl = integral_root_data(base).b_lambda
            found.append(Witness(w, base, bl, W.is_min_coset_rep(rs, bl, w)))
    return found


def fcr_decide(omega_prime: LinearIdeal, group=None) -> FcrVerdict:
    rs = omega_prime.rs
    group = W.enumerate_group(rs) if group is None else group
    found = _witnesses(omega_prime, group)
    if not found:
        return FcrVerdict(NOT_FCR if rs.is_semisimple else UNKNOWN)
    first = found[0]
    for other in found[1:]:
        if other.in_coset_reps != first.in_coset_reps:
            raise WitnessDivergence(
                "strongly dominant bases disagree on coset membership",
                {
                    "ideal": omega_prime.to_json(),
                    "w1": W.format_word(W.reduced_word(rs, first.w)),
                    "w2": W.format_word(W.reduced_word(rs, other.w)),
                    "w1_in_coset_reps": first.in_coset_reps,
                    "w2_in_coset_reps": other.in_coset_reps,
                },
            )
    if first.in_coset_reps:
        v = omega_prime.variety
        status = FCR
        if v.dim == 0 and rs.is_dominant_integral(v.base):
            status = FINITE
    else:
        status = NOT_FCR if rs.is_semisimple else UNKNOWN
    return FcrVerdict(status, first.w, first.base, first.b_lambda, tuple(found))


def equivalence_bc(omega: LinearIdeal, w: W.WeylElement) -> bool:
    """For strongly dominant ``Omega``: ``w`` lies in ``W^lambda``."""
    if not is_strongly_dominant(omega):
        raise FcrError("base ideal is not strongly dominant")
    return W.is_min_coset_rep(omega.rs, integral_root_data(omega).b_lambda, w)


def pieces_to_json(pieces: Sequence[AffineSubspace]) -> list:
    out = []
    for p in pieces:
        if p.dim == 0:
            out.append({"weight": [fmt_rat(x) for x in p.base]})
        else:
            out.append({
                "base_point": [fmt_rat(x) for x in p.base],
                "directions": [[fmt_rat(x) for x in d] for d in p.directions],
            })
    return out


__all__ = [
    "FCR",
    "FINITE",
    "NOT_FCR",
    "UNKNOWN",
    "FcrError",
    "FcrVerdict",
    "Witness",
    "WitnessDivergence",
    "annihilator_contains",
    "equivalence_bc",
    "fcr_decide",
    "lambda_set",
    "lambda_weights",
    "pieces_to_json",
]
