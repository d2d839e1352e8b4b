from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from fcrweyl import weyl as W
from fcrweyl.exactlin import AffineSubspace
from fcrweyl.fcr import (
    FCR,
    FINITE,
    NOT_FCR,
    UNKNOWN,
    FcrError,
    annihilator_contains,
    equivalence_bc,
    fcr_decide,
    lambda_set,
    lambda_weights,
)
from fcrweyl.howe import omega_case_B
from fcrweyl.ideals import (
    LinearIdeal,
    canonicalize,
    coordinate,
    dot_act,
    integral_root_data,
    is_strongly_dominant,
    point_ideal,
    random_ideal,
    simple_coroot,
)
from fcrweyl.rootsys import build


def test_point_ideal_of_dominant_weight_is_finite_dimensional():
    for kind, n, mu in [("C", 3, (2, 1, 0)), ("B", 2, (1, 1)), ("GL", 3, (2, 1, 0)), ("A", 2, (1, 0, 0))]:
        rs = build(kind, n)
        assert fcr_decide(point_ideal(rs, mu)).status == FINITE


def test_sl2_example_is_not_fcr():
    a1 = build("A", 1)
    om = canonicalize(a1, [(simple_coroot(a1, 1), 2)])
    v = fcr_decide(om)
    assert v.status == NOT_FCR
    assert W.reduced_word(a1, v.witness_w) == (1,)
    assert v.base_ideal == canonicalize(a1, [(simple_coroot(a1, 1), 0)])
    assert v.b_lambda == a1.simple_roots
    assert not equivalence_bc(v.base_ideal, v.witness_w)
    assert equivalence_bc(v.base_ideal, W.identity(a1))


def test_top_dual_pair_component_is_fcr():
    assert fcr_decide(omega_case_B(0, 3, 1)).status == FCR


def test_reductive_verdicts_are_never_not_fcr():
    gl2 = build("GL", 2)
    om = canonicalize(gl2, [(simple_coroot(gl2, 1), 2)])
    assert fcr_decide(om).status == UNKNOWN


def test_annihilator_containment():
    gl2 = build("GL", 2)
    om = canonicalize(gl2, [(coordinate(gl2, 2), 0)])
    for m in range(4):
        assert annihilator_contains(om, (m, 0))
    assert not annihilator_contains(om, (1, 1))
    with pytest.raises(FcrError):
        annihilator_contains(om, (0, 1))


def test_lambda_set_examples():
    c2 = build("C", 2)
    assert lambda_weights(lambda_set(point_ideal(c2, (2, 1)), 4)) == [(2, 1)]
    whole = lambda_set(LinearIdeal(c2, AffineSubspace.whole(2)), 2)
    assert len(whole) == 9
    with pytest.raises(FcrError):
        lambda_set(point_ideal(c2, (2, 1)), -1)
    gl2 = build("GL", 2)
    pieces = lambda_set(canonicalize(gl2, [(coordinate(gl2, 2), 0)]), 3)
    # (m, 0) lies on the variety; (-1, -1-m) reaches it through the reflection
    expected = {(m, 0) for m in range(4)} | {(-1, -1 - m) for m in range(4)}
    assert set(lambda_weights(pieces)) == expected


def test_divergence_never_raised_on_small_systems():
    for kind, n in [("A", 2), ("B", 2), ("C", 2), ("GL", 3)]:
        rs = build(kind, n)
        rng = random.Random(kind)
        for _ in range(25):
            fcr_decide(random_ideal(rs, rng))


SYSTEMS = [("A", 2), ("B", 2), ("C", 2), ("GL", 3), ("B", 3)]


@given(st.sampled_from(SYSTEMS), st.integers(0, 10**6), st.data())
def test_witness_translation(system, seed, data):
    """A strongly dominant base moved by any w is classified by w in W^lambda."""
    rs = build(*system)
    om = random_ideal(rs, random.Random(seed))
    if not is_strongly_dominant(om):
        return
    group = W.enumerate_group(rs)
    w = group[data.draw(st.integers(0, len(group) - 1))]
    verdict = fcr_decide(dot_act(w, om), group)
    in_reps = W.is_min_coset_rep(rs, integral_root_data(om).b_lambda, w)
    if in_reps:
        assert verdict.status in (FCR, FINITE)
    else:
        assert verdict.status == (NOT_FCR if rs.is_semisimple else UNKNOWN)


@given(st.sampled_from(SYSTEMS), st.integers(0, 10**6))
def test_lambda_set_is_monotone_in_the_bound(system, seed):
    rs = build(*system)
    om = random_ideal(rs, random.Random(seed))
    small = set(lambda_set(om, 1))
    big = set(lambda_set(om, 2))
    assert small <= big
    for p in small:
        if p.dim == 0:
            assert annihilator_contains(om, p.base)
