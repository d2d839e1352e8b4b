from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fcrweyl import weyl as W
from fcrweyl.exactlin import AffineSubspace, dot
from fcrweyl.ideals import (
    IdealError,
    LinearIdeal,
    canonicalize,
    coordinate,
    corpus,
    dot_act,
    dot_functional,
    from_json,
    integral_root_data,
    is_dominant,
    is_strongly_dominant,
    lambda_plus_class,
    point_ideal,
    random_ideal,
    simple_coroot,
    strong_dominance_certificate,
    tau_invariant,
)
from fcrweyl.oracles import density_oracle
from fcrweyl.rootsys import build, coroot_vector

SMALL = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("GL", 2), ("GL", 3), ("D", 3), ("C", 3), ("B", 3)]


def ideal(rs, *funcs):
    return canonicalize(rs, funcs)


def test_generators_are_canonical():
    rs = build("C", 2)
    h1 = simple_coroot(rs, 1)
    assert ideal(rs, (h1, 0)) == ideal(rs, (tuple(2 * x for x in h1), 0))
    gl2 = build("GL", 2)
    assert ideal(gl2, (coordinate(gl2, 2), 0)).variety == AffineSubspace.make((0, 0), [(1, 0)])
    e1 = coordinate(rs, 1)
    with pytest.raises(IdealError):
        ideal(rs, (e1, 0), (e1, 1))
    with pytest.raises(IdealError):
        ideal(rs, ((1, 0, 0), 0))


def test_json_round_trip_and_errors():
    rs = build("C", 3)
    om = ideal(rs, (simple_coroot(rs, 2), 0), (coordinate(rs, 1), F(1, 2)))
    assert from_json(om.to_json()) == om
    assert from_json({"system": {"kind": "C", "n": 3}, "functionals": [{"H": 2}, {"E": 1, "c": "1/2"}]}) == om
    for bad in (
        {"functionals": []},
        {"system": {"kind": "C", "n": 3}, "functionals": [{"H": 9}]},
        {"system": {"kind": "C", "n": 3}, "functionals": [{"h": [1, 0], "c": 0}]},
        {"system": {"kind": "Q", "n": 3}, "functionals": []},
        {"system": {"kind": "C", "n": 3}, "functionals": [{"H": 1, "E": 1}]},
    ):
        with pytest.raises(IdealError):
            from_json(bad)


def test_integral_root_data_examples():
    c3 = build("C", 3)
    mu = point_ideal(c3, (2, 1, 0))
    data = integral_root_data(mu)
    assert data.r_lambda == frozenset(c3.roots)
    assert set(data.b_lambda) == set(c3.simple_roots)
    assert integral_root_data(LinearIdeal(c3, AffineSubspace.whole(3))).r_lambda == frozenset()
    base = ideal(c3, (simple_coroot(c3, 2), 0), (simple_coroot(c3, 3), 0))
    data = integral_root_data(base)
    # brute force over all 18 coroots
    brute = set()
    for a in c3.roots:
        const, lin = base.variety.restrict(coroot_vector(a))
        if not any(lin) and const.denominator == 1:
            brute.add(a)
    assert data.r_lambda == brute
    # B_lambda generates exactly the positive part of R_lambda
    assert set(c3.subsystem(data.b_lambda).positive) == {a for a in brute if c3.is_positive_root(a)}


@pytest.mark.parametrize("system", SMALL)
def test_b_lambda_generates_r_lambda_on_corpus(system):
    rs = build(*system)
    for om in corpus(rs, 30, seed=3):
        data = integral_root_data(om)
        assert set(rs.subsystem(data.b_lambda).roots) == set(data.r_lambda)


def test_dominance_classes():
    a1 = build("A", 1)
    h = simple_coroot(a1, 1)
    assert not is_dominant(ideal(a1, (h, 2)))
    assert lambda_plus_class(ideal(a1, (h, 2))) == "neither"
    assert lambda_plus_class(ideal(a1, (h, 1))) == "weak"
    assert lambda_plus_class(point_ideal(build("C", 2), (1, 0))) == "strict"
    assert is_dominant(LinearIdeal(a1, AffineSubspace.whole(2)))


def test_strong_dominance_examples():
    a1 = build("A", 1)
    h = simple_coroot(a1, 1)
    assert is_strongly_dominant(ideal(a1, (h, 0)))
    assert not is_strongly_dominant(ideal(a1, (h, 2)))
    assert is_strongly_dominant(LinearIdeal(a1, AffineSubspace.whole(2)))
    c2 = build("C", 2)
    assert is_strongly_dominant(point_ideal(c2, (1, 0)))
    assert not is_strongly_dominant(point_ideal(c2, (0, 1)))
    # a line where the coroot values are forced to be half-integers
    line = LinearIdeal(c2, AffineSubspace.make((F(1, 2), 0), [(0, 1)]))
    cert = strong_dominance_certificate(line)
    assert not cert.dense
    # a line leaving the dominant cone in both directions
    bad = LinearIdeal(c2, AffineSubspace.make((2, 1), [(1, 2)]))
    assert not is_strongly_dominant(bad)
    good = LinearIdeal(c2, AffineSubspace.make((2, 1), [(2, 1)]))
    assert is_strongly_dominant(good)


def test_tau_invariant_extremes():
    rs = build("B", 3)
    om = point_ideal(rs, (2, 1, 0))
    bl = integral_root_data(om).b_lambda
    top = W.longest_element(rs, rs.subsystem(bl))
    assert tau_invariant(rs, bl, top) == frozenset(bl)
    assert tau_invariant(rs, bl, W.identity(rs)) == frozenset()


# ---------------------------------------------------------------------------
# properties


@st.composite
def ideals_with_elements(draw):
    rs = build(*draw(st.sampled_from(SMALL)))
    rng = random.Random(draw(st.integers(0, 10**6)))
    om = random_ideal(rs, rng)
    group = W.enumerate_group(rs)
    u = group[draw(st.integers(0, len(group) - 1))]
    v = group[draw(st.integers(0, len(group) - 1))]
    return rs, om, u, v


@given(ideals_with_elements())
def test_dot_action_is_a_group_action(case):
    rs, om, u, v = case
    assert dot_act(W.identity(rs), om) == om
    assert dot_act(u * v, om) == dot_act(u, dot_act(v, om))
    assert dot_act(u.inverse(), dot_act(u, om)) == om
    assert dot_act(u, om).dim == om.dim


@given(st.sampled_from(SMALL), st.data())
def test_duality(system, data):
    rs = build(*system)
    group = W.enumerate_group(rs)
    w = group[data.draw(st.integers(0, len(group) - 1))]
    ints = st.integers(-4, 4)
    h = tuple(data.draw(ints) for _ in range(rs.ambient_dim))
    mu = tuple(data.draw(ints) for _ in range(rs.ambient_dim))
    c = data.draw(ints)
    h2, c2 = dot_functional(rs, w, h, c)
    assert dot(h2, mu) + c2 == dot(h, W.dot_apply(rs, w.inverse(), mu)) + c


@given(ideals_with_elements())
def test_strongly_dominant_implies_dominant(case):
    rs, om, u, _ = case
    for x in (om, dot_act(u, om)):
        if is_strongly_dominant(x):
            assert is_dominant(x)


@given(ideals_with_elements())
def test_strong_dominance_matches_oracle(case):
    rs, om, u, _ = case
    x = dot_act(u, om)
    verdict, stable = density_oracle(rs, x.variety)
    if stable:
        assert is_strongly_dominant(x) == verdict


def test_corpus_is_deterministic():
    rs = build("B", 2)
    assert corpus(rs, 20, seed=5) == corpus(rs, 20, seed=5)
    assert corpus(rs, 20, seed=5) != corpus(rs, 20, seed=6)
