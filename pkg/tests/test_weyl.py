from __future__ import annotations

import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from fcrweyl import weyl as W
from fcrweyl._kernels import compiled_backend, python_backend
from fcrweyl.rootsys import build, reflect

SYSTEMS = [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("GL", 3), ("C", 2), ("B", 2), ("D", 3)]


def matrix_apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


@pytest.mark.parametrize("kind,n,order", [("A", 3, 24), ("C", 2, 8), ("D", 4, 192), ("B", 3, 48)])
def test_group_orders(kind, n, order):
    g = W.enumerate_group(build(kind, n))
    assert len(g) == order
    assert len({w.images for w in g}) == order


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_simple_reflections_match_reflection_formula(kind, n):
    rs = build(kind, n)
    for i, a in enumerate(rs.simple_roots, start=1):
        s = W.simple_reflection(rs, i)
        for b in rs.roots:
            assert s.apply(b) == reflect(b, a)
        assert (s * s).is_identity


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_inversion_sets_and_lengths(kind, n):
    rs = build(kind, n)
    for w in W.enumerate_group(rs):
        q = W.inversion_set(rs, w)
        brute = {a for a in rs.positive_roots if not rs.is_positive_root(w.apply(a))}
        assert q == brute
        assert W.length(rs, w) == len(q) == W.length(rs, w.inverse())
        assert W.rho_difference(rs, w) == tuple(a - b for a, b in zip(rs.rho, w.inverse().apply(rs.rho)))
        word = W.reduced_word(rs, w)
        assert len(word) == len(q)
        assert W.from_word(rs, word) == w
        assert matrix_apply(w.matrix, rs.rho) == w.apply(rs.rho)


def test_spec_examples():
    rs = build("B", 3)
    e = W.identity(rs)
    assert W.root_sum(W.inversion_list(rs, e), 3) == (0, 0, 0)
    assert W.reduced_word(rs, e) == ()
    s1 = W.simple_reflection(rs, 1)
    assert W.reduced_word(rs, s1) == (1,)
    for i, a in enumerate(rs.simple_roots, start=1):
        s = W.simple_reflection(rs, i)
        assert W.inversion_set(rs, s) == {a}
        assert W.rho_difference(rs, s) == a
    assert W.parse_word("s1 s2") == W.parse_word("1 2") == (1, 2)
    assert W.format_word((1, 2)) == "s1 s2"
    gl2 = build("GL", 2)
    assert W.dot_apply(gl2, W.simple_reflection(gl2, 1), (1, 1)) == (0, 2)


def test_full_subsystem_decomposition_is_trivial():
    rs = build("B", 2)
    dec = W.stabilizer_decomposition(rs, rs.full_subsystem())
    assert len(dec.w0) == len(dec.w1) == 8
    assert [t.images for t in dec.t] == [W.identity(rs).images]
    e = W.identity(rs)
    assert dec.factorization[e] == (e, e)


def test_subsystem_examples():
    rs = build("A", 3)
    sub = rs.subsystem([rs.simple_roots[0], rs.simple_roots[2]])
    dec = W.stabilizer_decomposition(rs, sub)
    assert (len(dec.w0), len(dec.w1), len(dec.t)) == (8, 4, 2)
    for t in dec.t:
        assert W.kappa_check(rs, sub, t).ok
    for w in dec.w1:
        assert W.subsystem_inversions(rs, sub, w) == W.inversion_set(rs, w)
    top = W.longest_element(rs, sub)
    assert W.inversion_sum_pairing(rs, sub, top) > 0
    assert W.inversion_sum_pairing(rs, sub, W.identity(rs)) == 0
    assert W.subsystem_inversions(rs, sub, W.identity(rs)) == frozenset()


def test_kappa_over_all_parabolics_of_b3():
    rs = build("B", 3)
    group = W.enumerate_group(rs)
    for size in range(4):
        for b1 in itertools.combinations(rs.simple_roots, size):
            sub = rs.subsystem(b1)
            for t in W.stabilizer_decomposition(rs, sub, group).t:
                assert W.kappa_check(rs, sub, t).ok


def test_non_stabilizer_is_rejected():
    rs = build("A", 2)
    sub = rs.subsystem([rs.simple_roots[0]])
    with pytest.raises(W.WeylError):
        W.inversion_sum_pairing(rs, sub, W.simple_reflection(rs, 2))


def test_coset_decomposition():
    rs = build("C", 3)
    bl = [rs.simple_roots[0], rs.simple_roots[2]]
    wl = set(W.subgroup(rs, bl))
    for w in W.enumerate_group(rs):
        u, v = W.coset_decompose(rs, bl, w)
        assert u * v == w
        assert W.is_min_coset_rep(rs, bl, u)
        assert v in wl
        assert W.length(rs, w) == W.length(rs, u) + W.length(rs, v)
    v = W.simple_reflection(rs, 1)
    assert W.coset_decompose(rs, bl, v) == (W.identity(rs), v)
    assert not W.is_min_coset_rep(rs, bl, v)


def test_group_cap(monkeypatch):
    rs = build("D", 4)
    with pytest.raises(W.WeylError):
        W.enumerate_group(rs, cap=100)
    monkeypatch.setenv("WEYL_GROUP_CAP", "50")
    with pytest.raises(W.WeylError):
        W.enumerate_group(rs)


def test_parse_word_errors():
    for bad in ("s0", "x1", "s1 t"):
        with pytest.raises(W.WeylError):
            W.parse_word(bad)
    with pytest.raises(W.WeylError):
        W.from_word(build("A", 2), (3,))


# ---------------------------------------------------------------------------
# group laws on random words


def words(rank):
    return st.lists(st.integers(1, rank), max_size=8)


@given(st.sampled_from(SYSTEMS), st.data())
def test_group_laws(system, data):
    rs = build(*system)
    u = W.from_word(rs, data.draw(words(rs.rank)))
    v = W.from_word(rs, data.draw(words(rs.rank)))
    x = W.from_word(rs, data.draw(words(rs.rank)))
    assert (u * v) * x == u * (v * x)
    assert (u * u.inverse()).is_identity
    for a in rs.simple_roots:
        assert (u * v).apply(a) == u.apply(v.apply(a))
    # length is subadditive and the dot action composes
    assert W.length(rs, u * v) <= W.length(rs, u) + W.length(rs, v)
    mu = tuple(range(rs.ambient_dim))
    assert W.dot_apply(rs, u * v, mu) == W.dot_apply(rs, u, W.dot_apply(rs, v, mu))


# ---------------------------------------------------------------------------
# kernel backends


@pytest.mark.skipif(compiled_backend is None, reason="compiled extension not built")
@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_backends_agree(kind, n):
    rs = build(kind, n)
    gens = rs.simple_reflection_images()
    els_py, words_py = python_backend.enumerate_bfs(gens, 10**6)
    els_c, words_c = compiled_backend.enumerate_bfs(gens, 10**6)
    assert list(els_py) == list(els_c) and list(words_py) == list(words_c)
    pos = rs.positive_roots
    for a in els_py[:200]:
        for b in els_py[:20]:
            assert python_backend.compose(a, b) == compiled_backend.compose(a, b)
        assert python_backend.invert(a) == compiled_backend.invert(a)
        assert python_backend.negative_indices(a, pos) == compiled_backend.negative_indices(a, pos)
        assert python_backend.count_negative(a, pos) == compiled_backend.count_negative(a, pos)
        for r in pos[:5]:
            assert python_backend.act(a, r) == compiled_backend.act(a, r)


@pytest.mark.skipif(compiled_backend is None, reason="compiled extension not built")
def test_backend_cap_errors_agree():
    gens = build("B", 3).simple_reflection_images()
    for mod in (python_backend, compiled_backend):
        with pytest.raises(OverflowError):
            mod.enumerate_bfs(gens, 10)


def test_pure_python_switch():
    code = "import fcrweyl; print(fcrweyl.BACKEND)"
    env = dict(os.environ, FCRWEYL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
