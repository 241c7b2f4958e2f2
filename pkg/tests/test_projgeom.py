from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gf2_rank
from polarsrg import projgeom as pg
from polarsrg.errors import AmbientMismatch, ZeroVector
from polarsrg.gf import field_new


def unit(i, m):
    return tuple(int(j == i) for j in range(m + 1))


def test_normalize():
    assert pg.normalize((2, 1, 0), field_new(3)) == (1, 2, 0)
    assert pg.normalize((0, 1, 1), field_new(2)) == (0, 1, 1)
    with pytest.raises(ZeroVector):
        pg.normalize((0, 0, 0), field_new(2))


@pytest.mark.parametrize("m,q,count", [(7, 2, 255), (0, 3, 1), (3, 3, 40), (2, 4, 21), (2, 7, 57)])
def test_point_counts(m, q, count):
    ctx = field_new(q)
    pts = pg.enumerate_points(m, ctx)
    assert len(pts) == count == pg.theta(m + 1, q)
    assert pts == sorted(pts)
    # every nonzero vector normalizes to exactly one listed point
    seen = {pg.normalize(v, ctx) for v in product(range(q), repeat=m + 1) if any(v)}
    assert seen == set(pts)


def test_theta():
    assert pg.theta(4, 2) == 15
    assert pg.theta(8, 2) == 255
    assert all(pg.theta(1, q) == 1 for q in (2, 3, 4, 5, 7))


def test_span_meet_contains_examples():
    F = field_new(2)
    m = 7
    U = [unit(i, m) for i in range(m + 1)]
    l12 = pg.span([U[0], U[1]], F)
    assert l12.dim == 1 and len(l12.rows) == 2
    assert pg.span([U[0]], F).dim == 0
    assert pg.meet(l12, l12) == l12
    l34 = pg.span([U[2], U[3]], F)
    assert pg.meet(l12, l34).dim == -1
    hyper = pg.subspace([U[i] for i in range(1, m + 1)], F, m)  # X_1 = 0
    assert pg.meet(hyper, l12) == pg.span([U[1]], F)
    assert pg.contains(l12, (1, 1, 0, 0, 0, 0, 0, 0))
    assert not pg.contains(pg.span([U[0]], F), U[1])
    assert not pg.contains(pg.empty_subspace(m, F), U[0])


def test_ambient_mismatch():
    F = field_new(2)
    with pytest.raises(AmbientMismatch):
        pg.span([(1, 0, 0), (1, 0, 0, 0)], F)
    with pytest.raises(AmbientMismatch):
        pg.meet(pg.whole_space(2, F), pg.whole_space(3, F))
    with pytest.raises(AmbientMismatch):
        pg.contains(pg.whole_space(2, F), (1, 0))


def test_bit_and_scalar_rref_agree():
    rng = np.random.default_rng(5)
    F = field_new(2)
    for _ in range(500):
        r, w = int(rng.integers(1, 10)), int(rng.integers(1, 12))
        M = rng.integers(0, 2, size=(r, w)).tolist()
        fast = [pg.unpack(x, w) for x in pg.rref_bits(pg.pack(v) for v in M)]
        assert fast == pg.rref_scalar(M, F)
        assert len(fast) == gf2_rank(M)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_nullspace_is_orthogonal_and_complementary(q):
    F = field_new(q)
    rng = np.random.default_rng(q)
    for _ in range(60):
        w = int(rng.integers(2, 7))
        rows = rng.integers(0, q, size=(int(rng.integers(1, w + 1)), w)).tolist()
        red = pg.rref(rows, F, w)
        ns = pg.nullspace(rows, F, w)
        assert len(red) + len(ns) == w
        for a in red:
            for b in ns:
                assert F.dot(a, b) == 0


def _random_subspace(rng, F, m, k):
    rows = rng.integers(0, F.q, size=(k, m + 1)).tolist()
    return pg.subspace(rows, F, m)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_grassmann_identity(q):
    F = field_new(q)
    rng = np.random.default_rng(10 + q)
    m = 4
    for _ in range(80):
        a = _random_subspace(rng, F, m, int(rng.integers(0, 5)))
        b = _random_subspace(rng, F, m, int(rng.integers(0, 5)))
        j, mt = pg.join(a, b), pg.meet(a, b)
        assert j.dim + mt.dim == a.dim + b.dim
        # the meet really is the common point set
        assert set(pg.points_of(mt)) == set(pg.points_of(a)) & set(pg.points_of(b))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_points_of_subspace(q):
    F = field_new(q)
    rng = np.random.default_rng(q)
    for _ in range(30):
        s = _random_subspace(rng, F, 3, int(rng.integers(1, 4)))
        pts = pg.points_of(s)
        assert len(pts) == pg.theta(s.dim + 1, q)
        assert all(pg.contains(s, p) for p in pts)


def test_line_points():
    F = field_new(3)
    pts = pg.line_points((1, 0, 0), (0, 1, 0), F)
    assert len(set(pts)) == 4
    assert pg.span(pts, F).dim == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=6, max_size=6), min_size=1, max_size=6))
def test_annihilator_is_involutive(rows):
    F = field_new(2)
    s = pg.subspace(rows, F, 5)
    assert pg.annihilator(pg.annihilator(s)) == s
    assert pg.annihilator(s).dim == 5 - s.dim - 1
