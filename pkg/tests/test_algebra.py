import random

import pytest
from hypothesis import given

import oracles as orc
from conftest import relation_tuples, relations
from relpaths.algebra import (
    MAX_VERTICES,
    Relation,
    Universe,
    UniverseMismatch,
    all_relations,
    atom,
    compose,
    empty,
    identity,
    point,
    universal,
    vector,
)


def test_universe_bounds():
    assert Universe(0).size == 1
    assert Universe(3).size == 512
    with pytest.raises(ValueError):
        Universe(-1)
    with pytest.raises(ValueError):
        Universe(MAX_VERTICES + 1)


def test_encoding_is_row_major(rel):
    r = rel(3, [(0, 1), (2, 0)])
    assert r.bits == (1 << 1) | (1 << 6)
    assert r.pairs() == [(0, 1), (2, 0)]
    assert Relation.from_matrix(r.to_matrix()) == r


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        Relation(2, 1 << 4)
    with pytest.raises(ValueError):
        Relation.from_pairs(2, [(0, 2)])


def test_union_example(rel):
    assert rel(3, [(0, 1)]) | rel(3, [(1, 2)]) == rel(3, [(0, 1), (1, 2)])


def test_meet_with_complement_is_empty():
    for r in all_relations(3):
        assert r & ~r == empty(3)


def test_identity_below_universal():
    assert identity(4) <= universal(4)


def test_compose_examples(rel):
    assert rel(3, [(0, 1)]) @ rel(3, [(1, 2)]) == rel(3, [(0, 2)])
    assert rel(4, [(0, 1), (0, 2)]) @ rel(4, [(1, 3), (2, 3)]) == rel(4, [(0, 3)])


def test_compose_identity_unit_exhaustive():
    I = identity(3)
    for r in all_relations(3):
        assert r @ I == r


def test_converse_examples(rel):
    assert rel(3, [(0, 1)]).T == rel(3, [(1, 0)])
    for r in all_relations(3):
        assert r.T.T == r


def test_converse_of_composition_random():
    rng = random.Random(5)
    for _ in range(1000):
        r, s = Relation(5, rng.getrandbits(25)), Relation(5, rng.getrandbits(25))
        assert (r @ s).T == s.T @ r.T


def test_star_examples(rel):
    assert empty(3).star() == identity(3)
    chain = rel(3, [(0, 1), (1, 2)])
    assert chain.star() == identity(3) | rel(3, [(0, 1), (1, 2), (0, 2)])
    assert rel(3, [(0, 1), (1, 2), (2, 0)]).star() == universal(3)


def test_plus_examples(rel):
    assert empty(3).plus() == empty(3)
    assert rel(3, [(0, 0)]).plus() == rel(3, [(0, 0)])
    assert rel(3, [(0, 1), (1, 2)]).plus() == rel(3, [(0, 1), (1, 2), (0, 2)])


def test_universe_mismatch_names_both():
    with pytest.raises(UniverseMismatch, match="n=2 vs n=3"):
        empty(2) | empty(3)
    for op in ("__and__", "__matmul__", "__le__", "__eq__"):
        with pytest.raises(UniverseMismatch):
            getattr(empty(2), op)(empty(3))


def test_n_zero_collapses_constants():
    assert empty(0) == universal(0) == identity(0)
    assert len(list(all_relations(0))) == 1


def test_vectors_points_atoms():
    v = vector(3, [0, 2])
    assert v.row_set() == [0, 2]
    assert point(3, 1) == vector(3, [1])
    assert atom(3, 1, 2).pairs() == [(1, 2)]


def test_compose_variadic(rel):
    r = rel(3, [(0, 1)])
    assert compose(r) == r
    assert compose(r, r.T, r) == r
    with pytest.raises(TypeError):
        compose()


def test_operations_return_fresh_values(rel):
    r = rel(3, [(0, 1)])
    before = r.bits
    _ = r | rel(3, [(1, 2)]), ~r, r @ r, r.T, r.star()
    assert r.bits == before


def test_all_relations_order():
    bits = [r.bits for r in all_relations(2)]
    assert bits == list(range(16))


# -- oracle agreement ------------------------------------------------------


@given(relation_tuples(2, max_n=6))
def test_compose_matches_pointwise(rs):
    r, s = rs
    n = r.n
    got = orc.pairs_of((r @ s).bits, n)
    assert got == orc.compose(orc.pairs_of(r.bits, n), orc.pairs_of(s.bits, n), n)


@given(relations(max_n=6))
def test_star_matches_fixpoint(r):
    n = r.n
    assert orc.pairs_of(r.star().bits, n) == orc.star_fixpoint(orc.pairs_of(r.bits, n), n)


@given(relations(max_n=7))
def test_plus_matches_bfs(r):
    n = r.n
    assert orc.pairs_of(r.plus().bits, n) == orc.plus_bfs(orc.pairs_of(r.bits, n), n)


@given(relations(max_n=7))
def test_converse_and_dom_pointwise(r):
    n = r.n
    ps = orc.pairs_of(r.bits, n)
    assert orc.pairs_of(r.T.bits, n) == orc.converse(ps)
    assert r.dom().row_set() == sorted({a for a, _ in ps})


@given(relations(min_n=9, max_n=12))
def test_large_universes_match_oracle(r):
    n = r.n
    ps = orc.pairs_of(r.bits, n)
    assert orc.pairs_of(r.plus().bits, n) == orc.plus_bfs(ps, n)
    assert orc.pairs_of(r.T.bits, n) == orc.converse(ps)


# -- algebraic properties --------------------------------------------------


@given(relation_tuples(3, max_n=5))
def test_monotonicity(rs):
    r, s, t = rs
    s = r | s  # force r <= s
    assert r | t <= s | t
    assert r & t <= s & t
    assert r @ t <= s @ t and t @ r <= t @ s
    assert r.T <= s.T
    assert ~s <= ~r


@given(relation_tuples(2, max_n=5))
def test_subset_iff_union(rs):
    r, s = rs
    assert (r <= s) == ((r | s) == s)


@given(relations(max_n=6))
def test_star_consequences(r):
    assert r.T.star() == r.star().T
    assert r.star() == identity(r.n) | r.plus()
    assert r.star() @ r.star() == r.star()


@given(relations(min_n=1, max_n=6))
def test_tarski(r):
    L = universal(r.n)
    assert bool(r) == (L @ r @ L == L)


@given(relations(max_n=6))
def test_hash_and_equality(r):
    same = Relation(r.n, r.bits)
    assert r == same and hash(r) == hash(same)
    assert len(r) == len(r.pairs())
