import pytest
from hypothesis import given

import oracles as orc
from conftest import relations
from relpaths.algebra import all_relations, empty, identity, point, universal, vector
from relpaths.algorithms import choose_point
from relpaths.predicates import (
    BasicProperty,
    PathClass,
    PathRequired,
    Rooted,
    RootedPreconditionError,
    TerminationKind,
    classify,
    end_points,
    has_termination,
    is_acyclic,
    is_basic,
    is_connected,
    is_cycle,
    is_injective,
    is_path,
    is_point,
    is_univalent,
    is_well_founded,
    min_set,
    path_defects,
    rooted_check,
    start_points,
)


def chain(n, length=None):
    length = n - 1 if length is None else length
    from relpaths.algebra import Relation

    return Relation.from_pairs(n, [(i, i + 1) for i in range(length)])


def cyc(n):
    from relpaths.algebra import Relation

    return Relation.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


# -- worked examples ---------------------------------------------------------


def test_basic_examples(rel):
    r = rel(3, [(0, 1), (1, 2)])
    assert is_basic(r, BasicProperty.UNIVALENT)
    assert not is_basic(r | rel(3, [(0, 2)]), "Univalent")
    assert is_basic(vector(3, [0, 2]), BasicProperty.VECTOR)
    assert is_basic(rel(3, [(1, 2)]), BasicProperty.ATOM)
    assert not is_basic(cyc(3), BasicProperty.ACYCLIC)


def test_connected_examples(rel):
    # forks and merges around a cycle: connected but neither univalent nor injective
    tangle = rel(6, [(0, 2), (2, 4), (4, 5), (5, 3), (3, 2), (2, 1)])
    assert is_connected(tangle)
    assert path_defects(tangle) == ["not univalent", "not injective"]
    # in the diamond the two middle vertices cannot reach each other
    diamond = rel(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
    assert not is_connected(diamond)
    assert is_connected(empty(3))
    assert not is_connected(rel(4, [(0, 1), (2, 3)]))


def test_path_examples(rel):
    assert is_path(chain(4))
    assert is_path(empty(4))
    assert not is_path(rel(3, [(0, 1), (0, 2)]))
    assert path_defects(rel(3, [(0, 1), (0, 2)])) == ["not univalent"]
    assert path_defects(chain(3)) == []


def test_start_end_examples(rel):
    assert start_points(chain(3)) == vector(3, [0])
    assert end_points(chain(3)) == vector(3, [2])
    assert start_points(cyc(3)) == empty(3)
    assert start_points(rel(3, [(0, 1), (2, 1)])) == vector(3, [0, 2])


def test_termination_examples():
    assert has_termination(chain(3), TerminationKind.TERMINATING)
    assert not has_termination(cyc(3), "BackwardTerminating")
    assert has_termination(cyc(3), "BackwardFinite")
    assert has_termination(empty(3), TerminationKind.TERMINATING)
    with pytest.raises(PathRequired):
        has_termination(universal(2), TerminationKind.FINITE)


def test_cycle_examples(rel):
    assert is_cycle(empty(3))
    assert is_cycle(rel(2, [(0, 0)]))
    assert is_cycle(rel(2, [(0, 1), (1, 0)]))
    assert not is_cycle(chain(3))


def test_classify_examples(rel):
    assert classify(empty(3)) is PathClass.EMPTY
    assert classify(rel(2, [(0, 1), (1, 0)])) is PathClass.CYCLE
    assert classify(chain(4)) is PathClass.FINITE_CHAIN
    assert classify(rel(2, [(0, 1), (0, 0)])) is PathClass.NOT_A_PATH


def test_min_set_examples(rel):
    L = universal(3)
    assert min_set(rel(3, [(0, 2), (1, 2)]), L) == vector(3, [0, 1])
    assert min_set(rel(3, [(0, 1)]), empty(3)) == empty(3)
    assert min_set(cyc(3), L) == empty(3)
    with pytest.raises(ValueError):
        min_set(L, rel(3, [(0, 1)]))


def test_rooted_examples():
    assert rooted_check(chain(3), point(3, 0), Rooted.BACKWARD_TERMINATING)
    assert rooted_check(cyc(3), point(3, 1), "RootedCycle")
    assert rooted_check(empty(3), point(3, 0), Rooted.PATH)
    assert rooted_check(chain(3), point(3, 0), Rooted.TERMINATING, point(3, 2))


def test_rooted_preconditions(rel):
    with pytest.raises(RootedPreconditionError, match="univalent"):
        rooted_check(rel(3, [(0, 1), (0, 2)]), point(3, 0), Rooted.PATH)
    with pytest.raises(RootedPreconditionError, match="p point"):
        rooted_check(chain(3), vector(3, [0, 1]), Rooted.PATH)
    with pytest.raises(RootedPreconditionError, match="q point"):
        rooted_check(chain(3), point(3, 0), Rooted.TERMINATING)


# -- oracle agreement ------------------------------------------------------

BASIC_ORACLES = {
    "Univalent": orc.univalent,
    "Injective": orc.injective,
    "Total": orc.total,
    "Surjective": orc.surjective,
    "Vector": orc.is_vector,
    "Point": orc.is_point,
    "Atom": orc.is_atom,
    "Acyclic": orc.acyclic,
    "WellFounded": orc.acyclic,
}


@given(relations(max_n=6))
def test_basic_properties_match_oracles(r):
    ps = orc.pairs_of(r.bits, r.n)
    for name, fn in BASIC_ORACLES.items():
        assert is_basic(r, name) == fn(ps, r.n), name
    # bijective here means injective and surjective, not a permutation
    assert is_basic(r, "Bijective") == (orc.injective(ps, r.n) and orc.surjective(ps, r.n))
    assert is_basic(r, "Irreflexive") == all(a != b for a, b in ps)
    assert is_basic(r, "Symmetric") == (ps == orc.converse(ps))


@pytest.mark.parametrize("n", range(5))
def test_path_matches_bfs_oracle_exhaustive(n):
    for r in all_relations(n):
        ps = orc.pairs_of(r.bits, n)
        assert is_connected(r) == orc.connected(ps, n)
        assert is_path(r) == orc.is_path(ps, n)


@pytest.mark.parametrize("n", range(5))
def test_well_founded_is_acyclic_exhaustive(n):
    for r in all_relations(n):
        wf = orc.well_founded_vectors(orc.pairs_of(r.bits, n), n)
        assert wf == is_acyclic(r) == is_well_founded(r)


@given(relations(max_n=7))
def test_start_end_points_match_degrees(r):
    ps = orc.pairs_of(r.bits, r.n)
    assert set(start_points(r).row_set()) == orc.start_points(ps, r.n)
    assert set(end_points(r).row_set()) == orc.end_points(ps, r.n)


@given(relations(max_n=7))
def test_classify_matches_walk(r):
    ps = orc.pairs_of(r.bits, r.n)
    if not orc.is_path(ps, r.n):
        assert classify(r) is PathClass.NOT_A_PATH
        return
    kind, _ = orc.walk(ps, r.n)
    expected = {"empty": PathClass.EMPTY, "cycle": PathClass.CYCLE, "chain": PathClass.FINITE_CHAIN}
    assert classify(r) is expected[kind]


@given(relations(max_n=6), relations(max_n=6))
def test_min_set_pointwise(s, w_rel):
    n = s.n
    w = w_rel.dom() if w_rel.n == n else universal(n)
    got = set(min_set(s, w).row_set())
    ps = orc.pairs_of(s.bits, n)
    members = set(w.row_set())
    assert got == {b for b in members if not any((a, b) in ps for a in members)}


# -- invariants ------------------------------------------------------------


@pytest.mark.parametrize("n", range(5))
def test_taxonomy_invariants_exhaustive(n):
    O = empty(n)
    for r in all_relations(n):
        assert is_path(r) == is_path(r.T)
        assert is_connected(r) == is_connected(r.T)
        assert start_points(r) == end_points(r.T)
        assert r @ start_points(r) == O and r.T @ end_points(r) == O
        cls = classify(r)
        if cls is PathClass.NOT_A_PATH:
            continue
        sp, ep = start_points(r), end_points(r)
        for v in (sp, ep):
            assert is_injective(v) and (not v or is_point(v))
        if cls is PathClass.CYCLE:
            assert not sp and not ep
        # no infinite classes in a finite model
        if r and not sp and not ep:
            assert is_cycle(r)
        assert (cls is PathClass.CYCLE) == (bool(r) and is_cycle(r))


@pytest.mark.parametrize("n", range(1, 5))
def test_termination_kinds_exhaustive(n):
    for r in all_relations(n):
        if not is_path(r):
            with pytest.raises(PathRequired):
                has_termination(r, TerminationKind.TERMINATING)
            continue
        sp, ep = bool(start_points(r)), bool(end_points(r))
        cyc_ = is_cycle(r)
        want = {
            TerminationKind.BACKWARD_TERMINATING: sp or not r,
            TerminationKind.FORWARD_TERMINATING: ep or not r,
            TerminationKind.TERMINATING: (sp and ep) or not r,
            TerminationKind.BACKWARD_FINITE: sp or cyc_,
            TerminationKind.FORWARD_FINITE: ep or cyc_,
            TerminationKind.FINITE: (sp and ep) or cyc_,
        }
        for kind, expected in want.items():
            assert has_termination(r, kind) == expected, (r.pairs(), kind)
        # every path in a finite universe is finite
        assert has_termination(r, TerminationKind.FINITE)


@pytest.mark.parametrize("n", range(1, 6))
def test_edge_lemma_all_point_pairs(n):
    for a in range(n):
        p = choose_point(vector(n, range(a, n)))
        for b in range(n):
            q = point(n, b)
            e = p @ q.T
            assert is_path(e)
            if p != q:
                assert start_points(e) == p and end_points(e) == q


@given(relations(min_n=1, max_n=6))
def test_rooted_reach_matches_bfs(r):
    if not (is_univalent(r) and is_injective(r)):
        return
    n = r.n
    ps = orc.pairs_of(r.bits, n)
    back = orc.plus_bfs(ps, n)
    targets = {b for _, b in ps}
    for a in range(n):
        # p;R <= R+ : every vertex with a predecessor is reachable from a
        want = all((a, b) in back for b in targets)
        assert rooted_check(r, point(n, a), Rooted.BACKWARD_FINITE) == want
        has_pred = any(b == a for _, b in ps)
        assert rooted_check(r, point(n, a), Rooted.CYCLE) == (want and has_pred)


def test_rooted_path_matches_unrooted_for_some_point():
    # a univalent injective R is a path iff some point satisfies the rooted form
    for n in range(1, 4):
        for r in all_relations(n):
            if not (is_univalent(r) and is_injective(r)):
                continue
            any_root = any(rooted_check(r, point(n, a), Rooted.PATH) for a in range(n))
            assert any_root == is_path(r)


def test_identity_is_not_connected_but_piecewise_cyclic():
    assert not is_connected(identity(3))
    assert is_cycle(identity(1))
