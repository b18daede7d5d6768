import pytest

from condisc import (
    Instance,
    TooFewRootsError,
    UltrametricViolationError,
    build_cluster_tree,
    build_matrix,
    check_tree_invariants,
    equation_discriminant,
    local_disc,
    matrix_from_rows,
)
from condisc.harness import disc_oracle

from conftest import DEEP_PAIR, FIXTURE_C, make


def tree_of(inst: Instance):
    return build_cluster_tree(build_matrix(inst))


def by_members(tree, members, depth):
    hits = [v for v in tree if v.members == frozenset(members) and v.depth == depth]
    assert len(hits) == 1
    return hits[0]


def test_fixture_a_tree(fixture_a):
    tree = tree_of(fixture_a)
    assert len(tree) == 4
    root = tree.root
    assert (root.wt, root.parity, root.l_prime, root.r, root.s, root.l) == (6, "even", 0, 0, 3, 0)
    kids = [tree[c] for c in root.children]
    assert [k.members for k in kids] == [frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})]
    for k in kids:
        assert (k.wt, k.parity, k.l_prime, k.r, k.s, k.l, k.f_val) == (2, "even", 2, 0, 0, 2, 2)
    check_tree_invariants(tree)


def test_fixture_b_tree(fixture_b):
    tree = tree_of(fixture_b)
    assert len(tree) == 2
    root, child = tree.root, tree[1]
    assert (root.wt, root.parity, root.l_prime, root.r, root.s, root.l) == (6, "even", 3, 1, 0, 4)
    assert child.members == frozenset({0, 1, 2})
    assert (child.wt, child.f_val, child.parity, child.l_prime, child.r, child.s, child.l) == (
        3, 3, "odd", 3, 0, 0, 3,
    )
    check_tree_invariants(tree)


def test_fixture_c_tree(fixture_c):
    tree = tree_of(fixture_c)
    assert len(tree) == 3
    root = tree.root
    assert (root.wt, root.parity, root.l_prime, root.r, root.s, root.l) == (6, "even", 4, 0, 1, 4)
    c1 = by_members(tree, {0, 1}, 1)
    c2 = by_members(tree, {0, 1}, 2)
    assert (c1.parity, c1.l_prime, c1.s, c1.l, c1.f_val) == ("even", 0, 1, 0, 2)
    assert (c2.parity, c2.l_prime, c2.l, c2.f_val) == ("even", 2, 2, 4)
    assert c1.parent == root.id and c2.parent == c1.id
    check_tree_invariants(tree)


def test_chain_materialization():
    tree = tree_of(make(DEEP_PAIR))
    pair_depths = sorted(v.depth for v in tree if v.members == frozenset({0, 1}))
    assert pair_depths == [1, 2, 3]
    inner = [v for v in tree if v.members == frozenset({0, 1}) and v.depth < 3]
    assert all(v.l_prime == 0 and len(v.children) == 1 for v in inner)


def test_ids_sorted_by_depth_then_member(fixture_a):
    tree = tree_of(fixture_a)
    keys = [(v.depth, min(v.members)) for v in tree]
    assert keys == sorted(keys)
    assert [v.id for v in tree] == list(range(len(tree)))


def test_local_disc_values(fixture_a, fixture_b):
    ta = tree_of(fixture_a)
    assert local_disc(ta.root, ta) == 6
    assert all(local_disc(ta[c], ta) == 0 for c in ta.root.children)
    tb = tree_of(fixture_b)
    assert local_disc(tb.root, tb) == 6
    assert local_disc(tb[1], tb) == 0


def test_equation_discriminant_matches_big_integer_oracle(fixture_a, fixture_b, good_reduction):
    for inst, expect in ((fixture_a, 6), (fixture_b, 6), (good_reduction, 0)):
        m = build_matrix(inst)
        assert equation_discriminant(m) == expect
        assert disc_oracle(inst) == expect


def test_local_disc_sums_to_discriminant():
    for fx in (FIXTURE_C, DEEP_PAIR):
        inst = make(fx)
        m = build_matrix(inst)
        tree = build_cluster_tree(m)
        assert sum(local_disc(v, tree) for v in tree) == equation_discriminant(m)


def test_too_few_roots():
    m = matrix_from_rows([[None, 1, 0, 0], [1, None, 0, 0], [0, 0, None, 1], [0, 0, 1, None]])
    with pytest.raises(TooFewRootsError):
        build_cluster_tree(m)
    tree = build_cluster_tree(m, allow_small=True)
    assert tree.root.wt == 4
    check_tree_invariants(tree)


def test_non_ultrametric_matrix_rejected():
    m = matrix_from_rows(
        [[None, 2, 0, 0, 0, 0],
         [2, None, 2, 0, 0, 0],
         [0, 2, None, 0, 0, 0],
         [0, 0, 0, None, 0, 0],
         [0, 0, 0, 0, None, 0],
         [0, 0, 0, 0, 0, None]]
    )
    with pytest.raises(UltrametricViolationError, match=r"\(0, 1, 2\)"):
        build_cluster_tree(m)


def test_all_roots_congruent_gives_root_chain():
    inst = Instance.from_values(3, [0, 3, 6, 9, 12, 15])
    tree = tree_of(inst)
    root = tree.root
    assert root.l_prime == 0 and len(root.children) == 1
    child = tree[root.children[0]]
    assert child.members == root.members and child.depth == 1
