import json

import pytest

from condisc import (
    EVEN_ALL_EVEN_CHILDREN_WT2,
    ODD_WT2,
    ODD_WT3_NO_EVEN_CHILDREN,
    STRICT,
    analyze,
    build_cluster_tree,
    build_matrix,
    compare_vertex,
)

from conftest import (
    DEEP_PAIR,
    FIXTURE_A,
    FIXTURE_B,
    FIXTURE_C,
    GOOD_RED,
    NON_MINIMAL,
    ODD_CHAIN,
    WEIGHT2,
    make,
)


def ledger_map(inst):
    tree = build_cluster_tree(build_matrix(inst))
    return tree, {v.id: compare_vertex(v, tree) for v in tree}


def row(led):
    return (led.d, led.D, led.E, led.D_prime, led.D_double_prime, led.equality, led.reason)


def test_fixture_a_ledgers(fixture_a):
    tree, led = ledger_map(fixture_a)
    assert row(led[tree.root.id]) == (6, 6, 0, 6, 6, True, EVEN_ALL_EVEN_CHILDREN_WT2)
    for c in tree.root.children:
        assert row(led[c]) == (0, 0, 0, 0, 0, True, EVEN_ALL_EVEN_CHILDREN_WT2)


def test_fixture_b_ledgers(fixture_b):
    tree, led = ledger_map(fixture_b)
    assert row(led[tree.root.id]) == (6, 2, 4, 6, 6, True, EVEN_ALL_EVEN_CHILDREN_WT2)
    assert row(led[1]) == (0, 4, -4, 0, 0, True, ODD_WT3_NO_EVEN_CHILDREN)


def test_fixture_c_ledgers(fixture_c):
    tree, led = ledger_map(fixture_c)
    rows = sorted(row(led[v.id]) for v in tree)
    assert rows == sorted(
        [
            (2, 2, 0, 2, 2, True, EVEN_ALL_EVEN_CHILDREN_WT2),
            (2, 2, 0, 2, 2, True, EVEN_ALL_EVEN_CHILDREN_WT2),
            (0, 0, 0, 0, 0, True, EVEN_ALL_EVEN_CHILDREN_WT2),
        ]
    )


def test_odd_chain_ledgers():
    tree, led = ledger_map(make(ODD_CHAIN))
    root = tree.root
    a = next(v for v in tree if v.odd and v.wt == 3)
    b = next(v for v in tree if v.odd and v.wt == 2)
    assert row(led[root.id]) == (6, 2, 4, 6, 6, True, EVEN_ALL_EVEN_CHILDREN_WT2)
    assert row(led[a.id]) == (2, 3, -3, 0, 2, True, ODD_WT3_NO_EVEN_CHILDREN)
    assert led[a.id].L_count == 1
    assert row(led[b.id]) == (0, 3, -1, 2, 0, True, ODD_WT2)


def test_weight2_strict_vertex():
    tree, led = ledger_map(make(WEIGHT2))
    root = tree.root
    assert row(led[root.id]) == (12, 2, 0, 2, 2, False, STRICT)
    # defect equals the even-children surplus sum(wt(wt-1) - 2)
    defect = led[root.id].d - led[root.id].D_double_prime
    assert defect == sum(
        tree[c].wt * (tree[c].wt - 1) - 2 for c in root.children if not tree[c].odd
    )


def test_nonminimal_ledgers():
    tree, led = ledger_map(make(NON_MINIMAL))
    v = next(v for v in tree if v.odd)
    w = tree[v.children[0]]
    assert row(led[tree.root.id]) == (6, 2, 4, 6, 6, True, EVEN_ALL_EVEN_CHILDREN_WT2)
    assert row(led[v.id]) == (6, -1, -3, -4, -4, False, STRICT)
    assert row(led[w.id]) == (0, 1, -1, 0, 0, True, EVEN_ALL_EVEN_CHILDREN_WT2)


def test_analyze_fixture_a(fixture_a):
    r = analyze(fixture_a)
    assert (r.nu_df, r.artin, r.artin_local_sum) == (6, 6, 6)
    assert (r.n_components, r.f_tilde) == (5, 2)
    assert r.inequality_holds and r.equality_holds and r.x_minimal
    assert r.component_bound_ok
    assert r.genus == 2 and r.p == 3


def test_analyze_fixture_c(fixture_c):
    r = analyze(fixture_c)
    assert (r.nu_df, r.artin, r.n_components, r.f_tilde) == (4, 4, 4, 1)
    assert r.equality_holds and r.x_minimal


def test_analyze_good_reduction(good_reduction):
    r = analyze(good_reduction)
    assert (r.nu_df, r.artin, r.n_components, r.f_tilde) == (0, 0, 1, 0)
    assert r.equality_holds


def test_analyze_matrix_mode():
    m = build_matrix(make(FIXTURE_B))
    r = analyze(m, label="as-matrix")
    assert r.p is None and r.label == "as-matrix"
    assert (r.nu_df, r.artin) == (6, 6)


def test_global_identities_hold():
    for fx in (FIXTURE_A, FIXTURE_B, FIXTURE_C, GOOD_RED, ODD_CHAIN, WEIGHT2, NON_MINIMAL, DEEP_PAIR):
        r = analyze(make(fx))
        assert sum(l.E for l in r.ledgers) == 0
        assert sum(l.D for l in r.ledgers) == r.artin
        assert sum(l.D_double_prime for l in r.ledgers) == sum(l.D_prime for l in r.ledgers)
        assert all(l.D_prime == l.D + l.E for l in r.ledgers)
        assert all(l.D_double_prime <= l.d for l in r.ledgers)
        assert r.artin <= r.nu_df
        assert r.equality_holds == all(l.equality for l in r.ledgers)
        assert r.equality_holds == (r.artin == r.nu_df)
        assert r.f_tilde == r.artin - r.n_components + 1 >= 0
        assert r.n_components <= r.artin + 1 <= r.nu_df + 1


def test_equality_requires_minimal():
    r = analyze(make(NON_MINIMAL))
    assert not r.x_minimal and not r.equality_holds
    assert r.contractible != ()


def test_report_json_shape(fixture_a):
    r = analyze(fixture_a)
    doc = r.to_json_dict()
    assert list(doc) == [
        "label", "nu_df", "artin_conductor", "artin_local_sum", "n_components",
        "f_tilde", "inequality_holds", "equality_holds", "x_minimal",
        "component_bound_ok", "warnings", "vertices",
    ]
    assert doc["artin_conductor"] == 6
    assert doc["label"] == "fixtureA"
    vert = doc["vertices"][0]
    assert list(vert) == [
        "id", "depth", "wt", "l_prime", "r", "s", "l", "parity",
        "d", "D", "E", "D_prime", "D_double_prime", "equality", "reason",
    ]
    # round trip is byte-identical
    text = r.to_json()
    assert json.dumps(json.loads(text), indent=2) == text


def test_small_genus_flag():
    from condisc import Instance, TooFewRootsError

    inst = Instance.from_values(3, [0, 1, 2, 3])
    with pytest.raises(TooFewRootsError):
        analyze(inst)
    r = analyze(inst, allow_small=True)
    assert r.genus == 1
    assert any("out of scope" in w for w in r.warnings)
