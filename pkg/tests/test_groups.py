import json

import pytest

from hurstab.groups import (
    ClassSet,
    FiniteGroup,
    GroupError,
    conjugacy_closure,
)


@pytest.fixture(scope="module")
def s3():
    return FiniteGroup.symmetric(3)


def elt(group, name):
    return group.element_names.index(name)


def test_builtin_orders():
    assert FiniteGroup.cyclic(6).order == 6
    assert FiniteGroup.dihedral(4).order == 8
    assert FiniteGroup.symmetric(4).order == 24
    assert FiniteGroup.quaternion().order == 8


def test_table_invariants(s3):
    n = s3.order
    for row in s3.table:
        assert sorted(row) == list(range(n))
    for g in range(n):
        assert s3.mul(0, g) == g == s3.mul(g, 0)
        assert s3.mul(g, s3.inv(g)) == 0


def test_mul_example(s3):
    assert s3.element_names[s3.mul(elt(s3, "(1 2)"), elt(s3, "(1 3)"))] == "(1 3 2)"


def test_quaternion_structure():
    q = FiniteGroup.quaternion()
    i = q.element_names.index("i")
    j = q.element_names.index("j")
    k = q.element_names.index("k")
    minus_one = q.element_names.index("-1")
    assert q.mul(i, j) == k
    assert q.mul(i, i) == minus_one
    assert q.mul(j, i) == q.element_names.index("-k")
    assert not q.is_abelian()


def test_conjugacy_closure_examples(s3):
    c = conjugacy_closure({elt(s3, "(1 2)")}, s3)
    assert {s3.element_names[x] for x in c.elements} == {"(1 2)", "(1 3)", "(2 3)"}
    assert conjugacy_closure({0}, s3).elements == (0,)
    z4 = FiniteGroup.cyclic(4)
    assert conjugacy_closure({1}, z4).elements == (1,)


def test_closure_idempotent_monotone(s3):
    import itertools

    for seed in itertools.combinations(range(s3.order), 2):
        c = conjugacy_closure(set(seed), s3)
        again = conjugacy_closure(set(c.elements), s3)
        assert again.elements == c.elements
        assert set(seed) <= set(c.elements)
        bigger = conjugacy_closure(set(seed) | {0}, s3)
        assert set(c.elements) <= set(bigger.elements)


def test_class_predicates(s3):
    transpositions = conjugacy_closure({elt(s3, "(1 2)")}, s3)
    assert not transpositions.is_central()
    assert transpositions.is_inversion_closed()
    assert transpositions.generates()
    assert transpositions.is_non_splitting()

    identity = conjugacy_closure({0}, s3)
    assert identity.is_central()
    assert not identity.generates()
    assert identity.is_non_splitting()

    z4 = FiniteGroup.cyclic(4)
    r = conjugacy_closure({1}, z4)
    assert r.is_central() and r.generates()
    z3 = FiniteGroup.cyclic(3)
    assert not conjugacy_closure({1}, z3).is_inversion_closed()
    # {r, r^3} in Z/4 is a union of two classes of the abelian group
    union = ClassSet(z4, (1, 3))
    assert not union.is_non_splitting()


def test_abelian_singletons_always_central():
    z6 = FiniteGroup.cyclic(6)
    for g in z6.elements():
        c = conjugacy_closure({g}, z6)
        assert len(c) == 1 and c.is_central()


def test_threecycles_not_generating(s3):
    threecycles = conjugacy_closure({elt(s3, "(1 2 3)")}, s3)
    assert not threecycles.generates()  # closure is A3


def test_subgroup_enumeration(s3):
    subs = s3.subgroups()
    assert len(subs) == 6  # 1, three <transposition>, A3, S3
    orders = sorted(len(h) for h in subs)
    assert orders == [1, 2, 2, 2, 3, 6]
    big = FiniteGroup.symmetric(5)
    with pytest.raises(GroupError):
        big.subgroups()


def test_class_set_validation(s3):
    with pytest.raises(GroupError):
        ClassSet(s3, (elt(s3, "(1 2)"),))  # not conjugation closed
    with pytest.raises(GroupError):
        conjugacy_closure(set(), s3)


def test_json_group_round_trip(s3):
    spec = {"builtin": {"family": "symmetric", "n": 3}}
    g = FiniteGroup.from_json(spec)
    assert g.table == s3.table
    g2 = FiniteGroup.from_json(json.dumps(g.to_json()))
    assert g2.table == s3.table


def test_json_table_reindexing():
    # Z/3 with the identity listed second
    z3 = FiniteGroup.cyclic(3)
    perm = [1, 0, 2]  # old index -> position
    table = [[perm.index(z3.mul(perm[i], perm[j])) for j in range(3)]
             for i in range(3)]
    g = FiniteGroup.from_table(table)
    assert g.table == z3.table


def test_json_class_specs(s3):
    c = ClassSet.from_json({"representative": elt(s3, "(1 2)")}, s3)
    assert len(c) == 3
    c2 = ClassSet.from_json({"elements": list(c.elements)}, s3)
    assert c2.elements == c.elements
    with pytest.raises(GroupError):
        ClassSet.from_json({"elements": [elt(s3, "(1 2)")]}, s3)


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        FiniteGroup.from_table([[0, 1], [1, 1]])
    # broken associativity hidden in a Latin square with identity:
    # rows/cols are permutations but (1*1)*2 != 1*(1*2)
    bad = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError):
        FiniteGroup.from_table(bad)
