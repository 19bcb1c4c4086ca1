import pytest
from hypothesis import given, settings, strategies as st

from skewcat.groups import (
    FinGroup,
    GroupError,
    GSetAction,
    conjugacy_classes,
    cyclic_group,
    group_from_json,
    group_to_json,
    orbits_transversal,
    symmetric_group,
    transversal_from_reps,
    trivial_group,
    validate_gset,
    validate_group,
)


def test_c2_table_ok():
    g = validate_group(["1", "s"], [[0, 1], [1, 0]])
    assert g.identity == 0
    assert g.inverses == (0, 1)


def test_s3_brute_force_ok():
    g = symmetric_group(3)
    assert len(g) == 6
    for a in range(6):
        for b in range(6):
            for c in range(6):
                assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_latin_square_violation():
    with pytest.raises(GroupError, match="Latin"):
        validate_group(["1", "s"], [[0, 1], [1, 1]])


def test_nonassociative_loop_rejected():
    # a Latin square with identity that is not associative (order-5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(GroupError, match="associativity") as exc:
        validate_group(list("eabcd"), table)
    assert exc.value.witness is not None


def test_conjugacy_classes_abelian_c4():
    g = cyclic_group(4)
    cls = conjugacy_classes(g)
    assert [len(c) for c in cls] == [1, 1, 1, 1]
    assert cls[0].members == (g.identity,)


def test_conjugacy_classes_s3():
    g = symmetric_group(3)
    cls = conjugacy_classes(g)
    assert sorted(len(c) for c in cls) == [1, 2, 3]
    assert cls[0].members == (g.identity,)
    # total of class sizes is the group order
    assert sum(len(c) for c in cls) == 6


def test_conjugacy_classes_trivial():
    cls = conjugacy_classes(trivial_group())
    assert len(cls) == 1 and cls[0].members == (0,)


def test_conjugation_stays_in_class():
    g = symmetric_group(3)
    cls = conjugacy_classes(g)
    class_of = {}
    for c in cls:
        for x in c.members:
            class_of[x] = c
    for x in range(len(g)):
        for s in range(len(g)):
            assert g.conj(s, x) in class_of[x]


def test_orbits_transversal_free_swap():
    g = validate_group(["1", "s"], [[0, 1], [1, 0]])
    a = validate_gset(GSetAction(g, 2, ((0, 1), (1, 0))))
    t, free = orbits_transversal(a)
    assert t.reps == (0,)
    assert free
    assert all(a.act(t.witness[x], t.rep_of[x]) == x for x in range(2))


def test_orbits_transversal_trivial_point():
    g = validate_group(["1", "s"], [[0, 1], [1, 0]])
    a = validate_gset(GSetAction(g, 1, ((0,), (0,))))
    t, free = orbits_transversal(a)
    assert t.reps == (0,)
    assert not free


def test_orbits_transversal_mixed():
    g = validate_group(["1", "s"], [[0, 1], [1, 0]])
    a = validate_gset(GSetAction(g, 3, ((0, 1, 2), (1, 0, 2))))
    t, free = orbits_transversal(a)
    assert t.reps == (0, 2)
    assert not free  # the stabiliser of 2 is the whole group


def test_transversal_prefer_override():
    g = validate_group(["1", "s"], [[0, 1], [1, 0]])
    a = validate_gset(GSetAction(g, 2, ((0, 1), (1, 0))))
    t, _ = orbits_transversal(a, prefer=[1])
    assert t.reps == (1,)
    t2, _ = transversal_from_reps(a, [1])
    assert t2.reps == (1,)
    with pytest.raises(GroupError):
        transversal_from_reps(a, [0, 1])  # same orbit twice


def test_transversal_reproducible():
    g = symmetric_group(3)
    perm = tuple(tuple(g.mul(s, x) for x in range(6)) for s in range(6))
    a = validate_gset(GSetAction(g, 6, perm))  # regular action
    r1 = orbits_transversal(a)
    r2 = orbits_transversal(a)
    assert r1 == r2
    assert r1[1]  # regular action is free


def test_group_json_roundtrip():
    g = symmetric_group(3)
    assert group_from_json(group_to_json(g)) == g


POOL = [trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
        cyclic_group(6), symmetric_group(3)]


@settings(max_examples=30, deadline=None)
@given(gi=st.integers(0, len(POOL) - 1), data=st.data())
def test_class_partition_property(gi, data):
    g = POOL[gi]
    cls = conjugacy_classes(g)
    members = sorted(x for c in cls for x in c.members)
    assert members == list(range(len(g)))
    s = data.draw(st.integers(0, len(g) - 1))
    x = data.draw(st.integers(0, len(g) - 1))
    cx = next(c for c in cls if x in c)
    assert g.conj(s, x) in cx
