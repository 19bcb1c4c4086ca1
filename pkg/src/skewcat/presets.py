"""Built-in example categories with group actions, used by the test suite
and exported as the shipped fixture files."""

from __future__ import annotations

from .groups import cyclic_group, symmetric_group, trivial_group
from .lincat import BasisMor, GActionOnCat, LinCat


def _trivial_action(cat, group):
    one = cat.field.one
    obj_perm = tuple(tuple(range(cat.n_objects)) for _ in range(len(group)))
    mor_map = tuple(
        {mid: {mid: one} for mid in range(cat.total_dim)} for _ in range(len(group))
    )
    return GActionOnCat(group, obj_perm, mor_map)


def end_k(field):
    """One object with endomorphism algebra k; trivial group."""
    one = field.one
    cat = LinCat(
        field,
        ["*"],
        [BasisMor("1", 0, 0)],
        {(0, 0): {0: one}},
        [{0: one}],
    )
    g = trivial_group()
    return cat, g, _trivial_action(cat, g)


def k_times_k(field):
    """Two objects, endomorphisms k on each, zero cross homs; trivial group."""
    one = field.one
    cat = LinCat(
        field,
        ["x", "y"],
        [BasisMor("1x", 0, 0), BasisMor("1y", 1, 1)],
        {(0, 0): {0: one}, (1, 1): {1: one}},
        [{0: one}, {1: one}],
    )
    g = trivial_group()
    return cat, g, _trivial_action(cat, g)


def dual_numbers_cat(field):
    """k[x]/(x^2) as a one-object category with basis {1, x}."""
    one = field.one
    return LinCat(
        field,
        ["*"],
        [BasisMor("1", 0, 0), BasisMor("x", 0, 0)],
        {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}},  # x∘x = 0
        [{0: one}],
    )


def dual_numbers(field):
    """Dual numbers with the sign involution x -> -x; C2 fixes the object."""
    cat = dual_numbers_cat(field)
    g = cyclic_group(2)
    one = field.one
    minus = field.neg(one)
    obj_perm = ((0,), (0,))
    mor_map = (
        {0: {0: one}, 1: {1: one}},
        {0: {0: one}, 1: {1: minus}},
    )
    return cat, g, GActionOnCat(g, obj_perm, mor_map)


def two_object_swap(field):
    """Two objects with endomorphisms k and zero cross homs; C2 swaps them.
    The object action is free."""
    one = field.one
    cat = LinCat(
        field,
        ["a", "b"],
        [BasisMor("1a", 0, 0), BasisMor("1b", 1, 1)],
        {(0, 0): {0: one}, (1, 1): {1: one}},
        [{0: one}, {1: one}],
    )
    g = cyclic_group(2)
    obj_perm = ((0, 1), (1, 0))
    mor_map = (
        {0: {0: one}, 1: {1: one}},
        {0: {1: one}, 1: {0: one}},
    )
    return cat, g, GActionOnCat(g, obj_perm, mor_map)


def two_object_swap_iso(field):
    """Two mutually isomorphic objects (all four hom spaces are k) swapped
    by C2; still free on objects, but the quotient has 2-dimensional
    endomorphisms."""
    one = field.one
    # ids: 0 = 1a, 1 = 1b, 2 = p: a->b, 3 = q: b->a
    cat = LinCat(
        field,
        ["a", "b"],
        [BasisMor("1a", 0, 0), BasisMor("1b", 1, 1), BasisMor("p", 0, 1), BasisMor("q", 1, 0)],
        {
            (0, 0): {0: one},
            (1, 1): {1: one},
            (2, 0): {2: one},
            (1, 2): {2: one},
            (3, 1): {3: one},
            (0, 3): {3: one},
            (3, 2): {0: one},  # q∘p = 1a
            (2, 3): {1: one},  # p∘q = 1b
        },
        [{0: one}, {1: one}],
    )
    g = cyclic_group(2)
    obj_perm = ((0, 1), (1, 0))
    mor_map = (
        {0: {0: one}, 1: {1: one}, 2: {2: one}, 3: {3: one}},
        {0: {1: one}, 1: {0: one}, 2: {3: one}, 3: {2: one}},
    )
    return cat, g, GActionOnCat(g, obj_perm, mor_map)


def s3_one_dim(field):
    """One object with endomorphisms k and the (necessarily trivial) S3
    action; the skew category is the group algebra kS3."""
    one = field.one
    cat = LinCat(
        field,
        ["*"],
        [BasisMor("1", 0, 0)],
        {(0, 0): {0: one}},
        [{0: one}],
    )
    g = symmetric_group(3)
    return cat, g, _trivial_action(cat, g)


PRESETS = {
    "end_k": end_k,
    "k_times_k": k_times_k,
    "dual_c2": dual_numbers,
    "swap_c2": two_object_swap,
    "swap_iso_c2": two_object_swap_iso,
    "s3_one_dim": s3_one_dim,
}
