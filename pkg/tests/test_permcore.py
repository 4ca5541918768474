import json

import pytest
from hypothesis import given, strategies as st

from conftest import as_dict, inversions, partitions_st, perms, small_perms, words
from schubfock.errors import BoundExceeded, MalformedMaya, NotGrassmannian, ParseError
from schubfock.permcore import (
    MayaDiagram,
    Permutation,
    a_reduced_word,
    compose,
    format_perm,
    format_word,
    grassmannian_from_partition,
    grassmannian_partition,
    grassmannian_sort,
    identity,
    inverse,
    is_grassmannian,
    is_reduced,
    kbruhat_cocovers,
    kbruhat_covers,
    maya_from_partition,
    maya_of_grassmannian,
    parse_partition,
    parse_perm,
    parse_word,
    partition_from_maya,
    perm_from_json,
    perm_to_json,
    pi_k,
    product_word,
    reduced_words,
    simple,
    tau,
    transposition,
    window_pool,
)

ID = identity()


def one_line(values, offset=1):
    return Permutation.from_one_line(values, offset)


# construction and canonical form ------------------------------------------------


def test_identity_has_empty_window():
    assert ID.images == () and ID.length == 0
    assert Permutation(3, [3, 4]) == ID


def test_fixed_ends_are_trimmed():
    p = Permutation(0, [0, 2, 1, 3])
    assert (p.offset, p.images) == (1, (2, 1))
    assert p == simple(1)


def test_non_closed_window_rejected():
    with pytest.raises(ValueError):
        Permutation(1, [1, 5])


# composition -------------------------------------------------------------------


def test_compose_examples():
    assert compose(ID, ID) == ID
    assert compose(simple(1), simple(2)) == one_line([2, 3, 1])
    assert compose(simple(2), simple(1)) == one_line([3, 1, 2])


def test_right_multiplication_swaps_positions():
    w = one_line([3, 1, 4, 2])
    assert (w * simple(2)).one_line(1, 4) == (3, 4, 1, 2)
    assert (simple(2) * w).one_line(1, 4) == (2, 1, 4, 3)


@given(perms, perms)
def test_compose_matches_dictionary_oracle(p, q):
    dp, dq = as_dict(p), as_dict(q)
    pq = compose(p, q)
    assert all(pq(i) == dp[dq[i]] for i in range(-8, 12))


@given(perms)
def test_inverse_cancels(p):
    assert compose(p, inverse(p)) == ID
    assert compose(inverse(p), p) == ID


@given(perms, st.integers(-4, 5))
def test_simple_changes_length_by_one(p, i):
    assert abs((p * simple(i)).length - p.length) == 1
    assert abs((simple(i) * p).length - p.length) == 1


# length and words -----------------------------------------------------------------


def test_length_examples():
    assert ID.length == 0
    assert simple(5).length == 1
    assert one_line([3, 1, 2]).length == 2


@given(perms)
def test_length_is_inversion_count(p):
    assert p.length == inversions(p)


def test_product_word_and_is_reduced():
    assert product_word([]) == ID
    assert not is_reduced([1, 1])
    assert is_reduced([1, 2, 1, 4, 3])


def test_reduced_words_examples():
    assert reduced_words(ID) == {()}
    assert reduced_words(one_line([2, 3, 1])) == {(1, 2)}
    longest = one_line([3, 2, 1])
    assert reduced_words(longest) == {(1, 2, 1), (2, 1, 2)}


def test_reduced_words_cap():
    w = product_word([1, 2, 1, 3, 2, 1])
    with pytest.raises(BoundExceeded):
        reduced_words(w, max_length=5)


@given(perms)
def test_every_reduced_word_multiplies_back(p):
    ws = reduced_words(p)
    assert a_reduced_word(p) in ws
    for word in ws:
        assert len(word) == p.length
        assert product_word(word) == p


@given(small_perms, st.integers(-3, 3))
def test_tau_shifts_reduced_words(p, m):
    shifted = tau(p, m)
    assert shifted.length == p.length
    assert reduced_words(shifted) == {tuple(a + m for a in w) for w in reduced_words(p)}


def test_tau_examples():
    assert tau(ID, 5) == ID
    assert tau(simple(1), 1) == simple(2)


@given(perms, perms, st.integers(-3, 3))
def test_tau_is_an_automorphism(p, q, m):
    assert tau(p * q, m) == tau(p, m) * tau(q, m)
    assert tau(tau(p, 3), -3) == p


# k-Bruhat -----------------------------------------------------------------------------


def _brute_covers(p, k, lo=-6, hi=8):
    out = set()
    for a in range(lo, k + 1):
        for b in range(k + 1, hi):
            u = p * transposition(a, b)
            if u.length == p.length + 1:
                out.add((u, a, b))
    return out


def test_kbruhat_examples():
    assert set(kbruhat_covers(ID, 1)) == {(simple(1), 1, 2)}
    covers = {u for u, _, _ in kbruhat_covers(simple(1), 1)}
    assert one_line([3, 1, 2]) in covers
    assert product_word([0, 1]) in covers
    assert set(kbruhat_covers(ID, 0)) == {(simple(0), 0, 1)}


@given(small_perms, st.integers(-2, 3))
def test_kbruhat_covers_match_brute_force(p, k):
    assert set(kbruhat_covers(p, k)) == _brute_covers(p, k)


@given(small_perms, st.integers(-2, 3))
def test_cocovers_invert_covers(p, k):
    for u, a, b in kbruhat_covers(p, k):
        assert (p, a, b) in set(kbruhat_cocovers(u, k))
    for v, a, b in kbruhat_cocovers(p, k):
        assert (p, a, b) in set(kbruhat_covers(v, k))


# Grassmannian permutations and partitions ------------------------------------------------


def test_grassmannian_sort_examples():
    assert grassmannian_sort(one_line([4, 2, 3, 5, 6, 1]), 3) == one_line([2, 3, 4, 1, 5, 6])
    assert grassmannian_sort(ID, 2) == ID
    assert grassmannian_sort(simple(2), 5) == ID


@given(perms, st.integers(-2, 4))
def test_grassmannian_sort_is_grassmannian_and_below(p, k):
    g = grassmannian_sort(p, k)
    assert is_grassmannian(g, k)
    assert g.length <= p.length
    # the values left of the cut are preserved as a set
    assert {p(i) for i in range(-8, k + 1)} == {g(i) for i in range(-8, k + 1)}


def test_grassmannian_partition_examples():
    assert grassmannian_partition(ID, 3) == ()
    assert grassmannian_partition(Permutation(0, [1, 2, 0]), 1) == (1, 1)
    assert grassmannian_partition(one_line([3, 1, 2]), 1) == (2,)


def test_grassmannian_partition_rejects_other_descents():
    with pytest.raises(NotGrassmannian):
        grassmannian_partition(simple(2), 1)


@given(partitions_st(), st.integers(-2, 3))
def test_grassmannian_round_trip(lam, k):
    u = grassmannian_from_partition(lam, k)
    assert is_grassmannian(u, k)
    assert u.length == sum(lam)
    assert grassmannian_partition(u, k) == lam


def test_pi_k_examples():
    assert pi_k(ID, 2) == ()
    assert pi_k(simple(1), 1) == (1,)
    assert pi_k(simple(1), 5) == ()


# Maya diagrams -----------------------------------------------------------------------------


def test_vacuum_maya():
    f = maya_from_partition((), 0)
    assert f.occupied(-5, 5) == [-5, -4, -3, -2, -1, 0]
    assert partition_from_maya(f) == ((), 0)


def test_maya_labels_of_three_one():
    f = maya_from_partition((3, 1), 3)
    assert f.labels(3, -1, 8) == [-1, 0, 1, 4, 2, 5, 6, 3, 7, 8]
    # the labels are the one-line notation of the inverse Grassmannian permutation
    u = grassmannian_from_partition((3, 1), 3)
    assert tuple(f.labels(3, -1, 8)) == u.inverse().one_line(-1, 8)


def test_maya_round_trip_example():
    assert partition_from_maya(maya_from_partition((2, 2, 1), 2)) == ((2, 2, 1), 2)


@given(partitions_st(), st.integers(-3, 4))
def test_maya_round_trip(lam, k):
    f = maya_from_partition(lam, k)
    assert partition_from_maya(f) == (lam, k)
    assert maya_of_grassmannian(grassmannian_from_partition(lam, k), k) == f


def test_unbalanced_maya_rejected():
    with pytest.raises(MalformedMaya):
        MayaDiagram(first=0, bits=(1, 1), center=0)


# formats ------------------------------------------------------------------------------------


def test_text_format():
    assert format_perm(ID) == "w[0: ]"
    assert format_perm(Permutation(0, [1, 2, 0])) == "w[0: 1 2 0]"
    assert parse_perm("w[0: 1 2 0]") == Permutation(0, [1, 2, 0])
    assert parse_perm("s1 s2") == one_line([2, 3, 1])
    assert parse_perm("s-1") == simple(-1)
    assert parse_word("s1 s2 s-1") == (1, 2, -1)
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("()") == ()


@pytest.mark.parametrize("bad", ["not-a-perm", "w[0: 1 1]", "s1 t2"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_perm(bad)


def test_partition_parse_error():
    with pytest.raises(ParseError):
        parse_partition("1,3")


@given(perms)
def test_text_and_json_round_trip(p):
    assert parse_perm(format_perm(p)) == p
    assert perm_from_json(json.loads(json.dumps(perm_to_json(p)))) == p


@given(words)
def test_word_round_trip(word):
    assert parse_word(format_word(word)) == tuple(word)


# pools -----------------------------------------------------------------------------------------


def test_pool_sizes():
    assert len(window_pool(-2, 4, 5)) == 343
    assert len(window_pool(-2, 3, 4)) == 98


def test_pool_members_stay_in_window():
    for w in window_pool(-1, 2, 3):
        assert w.length <= 3
        assert all(-1 <= i <= 2 for i in w.support())
