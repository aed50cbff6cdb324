import pytest

from conicline import words
from conicline.braids import (BraidWord, action_equal, artin_apply,
                              block_around, braid_permutation, format_braid,
                              full_twist, half_block_around, half_twist,
                              identity_braid, parse_braid, standard_gbase)
from conicline.errors import BadBlock, NonAdjacentMover, StrandMismatch


def test_artin_generator_action():
    g = standard_gbase(3)
    out = artin_apply(BraidWord(3, (1,)), g)
    # sigma_1: e1 -> e2, e2 -> e2 e1 e2^-1
    assert out.entries[0] == (2,)
    assert words.reduce(out.entries[1]) == (2, 1, -2)
    assert out.entries[2] == (3,)


def test_artin_inverse_generator_action():
    g = standard_gbase(3)
    b = BraidWord(3, (1,))
    assert artin_apply(b.inverse(), artin_apply(b, g)) == g


def test_artin_preserves_ordered_product():
    g = standard_gbase(4)
    b = BraidWord(4, (1, -2, 3, 3, -1))
    out = artin_apply(b, g)
    assert words.reduce(out.ordered_product()) == words.reduce(
        g.ordered_product())


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        artin_apply(BraidWord(3, (1,)), standard_gbase(4))


def test_half_twist_squared_is_full_twist():
    ht = half_twist(4, 1, 4)
    assert action_equal(ht * ht, full_twist(4, 1, 4))


def test_half_twist_adjacent_is_generator():
    assert action_equal(half_twist(3, 2, 3), BraidWord(3, (2,)))


def test_full_twist_is_central():
    d2 = full_twist(4, 1, 4)
    for i in (1, 2, 3):
        s = BraidWord(4, (i,))
        assert action_equal(d2 * s, s * d2)


def test_product_left_factor_first():
    # permutations compose with the left factor acting first
    b1 = BraidWord(3, (1,))
    b2 = BraidWord(3, (2,))
    # strand 1 crosses at sigma_1 then sigma_2, ending at position 3
    p = braid_permutation(b1 * b2)
    assert p == (3, 1, 2)


def test_block_around_leaves_positions_fixed():
    b = block_around(4, 1, 2, 3)
    assert braid_permutation(b) == (1, 2, 3, 4)


def test_block_around_turns_compose():
    one = block_around(4, 1, 2, 3)
    two = block_around(4, 1, 2, 3, turns=2)
    assert action_equal(one * one, two)
    assert block_around(4, 1, 2, 3, turns=0) == identity_braid(4)


def test_block_around_rejects_bad_input():
    with pytest.raises(BadBlock):
        block_around(4, 1, 3, 2)
    with pytest.raises(NonAdjacentMover):
        half_block_around(5, 5, 1, 3)


def test_action_equal_ignores_word_spelling():
    # the braid relation: s1 s2 s1 = s2 s1 s2
    assert action_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not action_equal(BraidWord(3, (1,)), BraidWord(3, (2,)))


def test_format_parse_round_trip():
    for b in [BraidWord(4, (1, -2, 3, 3)), identity_braid(2)]:
        assert parse_braid(format_braid(b), b.strands) == b


def test_power():
    b = BraidWord(3, (1,))
    assert (b ** 3).letters == (1, 1, 1)
    assert action_equal(b ** -1, b.inverse())
