import random

import pytest

from braidforge.braid import (
    BraidWord,
    DeltaVariant,
    FullTwistVariant,
    Permutation,
    PureGenerator,
    alpha,
    conjugate_by_delta,
    delta_word,
    expand_pure_generator,
    exponent_sum,
    free_reduce,
    full_twist_word,
    permutation_of,
    shift,
    word,
)
from braidforge.errors import (
    FormatError,
    IncompatibleWords,
    InvalidStrandCount,
    ShiftOutOfRange,
)


def random_word(rng, n, length):
    return BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.mark.parametrize("letters, expected", [
    ([1, -1], []),
    ([1, 2, -2, -1, 1], [1]),
])
def test_free_reduce_cancels(letters, expected):
    assert free_reduce(word(3, letters)) == word(3, expected)


def test_free_reduce_keeps_reduced_word_and_strands():
    w = word(4, [1, 3])
    assert free_reduce(w) == w
    assert free_reduce(word(5, [2, -2])).strands == 5


def test_free_reduce_idempotent_and_shortening():
    rng = random.Random(3)
    for _ in range(200):
        w = random_word(rng, 5, rng.randint(0, 30))
        r = free_reduce(w)
        assert len(r) <= len(w)
        assert free_reduce(r) == r


def test_construction_does_not_reduce():
    assert word(3, [1, -1]).letters == (1, -1)


def test_letter_validation():
    with pytest.raises(InvalidStrandCount):
        BraidWord(3, (3,))
    with pytest.raises(InvalidStrandCount):
        BraidWord(3, (0,))
    with pytest.raises(InvalidStrandCount):
        BraidWord(0, ())


def test_mismatched_strands_raise():
    with pytest.raises(IncompatibleWords):
        word(3, [1]) * word(4, [1])


@pytest.mark.parametrize("letters, images", [
    ([1], (2, 1, 3)),
    ([1, 2], (2, 3, 1)),
    ([1, 1], (1, 2, 3)),
])
def test_permutation_of_examples(letters, images):
    assert permutation_of(word(3, letters)) == Permutation(images)


def test_permutation_of_is_a_homomorphism():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 8)
        u, v = random_word(rng, n, rng.randint(0, 12)), random_word(rng, n, rng.randint(0, 12))
        assert permutation_of(u * v) == permutation_of(u) * permutation_of(v)


def test_permutation_basics():
    p = Permutation.parse("231")
    assert p(1) == 2 and p.inverse() * p == Permutation.identity(3)
    assert Permutation.parse("2:1:3") == Permutation.transposition(3, 1, 2)
    assert Permutation.longest(4).inversions() == 6
    assert Permutation((10, 2, 3, 4, 5, 6, 7, 8, 9, 1)).one_line().startswith("10:2")
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(FormatError):
        Permutation.parse("1x")


@pytest.mark.parametrize("i, j, n, letters", [
    (1, 2, 3, (1, 1)),
    (1, 3, 3, (2, 1, 1, -2)),
    (2, 3, 3, (2, 2)),
])
def test_expand_pure_generator_examples(i, j, n, letters):
    assert expand_pure_generator(PureGenerator(i, j, n)).letters == letters


def test_expand_pure_generator_properties():
    for n in range(2, 8):
        for j in range(2, n + 1):
            for i in range(1, j):
                w = alpha(i, j, n)
                assert len(w) == 2 * (j - i)
                assert permutation_of(w).is_identity()
                assert exponent_sum(w) == 2


def test_pure_generator_validation():
    with pytest.raises(ValueError):
        PureGenerator(2, 2, 3)
    with pytest.raises(ValueError):
        PureGenerator(1, 4, 3)


def test_delta_examples():
    assert delta_word(3, 1).letters == (1, 2, 1)
    assert delta_word(3, 4).letters == (2, 1, 2)
    for v in DeltaVariant:
        assert delta_word(2, v).letters == (1,)
    with pytest.raises(InvalidStrandCount):
        delta_word(1)


def test_delta_shapes():
    for n in range(2, 9):
        for v in DeltaVariant:
            w = delta_word(n, v)
            assert len(w) == n * (n - 1) // 2
            assert all(e > 0 for e in w.letters)
            assert permutation_of(w) == Permutation.longest(n)


def test_full_twist_examples():
    assert full_twist_word(2, "A").letters == (1, 1)
    assert full_twist_word(3, "D").letters == (1, 2, 1, 2, 1, 2)
    assert full_twist_word(3, "F").letters == (1, 1, 2, 1, 1, -2, 2, 2)
    assert full_twist_word(3, "D'").letters == (2, 1) * 3
    with pytest.raises(InvalidStrandCount):
        full_twist_word(1, "A")


def test_full_twist_shapes():
    for n in range(2, 8):
        for v in FullTwistVariant:
            w = full_twist_word(n, v)
            assert permutation_of(w).is_identity()
            assert exponent_sum(w) == n * (n - 1)


def test_variant_coercion():
    assert DeltaVariant.coerce("tail-stacks") is DeltaVariant.TAIL_STACKS
    assert DeltaVariant.coerce(2) is DeltaVariant.DESCENDING_STACKS
    assert FullTwistVariant.coerce("d'") is FullTwistVariant.D_PRIME
    with pytest.raises(ValueError):
        FullTwistVariant.coerce("Z")


def test_shift():
    assert shift(word(4, [1, 2, -1])) == word(4, [2, 3, -2])
    with pytest.raises(ShiftOutOfRange):
        shift(word(3, [2]))


def test_shift_documented_instance_needs_six_strands():
    # sigma_5 requires six strands
    assert shift(word(6, [1, 2, 4, 3])) == word(6, [2, 3, 5, 4])
    with pytest.raises(ShiftOutOfRange):
        shift(word(5, [1, 2, 4, 3]))


def test_conjugate_by_delta():
    assert conjugate_by_delta(word(4, [1])) == word(4, [3])
    assert conjugate_by_delta(word(3, [1, 2])) == word(3, [2, 1])
    assert conjugate_by_delta(word(2, [1, 1])) == word(2, [1, 1])
    rng = random.Random(5)
    for _ in range(100):
        w = random_word(rng, 6, 15)
        assert conjugate_by_delta(conjugate_by_delta(w)) == w


def test_exponent_sum_examples():
    assert exponent_sum(delta_word(4, 1)) == 6
    assert exponent_sum(full_twist_word(4, "D")) == 12
    assert exponent_sum(word(3, [1, -2])) == 0


def test_text_round_trip():
    w = word(3, [1, -2, 1])
    assert w.to_text() == "n=3\n1 -2 1\n"
    assert BraidWord.from_text(w.to_text()) == w
    assert BraidWord.from_text("n=4\n\n") == word(4)
    assert BraidWord.from_text("n=4") == word(4)
    for bad in ("", "3\n1", "n=3\n1 x", "n=3\n1\n2"):
        with pytest.raises(FormatError):
            BraidWord.from_text(bad)
