import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidact.words import Word, word_sort_key

letters = st.integers(-3, 3).filter(lambda x: x != 0)
raw_words = st.lists(letters, max_size=24)
words = raw_words.map(Word)
rank2_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=16).map(Word)


def w(text):
    return Word.parse(text)


class TestReduce:
    def test_trailing_pair_cancels(self):
        assert Word((1, 2, -2)) == w("a")

    def test_inverse_pair_cancels(self):
        assert Word((1, -1)) == Word()

    def test_inner_cancellation_only(self):
        assert Word((2, -1, 1, 2)) == w("bb")

    def test_zero_letter_rejected(self):
        with pytest.raises(ValueError):
            Word((1, 0))

    @given(raw_words)
    def test_no_cancelling_adjacent_pair(self, raw):
        ls = Word(raw).letters
        assert all(ls[i] != -ls[i + 1] for i in range(len(ls) - 1))

    @given(raw_words)
    def test_idempotent(self, raw):
        once = Word(raw)
        assert Word(once.letters) == once


class TestText:
    @pytest.mark.parametrize("text", ["1", "a", "abA", "BBab", "aabAA"])
    def test_compact_round_trip(self, text):
        assert w(text).text(2) == text

    def test_token_round_trip(self):
        word = w("x1 X3 x2")
        assert word.letters == (1, -3, 2)
        assert Word.parse(word.text()) == word

    def test_low_rank_word_in_high_rank_context(self):
        assert w("ab").text(3) == "x1 x2"

    def test_empty_renders_as_one(self):
        assert str(Word()) == "1"

    def test_bad_character(self):
        with pytest.raises(ValueError):
            Word.parse("abc")

    def test_bad_token(self):
        with pytest.raises(ValueError):
            Word.parse("x1 y2")

    def test_zero_index_token(self):
        with pytest.raises(ValueError):
            Word.parse("x0")


class TestGroupOps:
    def test_concat_cancels(self):
        assert w("ab") * w("Ba") == w("aa")

    def test_identity(self):
        assert w("abA") * Word() == w("abA")

    def test_inverse_law(self):
        u = w("abbA")
        assert u * u.inverse() == Word()

    def test_invert_examples(self):
        assert w("aB").inverse() == w("bA")
        assert Word().inverse() == Word()
        assert w("abA").inverse() == w("aBA")

    def test_pow(self):
        assert w("ab") ** 3 == w("ababab")
        assert w("ab") ** -2 == w("BABA")
        assert w("ab") ** 0 == Word()

    @given(words, words, words)
    def test_associative(self, u, v, x):
        assert (u * v) * x == u * (v * x)

    @given(words, words)
    def test_invert_antihomomorphism(self, u, v):
        assert (u * v).inverse() == v.inverse() * u.inverse()


class TestSubstitute:
    def test_two_generator_example(self):
        # a a b with a -> xy, b -> yx^-1 gives xyxyyx^-1
        images = (Word((1, 2)), Word((2, -1)))
        assert w("aab").substitute(images).letters == (1, 2, 1, 2, 2, -1)

    def test_identity_substitution(self):
        assert w("a").substitute((w("abA"), w("b"))) == w("abA")

    def test_conjugation_collapses(self):
        assert w("abA").substitute((w("x1"), w("x1"))) == w("x1")

    def test_missing_image(self):
        with pytest.raises(ValueError, match="no image"):
            w("ab").substitute((w("a"),))

    @given(rank2_words, rank2_words, rank2_words, rank2_words)
    def test_homomorphism(self, u, v, img_a, img_b):
        images = (img_a, img_b)
        assert (u * v).substitute(images) == u.substitute(images) * v.substitute(images)

    @given(rank2_words, rank2_words, rank2_words)
    def test_commutes_with_inverse(self, u, img_a, img_b):
        images = (img_a, img_b)
        assert u.inverse().substitute(images) == u.substitute(images).inverse()


class TestLetterTransforms:
    def test_reverse_example(self):
        assert w("Babaa").reverse() == w("aabaB")

    def test_swap_example(self):
        assert w("AAba").swap_letters() == w("BBab")

    def test_swap_rank_error(self):
        with pytest.raises(ValueError):
            w("x3").swap_letters()

    @given(rank2_words)
    def test_involutions(self, u):
        assert u.reverse().reverse() == u
        assert u.swap_letters().swap_letters() == u

    @given(rank2_words)
    def test_reverse_swap_commute(self, u):
        assert u.reverse().swap_letters() == u.swap_letters().reverse()

    @given(rank2_words)
    def test_exponent_sum_under_transforms(self, u):
        assert u.reverse().exponent_sum(1) == u.exponent_sum(1)
        assert u.swap_letters().exponent_sum(1) == u.exponent_sum(2)


class TestCyclicReduction:
    def test_conjugate_strips(self):
        assert w("abA").cyclically_reduce() == (w("b"), w("a"))

    def test_already_reduced(self):
        assert w("ab").cyclically_reduce() == (w("ab"), Word())

    def test_two_layers(self):
        core, conj = w("abaBA").cyclically_reduce()
        assert (core, conj) == (w("a"), w("ab"))

    @given(words)
    def test_reconstruction(self, u):
        core, conj = u.cyclically_reduce()
        assert conj * core * conj.inverse() == u
        assert core.is_cyclically_reduced()


class TestConjugacy:
    def test_conjugate_of_generator(self):
        assert w("abA").is_conjugate(w("b"))

    def test_distinct_generators(self):
        assert not w("a").is_conjugate(w("b"))

    def test_rotation(self):
        assert w("ababb").is_conjugate(w("babba"))

    @given(words, words)
    def test_conjugation_invariance(self, u, g):
        assert (g * u * g.inverse()).is_conjugate(u)


class TestExponentSum:
    def test_balanced(self):
        assert w("abA").exponent_sum(1) == 0

    def test_positive(self):
        assert w("bba").exponent_sum(2) == 2

    def test_power_word(self):
        u = w("aabAAb")
        assert u.exponent_sum(1) == 0
        assert u.exponent_sum(2) == 2

    @given(words, words)
    def test_additive_under_concat(self, u, v):
        for gen in (1, 2, 3):
            assert (u * v).exponent_sum(gen) == u.exponent_sum(gen) + v.exponent_sum(gen)


def test_sort_key_orders_by_length_then_letters():
    ordering = [w("a"), w("A"), w("b"), w("B"), w("aa"), w("ab")]
    assert sorted(ordering, key=word_sort_key) == ordering


def test_module_doctests():
    import doctest

    import braidact.words

    failures, _ = doctest.testmod(braidact.words)
    assert failures == 0
