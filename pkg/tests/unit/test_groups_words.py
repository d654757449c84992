"""Unit tests for words, free reduction and the word grammar."""

import pytest
from hypothesis import given, settings

from groups.errors import UnknownGeneratorError, WordSyntaxError
from groups.words import (
    EMPTY,
    Word,
    ball_size,
    enumerate_ball,
    format_word,
    free_reduce,
    is_freely_trivial,
    parse_word,
    signed_alphabet,
)
from tests.conftest import words_over


class TestWord:
    """Test word construction and arithmetic."""

    def test_gen_powers(self):
        """Test name^k for positive, negative and zero k."""
        assert Word.gen("a", 3).letters == (("a", 1),) * 3
        assert Word.gen("a", -2).letters == (("a", -1),) * 2
        assert Word.gen("a", 0) == EMPTY

    def test_rejects_bad_sign(self):
        """Test that signs other than +-1 are refused."""
        with pytest.raises(WordSyntaxError):
            Word((("a", 2),))

    def test_inverse_and_power(self):
        """Test inversion and negative powers."""
        w = Word.gen("a") * Word.gen("b")
        assert w.inverse() == Word((("b", -1), ("a", -1)))
        assert w ** -1 == w.inverse()
        assert len(w ** 3) == 6

    def test_commutator(self):
        """Test [u,v] = u v u^-1 v^-1."""
        a, b = Word.gen("a"), Word.gen("b")
        assert a.commutator(b) == Word((("a", 1), ("b", 1), ("a", -1), ("b", -1)))

    def test_substitute_uses_inverse_images(self):
        """Test substitution of inverse letters."""
        table = {"a": parse_word("x y"), "b": parse_word("z")}
        assert parse_word("a^-1 b").substitute(table) == parse_word("y^-1 x^-1 z")
        with pytest.raises(UnknownGeneratorError):
            parse_word("c").substitute(table)

    def test_restrict_and_letters_used(self):
        """Test deleting letters outside a set."""
        w = parse_word("a b a^-1 c")
        assert w.restrict(["a"]) == parse_word("a a^-1")
        assert w.letters_used == frozenset({"a", "b", "c"})


class TestFreeReduce:
    """Test free reduction."""

    def test_cancels_nested_pairs(self):
        """Test that cancellations cascade."""
        assert free_reduce(parse_word("a b b^-1 a^-1 c")) == parse_word("c")
        assert is_freely_trivial(parse_word("[a,b] b a b^-1 a^-1"))

    @given(words_over("abc"))
    @settings(max_examples=200)
    def test_reduced_words_have_no_cancelling_pair(self, w):
        """Test that the result never contains x x^-1."""
        reduced = free_reduce(w)
        for (n1, s1), (n2, s2) in zip(reduced.letters, reduced.letters[1:]):
            assert not (n1 == n2 and s1 == -s2)

    @given(words_over("ab"), words_over("ab"))
    @settings(max_examples=200)
    def test_reduction_is_compatible_with_products(self, u, v):
        """Test free_reduce(uv) = free_reduce(free_reduce(u) free_reduce(v))."""
        assert free_reduce(u * v) == free_reduce(free_reduce(u) * free_reduce(v))

    @given(words_over("abc"))
    @settings(max_examples=200)
    def test_word_times_inverse_is_trivial(self, w):
        """Test w w^-1 reduces to the empty word."""
        assert is_freely_trivial(w * w.inverse())


class TestBall:
    """Test shortlex ball enumeration."""

    def test_signed_alphabet_order(self):
        """Test name order, positive letter first."""
        assert signed_alphabet(["b", "a"]) == [("a", 1), ("a", -1), ("b", 1), ("b", -1)]

    @pytest.mark.parametrize("rank,radius", [(1, 3), (2, 0), (2, 1), (2, 3), (3, 2)])
    def test_ball_size_matches_enumeration(self, rank, radius):
        """Test the closed-form size against the enumeration."""
        names = "abc"[:rank]
        assert len(list(enumerate_ball(names, radius))) == ball_size(rank, radius)

    def test_known_sizes(self):
        """Test 1 + 4 + 12 + 36 + 108 on two generators."""
        assert ball_size(2, 4) == 161
        assert ball_size(4, 4) == 3201

    def test_enumeration_is_shortlex_and_reduced(self):
        """Test ordering, uniqueness and reducedness."""
        words = list(enumerate_ball("ab", 3))
        assert words[0] == EMPTY
        assert words[1:5] == [parse_word("a"), parse_word("a^-1"), parse_word("b"), parse_word("b^-1")]
        keys = [w.shortlex_key() for w in words]
        assert keys == sorted(keys)
        assert len(set(words)) == len(words)
        assert all(free_reduce(w) == w for w in words)


class TestWordGrammar:
    """Test parsing and formatting of the word syntax."""

    def test_tokens_and_identity(self):
        """Test plain, powered and identity tokens."""
        assert parse_word("a b^-1 c^2") == Word((("a", 1), ("b", -1), ("c", 1), ("c", 1)))
        assert parse_word("1") == EMPTY
        assert parse_word("") == EMPTY

    def test_brackets_expand_to_commutators(self):
        """Test [u,v] and nested brackets."""
        assert parse_word("[a,b]") == parse_word("a b a^-1 b^-1")
        assert parse_word("[a b, c]") == parse_word("a b c b^-1 a^-1 c^-1")
        nested = parse_word("[[a,b],c]")
        ab = parse_word("[a,b]")
        assert nested == ab.commutator(parse_word("c"))

    def test_primed_names(self):
        """Test names produced by the zero-sum rewrite."""
        assert parse_word("a' ab^-1") == Word((("a'", 1), ("ab", -1)))

    @pytest.mark.parametrize("text", ["a^", "[a,b", "a,b", "^2", "a ^ 2", "[a]"])
    def test_malformed_words(self, text):
        """Test that bad syntax raises WordSyntaxError."""
        with pytest.raises(WordSyntaxError):
            parse_word(text)

    def test_alphabet_check(self):
        """Test that unknown letters are reported by name."""
        with pytest.raises(UnknownGeneratorError) as excinfo:
            parse_word("a z", alphabet=["a", "b"])
        assert excinfo.value.name == "z"

    def test_format_runs(self):
        """Test that runs are written as powers."""
        assert format_word(parse_word("a a a b^-1 b^-1 a")) == "a^3 b^-2 a"
        assert format_word(EMPTY) == "1"

    @given(words_over("ab"))
    @settings(max_examples=200)
    def test_format_then_parse(self, w):
        """Test that parse_word inverts format_word."""
        assert parse_word(format_word(w)) == w
