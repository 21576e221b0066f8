from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hairpinc import (
    AlphabetError,
    AlphabetMismatch,
    EmptyWord,
    ParseError,
    InvolutionAlphabet,
    Primer,
    barred_alphabet,
    commute,
    dna_alphabet,
    is_prefix,
    is_pseudo_palindrome,
    load_alphabet,
    primitive_root,
)

ALPHABET = barred_alphabet()
letter_st = st.sampled_from(ALPHABET.letters[:8])
word_st = st.lists(letter_st, max_size=12).map(ALPHABET.word)
nonempty_word_st = st.lists(letter_st, min_size=1, max_size=12).map(ALPHABET.word)


class TestAlphabet:
    def test_involution_law(self):
        for letter in ALPHABET.letters:
            assert ALPHABET.bar(ALPHABET.bar(letter)) == letter

    def test_dna_preset(self):
        dna = dna_alphabet()
        assert dna.bar("A") == "T"
        assert dna.bar("G") == "C"

    def test_self_complementary_letter_allowed(self):
        alphabet = InvolutionAlphabet([("x", "x"), ("a", "b")])
        assert alphabet.bar("x") == "x"

    def test_conflicting_declaration_rejected(self):
        with pytest.raises(AlphabetError):
            InvolutionAlphabet([("a", "b"), ("a", "c")])

    def test_empty_alphabet_rejected(self):
        with pytest.raises(AlphabetError):
            InvolutionAlphabet([])

    def test_load_alphabet_file(self, tmp_path):
        path = tmp_path / "ab.alphabet"
        path.write_text("a\ta'\nb\tb'\n", encoding="utf-8")
        alphabet = load_alphabet(path)
        assert alphabet.bar("a") == "a'"
        # greedy longest-match keeps the plain rendering unambiguous here
        rendered = str(alphabet.parse("a a' b"))
        assert alphabet.parse(rendered) == alphabet.parse("a a' b")

    def test_load_alphabet_rejects_malformed_line(self, tmp_path):
        path = tmp_path / "bad.alphabet"
        path.write_text("a b c\n", encoding="utf-8")
        with pytest.raises(AlphabetError):
            load_alphabet(path)


class TestParsing:
    def test_single_character_words_parse_plainly(self, wd):
        assert [x for x in wd("abā")] == ["a", "b", "ā"]

    def test_unknown_letter_rejected(self, alphabet):
        with pytest.raises(ParseError):
            alphabet.parse("axz!")

    def test_str_round_trips(self, alphabet, wd):
        for text in ["", "abaā", "b̄āc", "āāā"]:
            assert alphabet.parse(str(wd(text))) == wd(text)

    def test_mixed_alphabet_operations_rejected(self, wd):
        other = dna_alphabet()
        with pytest.raises(AlphabetMismatch):
            wd("ab") + other.parse("AT")


class TestComplement:
    @given(word_st)
    def test_involution(self, w):
        assert w.complement().complement() == w

    @given(word_st, word_st)
    def test_anti_morphism(self, x, y):
        assert (x + y).complement() == y.complement() + x.complement()

    def test_known_value(self, wd):
        assert wd("ab").complement() == wd("b̄ā")

    def test_pseudo_palindrome(self, wd):
        assert is_pseudo_palindrome(wd(""))
        assert is_pseudo_palindrome(wd("aā"))
        assert not is_pseudo_palindrome(wd("ab"))


class TestPrimitiveRoot:
    def test_empty_word_rejected(self, wd):
        with pytest.raises(EmptyWord):
            primitive_root(wd(""))

    def test_known_values(self, wd):
        assert primitive_root(wd("abab")) == (wd("ab"), 2)
        assert primitive_root(wd("a")) == (wd("a"), 1)
        assert primitive_root(wd("aab")) == (wd("aab"), 1)

    @given(nonempty_word_st)
    def test_root_power_reconstructs(self, w):
        root, exponent = primitive_root(w)
        assert root * exponent == w
        # brute force: no shorter period divides the word
        for d in range(1, len(root)):
            if len(w) % d == 0:
                assert w[:d] * (len(w) // d) != w


class TestCommute:
    def test_known_values(self, wd):
        assert commute(wd("ab"), wd("abab"))
        assert not commute(wd("ab"), wd("ad"))
        assert commute(wd(""), wd("ab"))

    @given(word_st, word_st)
    def test_commute_iff_equal_roots(self, x, y):
        expected = (
            not x
            or not y
            or primitive_root(x).root == primitive_root(y).root
        )
        assert commute(x, y) == expected


class TestOccurrences:
    def test_prefix_and_occurrences(self, wd):
        assert is_prefix(wd("ab"), wd("abaā"))
        assert wd("abaā").occurrences(wd("a")) == [0, 2]
        assert wd("aaaa").occurrences(wd("aa")) == [0, 1, 2]

    def test_empty_pattern_everywhere(self, wd):
        assert wd("ab").occurrences(wd("")) == [0, 1, 2]


class TestPrimer:
    def test_empty_primer_rejected(self, wd):
        with pytest.raises(EmptyWord):
            Primer(wd(""))

    def test_bar_and_k(self, wd):
        primer = Primer(wd("ab"))
        assert primer.k == 2
        assert primer.bar == wd("b̄ā")
