from __future__ import annotations

import json
import random

from hairpinc import (
    accepts,
    barred_alphabet,
    concat,
    enumerate_words,
    equiv_up_to,
    factor_marker,
    intersect,
    literal,
    mirror_complement,
    nothing,
    plus,
    sigma_star,
    star,
    union,
)

ALPHABET = barred_alphabet("ab")


def w(text):
    return ALPHABET.parse(text)


def lang(automaton, bound):
    return {str(x) for x in enumerate_words(automaton, bound)}


class TestCombinators:
    def test_literal_empty(self):
        assert lang(literal(w("")), 3) == {""}

    def test_literal(self):
        assert lang(literal(w("ab")), 4) == {"ab"}

    def test_union(self):
        assert lang(union(literal(w("a")), literal(w("b"))), 2) == {"a", "b"}

    def test_concat(self):
        assert lang(concat(literal(w("a")), literal(w("b"))), 4) == {"ab"}

    def test_star(self):
        assert lang(star(literal(w("ab"))), 5) == {"", "ab", "abab"}

    def test_plus(self):
        assert lang(plus(literal(w("ab"))), 5) == {"ab", "abab"}

    def test_nothing(self):
        assert lang(nothing(ALPHABET), 4) == set()

    def test_sigma_star_counts(self):
        assert len(enumerate_words(sigma_star(ALPHABET), 2)) == 1 + 4 + 16

    def test_factor_marker(self):
        marker = factor_marker(w("ab"))
        assert accepts(marker, w("ab"))
        assert accepts(marker, w("aabb"))
        assert not accepts(marker, w("a"))

    def test_intersect(self):
        assert lang(intersect(star(literal(w("a"))), literal(w("aa"))), 5) == {"aa"}

    def test_intersect_with_empty(self):
        assert lang(intersect(nothing(ALPHABET), sigma_star(ALPHABET)), 3) == set()

    def test_mirror_complement(self):
        automaton = mirror_complement(concat(literal(w("a")), star(literal(w("b")))))
        # complement image of a b^i is b̄^i ā
        assert lang(automaton, 3) == {"ā", "b̄ā", "b̄b̄ā"}


def random_automaton(rng):
    atoms = [literal(w(rng.choice(["a", "b", "ā", "ab", ""]))) for _ in range(3)]
    combined = atoms[0]
    for atom in atoms[1:]:
        op = rng.choice(["union", "concat", "star_then_union"])
        if op == "union":
            combined = union(combined, atom)
        elif op == "concat":
            combined = concat(combined, atom)
        else:
            combined = union(star(combined), atom)
    return combined


class TestAlgebraicLaws:
    def test_bounded_set_laws(self):
        rng = random.Random(21)
        for _ in range(30):
            a, b = random_automaton(rng), random_automaton(rng)
            ea, eb = enumerate_words(a, 4), enumerate_words(b, 4)
            assert enumerate_words(union(a, b), 4) == ea | eb
            assert enumerate_words(intersect(a, b), 4) == ea & eb

    def test_concat_law_on_bounded_sets(self):
        rng = random.Random(22)
        for _ in range(15):
            a, b = random_automaton(rng), random_automaton(rng)
            expected = {
                x + y
                for x in enumerate_words(a, 3)
                for y in enumerate_words(b, 3)
                if len(x) + len(y) <= 3
            }
            assert enumerate_words(concat(a, b), 3) == expected

    def test_accepts_agrees_with_enumeration(self):
        rng = random.Random(23)
        for _ in range(15):
            a = random_automaton(rng)
            enumerated = enumerate_words(a, 3)
            for word in all_words_up_to(3):
                assert accepts(a, word) == (word in enumerated)


def all_words_up_to(bound):
    frontier = [ALPHABET.word()]
    for word in frontier:
        if len(word) < bound:
            frontier.extend(word + ALPHABET.word([x]) for x in ALPHABET.letters)
    return frontier


class TestEquivalence:
    def test_matching_sets(self):
        a = star(literal(w("ab")))
        ok, counterexample = equiv_up_to(a, enumerate_words(a, 6), 6)
        assert ok and counterexample is None

    def test_missing_member_reported(self):
        a = literal(w("ab"))
        ok, counterexample = equiv_up_to(a, {w("ab"), w("abab")}, 6)
        assert not ok and counterexample == w("abab")

    def test_extra_word_reported(self):
        a = union(literal(w("ab")), literal(w("a")))
        ok, counterexample = equiv_up_to(a, {w("ab")}, 6)
        assert not ok and counterexample == w("a")


class TestSerialization:
    def test_json_round_trip_structure(self):
        automaton = union(literal(w("a")), star(literal(w("b"))))
        payload = automaton.to_json()
        assert set(payload) == {"states", "initial", "accepting", "transitions"}
        json.dumps(payload)

    def test_dot_contains_states_and_labels(self):
        dot = literal(w("ab")).to_dot()
        assert dot.startswith("digraph")
        assert '"a"' in dot or 'label="a"' in dot
