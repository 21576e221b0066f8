from __future__ import annotations

import pytest

from hairpinc import (
    AlphabetMismatch,
    NON_REGULAR,
    Primer,
    REGULAR,
    Sides,
    UNKNOWN,
    barred_alphabet,
    closure,
    decide,
    dna_alphabet,
    enumerate_words,
)


class TestDispatch:
    def test_11_word_regular(self, wd, primer_a):
        verdict = decide(wd("aā"), primer_a)
        assert verdict.outcome == REGULAR
        assert enumerate_words(verdict.automaton, 20) == {wd("aā")}

    def test_example_instance_non_regular(self, wd, primer_a):
        verdict = decide(wd("abacaād̄ā"), primer_a)
        assert verdict.outcome == NON_REGULAR
        assert verdict.conditions == (False, False, False)
        assert verdict.witness_report is not None and verdict.witness_report.ok

    def test_condition_3_regular(self, wd, primer_a):
        verdict = decide(wd("abadaād̄ā"), primer_a)
        assert verdict.outcome == REGULAR
        assert verdict.conditions == (False, False, True)

    def test_mirror_case_regular(self, wd, primer_a):
        verdict = decide(wd("abaāb̄ā"), primer_a)
        assert verdict.outcome == REGULAR
        assert "mirror" in verdict.justification

    def test_crossing_unknown(self, wd, primer_a):
        assert decide(wd("aāaā"), primer_a).outcome == UNKNOWN

    def test_unanchored_unknown(self, wd, primer_a):
        assert decide(wd("baā"), primer_a).outcome == UNKNOWN

    def test_m1_and_1n_words(self, wd, primer_a):
        assert decide(wd("abaā"), primer_a).outcome == REGULAR
        assert decide(wd("abaā").complement(), primer_a).outcome == REGULAR

    def test_22_word(self, wd, primer_a):
        assert decide(wd("abaāc̄ā"), primer_a).outcome == REGULAR

    def test_23_word_via_mirror(self, wd, primer_a):
        verdict = decide(wd("abadaād̄ā").complement(), primer_a)
        assert verdict.outcome == REGULAR
        assert verdict.conditions == (False, False, True)

    def test_23_non_regular_via_mirror(self, wd, primer_a):
        verdict = decide(wd("abacaād̄ā").complement(), primer_a)
        assert verdict.outcome == NON_REGULAR

    def test_pseudo_palindromic_primer(self, alphabet):
        primer = Primer(alphabet.parse("aā"))
        single = decide(alphabet.parse("aāb"), primer)
        assert single.outcome == REGULAR
        repeated = decide(alphabet.parse("aābaā"), primer)
        assert repeated.outcome == UNKNOWN

    def test_alphabet_mismatch(self, wd):
        dna = dna_alphabet()
        with pytest.raises(AlphabetMismatch):
            decide(wd("abaā"), Primer(dna.parse("A")))


class TestSoundness:
    def test_regular_verdicts_match_oracle(self, wd, primer_a):
        for text in ["abaā", "abaāc̄ā", "abaāb̄ā", "abadaād̄ā"]:
            verdict = decide(wd(text), primer_a)
            assert verdict.outcome == REGULAR
            bound = verdict.verified_bound
            members = closure(wd(text), primer_a, bound, Sides.BOTH).members
            assert enumerate_words(verdict.automaton, bound) == members

    def test_mirror_dispatch_consistency(self, wd, primer_a):
        """decide(w) and decide(complement(w)) agree up to the complement map."""
        for text in ["abaā", "abaāc̄ā", "abadaād̄ā"]:
            direct = decide(wd(text), primer_a)
            mirrored = decide(wd(text).complement(), primer_a)
            assert direct.outcome == mirrored.outcome
            bound = min(direct.verified_bound, mirrored.verified_bound)
            assert enumerate_words(direct.automaton, bound) == {
                w.complement() for w in enumerate_words(mirrored.automaton, bound)
            }


class TestSerialization:
    def test_verdict_json(self, wd, primer_a):
        payload = decide(wd("abacaād̄ā"), primer_a).to_json()
        assert payload["outcome"] == NON_REGULAR
        assert payload["class"]["m"] == 3 and payload["class"]["n"] == 2
        assert payload["conditions"] == [False, False, False]
        assert payload["witness"]["ok"] is True

    def test_regular_verdict_carries_automaton(self, wd, primer_a):
        payload = decide(wd("abaā"), primer_a).to_json()
        assert payload["automaton"] is not None
        assert payload["witness"] is None
