"""Regularity verdicts for the iterated hairpin completion of a word.

Dispatch covers the characterized classes: pseudo-palindromic primers with at
most one occurrence, the mirror case u_m = v_n, (m,1) and (1,n) words, (2,2),
and (3,2)/(2,3) via the three-condition theorem.  Everything else is honestly
Unknown.  Regular verdicts are post-validated against the bounded closure
oracle before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import PrimerAnalysis, analyze
from .constructions import (
    WitnessReport,
    build_22,
    build_32_regular,
    build_m1,
    build_mirror,
    conditions_32,
    witness_family,
    witness_family_word,
    witness_language,
)
from .engine import Sides, closure
from .nfa import Nfa, equiv_up_to, literal, mirror_complement
from .words import AlphabetMismatch, HairpinError, Primer, Word, primitive_root


class VerificationFailed(HairpinError):
    """A constructed automaton disagrees with the closure oracle."""


REGULAR = "regular"
NON_REGULAR = "non_regular"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the regularity decision for (w0, primer)."""

    analysis: PrimerAnalysis
    outcome: str
    justification: str
    automaton: Optional[Nfa] = None
    conditions: Optional[tuple[bool, bool, bool]] = None
    witness: Optional[Nfa] = None
    witness_report: Optional[WitnessReport] = None
    verified_bound: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "class": {
                "m": self.analysis.m,
                "n": self.analysis.n,
                "non_crossing": self.analysis.non_crossing,
                "anchored": self.analysis.anchored,
            },
            "outcome": self.outcome,
            "justification": self.justification,
            "conditions": list(self.conditions) if self.conditions else None,
            "automaton": self.automaton.to_json() if self.automaton else None,
            "witness": self.witness_report.to_json() if self.witness_report else None,
            "verified_bound": self.verified_bound,
        }


def default_bound(w0: Word, primer: Primer) -> int:
    return len(w0) + 6 * primer.k + 16


def _verified(
    analysis: PrimerAnalysis,
    automaton: Nfa,
    justification: str,
    bound: int,
    conditions: Optional[tuple[bool, bool, bool]] = None,
) -> Verdict:
    oracle = closure(analysis.word, analysis.primer, bound, Sides.BOTH)
    ok, counterexample = equiv_up_to(automaton, oracle.members, bound)
    if not ok:
        raise VerificationFailed(
            f"automaton for {analysis.word!r} disagrees with the oracle at "
            f"{counterexample!r} (bound {bound})"
        )
    return Verdict(
        analysis=analysis,
        outcome=REGULAR,
        justification=justification,
        automaton=automaton,
        conditions=conditions,
        verified_bound=bound,
    )


def _decide_32(
    analysis: PrimerAnalysis,
    outer: PrimerAnalysis,
    mirrored: bool,
    bound: int,
) -> Verdict:
    """(3,2) dispatch; when mirrored, analysis is of the complement word and
    the automaton is mirrored back before verification against outer."""
    for side_word in (analysis.u(2), analysis.v(2)):
        if side_word and primitive_root(side_word).exponent != 1:
            return Verdict(
                analysis=outer,
                outcome=UNKNOWN,
                justification="u2 or v2 is not primitive; not a faithful (3,2)-word",
            )
    conditions = conditions_32(analysis)
    note = " (via the complement instance)" if mirrored else ""
    for index, holds in enumerate(conditions, 1):
        if holds:
            automaton = build_32_regular(analysis, index)
            if mirrored:
                automaton = mirror_complement(automaton)
            return _verified(
                outer,
                automaton,
                f"(3,2)-word satisfying regularity condition {index}{note}",
                bound,
                conditions,
            )
    report_bound = len(witness_family_word(analysis, 2))
    report = witness_family(analysis, i_max=2, bound=report_bound)
    if not report.ok:
        raise VerificationFailed(
            f"witness family check failed for {analysis.word!r}: {report.to_json()}"
        )
    return Verdict(
        analysis=outer,
        outcome=NON_REGULAR,
        justification=f"(3,2)-word with all three regularity conditions false{note}",
        conditions=conditions,
        witness=witness_language(analysis),
        witness_report=report,
    )


def decide(w0: Word, primer: Primer, verify_bound: Optional[int] = None) -> Verdict:
    """Classify (w0, primer) and return a verdict with automaton or witness."""
    if w0.alphabet != primer.alphabet:
        raise AlphabetMismatch("word and primer are over different alphabets")
    if verify_bound is None:
        verify_bound = default_bound(w0, primer)
    analysis = analyze(w0, primer)
    if primer.alpha == primer.bar:
        if analysis.m <= 1:
            return _verified(
                analysis,
                literal(w0),
                "pseudo-palindromic primer with at most one occurrence; "
                "the closure is {w0}",
                verify_bound,
            )
        return Verdict(
            analysis=analysis,
            outcome=UNKNOWN,
            justification="pseudo-palindromic primer with repeated occurrences (crossing)",
        )
    if not analysis.anchored:
        return Verdict(
            analysis=analysis,
            outcome=UNKNOWN,
            justification="word is not in αΣ* ∩ Σ*ᾱ",
        )
    if not analysis.non_crossing:
        return Verdict(
            analysis=analysis,
            outcome=UNKNOWN,
            justification="crossing word; out of scope",
        )
    m, n = analysis.m, analysis.n
    if analysis.u(m) == analysis.v(n):
        if m == 1:
            return _verified(
                analysis, literal(w0), "(1,1)-word; the closure is {w0}", verify_bound
            )
        return _verified(
            analysis,
            build_mirror(analysis),
            "longest α-prefix equals the longest ᾱ-suffix complement (mirror case)",
            verify_bound,
        )
    if n == 1:
        return _verified(
            analysis, build_m1(analysis), f"({m},1)-word", verify_bound
        )
    if m == 1:
        comp = analyze(w0.complement(), primer)
        automaton = mirror_complement(build_m1(comp))
        return _verified(
            analysis,
            automaton,
            f"(1,{n})-word (via the complement ({n},1)-instance)",
            verify_bound,
        )
    if (m, n) == (2, 2):
        return _verified(analysis, build_22(analysis), "(2,2)-word", verify_bound)
    if (m, n) == (3, 2):
        return _decide_32(analysis, analysis, mirrored=False, bound=verify_bound)
    if (m, n) == (2, 3):
        comp = analyze(w0.complement(), primer)
        return _decide_32(comp, analysis, mirrored=True, bound=verify_bound)
    return Verdict(
        analysis=analysis,
        outcome=UNKNOWN,
        justification=f"({m},{n})-word; beyond the characterized classes",
    )
