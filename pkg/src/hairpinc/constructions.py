"""Explicit automata for every word class with a proven-regular closure.

Covers one-sided closures of non-crossing words, (m,1)-words, the
longest-prefix/longest-suffix mirror case, (2,2)-words, the three regular
(3,2) conditions, and the witness language certifying the non-regular (3,2)
case.  Every construction is meant to be cross-checked against the bounded
closure oracle; nothing here is trusted on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .analysis import PrimerAnalysis, analyze
from .engine import Sides, closure
from .nfa import (
    Nfa,
    accepts,
    concat,
    concat_all,
    enumerate_words,
    factor_marker,
    intersect,
    literal,
    mirror_complement,
    plus,
    star,
    union,
    union_all,
)
from .words import HairpinError, Word


class NotNonCrossing(HairpinError):
    """The construction requires a non-crossing seed."""


class NotAnchored(HairpinError):
    """The construction requires a seed in αΣ* ∩ Σ*ᾱ."""


class WrongClass(HairpinError):
    """The seed is not in the (m,n) class the construction covers."""


class ConditionNotSatisfied(HairpinError):
    """The requested (3,2) regularity condition does not hold."""


class ConditionViolated(HairpinError):
    """A regularity condition holds where none was allowed to."""


def _require(analysis: PrimerAnalysis) -> None:
    if not analysis.non_crossing:
        raise NotNonCrossing(f"{analysis.word!r} is crossing for this primer")
    if not analysis.anchored:
        raise NotAnchored(f"{analysis.word!r} is not in αΣ* ∩ Σ*ᾱ")


@dataclass(frozen=True)
class ExtensionSystem:
    """Atoms a non-crossing word can be extended by, with their length gates.

    A right atom ū_i may be appended to a word W iff |u_i| + 2k <= |W|; the
    left gates are symmetric.  Empty atoms are dropped.
    """

    analysis: PrimerAnalysis
    left_atoms: tuple[Word, ...]
    right_atoms: tuple[Word, ...]
    left_gates: tuple[int, ...]
    right_gates: tuple[int, ...]

    @classmethod
    def from_analysis(cls, analysis: PrimerAnalysis) -> "ExtensionSystem":
        k = analysis.k
        rights = analysis.alpha_prefixes[1:]
        lefts = analysis.v_words[1:]
        return cls(
            analysis=analysis,
            left_atoms=lefts,
            right_atoms=tuple(u.complement() for u in rights),
            left_gates=tuple(len(v) + 2 * k for v in lefts),
            right_gates=tuple(len(u) + 2 * k for u in rights),
        )


class NfaBuilder:
    """Mutable helper for hand-built automata."""

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.num_states = 0
        self.transitions: set[tuple[int, Optional[str], int]] = set()

    def state(self) -> int:
        q = self.num_states
        self.num_states += 1
        return q

    def edge(self, q: int, label: Optional[str], r: int) -> None:
        self.transitions.add((q, label, r))

    def word_path(self, q: int, word: Word) -> int:
        """Chain of letter transitions reading word; returns the end state."""
        current = q
        for letter in word.letters:
            nxt = self.state()
            self.edge(current, letter, nxt)
            current = nxt
        return current

    def word_loop(self, q: int, word: Word) -> None:
        """Cycle at q reading word (word must be nonempty)."""
        letters = word.letters
        current = q
        for letter in letters[:-1]:
            nxt = self.state()
            self.edge(current, letter, nxt)
            current = nxt
        self.edge(current, letters[-1], q)

    def build(self, initial: Iterable[int], accepting: Iterable[int]) -> Nfa:
        return Nfa(
            alphabet=self.alphabet,
            num_states=max(self.num_states, 1),
            transitions=frozenset(self.transitions),
            initial=frozenset(initial),
            accepting=frozenset(accepting),
        )


def build_one_sided(analysis: PrimerAnalysis, side: Sides) -> Nfa:
    """Automaton for RHC*(w0) or LHC*(w0) of a non-crossing anchored word.

    Right side: a saturating length counter gates which atom complements may
    be appended.  Left side: built on the complement word and mirrored back.
    """
    _require(analysis)
    if side == Sides.LEFT:
        comp = analyze(analysis.word.complement(), analysis.primer)
        return mirror_complement(build_one_sided(comp, Sides.RIGHT))
    if side != Sides.RIGHT:
        raise ValueError("side must be Sides.LEFT or Sides.RIGHT")
    system = ExtensionSystem.from_analysis(analysis)
    w0 = analysis.word
    builder = NfaBuilder(w0.alphabet)
    init = builder.state()
    atoms = list(zip(system.right_atoms, system.right_gates))
    threshold = max((gate for _, gate in atoms), default=len(w0))

    def saturate(length: int) -> int:
        return min(length, threshold)

    length_state: dict[int, int] = {}
    pending = [saturate(len(w0))]
    length_state[pending[0]] = builder.state()
    while pending:
        level = pending.pop()
        here = length_state[level]
        for atom, gate in atoms:
            if gate <= level:
                target_level = saturate(level + len(atom))
                if target_level not in length_state:
                    length_state[target_level] = builder.state()
                    pending.append(target_level)
                end = builder.word_path(here, atom[:-1])
                builder.edge(end, atom.letters[-1], length_state[target_level])
    spine_end = builder.word_path(init, w0[:-1])
    builder.edge(spine_end, w0.letters[-1], length_state[saturate(len(w0))])
    return builder.build([init], length_state.values())


def build_mirror(analysis: PrimerAnalysis) -> Nfa:
    """{u_1..u_m}* w0 {ū_1..ū_m}* for the case u_m = v_n."""
    _require(analysis)
    if analysis.m < 1 or analysis.n < 1 or analysis.u(analysis.m) != analysis.v(analysis.n):
        raise WrongClass("mirror construction requires u_m = v_n")
    w0 = analysis.word
    if analysis.m == 1:
        return literal(w0)
    atoms = analysis.alpha_prefixes[1:]
    left = star(union_all([literal(u) for u in atoms]))
    right = star(union_all([literal(u.complement()) for u in atoms]))
    return concat_all([left, literal(w0), right])


def _m1_gate_holds(analysis: PrimerAnalysis) -> bool:
    return len(analysis.u(analysis.m)) + 2 * analysis.k <= len(analysis.word)


def build_m1(analysis: PrimerAnalysis) -> Nfa:
    """Operational automaton for HC*(w0) of a non-crossing (m,1)-word.

    Word shape is x_s..x_1 w0 ȳ_1..ȳ_t with atoms drawn from the nonempty
    α-prefixes.  The automaton guesses an index bound j, loops left atoms of
    index <= j, then runs a right-side machine whose state is a saturating
    rights-only length counter (gating each appended atom) plus a flag that
    some right atom of index >= j has occurred.
    """
    _require(analysis)
    if analysis.n != 1:
        raise WrongClass(f"(m,1) construction got an ({analysis.m},{analysis.n})-word")
    w0 = analysis.word
    if analysis.m == 1:
        return literal(w0)
    k = analysis.k
    m = analysis.m
    u_words = analysis.alpha_prefixes
    atoms = [
        (i, u_words[i - 1], u_words[i - 1].complement(), len(u_words[i - 1]) + 2 * k)
        for i in range(2, m + 1)
    ]
    threshold = max(gate for _, _, _, gate in atoms)

    def saturate(length: int) -> int:
        return min(length, threshold)

    builder = NfaBuilder(w0.alphabet)
    init = builder.state()
    accepting = set()
    # bare w0
    accepting.add(builder.word_path(init, w0))
    right_states: dict[tuple[int, int, bool], int] = {}

    def right_state(key: tuple[int, int, bool]) -> int:
        if key not in right_states:
            right_states[key] = builder.state()
            j, level, satisfied = key
            if satisfied:
                accepting.add(right_states[key])
            for i, _, ubar, gate in atoms:
                if gate <= level:
                    target = right_state(
                        (j, saturate(level + len(ubar)), satisfied or i >= j)
                    )
                    end = builder.word_path(right_states[key], ubar[:-1])
                    builder.edge(end, ubar.letters[-1], target)
        return right_states[key]

    for j in range(2, m + 1):
        left = builder.state()
        builder.edge(init, None, left)
        for i, u, _, _ in atoms:
            if i <= j:
                builder.word_loop(left, u)
        spine_end = builder.word_path(left, w0[:-1])
        builder.edge(
            spine_end, w0.letters[-1], right_state((j, saturate(len(w0)), False))
        )
    return builder.build([init], accepting)


def transcribe_m1(analysis: PrimerAnalysis) -> Nfa:
    """Literal transcription of the displayed (m,1) language, for cross-checks.

    Unlike the operational automaton, only the first appended atom is gated
    (by |u_m| + 2k <= |w0|); all later ones are unrestricted.
    """
    _require(analysis)
    if analysis.n != 1:
        raise WrongClass(f"(m,1) transcription got an ({analysis.m},{analysis.n})-word")
    w0 = analysis.word
    if analysis.m == 1:
        return literal(w0)
    m = analysis.m
    u_words = analysis.alpha_prefixes
    ubar = {i: literal(u_words[i - 1].complement()) for i in range(2, m + 1)}
    u_lit = {i: literal(u_words[i - 1]) for i in range(2, m + 1)}
    first_indices = list(range(2, m + 1)) if _m1_gate_holds(analysis) else list(
        range(2, m)
    )
    any_right = union_all(list(ubar.values()))
    result = literal(w0)
    for j in range(2, m + 1):
        left = star(union_all([u_lit[i] for i in range(2, j + 1)]))
        pieces = []
        hi_first = [ubar[i] for i in first_indices if i >= j]
        if hi_first:
            pieces.append(concat(union_all(hi_first), star(any_right)))
        any_first = [ubar[i] for i in first_indices]
        hi_later = [ubar[i] for i in range(j, m + 1)]
        if any_first and hi_later:
            pieces.append(
                concat_all(
                    [
                        union_all(any_first),
                        star(any_right),
                        union_all(hi_later),
                        star(any_right),
                    ]
                )
            )
        if pieces:
            result = union(result, concat_all([left, literal(w0), union_all(pieces)]))
    return result


def _r22l(u2: Word, v2: Word, w0: Word) -> Nfa:
    """The displayed language for HC*(v2 w0) of a (2,2)-word."""
    v = literal(v2)
    vb = literal(v2.complement())
    u = literal(u2)
    ub = literal(u2.complement())
    core = literal(v2 + w0)
    part1 = concat_all([star(v), core, star(vb)])
    part2 = concat_all(
        [
            star(concat(plus(v), u)),
            star(v),
            core,
            star(vb),
            plus(concat(ub, plus(vb))),
        ]
    )
    return union(part1, part2)


def build_22(analysis: PrimerAnalysis) -> Nfa:
    """HC*(w0) of a non-crossing (2,2)-word: {w0} ∪ R_22L ∪ R_22R.

    R_22R is obtained from R_22L on the complement word (where the roles of
    u2 and v2 swap) by the structural complement of the automaton.  The
    degenerate case u2 = v2 falls under the mirror corollary.
    """
    _require(analysis)
    if (analysis.m, analysis.n) != (2, 2):
        raise WrongClass(f"(2,2) construction got an ({analysis.m},{analysis.n})-word")
    u2, v2 = analysis.u(2), analysis.v(2)
    w0 = analysis.word
    if u2 == v2:
        return build_mirror(analysis)
    left_part = _r22l(u2, v2, w0)
    right_part = mirror_complement(_r22l(v2, u2, w0.complement()))
    return union_all([literal(w0), left_part, right_part])


def conditions_32(analysis: PrimerAnalysis) -> tuple[bool, bool, bool]:
    """The (3,2) regularity conditions: u2~v2, u2~u3, u3 = u2 v2.

    For a faithful (3,2)-word u2 and v2 are primitive, so the first two
    commutativity conditions collapse to the equalities u2 = v2 and
    u3 = u2².
    """
    if (analysis.m, analysis.n) != (3, 2):
        raise WrongClass(f"(3,2) conditions on an ({analysis.m},{analysis.n})-word")
    u2, u3, v2 = analysis.u(2), analysis.u(3), analysis.v(2)
    return (u2 == v2, u3 == u2 + u2, u3 == u2 + v2)


def _expect_class(word: Word, analysis: PrimerAnalysis, m: int, n: int) -> PrimerAnalysis:
    derived = analyze(word, analysis.primer)
    if (derived.m, derived.n) != (m, n) or not derived.non_crossing or not derived.anchored:
        raise WrongClass(
            f"derived word {word!r} is not a non-crossing anchored ({m},{n})-word"
        )
    return derived


def build_32_regular(analysis: PrimerAnalysis, condition: int) -> Nfa:
    """HC*(w0) of a non-crossing (3,2)-word satisfying the given condition.

    Assembled from the proof recipes: (m,1)/(2,2)/mirror constructions on
    derived seeds, cut back with factor markers.
    """
    _require(analysis)
    conditions = conditions_32(analysis)
    if condition not in (1, 2, 3):
        raise ValueError("condition must be 1, 2, or 3")
    if not conditions[condition - 1]:
        raise ConditionNotSatisfied(f"condition {condition} does not hold")
    w0 = analysis.word
    u2, u3, v2 = analysis.u(2), analysis.u(3), analysis.v(2)
    v2b = v2.complement()
    u2b = u2.complement()

    if condition == 1:
        # w0 = w v̄2 for a (3,1)-word w; HC*(w0) = HC*(w) ∩ Σ* w ū2 Σ*
        w = w0[: len(w0) - len(v2)]
        sub = _expect_class(w, analysis, 3, 1)
        return intersect(build_m1(sub), factor_marker(w + u2b))

    if condition == 2:
        # w0 = u2 w for a (2,2)-word w; HC*(w0 ū2) = HC*(w) ∩ Σ* w0 Σ*
        w = w0[len(u2):]
        sub22 = _expect_class(w, analysis, 2, 2)
        piece_right = intersect(build_22(sub22), factor_marker(w0))
        # w0 = w' v̄2 for a (3,1)-word w'; v2 w' is a (4,1)-word and
        # HC*(v2 w0) = HC*(v2 w') ∩ Σ* v2 w0 Σ*
        w_prime = w0[: len(w0) - len(v2)]
        sub41 = _expect_class(v2 + w_prime, analysis, 4, 1)
        piece_left = intersect(build_m1(sub41), factor_marker(v2 + w0))
        return union_all([literal(w0), piece_left, piece_right])

    # condition 3: u3 = u2 v2
    # HC*(w0 ū2) via the mirror corollary (its longest prefix equals its
    # longest suffix complement).
    mirror_sub = analyze(w0 + u2b, analysis.primer)
    piece_right = build_mirror(mirror_sub)
    # HC*(v2 w0) exactly as in condition 2.
    w1 = w0[: len(w0) - len(v2)]
    sub41 = _expect_class(v2 + w1, analysis, 4, 1)
    piece_left = intersect(build_m1(sub41), factor_marker(v2 + w0))
    # w0 v̄2 ū2 = u2 v2 w2 for a (1,4)-word w2; HC*(u2 v2 w2) =
    # HC*(w2) ∩ Σ* u2 v2 w2 Σ*, with HC*(w2) built by the mirror of (4,1).
    long_word = w0 + v2b + u2b
    w2 = long_word[len(u2) + len(v2):]
    sub14 = _expect_class(w2.complement(), analysis, 4, 1)
    hc_w2 = mirror_complement(build_m1(sub14))
    piece_far = intersect(hc_w2, factor_marker(long_word))
    return union_all([literal(w0), piece_left, piece_right, piece_far])


def witness_language(analysis: PrimerAnalysis) -> Nfa:
    """The cut language u3 u2^{>=2} v2 w0 ū2^{>=2} ū3 for (3,2)-words."""
    _require(analysis)
    if (analysis.m, analysis.n) != (3, 2):
        raise WrongClass(f"witness language needs a (3,2)-word")
    u2, u3, v2 = analysis.u(2), analysis.u(3), analysis.v(2)
    w0 = analysis.word
    u2b, u3b = u2.complement(), u3.complement()
    return concat_all(
        [
            literal(u3),
            literal(u2),
            literal(u2),
            star(literal(u2)),
            literal(v2),
            literal(w0),
            literal(u2b),
            literal(u2b),
            star(literal(u2b)),
            literal(u3b),
        ]
    )


@dataclass(frozen=True)
class WitnessReport:
    """Desk-scale certificate for the non-regular (3,2) case.

    Records which matched-exponent family members appear in the bounded
    closure cut with the witness language, and any extraneous (mismatched)
    members, which must be absent.
    """

    analysis: PrimerAnalysis
    conditions: tuple[bool, bool, bool]
    i_max: int
    bound: int
    family: tuple[tuple[int, Word], ...]
    missing: tuple[int, ...]
    extraneous: tuple[Word, ...]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extraneous

    def to_json(self) -> dict:
        return {
            "instance": str(self.analysis.word),
            "primer": str(self.analysis.primer.alpha),
            "conditions": list(self.conditions),
            "i_max": self.i_max,
            "bound": self.bound,
            "family": [{"i": i, "word": str(w)} for i, w in self.family],
            "missing": list(self.missing),
            "extraneous": [str(w) for w in self.extraneous],
            "ok": self.ok,
        }


def witness_family_word(analysis: PrimerAnalysis, i: int) -> Word:
    u2, u3, v2 = analysis.u(2), analysis.u(3), analysis.v(2)
    return u3 + u2 * i + v2 + analysis.word + u2.complement() * i + u3.complement()


def witness_family(analysis: PrimerAnalysis, i_max: int, bound: int) -> WitnessReport:
    """Check the bounded closure cut with the witness language.

    The cut must be exactly the matched-exponent family
    {u3 u2^i v2 w0 ū2^i ū3 : 2 <= i <= i_max} for every i whose family word
    fits the bound.
    """
    _require(analysis)
    conditions = conditions_32(analysis)
    if any(conditions):
        raise ConditionViolated(
            "a regularity condition holds; the witness family does not apply"
        )
    members = closure(analysis.word, analysis.primer, bound, Sides.BOTH).members
    cut_language = witness_language(analysis)
    matched = {w for w in enumerate_words(cut_language, bound) if w in members}
    family = []
    missing = []
    expected_words = set()
    for i in range(2, i_max + 1):
        w = witness_family_word(analysis, i)
        if len(w) > bound:
            break
        expected_words.add(w)
        if w in matched:
            family.append((i, w))
        else:
            missing.append(i)
    extraneous = sorted(matched - expected_words, key=Word.sort_key)
    return WitnessReport(
        analysis=analysis,
        conditions=conditions,
        i_max=i_max,
        bound=bound,
        family=tuple(family),
        missing=tuple(missing),
        extraneous=tuple(extraneous),
    )
