"""Primer structure of a word: α-prefixes, ᾱ-suffixes, crossing status.

For a word w and primer α, an α-prefix is a word u with uα a prefix of w, and
an ᾱ-suffix is a word v̄ with w = yᾱv̄ for some y.  Both lists are kept sorted
by strictly increasing length (lengths are distinct by construction).  A word
is non-crossing when its rightmost α occurrence ends at or before the start of
its leftmost ᾱ occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .words import AlphabetMismatch, HairpinError, Primer, Word


class NotAMember(HairpinError):
    """The queried word is not in the designated prefix/suffix list."""


class PreconditionViolated(HairpinError):
    """A decomposition was requested outside the lemma's hypothesis."""


Side = Literal["prefix", "suffix"]


@dataclass(frozen=True)
class PrimerAnalysis:
    """Primer structure of a word: the sorted u/v̄ lists and crossing status."""

    word: Word
    primer: Primer
    alpha_prefixes: tuple[Word, ...]
    cbar_suffixes: tuple[Word, ...]
    v_words: tuple[Word, ...]
    alpha_positions: tuple[int, ...]
    cbar_positions: tuple[int, ...]
    non_crossing: bool
    starts_with_alpha: bool
    ends_with_cbar_alpha: bool

    @property
    def m(self) -> int:
        return len(self.alpha_prefixes)

    @property
    def n(self) -> int:
        return len(self.cbar_suffixes)

    @property
    def k(self) -> int:
        return self.primer.k

    @property
    def anchored(self) -> bool:
        """True iff the word begins with α and ends with ᾱ."""
        return self.starts_with_alpha and self.ends_with_cbar_alpha

    def u(self, i: int) -> Word:
        """The i-th shortest α-prefix, 1-based."""
        return self.alpha_prefixes[i - 1]

    def v_bar(self, j: int) -> Word:
        """The j-th shortest ᾱ-suffix, 1-based."""
        return self.cbar_suffixes[j - 1]

    def v(self, j: int) -> Word:
        """Complement of the j-th shortest ᾱ-suffix, 1-based."""
        return self.v_words[j - 1]

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "primer": str(self.primer.alpha),
            "m": self.m,
            "n": self.n,
            "alpha_prefixes": [str(u) for u in self.alpha_prefixes],
            "cbar_suffixes": [str(v) for v in self.cbar_suffixes],
            "v_words": [str(v) for v in self.v_words],
            "non_crossing": self.non_crossing,
            "starts_with_alpha": self.starts_with_alpha,
            "ends_with_cbar_alpha": self.ends_with_cbar_alpha,
        }


def analyze(w: Word, primer: Primer) -> PrimerAnalysis:
    """Compute the full primer structure of w with respect to α."""
    if w.alphabet != primer.alphabet:
        raise AlphabetMismatch("word and primer are over different alphabets")
    alpha = primer.alpha
    abar = primer.bar
    k = primer.k
    alpha_pos = tuple(w.occurrences(alpha))
    cbar_pos = tuple(w.occurrences(abar))
    prefixes = tuple(w[:p] for p in alpha_pos)
    # ᾱ occurrence at position p yields the suffix w[p+k:]; sorting by
    # increasing suffix length means descending position.
    suffixes = tuple(w[p + k :] for p in reversed(cbar_pos))
    v_words = tuple(s.complement() for s in suffixes)
    if alpha == abar:
        non_crossing = len(alpha_pos) <= 1
    elif not alpha_pos or not cbar_pos:
        non_crossing = True
    else:
        non_crossing = alpha_pos[-1] + k <= cbar_pos[0]
    return PrimerAnalysis(
        word=w,
        primer=primer,
        alpha_prefixes=prefixes,
        cbar_suffixes=suffixes,
        v_words=v_words,
        alpha_positions=alpha_pos,
        cbar_positions=cbar_pos,
        non_crossing=non_crossing,
        starts_with_alpha=w.startswith(alpha),
        ends_with_cbar_alpha=w.endswith(abar),
    )


def ind(x: Word, analysis: PrimerAnalysis, side: Side) -> int:
    """1-based index of x in the u-list (side='prefix') or v-list ('suffix')."""
    pool: Sequence[Word]
    pool = analysis.alpha_prefixes if side == "prefix" else analysis.v_words
    for i, member in enumerate(pool, 1):
        if member == x:
            return i
    raise NotAMember(f"{x!r} is not in the {side} list")


def _concat(words: Sequence[Word], alphabet) -> Word:
    out = Word(alphabet, "".join(w.codes for w in words))
    return out


def decompose_prefix(
    u: Word, xs: Sequence[Word], analysis: PrimerAnalysis
) -> tuple[int, Word]:
    """Split u as x_1...x_i z with z drawn from the strictly-shorter members.

    Requires uα to be a prefix of x_1...x_s α; returns the smallest i for which
    the remainder z lies in {u_1..u_{ind(x_{i+1})-1}} (x_{i+1} an α-prefix) or
    {v_1..v_{ind(x_{i+1})-1}} (x_{i+1} the complement of an ᾱ-suffix).
    """
    alphabet = analysis.word.alphabet
    alpha = analysis.primer.alpha
    product = _concat(list(xs) + [alpha], alphabet)
    if not product.startswith(u + alpha):
        raise PreconditionViolated("uα is not a prefix of x_1...x_s α")
    acc = ""
    for i in range(len(xs)):
        if len(acc) <= len(u.codes) and u.codes.startswith(acc):
            z = u[len(acc):]
            nxt = xs[i]
            allowed: list[Word] = []
            if nxt in analysis.alpha_prefixes:
                allowed += list(
                    analysis.alpha_prefixes[: ind(nxt, analysis, "prefix") - 1]
                )
            if nxt in analysis.v_words:
                allowed += list(analysis.v_words[: ind(nxt, analysis, "suffix") - 1])
            if z in allowed:
                return i, z
        acc += xs[i].codes
    raise PreconditionViolated(
        "no decomposition with an admissible remainder exists for u"
    )


def minimal_factors(w: Word, primer: Primer) -> list[tuple[int, int]]:
    """Spans of minimal factors of w from αΣ* ∩ Σ*ᾱ, ascending.

    A factor is minimal when none of its proper factors also begins with α and
    ends with ᾱ.
    """
    alpha = primer.alpha
    abar = primer.bar
    k = primer.k
    starts = w.occurrences(alpha)
    ends = [p + k for p in w.occurrences(abar)]
    candidates = [(s, e) for s in starts for e in ends if e - s >= k]
    spans = []
    for s, e in candidates:
        minimal = True
        for s2, e2 in candidates:
            if s <= s2 and e2 <= e and (s2, e2) != (s, e):
                minimal = False
                break
        if minimal:
            spans.append((s, e))
    return sorted(spans)
