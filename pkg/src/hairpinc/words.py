"""Alphabets with involution, words over them, and word-combinatorics primitives.

Letters are opaque string tokens; an alphabet pairs each letter with its
complement (bar) image, which must be a self-inverse map.  Words are immutable
and internally stored as a compact code string (one char per letter), which
keeps slicing, concatenation, complementation and occurrence scans cheap.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

COMBINING_MACRON = "̄"


class HairpinError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(HairpinError):
    """Malformed alphabet declaration (duplicate, conflicting, or invalid pair)."""


class AlphabetMismatch(HairpinError):
    """Operands belong to different alphabets."""


class EmptyWord(HairpinError):
    """A nonempty word was required."""


class ParseError(HairpinError):
    """Text could not be tokenized over the alphabet."""


def _norm(token: str) -> str:
    return unicodedata.normalize("NFC", token)


class InvolutionAlphabet:
    """Finite ordered letter set with a self-inverse complement map.

    Constructed from (x, y) pairs meaning bar(x) = y and bar(y) = x; a pair
    (x, x) declares a self-complementary letter.  Duplicate or conflicting
    declarations are rejected.
    """

    __slots__ = ("letters", "_bar", "_code", "_bar_table", "_by_length")

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        bar: dict[str, str] = {}
        letters: list[str] = []
        for raw_x, raw_y in pairs:
            x, y = _norm(raw_x), _norm(raw_y)
            if not x or not y:
                raise AlphabetError("empty letter token in alphabet declaration")
            if x in bar or (y in bar and y != x):
                raise AlphabetError(f"duplicate or conflicting declaration for {x!r}/{y!r}")
            bar[x] = y
            bar[y] = x
            letters.append(x)
            if y != x:
                letters.append(y)
        if not letters:
            raise AlphabetError("alphabet must declare at least one letter")
        self.letters: tuple[str, ...] = tuple(letters)
        self._bar = bar
        self._code = {a: chr(i) for i, a in enumerate(self.letters)}
        self._bar_table = str.maketrans(
            {self._code[a]: self._code[bar[a]] for a in self.letters}
        )
        self._by_length = sorted(self.letters, key=len, reverse=True)

    def bar(self, letter: str) -> str:
        try:
            return self._bar[_norm(letter)]
        except KeyError:
            raise AlphabetMismatch(f"letter {letter!r} not in alphabet") from None

    def __contains__(self, letter: str) -> bool:
        return _norm(letter) in self._bar

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, InvolutionAlphabet):
            return NotImplemented
        return self.letters == other.letters and self._bar == other._bar

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"InvolutionAlphabet({len(self.letters)} letters)"

    # -- word construction -------------------------------------------------

    def word(self, letters: Iterable[str] = ()) -> "Word":
        codes = []
        for letter in letters:
            token = _norm(letter)
            if token not in self._code:
                raise AlphabetMismatch(f"letter {letter!r} not in alphabet")
            codes.append(self._code[token])
        return Word(self, "".join(codes))

    def parse(self, text: str) -> "Word":
        """Tokenize text into a word.

        Whitespace-separated tokens are taken verbatim; otherwise the text is
        consumed by greedy longest-match against the letter set (which is plain
        per-character scanning when every letter is a single character).
        """
        text = _norm(text)
        if any(ch.isspace() for ch in text):
            return self.word(text.split())
        codes = []
        i = 0
        while i < len(text):
            for token in self._by_length:
                if text.startswith(token, i):
                    codes.append(self._code[token])
                    i += len(token)
                    break
            else:
                raise ParseError(f"cannot tokenize {text!r} at position {i}")
        return Word(self, "".join(codes))

    def _token(self, code: str) -> str:
        return self.letters[ord(code)]


def dna_alphabet() -> InvolutionAlphabet:
    """The Watson-Crick DNA preset: A<->T, C<->G."""
    return InvolutionAlphabet([("A", "T"), ("C", "G")])


def barred_alphabet(bases: str = "abcdefgh") -> InvolutionAlphabet:
    """Alphabet pairing each base letter x with its macron form x̄."""
    return InvolutionAlphabet([(x, x + COMBINING_MACRON) for x in bases])


def load_alphabet(path: str | Path) -> InvolutionAlphabet:
    """Read an alphabet file: one `X<TAB>Y` pair per line (bar(X) = Y)."""
    pairs = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise AlphabetError(f"{path}:{lineno}: expected X<TAB>Y, got {line!r}")
        pairs.append((fields[0], fields[1]))
    return InvolutionAlphabet(pairs)


class Word:
    """Immutable letter sequence over an involution alphabet."""

    __slots__ = ("alphabet", "codes")

    def __init__(self, alphabet: InvolutionAlphabet, codes: str):
        self.alphabet = alphabet
        self.codes = codes

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self.alphabet._token(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            return False
        return self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def sort_key(self) -> tuple[int, str]:
        """Length-then-lexicographic key following the alphabet's letter order."""
        return (len(self.codes), self.codes)

    def __getitem__(self, item: int | slice) -> "str | Word":
        if isinstance(item, slice):
            return Word(self.alphabet, self.codes[item])
        return self.alphabet._token(self.codes[item])

    def __add__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.alphabet, self.codes + other.codes)

    def __mul__(self, times: int) -> "Word":
        return Word(self.alphabet, self.codes * times)

    def _check(self, other: "Word") -> None:
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("words belong to different alphabets")

    def startswith(self, other: "Word") -> bool:
        self._check(other)
        return self.codes.startswith(other.codes)

    def endswith(self, other: "Word") -> bool:
        self._check(other)
        return self.codes.endswith(other.codes)

    def complement(self) -> "Word":
        return Word(self.alphabet, self.codes.translate(self.alphabet._bar_table)[::-1])

    def occurrences(self, pattern: "Word") -> list[int]:
        """All (possibly overlapping) start positions of pattern, ascending."""
        self._check(pattern)
        if not pattern.codes:
            return list(range(len(self.codes) + 1))
        positions = []
        start = self.codes.find(pattern.codes)
        while start != -1:
            positions.append(start)
            start = self.codes.find(pattern.codes, start + 1)
        return positions

    def __str__(self) -> str:
        # Plain join when it round-trips under greedy tokenization (always the
        # case for single-character letters); space-separated otherwise.
        tokens = self.letters
        joined = "".join(tokens)
        try:
            if self.alphabet.parse(joined) == self:
                return joined
        except ParseError:
            pass
        return " ".join(tokens)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


@dataclass(frozen=True)
class Primer:
    """A fixed nonempty word whose binding with its complement drives completion."""

    alpha: Word

    def __post_init__(self) -> None:
        if len(self.alpha) == 0:
            raise EmptyWord("primer must be nonempty")

    @property
    def k(self) -> int:
        return len(self.alpha)

    @property
    def alphabet(self) -> InvolutionAlphabet:
        return self.alpha.alphabet

    @property
    def bar(self) -> Word:
        return self.alpha.complement()


class PrimitiveRoot(NamedTuple):
    root: Word
    exponent: int


def complement(w: Word) -> Word:
    """Reverse bar image: complement(a1 a2 ... an) = bar(an) ... bar(a2) bar(a1)."""
    return w.complement()


def is_pseudo_palindrome(w: Word) -> bool:
    return w == w.complement()


def primitive_root(w: Word) -> PrimitiveRoot:
    """The unique primitive u with w = u^e, together with the exponent e."""
    n = len(w)
    if n == 0:
        raise EmptyWord("the empty word has no primitive root")
    for d in range(1, n + 1):
        if n % d == 0 and w.codes == w.codes[:d] * (n // d):
            return PrimitiveRoot(Word(w.alphabet, w.codes[:d]), n // d)
    raise AssertionError("unreachable: every nonempty word is a power of itself")


def commute(x: Word, y: Word) -> bool:
    x._check(y)
    return x.codes + y.codes == y.codes + x.codes


def is_prefix(u: Word, w: Word) -> bool:
    return w.startswith(u)


def is_suffix(v: Word, w: Word) -> bool:
    return w.endswith(v)


def find_occurrences(p: Word, w: Word) -> list[int]:
    return w.occurrences(p)
