from __future__ import annotations

import random

import pytest

from hairpinc import Primer, PrimerAnalysis, Word, analyze, barred_alphabet

# generation draws from a small letter pool so that repeated α/ᾱ occurrences
# (hence interesting (m,n) classes) show up often
POOL = ("a", "ā", "b", "b̄")


@pytest.fixture(scope="session")
def alphabet():
    return barred_alphabet()


@pytest.fixture(scope="session")
def wd(alphabet):
    """Parse helper: wd('abaā') -> Word."""
    return alphabet.parse


@pytest.fixture(scope="session")
def primer_a(alphabet):
    return Primer(alphabet.parse("a"))


def random_word(rng: random.Random, alphabet, max_len: int, min_len: int = 0) -> Word:
    length = rng.randint(min_len, max_len)
    return alphabet.word(rng.choice(POOL) for _ in range(length))


def random_primer(rng: random.Random, alphabet, max_k: int = 3) -> Primer:
    while True:
        alpha = random_word(rng, alphabet, max_len=max_k, min_len=1)
        if alpha != alpha.complement():
            return Primer(alpha)


def random_anchored_seed(
    rng: random.Random, alphabet, primer: Primer, max_len: int
) -> Word:
    """Random word of the shape α · middle · ᾱ."""
    room = max(0, max_len - 2 * primer.k)
    middle = random_word(rng, alphabet, max_len=room)
    return primer.alpha + middle + primer.bar


def noncrossing_seeds(
    seed: int, alphabet, count: int, max_len: int = 12, max_k: int = 3
) -> list[tuple[Word, Primer, PrimerAnalysis]]:
    """Deterministic corpus of non-crossing anchored seeds with their analyses."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        primer = random_primer(rng, alphabet, max_k=max_k)
        word = random_anchored_seed(rng, alphabet, primer, max_len)
        if len(word) > max_len:
            continue
        a = analyze(word, primer)
        if a.non_crossing and a.anchored:
            out.append((word, primer, a))
    return out


def structured_m3_seeds(
    seed: int, alphabet, count: int
) -> list[tuple[Word, Primer, PrimerAnalysis]]:
    """Non-crossing anchored seeds with m >= 3, built by stacking α-prefixes.

    Shape: a r1 a r2 a mid ā with r1, r2, mid free of a and ā, so the α
    occurrences are exactly the three planted ones.
    """
    rng = random.Random(seed)
    primer = Primer(alphabet.parse("a"))
    abar = primer.bar
    fillers = [x for x in alphabet.letters if x not in (primer.alpha[0], abar[0])]
    out = []
    while len(out) < count:
        def filler(lo, hi):
            return alphabet.word(
                rng.choice(fillers) for _ in range(rng.randint(lo, hi))
            )
        word = (
            primer.alpha
            + filler(1, 2)
            + primer.alpha
            + filler(1, 2)
            + primer.alpha
            + filler(0, 2)
            + abar
        )
        # occasionally make u3 = u2 u2 to hit the inclusion branch
        if rng.random() < 0.4:
            u2 = primer.alpha + filler(1, 2)
            word = u2 + u2 + primer.alpha + filler(0, 2) + abar
        a = analyze(word, primer)
        if a.non_crossing and a.anchored and a.m >= 3:
            out.append((word, primer, a))
    return out
