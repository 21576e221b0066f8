"""Single-step hairpin completion and the bounded iterated-closure oracle.

Right completion rewrites w = uαvᾱ into uαvᾱū (u nonempty); left completion
rewrites w = αv'ᾱū' into u'αv'ᾱū'.  The closure explores all derivations
breadth-first up to a hard length bound; since every step strictly increases
length, the bounded exploration is exact for all members within the bound.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .words import HairpinError, Primer, Word


class Sides(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"


class BoundTooSmall(HairpinError):
    """The requested bound is below the seed length."""


class NotInClosure(HairpinError):
    """The trace target was never reached within the bound."""


@dataclass(frozen=True)
class HcStep:
    """One completion step: parent -> child by appending/prepending a complement."""

    direction: Sides
    parent: Word
    child: Word
    appended: Word
    anchor: int


def rhc_step(w: Word, primer: Primer) -> tuple[HcStep, ...]:
    """All right completions of w, one per factorization w = uαvᾱ with u ≠ λ."""
    alpha = primer.alpha
    k = primer.k
    if len(w) < 2 * k or not w.endswith(primer.bar):
        return ()
    steps = []
    for p in w.occurrences(alpha):
        if 1 <= p and p + 2 * k <= len(w):
            u = w[:p]
            steps.append(
                HcStep(
                    direction=Sides.RIGHT,
                    parent=w,
                    child=w + u.complement(),
                    appended=u,
                    anchor=p,
                )
            )
    return tuple(steps)


def lhc_step(w: Word, primer: Primer) -> tuple[HcStep, ...]:
    """All left completions of w, one per factorization w = αv'ᾱū' with u' ≠ λ."""
    alpha = primer.alpha
    abar = primer.bar
    k = primer.k
    if len(w) < 2 * k or not w.startswith(alpha):
        return ()
    steps = []
    for q in w.occurrences(abar):
        if k <= q and q + k < len(w):
            u_bar = w[q + k :]
            u = u_bar.complement()
            steps.append(
                HcStep(
                    direction=Sides.LEFT,
                    parent=w,
                    child=u + w,
                    appended=u,
                    anchor=q,
                )
            )
    return tuple(steps)


def successors(w: Word, primer: Primer, sides: Sides = Sides.BOTH) -> tuple[HcStep, ...]:
    """One-step successors; left steps enumerated before right steps."""
    steps: tuple[HcStep, ...] = ()
    if sides in (Sides.LEFT, Sides.BOTH):
        steps += lhc_step(w, primer)
    if sides in (Sides.RIGHT, Sides.BOTH):
        steps += rhc_step(w, primer)
    return steps


@dataclass(frozen=True)
class ClosureResult:
    """Exact bounded closure: members and one derivation witness per member."""

    seed: Word
    primer: Primer
    bound: int
    sides: Sides
    members: frozenset[Word]
    parent_links: Mapping[Word, HcStep] = field(hash=False)

    def sorted_members(self) -> list[Word]:
        return sorted(self.members, key=Word.sort_key)


def closure(
    seed: Word, primer: Primer, bound: int, sides: Sides = Sides.BOTH
) -> ClosureResult:
    """Exact set {w : seed ->* w, |w| <= bound}, by breadth-first exploration."""
    if bound < len(seed):
        raise BoundTooSmall(f"bound {bound} < seed length {len(seed)}")
    parent_links: dict[Word, HcStep] = {}
    seen = {seed}
    queue = deque([seed])
    while queue:
        current = queue.popleft()
        for step in successors(current, primer, sides):
            if len(step.child) > bound or step.child in seen:
                continue
            seen.add(step.child)
            parent_links[step.child] = step
            queue.append(step.child)
    return ClosureResult(
        seed=seed,
        primer=primer,
        bound=bound,
        sides=sides,
        members=frozenset(seen),
        parent_links=parent_links,
    )


def trace(result: ClosureResult, target: Word) -> list[HcStep]:
    """Derivation seed -> ... -> target recorded during the closure BFS."""
    if target not in result.members:
        raise NotInClosure(f"{target!r} is not in the closure")
    steps = []
    current = target
    while current != result.seed:
        step = result.parent_links[current]
        steps.append(step)
        current = step.parent
    steps.reverse()
    return steps
