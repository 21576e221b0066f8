"""ε-NFA representation and the algebra used by the regular constructions.

Thompson-style combinators (literal, union, concat, star, plus), a product
intersection, factor markers Σ*xΣ*, acceptance, bounded enumeration, and
bounded equivalence against an explicit member set.  Full minimization or
unbounded equivalence is deliberately out of scope; bounded enumeration is the
verification workhorse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .words import AlphabetMismatch, InvolutionAlphabet, Word

Label = Optional[str]  # letter token, or None for ε
Transition = tuple[int, Label, int]


@dataclass(frozen=True)
class Nfa:
    alphabet: InvolutionAlphabet
    num_states: int
    transitions: frozenset[Transition]
    initial: frozenset[int]
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        for q, label, r in self.transitions:
            if not (0 <= q < self.num_states and 0 <= r < self.num_states):
                raise ValueError("transition references an undeclared state")
            if label is not None and label not in self.alphabet:
                raise AlphabetMismatch(f"label {label!r} not in alphabet")

    def to_json(self) -> dict:
        return {
            "states": self.num_states,
            "initial": sorted(self.initial),
            "accepting": sorted(self.accepting),
            "transitions": sorted(
                (
                    {"from": q, "label": label, "to": r}
                    for q, label, r in self.transitions
                ),
                key=lambda t: (t["from"], t["to"], t["label"] or ""),
            ),
        }

    def to_dot(self) -> str:
        lines = ["digraph nfa {", "  rankdir=LR;", '  node [shape=circle];']
        for q in sorted(self.accepting):
            lines.append(f"  {q} [shape=doublecircle];")
        for q in sorted(self.initial):
            lines.append(f'  start{q} [shape=none, label=""];')
            lines.append(f"  start{q} -> {q};")
        grouped: dict[tuple[int, int], list[str]] = {}
        for q, label, r in self.transitions:
            grouped.setdefault((q, r), []).append("ε" if label is None else label)
        for (q, r), labels in sorted(grouped.items()):
            lines.append(f'  {q} -> {r} [label="{",".join(sorted(labels))}"];')
        lines.append("}")
        return "\n".join(lines)


def _check_same(a: Nfa, b: Nfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch("automata are over different alphabets")


def _shift(transitions: Iterable[Transition], offset: int) -> set[Transition]:
    return {(q + offset, label, r + offset) for q, label, r in transitions}


def literal(w: Word) -> Nfa:
    """Automaton accepting exactly {w}."""
    transitions = {(i, letter, i + 1) for i, letter in enumerate(w.letters)}
    return Nfa(
        alphabet=w.alphabet,
        num_states=len(w) + 1,
        transitions=frozenset(transitions),
        initial=frozenset({0}),
        accepting=frozenset({len(w)}),
    )


def nothing(alphabet: InvolutionAlphabet) -> Nfa:
    """Automaton accepting the empty language."""
    return Nfa(alphabet, 1, frozenset(), frozenset({0}), frozenset())


def union(a: Nfa, b: Nfa) -> Nfa:
    _check_same(a, b)
    shifted = _shift(b.transitions, a.num_states)
    return Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states + b.num_states,
        transitions=a.transitions | shifted,
        initial=a.initial | {q + a.num_states for q in b.initial},
        accepting=a.accepting | {q + a.num_states for q in b.accepting},
    )


def concat(a: Nfa, b: Nfa) -> Nfa:
    _check_same(a, b)
    transitions = set(a.transitions) | _shift(b.transitions, a.num_states)
    for q in a.accepting:
        for r in b.initial:
            transitions.add((q, None, r + a.num_states))
    return Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states + b.num_states,
        transitions=frozenset(transitions),
        initial=a.initial,
        accepting=frozenset(q + a.num_states for q in b.accepting),
    )


def star(a: Nfa) -> Nfa:
    hub = a.num_states
    transitions = set(a.transitions)
    for q in a.initial:
        transitions.add((hub, None, q))
    for q in a.accepting:
        transitions.add((q, None, hub))
    return Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states + 1,
        transitions=frozenset(transitions),
        initial=frozenset({hub}),
        accepting=frozenset({hub}),
    )


def plus(a: Nfa) -> Nfa:
    transitions = set(a.transitions)
    for q in a.accepting:
        for r in a.initial:
            transitions.add((q, None, r))
    return Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states,
        transitions=frozenset(transitions),
        initial=a.initial,
        accepting=a.accepting,
    )


def concat_all(parts: Iterable[Nfa]) -> Nfa:
    parts = list(parts)
    result = parts[0]
    for part in parts[1:]:
        result = concat(result, part)
    return result


def union_all(parts: Iterable[Nfa]) -> Nfa:
    parts = list(parts)
    result = parts[0]
    for part in parts[1:]:
        result = union(result, part)
    return result


def sigma_star(alphabet: InvolutionAlphabet) -> Nfa:
    transitions = {(0, letter, 0) for letter in alphabet.letters}
    return Nfa(alphabet, 1, frozenset(transitions), frozenset({0}), frozenset({0}))


def factor_marker(x: Word) -> Nfa:
    """Automaton for Σ* x Σ*."""
    return concat_all([sigma_star(x.alphabet), literal(x), sigma_star(x.alphabet)])


def mirror_complement(a: Nfa) -> Nfa:
    """Automaton for the complement image {complement(w) : w in L(a)}.

    Structural: reverse every transition, bar every label, swap the initial
    and accepting sets.
    """
    bar = a.alphabet.bar
    transitions = {
        (r, None if label is None else bar(label), q) for q, label, r in a.transitions
    }
    return Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states,
        transitions=frozenset(transitions),
        initial=a.accepting,
        accepting=a.initial,
    )


# -- ε elimination and the operations built on it ---------------------------


def _eps_closures(a: Nfa) -> list[set[int]]:
    eps: dict[int, set[int]] = {q: set() for q in range(a.num_states)}
    for q, label, r in a.transitions:
        if label is None:
            eps[q].add(r)
    closures = []
    for q in range(a.num_states):
        seen = {q}
        stack = [q]
        while stack:
            p = stack.pop()
            for r in eps[p]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        closures.append(seen)
    return closures


def _epsilon_free(a: Nfa) -> tuple[dict[int, dict[str, set[int]]], frozenset[int]]:
    """Letter-only transition map (with ε folded in) and the accepting set."""
    closures = _eps_closures(a)
    direct: dict[int, dict[str, set[int]]] = {q: {} for q in range(a.num_states)}
    for q, label, r in a.transitions:
        if label is not None:
            direct[q].setdefault(label, set()).add(r)
    delta: dict[int, dict[str, set[int]]] = {q: {} for q in range(a.num_states)}
    for q in range(a.num_states):
        for p in closures[q]:
            for label, targets in direct[p].items():
                delta[q].setdefault(label, set()).update(targets)
    accepting = frozenset(
        q for q in range(a.num_states) if closures[q] & a.accepting
    )
    return delta, accepting


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Product construction for L(a) ∩ L(b)."""
    _check_same(a, b)
    delta_a, acc_a = _epsilon_free(a)
    delta_b, acc_b = _epsilon_free(b)
    index: dict[tuple[int, int], int] = {}
    transitions: set[Transition] = set()

    def state_of(pair: tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(index)
        return index[pair]

    frontier = deque()
    initial = set()
    for qa in a.initial:
        for qb in b.initial:
            pair = (qa, qb)
            if pair not in index:
                frontier.append(pair)
            initial.add(state_of(pair))
    while frontier:
        qa, qb = frontier.popleft()
        here = state_of((qa, qb))
        for label, ra_set in delta_a[qa].items():
            rb_set = delta_b[qb].get(label)
            if not rb_set:
                continue
            for ra in ra_set:
                for rb in rb_set:
                    pair = (ra, rb)
                    if pair not in index:
                        state_of(pair)
                        frontier.append(pair)
                    transitions.add((here, label, index[pair]))
    accepting = frozenset(
        index[pair] for pair in index if pair[0] in acc_a and pair[1] in acc_b
    )
    return Nfa(
        alphabet=a.alphabet,
        num_states=max(len(index), 1),
        transitions=frozenset(transitions),
        initial=frozenset(initial) if index else frozenset({0}),
        accepting=accepting,
    )


def accepts(a: Nfa, w: Word) -> bool:
    """Standard NFA acceptance with ε-closure."""
    if w.alphabet != a.alphabet:
        raise AlphabetMismatch("word and automaton are over different alphabets")
    delta, accepting = _epsilon_free(a)
    current = set(a.initial)
    for letter in w.letters:
        nxt: set[int] = set()
        for q in current:
            nxt.update(delta[q].get(letter, ()))
        current = nxt
        if not current:
            return False
    return bool(current & accepting)


def _dist_to_accept(delta: dict[int, dict[str, set[int]]], accepting: frozenset[int], num_states: int) -> list[float]:
    reverse: dict[int, set[int]] = {q: set() for q in range(num_states)}
    for q, moves in delta.items():
        for targets in moves.values():
            for r in targets:
                reverse[r].add(q)
    dist: list[float] = [float("inf")] * num_states
    queue = deque()
    for q in accepting:
        dist[q] = 0
        queue.append(q)
    while queue:
        r = queue.popleft()
        for q in reverse[r]:
            if dist[q] == float("inf"):
                dist[q] = dist[r] + 1
                queue.append(q)
    return dist


def enumerate_words(a: Nfa, bound: int) -> set[Word]:
    """Exactly {w in L(a) : |w| <= bound}."""
    delta, accepting = _epsilon_free(a)
    dist = _dist_to_accept(delta, accepting, a.num_states)
    results: set[Word] = set()
    letters = a.alphabet.letters

    def viable(states: frozenset[int], remaining: int) -> bool:
        return any(dist[q] <= remaining for q in states)

    start = frozenset(a.initial)
    stack: list[tuple[tuple[str, ...], frozenset[int]]] = [((), start)]
    while stack:
        prefix, states = stack.pop()
        if states & accepting:
            results.add(a.alphabet.word(prefix))
        if len(prefix) >= bound:
            continue
        remaining = bound - len(prefix) - 1
        for letter in letters:
            nxt: set[int] = set()
            for q in states:
                nxt.update(delta[q].get(letter, ()))
            if nxt and viable(frozenset(nxt), remaining):
                stack.append((prefix + (letter,), frozenset(nxt)))
    return results


def equiv_up_to(
    a: Nfa, members: Iterable[Word], bound: int
) -> tuple[bool, Optional[Word]]:
    """Bounded equivalence of L(a) against an explicit member set.

    Returns (True, None) on agreement, else (False, w) for a shortest word in
    the symmetric difference.
    """
    members = set(members)
    enumerated = enumerate_words(a, bound)
    difference = enumerated ^ members
    if not difference:
        return True, None
    return False, min(difference, key=Word.sort_key)
