"""Command-line interface: analyze | step | closure | build | decide | verify | witness."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional

import click

from .analysis import analyze
from .decider import NON_REGULAR, REGULAR, decide, default_bound
from .engine import Sides, closure, successors, trace
from .nfa import enumerate_words, equiv_up_to
from .words import (
    HairpinError,
    InvolutionAlphabet,
    Primer,
    Word,
    barred_alphabet,
    dna_alphabet,
    load_alphabet,
)


def _alphabet(alphabet_file: Optional[str], dna: bool) -> InvolutionAlphabet:
    if alphabet_file and dna:
        raise click.UsageError("--alphabet and --dna are mutually exclusive")
    if dna:
        return dna_alphabet()
    if alphabet_file:
        return load_alphabet(alphabet_file)
    return barred_alphabet()


def _setup(word_text, primer_text, alphabet_file, dna) -> tuple[Word, Primer]:
    alphabet = _alphabet(alphabet_file, dna)
    try:
        word = alphabet.parse(word_text)
        primer = Primer(alphabet.parse(primer_text))
    except HairpinError as error:
        raise click.ClickException(str(error))
    return word, primer


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for key, value in payload.items():
            click.echo(f"{key}: {value}")


common_options = [
    click.argument("word"),
    click.option("--primer", required=True, help="Primer word α."),
    click.option(
        "--alphabet",
        "alphabet_file",
        type=click.Path(exists=True),
        default=None,
        help="Alphabet file (X<TAB>Y pairs); default is the barred preset a..h.",
    ),
    click.option("--dna", is_flag=True, help="Use the DNA preset A<->T, C<->G."),
]


def with_common(command):
    for option in reversed(common_options):
        command = option(command)
    return command


@click.group()
def main() -> None:
    """Hairpin completion toolkit: closures, classification, automata."""


@main.command("analyze")
@with_common
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def cmd_analyze(word, primer, alphabet_file, dna, fmt) -> None:
    """Primer structure of WORD: u/v̄ lists, (m,n) class, crossing status."""
    w, p = _setup(word, primer, alphabet_file, dna)
    _emit(analyze(w, p).to_json(), fmt)


@main.command("step")
@with_common
@click.option(
    "--side",
    type=click.Choice(["left", "right", "both"]),
    default="both",
)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def cmd_step(word, primer, alphabet_file, dna, side, fmt) -> None:
    """One-step hairpin completion successors of WORD with their anchors."""
    w, p = _setup(word, primer, alphabet_file, dna)
    steps = [
        {
            "direction": step.direction.value,
            "child": str(step.child),
            "appended": str(step.appended),
            "anchor": step.anchor,
        }
        for step in successors(w, p, Sides(side))
    ]
    if fmt == "json":
        click.echo(json.dumps(steps, ensure_ascii=False, indent=2))
    else:
        for step in steps:
            click.echo(f"{step['direction']}\t{step['child']}\t@{step['anchor']}")


@main.command("closure")
@with_common
@click.option("--bound", type=int, default=None, help="Length cap; default |w|+6k+16.")
@click.option(
    "--side",
    type=click.Choice(["left", "right", "both"]),
    default="both",
)
@click.option("--trace", "trace_target", default=None, help="Print a derivation of this member.")
@click.option(
    "--figure",
    type=click.Path(),
    default=None,
    help="Also write a member-length histogram image to this path.",
)
def cmd_closure(word, primer, alphabet_file, dna, bound, side, trace_target, figure) -> None:
    """All closure members of WORD up to the bound, length-then-lex sorted."""
    w, p = _setup(word, primer, alphabet_file, dna)
    if bound is None:
        bound = default_bound(w, p)
    try:
        result = closure(w, p, bound, Sides(side))
        if trace_target is not None:
            target = w.alphabet.parse(trace_target)
            for step in trace(result, target):
                click.echo(
                    f"{step.direction.value}\t{step.parent}\t->\t{step.child}"
                )
            return
    except HairpinError as error:
        raise click.ClickException(str(error))
    for member in result.sorted_members():
        click.echo(str(member))
    if figure:
        from .figures import render_closure_histogram

        render_closure_histogram(result, figure)
        click.echo(f"figure written to {figure}", err=True)


@main.command("build")
@with_common
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json")
@click.option(
    "--figure",
    type=click.Path(),
    default=None,
    help="Also render the automaton graph to this image path.",
)
def cmd_build(word, primer, alphabet_file, dna, fmt, figure) -> None:
    """Automaton for the closure of WORD, when its class is characterized."""
    w, p = _setup(word, primer, alphabet_file, dna)
    try:
        # light verification only; `verify` does the full oracle pass
        verdict = decide(w, p, verify_bound=len(w))
    except HairpinError as error:
        raise click.ClickException(str(error))
    if verdict.automaton is None:
        click.echo(f"no automaton: {verdict.outcome} ({verdict.justification})", err=True)
        sys.exit(3 if verdict.outcome != NON_REGULAR else 2)
    if fmt == "dot":
        click.echo(verdict.automaton.to_dot())
    else:
        click.echo(json.dumps(verdict.automaton.to_json(), ensure_ascii=False, indent=2))
    if figure:
        from .figures import render_nfa

        render_nfa(verdict.automaton, figure)
        click.echo(f"figure written to {figure}", err=True)


@main.command("decide")
@with_common
@click.option("--bound", type=int, default=None, help="Verification bound.")
@click.option(
    "--figure",
    type=click.Path(),
    default=None,
    help="Render the verdict automaton (if any) to this image path.",
)
def cmd_decide(word, primer, alphabet_file, dna, bound, figure) -> None:
    """Regularity verdict for WORD; exit 0 regular, 2 non-regular, 3 unknown."""
    w, p = _setup(word, primer, alphabet_file, dna)
    try:
        verdict = decide(w, p, verify_bound=bound)
    except HairpinError as error:
        raise click.ClickException(str(error))
    click.echo(json.dumps(verdict.to_json(), ensure_ascii=False, indent=2))
    if figure and verdict.automaton is not None:
        from .figures import render_nfa

        render_nfa(verdict.automaton, figure)
        click.echo(f"figure written to {figure}", err=True)
    if verdict.outcome == REGULAR:
        sys.exit(0)
    sys.exit(2 if verdict.outcome == NON_REGULAR else 3)


@main.command("verify")
@with_common
@click.option("--bound", type=int, default=None, help="Equivalence bound.")
def cmd_verify(word, primer, alphabet_file, dna, bound) -> None:
    """Check the constructed automaton against the closure oracle up to the bound."""
    w, p = _setup(word, primer, alphabet_file, dna)
    if bound is None:
        bound = default_bound(w, p)
    try:
        verdict = decide(w, p, verify_bound=bound)
    except HairpinError as error:
        raise click.ClickException(str(error))
    if verdict.automaton is None:
        click.echo(f"nothing to verify: {verdict.outcome} ({verdict.justification})")
        sys.exit(3)
    oracle = closure(w, p, bound, Sides.BOTH)
    ok, counterexample = equiv_up_to(verdict.automaton, oracle.members, bound)
    if ok:
        click.echo(f"equivalent up to bound {bound} ({len(oracle.members)} members)")
        sys.exit(0)
    click.echo(f"MISMATCH at {counterexample}")
    sys.exit(1)


@main.command("witness")
@with_common
@click.option("--i-max", type=int, default=3, help="Largest exponent to check.")
@click.option("--bound", type=int, default=None, help="Closure bound; default fits i-max.")
def cmd_witness(word, primer, alphabet_file, dna, i_max, bound) -> None:
    """Witness family report for a non-regular (3,2) instance."""
    from .constructions import witness_family, witness_family_word

    w, p = _setup(word, primer, alphabet_file, dna)
    try:
        a = analyze(w, p)
        if bound is None:
            bound = len(witness_family_word(a, i_max))
        report = witness_family(a, i_max=i_max, bound=bound)
    except HairpinError as error:
        raise click.ClickException(str(error))
    click.echo(json.dumps(report.to_json(), ensure_ascii=False, indent=2))
    sys.exit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
