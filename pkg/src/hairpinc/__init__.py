"""Hairpin completion of words over an involution alphabet: closure engine,
primer-structure analysis, regularity decisions, and explicit automata."""

from .analysis import (
    NotAMember,
    PreconditionViolated,
    PrimerAnalysis,
    analyze,
    decompose_prefix,
    ind,
    minimal_factors,
)
from .constructions import (
    ConditionNotSatisfied,
    ConditionViolated,
    ExtensionSystem,
    NotAnchored,
    NotNonCrossing,
    WitnessReport,
    WrongClass,
    build_22,
    build_32_regular,
    build_m1,
    build_mirror,
    build_one_sided,
    conditions_32,
    transcribe_m1,
    witness_family,
    witness_family_word,
    witness_language,
)
from .decider import (
    NON_REGULAR,
    REGULAR,
    UNKNOWN,
    Verdict,
    VerificationFailed,
    decide,
    default_bound,
)
from .engine import (
    BoundTooSmall,
    ClosureResult,
    HcStep,
    NotInClosure,
    Sides,
    closure,
    lhc_step,
    rhc_step,
    successors,
    trace,
)
from .nfa import (
    Nfa,
    accepts,
    concat,
    concat_all,
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
    union_all,
)
from .words import (
    AlphabetError,
    AlphabetMismatch,
    EmptyWord,
    HairpinError,
    InvolutionAlphabet,
    ParseError,
    Primer,
    PrimitiveRoot,
    Word,
    barred_alphabet,
    commute,
    complement,
    dna_alphabet,
    find_occurrences,
    is_prefix,
    is_pseudo_palindrome,
    is_suffix,
    load_alphabet,
    primitive_root,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
