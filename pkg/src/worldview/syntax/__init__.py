from .ast import (
    Atom,
    BodyElement,
    EpistemicNegation,
    ExtLiteral,
    Literal,
    Modal,
    Origin,
    Program,
    Rule,
    RuleKind,
    Subjective,
    collapse_depth,
    is_variable,
)
from .parser import parse_literal, parse_negation, parse_program, parse_rules, tokenize
from .transform import (
    Diagnostic,
    collect_epistemic_negations,
    eliminate_strong_negation,
    normalize,
    restore_literals,
    validate,
)

__all__ = [
    "Atom",
    "BodyElement",
    "Diagnostic",
    "EpistemicNegation",
    "ExtLiteral",
    "Literal",
    "Modal",
    "Origin",
    "Program",
    "Rule",
    "RuleKind",
    "Subjective",
    "collapse_depth",
    "collect_epistemic_negations",
    "eliminate_strong_negation",
    "is_variable",
    "normalize",
    "parse_literal",
    "parse_negation",
    "parse_program",
    "parse_rules",
    "restore_literals",
    "tokenize",
    "validate",
]
