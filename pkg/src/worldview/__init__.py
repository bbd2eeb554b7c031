"""World views of epistemic logic programs under the ES1994, ES2014 and
ES2016 semantics, with world view constraints."""

from .aspcore import answer_sets, brave_consequences, cautious_consequences, is_answer_set
from .epistemic import Semantics, WorldView, epistemic_reduct, emit_reduct_framework
from .errors import (
    ElpSyntaxError,
    NameCollisionError,
    OracleMismatchError,
    ResourceLimitError,
    UnsafeRuleError,
    WorldViewError,
)
from .ground import GroundProgram, ground_program
from .output import format_json, format_text
from .search import SolveOptions, SolveReport, Strategy, solve
from .syntax import parse_program

__version__ = "0.1.0"

__all__ = [
    "ElpSyntaxError",
    "GroundProgram",
    "NameCollisionError",
    "OracleMismatchError",
    "ResourceLimitError",
    "Semantics",
    "SolveOptions",
    "SolveReport",
    "Strategy",
    "UnsafeRuleError",
    "WorldView",
    "WorldViewError",
    "answer_sets",
    "brave_consequences",
    "cautious_consequences",
    "emit_reduct_framework",
    "epistemic_reduct",
    "format_json",
    "format_text",
    "ground_program",
    "is_answer_set",
    "parse_program",
    "solve",
]
