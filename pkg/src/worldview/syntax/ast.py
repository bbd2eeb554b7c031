"""Abstract syntax for epistemic logic programs.

All nodes are immutable.  Printing any node with ``str`` yields the concrete
surface syntax accepted by :func:`worldview.syntax.parse_program`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union


def is_variable(term: str) -> bool:
    return term[:1].isupper()


@dataclass(frozen=True, order=True)
class Atom:
    predicate: str
    terms: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.terms:
            return self.predicate
        return f"{self.predicate}({','.join(self.terms)})"

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(t for t in self.terms if is_variable(t))

    def substitute(self, binding: dict) -> "Atom":
        if not self.variables:
            return self
        return Atom(self.predicate, tuple(binding.get(t, t) for t in self.terms))


@dataclass(frozen=True, order=True)
class Literal:
    """An objective literal: an atom, possibly under classical negation."""

    atom: Atom
    strong_neg: bool = False

    def __str__(self) -> str:
        return ("-" if self.strong_neg else "") + str(self.atom)

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.strong_neg)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.atom.variables

    def substitute(self, binding: dict) -> "Literal":
        return Literal(self.atom.substitute(binding), self.strong_neg)


def collapse_depth(depth: int) -> int:
    # not not not F is equivalent to not F
    if depth <= 2:
        return depth
    return 1 if depth % 2 else 2


@dataclass(frozen=True)
class ExtLiteral:
    """An objective literal preceded by ``depth`` default negations."""

    lit: Literal
    depth: int = 0

    def __str__(self) -> str:
        return "not " * self.depth + str(self.lit)

    def collapsed(self) -> "ExtLiteral":
        d = collapse_depth(self.depth)
        return self if d == self.depth else ExtLiteral(self.lit, d)

    def negated(self) -> "ExtLiteral":
        return ExtLiteral(self.lit, collapse_depth(self.depth + 1))

    def comp(self) -> "ExtLiteral":
        if self.depth > 1:
            raise ValueError(f"comp is only defined for depth 0 and 1: {self}")
        return ExtLiteral(self.lit, 1 - self.depth)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.lit.variables

    def substitute(self, binding: dict) -> "ExtLiteral":
        return ExtLiteral(self.lit.substitute(binding), self.depth)


@dataclass(frozen=True)
class EpistemicNegation:
    """``NOT target``: the target fails in at least one belief set."""

    target: ExtLiteral

    def __str__(self) -> str:
        return f"NOT {self.target}"

    def __lt__(self, other: "EpistemicNegation") -> bool:
        return str(self) < str(other)


class Modal(enum.Enum):
    K = "K"
    M = "M"


@dataclass(frozen=True)
class Subjective:
    modal: Modal
    inner: ExtLiteral
    outer_neg: bool = False

    def __str__(self) -> str:
        return ("not " if self.outer_neg else "") + f"{self.modal.value} {self.inner}"

    def canonical(self) -> Tuple[EpistemicNegation, bool]:
        """Return ``(NOT f, negated)`` such that this element reads
        ``NOT f`` when ``negated`` is false and ``not NOT f`` otherwise."""
        if self.modal is Modal.K:
            # K e == not NOT e
            return EpistemicNegation(self.inner), not self.outer_neg
        # M e == not K not e == NOT comp(e)
        return EpistemicNegation(self.inner.comp()), self.outer_neg

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.inner.variables

    def substitute(self, binding: dict) -> "Subjective":
        return Subjective(self.modal, self.inner.substitute(binding), self.outer_neg)


BodyElement = Union[ExtLiteral, Subjective]


class RuleKind(enum.Enum):
    REGULAR = "regular"
    WVC = "wvc"


@dataclass(frozen=True)
class Origin:
    index: int
    line: int
    column: int


@dataclass(frozen=True)
class Rule:
    head: Tuple[Literal, ...] = ()
    body: Tuple[BodyElement, ...] = ()
    kind: RuleKind = RuleKind.REGULAR
    origin: Optional[Origin] = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        body = ", ".join(map(str, self.body))
        if self.kind is RuleKind.WVC:
            return f"!- {body}."
        head = " | ".join(map(str, self.head))
        if not self.body:
            return f"{head}." if head else ":- ."
        if not head:
            return f":- {body}."
        return f"{head} :- {body}."

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def subjective(self) -> Tuple[Subjective, ...]:
        return tuple(e for e in self.body if isinstance(e, Subjective))

    @property
    def variables(self) -> Tuple[str, ...]:
        seen: dict = {}
        for part in (*self.head, *self.body):
            for v in part.variables:
                seen.setdefault(v, None)
        return tuple(seen)

    def substitute(self, binding: dict) -> "Rule":
        head = tuple(dict.fromkeys(l.substitute(binding) for l in self.head))
        body = tuple(e.substitute(binding) for e in self.body)
        return Rule(head, body, self.kind, self.origin)


@dataclass(frozen=True)
class Program:
    rules: Tuple[Rule, ...] = ()
    wvcs: Tuple[Rule, ...] = ()

    def __post_init__(self):
        if any(r.kind is RuleKind.WVC for r in self.rules):
            raise ValueError("world view constraints belong in Program.wvcs")
        if any(r.kind is not RuleKind.WVC for r in self.wvcs):
            raise ValueError("Program.wvcs holds world view constraints only")

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in (*self.rules, *self.wvcs))

    @property
    def is_ground(self) -> bool:
        return not any(r.variables for r in (*self.rules, *self.wvcs))

    def literals(self) -> Tuple[Literal, ...]:
        """Every objective literal occurring anywhere, sorted by printed form."""
        found = set()
        for r in (*self.rules, *self.wvcs):
            found.update(r.head)
            for e in r.body:
                found.add(e.inner.lit if isinstance(e, Subjective) else e.lit)
        return tuple(sorted(found, key=str))
