"""Hand-written recursive-descent parser for the ELP surface syntax.

::

    program  := rule*
    rule     := head? (":-" body?)? "." | "!-" body "."
    head     := elem ("|" elem)*
    body     := elem ("," elem)*
    elem     := "not"* (objlit | ("K"|"M") "not"? objlit)
    objlit   := "-"? ident ("(" term ("," term)* ")")?

``%`` starts a comment that runs to the end of the line.  ``K`` and ``M``
are modal operators only when followed by whitespace.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple

from ..errors import ElpSyntaxError
from .ast import (
    Atom,
    EpistemicNegation,
    ExtLiteral,
    Literal,
    Modal,
    Origin,
    Program,
    Rule,
    RuleKind,
    Subjective,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<modal>[KM])(?=\s)
  | (?P<not>not)(?![A-Za-z0-9_])
  | (?P<NOT>NOT)(?=\s)
  | (?P<ident>[a-z_][A-Za-z0-9_]*|[0-9]+)
  | (?P<var>[A-Z][A-Za-z0-9_]*)
  | (?P<op>:-|!-|[|,.()\-])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ElpSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(chunk if kind == "op" else kind, chunk, line, pos - line_start + 1))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.fail(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def fail(self, message: str, tok: Token = None):
        tok = tok or self.tok
        raise ElpSyntaxError(message, tok.line, tok.column)

    # grammar

    def program(self) -> List[Rule]:
        rules = []
        while self.tok.kind != "eof":
            rules.append(self.rule(len(rules)))
        return rules

    def rule(self, index: int) -> Rule:
        start = self.tok
        origin = Origin(index, start.line, start.column)
        if self.accept("!-"):
            body = self.body()
            if not body:
                self.fail("empty world view constraint body")
            self.expect(".", "'.'")
            return Rule((), tuple(body), RuleKind.WVC, origin)
        head = []
        if self.tok.kind not in (":-", "."):
            head.append(self.element())
            while self.accept("|"):
                head.append(self.element())
        body = []
        if self.accept(":-"):
            body = self.body()
        elif not head:
            self.fail("empty rule")
        self.expect(".", "'.'")
        # malformed head elements are kept as-is for validate() to report
        head = [e.lit if isinstance(e, ExtLiteral) and e.depth == 0 else e for e in head]
        return Rule(tuple(dict.fromkeys(head)), tuple(body), RuleKind.REGULAR, origin)

    def body(self) -> list:
        if self.tok.kind == ".":
            return []
        elems = [self.element()]
        while self.accept(","):
            elems.append(self.element())
        return elems

    def element(self):
        start = self.tok
        nots = 0
        while self.accept("not"):
            nots += 1
        if self.tok.kind == "modal":
            if nots > 1:
                self.fail("double default negation before a modal operator", start)
            modal = Modal(self.advance().text)
            inner_depth = 1 if self.accept("not") else 0
            if self.tok.kind == "not":
                self.fail("nested default negation under a modal operator")
            return Subjective(modal, ExtLiteral(self.literal(), inner_depth), nots == 1)
        return ExtLiteral(self.literal(), nots)

    def literal(self) -> Literal:
        neg = self.accept("-")
        name = self.expect("ident", "a predicate name")
        terms = []
        if self.accept("("):
            terms.append(self.term())
            while self.accept(","):
                terms.append(self.term())
            self.expect(")", "')'")
        return Literal(Atom(name.text, tuple(terms)), neg)

    def term(self) -> str:
        if self.tok.kind in ("ident", "var"):
            return self.advance().text
        self.fail(f"expected a term, found {self.tok.text or 'end of input'!r}")


def parse_rules(text: str) -> List[Rule]:
    return _Parser(text).program()


def parse_program(text: str, check: bool = True) -> Program:
    """Parse program text.

    With ``check`` (the default) the result is also run through
    :func:`worldview.syntax.validate` and the first diagnostic is raised as
    an :class:`ElpSyntaxError`.  Pass ``check=False`` to obtain the raw tree
    of a structurally invalid program, e.g. to collect all diagnostics.
    """
    rules = parse_rules(text)
    program = Program(
        tuple(r for r in rules if r.kind is RuleKind.REGULAR),
        tuple(r for r in rules if r.kind is RuleKind.WVC),
    )
    if check:
        from .transform import validate

        problems = validate(program)
        if problems:
            d = problems[0]
            raise ElpSyntaxError(d.reason, d.line, d.column)
    return program


def _single(text: str, what: str):
    p = _Parser(text)
    value = p.element()
    if p.tok.kind != "eof":
        p.fail(f"trailing input after {what}")
    return value


def parse_literal(text: str) -> Literal:
    value = _single(text, "literal")
    if not isinstance(value, ExtLiteral) or value.depth:
        raise ElpSyntaxError(f"not an objective literal: {text!r}", 1, 1)
    return value.lit


def parse_negation(text: str) -> EpistemicNegation:
    """Parse the printed form of an epistemic negation, e.g. ``NOT not q``."""
    p = _Parser(text)
    p.expect("NOT", "'NOT'")
    value = p.element()
    if p.tok.kind != "eof" or not isinstance(value, ExtLiteral) or value.depth > 1:
        raise ElpSyntaxError(f"not an epistemic negation: {text!r}", 1, 1)
    return EpistemicNegation(value)
