from __future__ import annotations

import dataclasses
from typing import Dict, List, NamedTuple, Tuple

from ..errors import NameCollisionError
from .ast import (
    Atom,
    EpistemicNegation,
    ExtLiteral,
    Literal,
    Program,
    Rule,
    RuleKind,
    Subjective,
)


def _normalize_element(e):
    if isinstance(e, ExtLiteral):
        return e.collapsed()
    return Subjective(e.modal, e.inner.collapsed(), e.outer_neg)


def normalize(p: Program) -> Program:
    """Collapse default-negation chains to depth at most two.

    Canonical epistemic negations are available on every subjective element
    through :meth:`Subjective.canonical`; the mapping is total, so nothing
    else needs rewriting.  The program type (e.g. a ground program) is kept.
    """

    def fix(r: Rule) -> Rule:
        body = tuple(_normalize_element(e) for e in r.body)
        return r if body == r.body else dataclasses.replace(r, body=body)

    rules = tuple(map(fix, p.rules))
    wvcs = tuple(map(fix, p.wvcs))
    if rules == p.rules and wvcs == p.wvcs:
        return p
    return dataclasses.replace(p, rules=rules, wvcs=wvcs)


def collect_epistemic_negations(p: Program) -> Tuple[EpistemicNegation, ...]:
    """EP(p): the distinct epistemic negations of the non-WVC rules, ordered
    by printed form.  Non-ground programs are grounded first."""
    if not p.is_ground:
        from ..ground import ground_program

        p = ground_program(p)
    found = {
        e.canonical()[0]
        for r in p.rules
        for e in r.body
        if isinstance(e, Subjective)
    }
    return tuple(sorted(found, key=str))


NEG_PREFIX = "__neg_"


def eliminate_strong_negation(g: Program) -> Tuple[Program, Dict[Literal, Literal]]:
    """Replace every classically negated literal ``-a`` by a fresh atom and
    add the constraint ``:- a, fresh.``

    Returns the rewritten program and the mapping from each eliminated
    literal to its replacement.
    """
    negative = [l for l in g.literals() if l.strong_neg]
    if not negative:
        return g, {}
    taken = {l.atom.predicate for l in g.literals()}
    mapping = {}
    for l in negative:
        fresh = NEG_PREFIX + l.atom.predicate
        if fresh in taken:
            raise NameCollisionError(f"fresh predicate {fresh} already occurs in the program")
        mapping[l] = Literal(Atom(fresh, l.atom.terms))

    def lit(l: Literal) -> Literal:
        return mapping.get(l, l)

    def elem(e):
        if isinstance(e, ExtLiteral):
            return ExtLiteral(lit(e.lit), e.depth)
        return Subjective(e.modal, ExtLiteral(lit(e.inner.lit), e.inner.depth), e.outer_neg)

    def rewrite(r: Rule) -> Rule:
        return dataclasses.replace(r, head=tuple(map(lit, r.head)), body=tuple(map(elem, r.body)))

    guards = tuple(
        Rule((), (ExtLiteral(l.complement()), ExtLiteral(fresh))) for l, fresh in mapping.items()
    )
    out = Program(tuple(map(rewrite, g.rules)) + guards, tuple(map(rewrite, g.wvcs)))
    from ..ground import GroundProgram

    if isinstance(g, GroundProgram):
        out = GroundProgram.of(out, g.warnings)
    return out, mapping


def restore_literals(literals, mapping: Dict[Literal, Literal]) -> frozenset:
    """Translate a belief set of the rewritten program back to the original
    vocabulary."""
    back = {v: k for k, v in mapping.items()}
    return frozenset(back.get(l, l) for l in literals)


class Diagnostic(NamedTuple):
    rule_index: int
    line: int
    column: int
    reason: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: rule {self.rule_index}: {self.reason}"


def validate(p: Program) -> List[Diagnostic]:
    out = []
    for r in sorted((*p.rules, *p.wvcs), key=lambda r: r.origin.index if r.origin else -1):
        o = r.origin
        where = (o.index, o.line, o.column) if o else (-1, 0, 0)

        def report(reason: str):
            out.append(Diagnostic(*where, reason))

        for h in r.head:
            if isinstance(h, Subjective):
                report("subjective element in head")
            elif isinstance(h, ExtLiteral):
                report("default negation in head")
        if r.kind is RuleKind.WVC:
            if r.head:
                report("world view constraint with a head")
            if not r.body:
                report("empty world view constraint body")
            if any(isinstance(e, ExtLiteral) for e in r.body):
                report("objective literal in WVC body")
        for e in r.body:
            if isinstance(e, Subjective) and e.inner.depth > 1:
                report("nested default negation under a modal operator")
    return out
