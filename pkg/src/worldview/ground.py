"""Herbrand instantiation of non-ground programs."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import UnsafeRuleError
from .syntax import ExtLiteral, Literal, Program, Rule, Subjective, is_variable

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroundProgram(Program):
    """A variable-free program together with its literal table."""

    table: Tuple[Literal, ...] = ()
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        super().__post_init__()
        if not self.is_ground:
            raise ValueError("GroundProgram must not contain variables")

    @classmethod
    def of(cls, p: Program, warnings: Tuple[str, ...] = ()) -> "GroundProgram":
        return cls(p.rules, p.wvcs, p.literals(), tuple(warnings))

    @property
    def index(self) -> dict:
        return {l: i for i, l in enumerate(self.table)}


def herbrand_constants(p: Program) -> Tuple[str, ...]:
    consts = set()
    for l in p.literals():
        consts.update(t for t in l.atom.terms if not is_variable(t))
    return tuple(sorted(consts))


def _safe_variables(r: Rule) -> set:
    safe = set()
    for e in r.body:
        if isinstance(e, ExtLiteral) and e.depth == 0:
            safe.update(e.variables)
        elif isinstance(e, Subjective) and e.inner.depth == 0:
            safe.update(e.variables)
    return safe


def check_safety(r: Rule) -> None:
    """Raise :class:`UnsafeRuleError` naming the first variable of ``r`` that
    does not occur positively in the body."""
    safe = _safe_variables(r)
    for v in r.variables:
        if v not in safe:
            raise UnsafeRuleError(r, v)


def unsafe_variable(r: Rule) -> Optional[str]:
    try:
        check_safety(r)
    except UnsafeRuleError as exc:
        return exc.variable
    return None


def _instances(r: Rule, constants: Tuple[str, ...]):
    vs = r.variables
    if not vs:
        yield r
        return
    for combo in itertools.product(constants, repeat=len(vs)):
        yield r.substitute(dict(zip(vs, combo)))


def ground_program(p: Program) -> GroundProgram:
    for r in (*p.rules, *p.wvcs):
        check_safety(r)
    constants = herbrand_constants(p)
    warnings = list(getattr(p, "warnings", ()))
    rules, wvcs = {}, {}
    for src, dst in ((p.rules, rules), (p.wvcs, wvcs)):
        for r in src:
            if r.variables and not constants:
                msg = f"no constants to instantiate rule, dropped: {r}"
                log.warning(msg)
                warnings.append(msg)
                continue
            for inst in _instances(r, constants):
                dst.setdefault(inst, None)
    return GroundProgram.of(Program(tuple(rules), tuple(wvcs)), tuple(warnings))
