"""Epistemic reducts, guess verification and the reduct framework.

A guess is a subset of the program's epistemic negations assumed true.
Every subjective element is read through its canonical pair
``(NOT f, negated)`` and replaced according to the semantics version.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, List, Optional, Sequence, Tuple, Union

from .aspcore import DEFAULT_CAP, BeliefSet, answer_sets, satisfies_ext
from .errors import NameCollisionError
from .ground import GroundProgram
from .syntax import (
    Atom,
    EpistemicNegation,
    ExtLiteral,
    Literal,
    Program,
    Rule,
    Subjective,
    collect_epistemic_negations,
)

Guess = FrozenSet[EpistemicNegation]


class Semantics(enum.Enum):
    ES1994 = "es1994"
    ES2014 = "es2014"
    ES2016 = "es2016"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WorldView:
    belief_sets: Tuple[BeliefSet, ...]
    guess: Tuple[EpistemicNegation, ...]
    semantics: Semantics

    def __post_init__(self):
        if not self.belief_sets:
            raise ValueError("a world view has at least one belief set")


def satisfies_subjective(w: Sequence[BeliefSet], s: Subjective) -> bool:
    if not w:
        raise ValueError("subjective satisfaction is undefined on an empty collection")
    if s.modal.value == "K":
        value = all(satisfies_ext(b, s.inner) for b in w)
    else:
        value = any(satisfies_ext(b, s.inner) for b in w)
    return value != s.outer_neg


def negation_satisfied(w: Sequence[BeliefSet], n: EpistemicNegation) -> bool:
    if not w:
        raise ValueError("epistemic negation is undefined on an empty collection")
    return any(not satisfies_ext(b, n.target) for b in w)


def is_valid_guess(ep: Sequence[EpistemicNegation], phi: AbstractSet[EpistemicNegation]) -> bool:
    """False when the guess induces requirements that no non-empty collection
    of consistent belief sets can meet."""
    known = {n.target for n in ep if n not in phi}
    unknown = {n.target for n in phi}
    for f in known:
        if f.depth != 0:
            continue
        bar = f.lit.complement()
        if (
            ExtLiteral(f.lit, 1) in known  # K l, not M l
            or ExtLiteral(bar, 1) in unknown  # K l, M l-bar
            or ExtLiteral(bar, 0) in known  # K l, K l-bar
        ):
            return False
    return True


Replacement = Union[bool, ExtLiteral]


def substitute(element: Subjective, phi: AbstractSet[EpistemicNegation], sem: Semantics) -> Replacement:
    """Value of one subjective occurrence in the reduct: ``True`` (drop the
    element), ``False`` (drop the rule) or an extended literal."""
    n, negated = element.canonical()
    return _replace(n, negated, n in phi, sem)


def _replace(n: EpistemicNegation, negated: bool, assumed: bool, sem: Semantics) -> Replacement:
    f = n.target
    if sem is Semantics.ES1994:
        return assumed != negated
    if assumed:
        return not negated
    if sem is Semantics.ES2016:
        return f.negated().negated() if negated else f.negated()
    # ES2014: the K-atom is guessed true and stands for f itself
    return f if negated else f.negated()


def _check_guess(ep, phi):
    extra = set(phi) - set(ep)
    if extra:
        raise ValueError(f"guess mentions negations outside EP: {sorted(map(str, extra))}")


def epistemic_reduct(g: GroundProgram, phi: AbstractSet[EpistemicNegation], sem: Semantics,
                     ep: Optional[Sequence[EpistemicNegation]] = None) -> GroundProgram:
    if ep is None:
        ep = collect_epistemic_negations(g)
    _check_guess(ep, phi)
    rules = []
    for r in g.rules:
        body = []
        for e in r.body:
            if isinstance(e, Subjective):
                v = substitute(e, phi, sem)
                if v is True:
                    continue
                if v is False:
                    break
                e = v
            body.append(e)
        else:
            rules.append(Rule(r.head, tuple(body), r.kind, r.origin))
    return GroundProgram(tuple(dict.fromkeys(rules)), (), g.table or g.literals())


def verify_guess(g: GroundProgram, phi: AbstractSet[EpistemicNegation], sem: Semantics,
                 w: Sequence[BeliefSet], ep: Optional[Sequence[EpistemicNegation]] = None) -> bool:
    if ep is None:
        ep = collect_epistemic_negations(g)
    if not w:
        return False
    return all((n in phi) == negation_satisfied(w, n) for n in ep)


def check_guess(g: GroundProgram, phi: AbstractSet[EpistemicNegation], sem: Semantics,
                ep: Optional[Sequence[EpistemicNegation]] = None,
                cap: int = DEFAULT_CAP) -> Optional[WorldView]:
    """Solve the reduct for ``phi`` and return the world view it yields, if
    the guess verifies.  ES2016 maximality is not checked here."""
    if ep is None:
        ep = collect_epistemic_negations(g)
    w = answer_sets(epistemic_reduct(g, phi, sem, ep), cap)
    if not verify_guess(g, phi, sem, w, ep):
        return None
    return WorldView(tuple(w), tuple(n for n in ep if n in phi), sem)


# reduct framework

GUESS_ATOM = re.compile(r"__[gh]\d+$")


def guess_atoms(i: int) -> Tuple[Literal, Literal]:
    """The pair (in, out) of guard atoms for the i-th (0-based) EP member."""
    return Literal(Atom(f"__g{i + 1}")), Literal(Atom(f"__h{i + 1}"))


def reduct_framework(g: GroundProgram, sem: Semantics,
                     ep: Optional[Sequence[EpistemicNegation]] = None) -> GroundProgram:
    """A single subjective-free program whose answer sets, restricted to a
    choice of guard atoms, are the answer sets of the matching reduct.

    Each rule with subjective elements is duplicated once per assignment of
    its epistemic negations, guarded by ``__g<i>`` (assumed true) or
    ``__h<i>`` (assumed false).  WVCs are not part of any reduct and are
    dropped.
    """
    if ep is None:
        ep = collect_epistemic_negations(g)
    for l in g.literals():
        if GUESS_ATOM.match(l.atom.predicate):
            raise NameCollisionError(f"program already uses guess atom name {l}")
    pos = {n: i for i, n in enumerate(ep)}
    rules = []
    for r in g.rules:
        mentioned = list(dict.fromkeys(e.canonical()[0] for e in r.subjective))
        if not mentioned:
            rules.append(r)
            continue
        for values in itertools.product((True, False), repeat=len(mentioned)):
            assumed = dict(zip(mentioned, values))
            body = []
            for e in r.body:
                if isinstance(e, Subjective):
                    n, negated = e.canonical()
                    v = _replace(n, negated, assumed[n], sem)
                    if v is True:
                        continue
                    if v is False:
                        break
                    e = v
                body.append(e)
            else:
                guards = [ExtLiteral(guess_atoms(pos[n])[0 if a else 1]) for n, a in assumed.items()]
                rules.append(Rule(r.head, tuple(body) + tuple(guards), r.kind, r.origin))
    for i in range(len(ep)):
        gi, hi = guess_atoms(i)
        rules.append(Rule((gi,), (ExtLiteral(hi, 1),)))
        rules.append(Rule((hi,), (ExtLiteral(gi, 1),)))
    return GroundProgram.of(Program(tuple(dict.fromkeys(rules))))


def emit_reduct_framework(g: GroundProgram, sem: Semantics) -> str:
    return str(reduct_framework(g, sem))


def framework_models(g: GroundProgram, sem: Semantics,
                     ep: Optional[Sequence[EpistemicNegation]] = None,
                     cap: int = DEFAULT_CAP) -> List[Tuple[Guess, BeliefSet]]:
    """Answer sets of the framework split into (guess, projected belief set)."""
    if ep is None:
        ep = collect_epistemic_negations(g)
    marks = {guess_atoms(i)[0]: n for i, n in enumerate(ep)}
    out = []
    for s in answer_sets(reduct_framework(g, sem, ep), cap):
        guess = frozenset(marks[l] for l in s if l in marks)
        out.append((guess, frozenset(l for l in s if not GUESS_ATOM.match(l.atom.predicate))))
    return out


__all__ = [
    "Guess",
    "Semantics",
    "WorldView",
    "check_guess",
    "emit_reduct_framework",
    "epistemic_reduct",
    "framework_models",
    "guess_atoms",
    "is_valid_guess",
    "negation_satisfied",
    "reduct_framework",
    "satisfies_subjective",
    "substitute",
    "verify_guess",
]
