"""Answer sets of ground disjunctive programs with nested default negation.

Bodies may carry ``not`` and ``not not`` in front of objective literals.
Answer sets are enumerated by a backtracking search over the literals that
occur in rule heads, with three-valued propagation (rule satisfaction,
support and consistency), and each total candidate is accepted only if no
proper subset is a model of its reduct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .errors import ResourceLimitError
from .syntax import ExtLiteral, Literal, Program, Subjective

BeliefSet = FrozenSet[Literal]

DEFAULT_CAP = 2 ** 22

TRUE, FALSE, UNKNOWN = 1, -1, 0


def belief_set_key(b: Iterable[Literal]):
    names = sorted(map(str, b))
    return len(names), names


def canonical(belief_sets: Iterable[BeliefSet]) -> List[BeliefSet]:
    return sorted(set(belief_sets), key=belief_set_key)


def format_belief_set(b: Iterable[Literal]) -> str:
    return "{" + ", ".join(sorted(map(str, b))) + "}"


def is_consistent(b: Iterable[Literal]) -> bool:
    b = set(b)
    return not any(l.complement() in b for l in b if l.strong_neg)


def satisfies_ext(b: BeliefSet, e: ExtLiteral) -> bool:
    inside = e.lit in b
    return not inside if e.depth == 1 else inside


@dataclass(frozen=True)
class PositiveProgram:
    """Rules ``head :- body`` with plain literals; empty head = constraint."""

    rules: Tuple[Tuple[Tuple[Literal, ...], Tuple[Literal, ...]], ...]

    def __str__(self) -> str:
        lines = []
        for head, body in self.rules:
            h = " | ".join(map(str, head))
            b = ", ".join(map(str, body))
            if b:
                lines.append(f"{h} :- {b}." if h else f":- {b}.")
            else:
                lines.append(f"{h}." if h else ":- .")
        return "".join(l + "\n" for l in lines)

    def is_model(self, s: Iterable[Literal]) -> bool:
        s = set(s)
        return all(not set(body) <= s or s.intersection(head) for head, body in self.rules)


def _objective(g: Program):
    if any(isinstance(e, Subjective) for r in g.rules for e in r.body):
        raise ValueError("program contains subjective elements; build an epistemic reduct first")


def gl_reduct(g: Program, s: Iterable[Literal]) -> PositiveProgram:
    _objective(g)
    s = frozenset(s)
    out = []
    for r in g.rules:
        body = []
        for e in r.body:
            if e.depth == 0:
                body.append(e.lit)
            elif not satisfies_ext(s, e):
                break
        else:
            out.append((tuple(r.head), tuple(body)))
    return PositiveProgram(tuple(out))


class _Compiled:
    def __init__(self, g: Program):
        _objective(g)
        table = getattr(g, "table", None) or g.literals()
        self.table = tuple(table)
        idx = {l: i for i, l in enumerate(self.table)}
        self.index = idx
        self.comp = [idx.get(l.complement(), -1) for l in self.table]
        self.rules = []
        for r in g.rules:
            head = tuple(idx[l] for l in r.head)
            body = tuple((idx[e.lit], e.depth != 1) for e in r.body)
            pos = tuple(idx[e.lit] for e in r.body if e.depth == 0)
            neg = tuple(idx[e.lit] for e in r.body if e.depth == 1)
            dneg = tuple(idx[e.lit] for e in r.body if e.depth == 2)
            self.rules.append((head, body, pos, neg, dneg))
        self.heads_of = [[] for _ in self.table]
        for ri, (head, *_rest) in enumerate(self.rules):
            for h in head:
                self.heads_of[h].append(ri)
        self.head_lits = [i for i, rs in enumerate(self.heads_of) if rs]

    # three-valued propagation; returns False on conflict

    def propagate(self, val: list) -> bool:
        rules = self.rules
        changed = True
        while changed:
            changed = False
            for head, body, *_ in rules:
                unresolved = None
                n_unres = 0
                dead = False
                for l, want in body:
                    v = val[l]
                    if v == UNKNOWN:
                        n_unres += 1
                        unresolved = (l, want)
                    elif (v == TRUE) != want:
                        dead = True
                        break
                if dead:
                    continue
                open_heads = 0
                last = -1
                satisfied = False
                for h in head:
                    v = val[h]
                    if v == TRUE:
                        satisfied = True
                        break
                    if v == UNKNOWN:
                        open_heads += 1
                        last = h
                if satisfied:
                    continue
                if n_unres == 0:
                    if open_heads == 0:
                        return False
                    if open_heads == 1:
                        val[last] = TRUE
                        changed = True
                elif open_heads == 0 and n_unres == 1:
                    l, want = unresolved
                    val[l] = FALSE if want else TRUE
                    changed = True
            for l in self.head_lits:
                if val[l] == FALSE:
                    continue
                if not self._supportable(l, val):
                    if val[l] == TRUE:
                        return False
                    val[l] = FALSE
                    changed = True
            for l, v in enumerate(val):
                c = self.comp[l]
                if v == TRUE and c >= 0:
                    if val[c] == TRUE:
                        return False
                    if val[c] == UNKNOWN:
                        val[c] = FALSE
                        changed = True
        return True

    def _supportable(self, l: int, val: list) -> bool:
        for ri in self.heads_of[l]:
            head, body, *_ = self.rules[ri]
            if any(h != l and val[h] == TRUE for h in head):
                continue
            if any(val[b] != UNKNOWN and (val[b] == TRUE) != want for b, want in body):
                continue
            return True
        return False

    def initial(self) -> list:
        val = [FALSE] * len(self.table)
        for l in self.head_lits:
            val[l] = UNKNOWN
        return val

    # minimality

    def reduct_clauses(self, s: FrozenSet[int]):
        out = []
        for head, _body, pos, neg, dneg in self.rules:
            if any(l in s for l in neg) or not all(l in s for l in dneg):
                continue
            if not all(l in s for l in pos):
                continue
            out.append((pos, tuple(h for h in head if h in s)))
        return out

    def is_model(self, s: FrozenSet[int]) -> bool:
        for head, body, *_ in self.rules:
            if all((l in s) == want for l, want in body) and not any(h in s for h in head):
                return False
        return True

    def is_minimal(self, s: FrozenSet[int]) -> bool:
        if not s:
            return True
        clauses = self.reduct_clauses(s)
        if all(len(h) <= 1 for _, h in clauses):
            return _least_model(clauses) == s
        return not _smaller_model_exists(sorted(s), clauses)


def _least_model(clauses) -> FrozenSet[int]:
    model = set()
    changed = True
    while changed:
        changed = False
        for body, head in clauses:
            if head and head[0] not in model and all(b in model for b in body):
                model.add(head[0])
                changed = True
    return frozenset(model)


def _smaller_model_exists(vars_: Sequence[int], clauses) -> bool:
    """Is there a proper subset of ``vars_`` satisfying every clause
    ``body -> head`` (all variables outside ``vars_`` being false)?"""
    val = {v: UNKNOWN for v in vars_}

    def unit(val) -> bool:
        changed = True
        while changed:
            changed = False
            for body, head in clauses:
                if any(val[b] == FALSE for b in body) or any(val[h] == TRUE for h in head):
                    continue
                free = [(b, FALSE) for b in body if val[b] == UNKNOWN]
                free += [(h, TRUE) for h in head if val[h] == UNKNOWN]
                if not free:
                    return False
                if len(free) == 1:
                    v, x = free[0]
                    val[v] = x
                    changed = True
            if all(x == TRUE for x in val.values()):
                return False
            free = [v for v, x in val.items() if x == UNKNOWN]
            if len(free) == 1 and not any(x == FALSE for x in val.values()):
                val[free[0]] = FALSE
                changed = True
        return True

    def search(val) -> bool:
        if not unit(val):
            return False
        for v, x in val.items():
            if x == UNKNOWN:
                break
        else:
            return True
        for choice in (FALSE, TRUE):
            trial = dict(val)
            trial[v] = choice
            if search(trial):
                return True
        return False

    return search(val)


def _to_indices(c: _Compiled, s: Iterable[Literal]):
    try:
        return frozenset(c.index[l] for l in s)
    except KeyError:
        return None


def is_answer_set(g: Program, s: Iterable[Literal]) -> bool:
    c = _Compiled(g)
    idx = _to_indices(c, s)
    if idx is None:
        # a literal absent from the program is never supported
        return False
    if not is_consistent(c.table[i] for i in idx):
        return False
    return c.is_model(idx) and c.is_minimal(idx)


def answer_sets(g: Program, cap: int = DEFAULT_CAP) -> List[BeliefSet]:
    """All answer sets of ``g`` in canonical order.

    ``cap`` bounds the number of search nodes visited; exceeding it raises
    :class:`ResourceLimitError`.
    """
    c = _Compiled(g)
    found = []
    nodes = 0

    def search(val):
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise ResourceLimitError(f"answer set search exceeded {cap} candidates")
        if not c.propagate(val):
            return
        for l in c.head_lits:
            if val[l] == UNKNOWN:
                break
        else:
            s = frozenset(i for i, v in enumerate(val) if v == TRUE)
            if c.is_minimal(s):
                found.append(frozenset(c.table[i] for i in s))
            return
        for choice in (TRUE, FALSE):
            trial = list(val)
            trial[l] = choice
            search(trial)

    search(c.initial())
    return canonical(found)


class CautiousSet(frozenset):
    """Intersection of all answer sets.  ``vacuous`` is set when the program
    has none, in which case the set holds every literal of the table."""

    vacuous = False


def brave_consequences(g: Program, cap: int = DEFAULT_CAP) -> FrozenSet[Literal]:
    return frozenset().union(*answer_sets(g, cap))


def cautious_consequences(g: Program, cap: int = DEFAULT_CAP) -> CautiousSet:
    sets = answer_sets(g, cap)
    if not sets:
        out = CautiousSet(getattr(g, "table", None) or g.literals())
        out.vacuous = True
        return out
    return CautiousSet(frozenset.intersection(*sets))


def consequences(g: Program, cap: int = DEFAULT_CAP) -> Tuple[FrozenSet[Literal], CautiousSet]:
    """Brave and cautious consequences from a single enumeration."""
    sets = answer_sets(g, cap)
    brave = frozenset().union(*sets)
    if not sets:
        cautious = CautiousSet(getattr(g, "table", None) or g.literals())
        cautious.vacuous = True
    else:
        cautious = CautiousSet(frozenset.intersection(*sets))
    return brave, cautious
