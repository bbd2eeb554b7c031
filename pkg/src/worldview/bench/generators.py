from __future__ import annotations

import random

ELIG_RULES = """\
eligible(S) :- highGPA(S).
eligible(S) :- fairGPA(S), minority(S).
-eligible(S) :- -highGPA(S), -fairGPA(S).
interview(S) :- not K eligible(S), not K -eligible(S).
"""

# per-applicant fact patterns; {a} is the applicant constant
ELIG_PATTERNS = (
    "highGPA({a}).",
    "-highGPA({a}).\n-fairGPA({a}).",
    "fairGPA({a}).\nminority({a}).",
    "fairGPA({a}) | highGPA({a}).",
    "fairGPA({a}).",
)
DISJUNCTIVE = 3


def elig_patterns(n: int, seed: int):
    rng = random.Random(seed)
    return [rng.randrange(len(ELIG_PATTERNS)) for _ in range(n)]


def gen_elig(n: int, seed: int = 0) -> str:
    """Scholarship eligibility program with ``n`` applicants ``a1..an``."""
    if n < 1:
        raise ValueError("need at least one applicant")
    facts = [ELIG_PATTERNS[k].format(a=f"a{i}") for i, k in enumerate(elig_patterns(n, seed), 1)]
    return ELIG_RULES + "\n".join(facts) + "\n"


def random_program(rng: random.Random, atoms: int = 4, rules: int = 5, max_subjective: int = 4,
                   strong_neg: bool = True, wvcs: int = 0) -> str:
    """A small random propositional program.

    With ``strong_neg`` at most ``2 * atoms`` literals occur; at most
    ``max_subjective`` subjective elements appear outside WVCs.
    """
    names = [f"p{i}" for i in range(atoms)]

    def literal():
        neg = strong_neg and rng.random() < 0.2
        return ("-" if neg else "") + rng.choice(names)

    def subjective():
        out = "not " if rng.random() < 0.3 else ""
        inner = "not " if rng.random() < 0.3 else ""
        return f"{out}{rng.choice('KM')} {inner}{literal()}"

    budget = max_subjective
    lines = []
    for _ in range(rules):
        head = list(dict.fromkeys(literal() for _ in range(rng.choice((0, 1, 1, 1, 2)))))
        body = []
        for _ in range(rng.choice((0, 1, 1, 2, 2, 3))):
            if budget and rng.random() < 0.35:
                body.append(subjective())
                budget -= 1
            else:
                body.append("not " * rng.choice((0, 0, 1, 1, 2)) + literal())
        if not head and not body:
            head = [literal()]
        h = " | ".join(head)
        if body:
            lines.append(f"{h} :- {', '.join(body)}." if h else f":- {', '.join(body)}.")
        else:
            lines.append(f"{h}.")
    for _ in range(wvcs):
        lines.append("!- " + ", ".join(subjective() for _ in range(rng.choice((1, 2)))) + ".")
    return "\n".join(lines) + "\n"
