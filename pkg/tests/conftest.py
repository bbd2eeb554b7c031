import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from worldview.bench import random_program  # noqa: E402
from worldview.ground import ground_program  # noqa: E402
from worldview.syntax import normalize, parse_program  # noqa: E402

E5 = "p :- M q, not q.\nq :- M p, not p.\nr :- M p, M q.\n"

PROGRAMS = {
    "ASP1": "p | q.\np :- q.\n",
    "ASP1C": "p | q.\np :- q.\n:- p, not q.\n",
    "E1": "p | q.\nr :- M q.\n",
    "E1C": "p | q.\nr :- M q.\n:- q.\n",
    "E2": "p | q.\nr :- M p.\ns | t :- K p.\n",
    "E2C": "p | q.\nr :- M p.\ns | t :- K p.\n:- M p, M q.\n",
    "E3": "p | q.\n:- not K p.\n",
    "E4": "p | q.\n:- p, not K p.\n:- not M p.\n",
    "E5": E5,
    "E5C": E5 + ":- K r.\n",
    "W1": "p | q.\n!- not K p.\n",
    "W2": E5 + "!- K r.\n",
    "ELIG1": (
        "eligible(S) :- highGPA(S).\n"
        "eligible(S) :- fairGPA(S), minority(S).\n"
        "-eligible(S) :- -highGPA(S), -fairGPA(S).\n"
        "interview(S) :- not K eligible(S), not K -eligible(S).\n"
        "fairGPA(mike) | highGPA(mike).\n"
    ),
}


def ground(text):
    return ground_program(normalize(parse_program(text)))


def lits(*names):
    from worldview.syntax import parse_literal

    return frozenset(parse_literal(n) for n in names)


@pytest.fixture(params=sorted(PROGRAMS))
def corpus_program(request):
    return request.param, PROGRAMS[request.param]


@st.composite
def programs(draw, max_subjective=4, wvcs=False):
    """Random small propositional programs (at most 8 literals)."""
    seed = draw(st.integers(0, 2 ** 32 - 1))
    atoms = draw(st.integers(1, 4))
    rules = draw(st.integers(1, 6))
    n_wvc = draw(st.integers(0, 2)) if wvcs else 0
    return random_program(random.Random(seed), atoms, rules, max_subjective, wvcs=n_wvc)


@st.composite
def objective_programs(draw):
    return draw(programs(max_subjective=0))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
