import csv
import json
import random
import re
import shutil

import pytest

from conftest import PROGRAMS
from worldview.bench import (
    DISJUNCTIVE,
    ELIG_PATTERNS,
    elig_patterns,
    gen_elig,
    load_corpus,
    random_program,
    run_golden_corpus,
    scaling_report,
)
from worldview.bench.corpus import GoldenCase, default_corpus_dir
from worldview.bench.report import FIELDS
from worldview.epistemic import Semantics
from worldview.ground import check_safety, ground_program
from worldview.syntax import parse_program, validate


def disjunctive_seed():
    return next(s for s in range(1000) if elig_patterns(1, s) == [DISJUNCTIVE])


def test_gen_elig_deterministic():
    assert gen_elig(3, 7) == gen_elig(3, 7)
    assert len({gen_elig(6, s) for s in range(10)}) > 1


def test_gen_elig_rejects_zero():
    with pytest.raises(ValueError):
        gen_elig(0)


def test_gen_elig_mike_up_to_renaming():
    text = gen_elig(1, disjunctive_seed()).replace("a1", "mike")
    strip = lambda t: parse_program(re.sub(r"%.*", "", t))  # noqa: E731
    assert strip(text) == strip(PROGRAMS["ELIG1"])


def test_gen_elig_two_applicants_grounding():
    g = ground_program(parse_program(gen_elig(2, 0)))
    facts = [r for r in g.rules if not r.body]
    assert len(g.rules) - len(facts) == 8


@pytest.mark.parametrize("seed", range(20))
def test_gen_elig_valid_and_safe(seed):
    p = parse_program(gen_elig(1 + seed % 5, seed), check=False)
    assert validate(p) == []
    for r in p.rules:
        check_safety(r)


def test_patterns_cover_every_shape():
    assert len(ELIG_PATTERNS) == 5
    seen = {k for s in range(50) for k in elig_patterns(4, s)}
    assert seen == set(range(5))


def test_random_program_limits():
    for seed in range(200):
        text = random_program(random.Random(seed), atoms=4, rules=6, max_subjective=4, wvcs=2)
        p = parse_program(text)
        assert len(p.literals()) <= 8
        assert sum(len(r.subjective) for r in p.rules) <= 4


def test_corpus_completeness():
    names = {c.name for c in load_corpus()}
    required = {
        "ASP1-es2016", "ASP1C-es2016", "E1-es2016", "E1C-es2016", "E2-es2016", "E2C-es2016",
        "E3-es1994", "E3-es2016", "E4-es2014", "E4-es2016", "E5-es2014", "E5-es2016",
        "E5C-es2014", "E5C-es2016", "W1-es2016", "W2-es2016", "ELIG1-es2016",
    }
    assert required <= names


def test_corpus_provenance():
    derived = {c.name for c in load_corpus() if c.provenance == "derived"}
    assert derived == {"E3-es2014", "E5C-es2014", "W1-es2016", "W2-es2016"}


def test_full_corpus_passes():
    results = run_golden_corpus()
    assert [r.name for r in results] == sorted(r.name for r in results)
    assert all(r.passed for r in results), "\n".join(r.describe() for r in results if not r.passed)


def test_corpus_mismatch_is_reported(tmp_path):
    src = default_corpus_dir()
    shutil.copy(src / "E5-es2016.elp", tmp_path)
    both = json.loads((src / "E5-es2014.expected.json").read_text())
    both.update(name="E5-es2016", semantics="es2016")
    (tmp_path / "E5-es2016.expected.json").write_text(json.dumps(both))
    (result,) = run_golden_corpus(tmp_path)
    assert not result.passed
    text = result.describe()
    assert text.startswith("FAIL E5-es2016")
    assert "expected:" in text and "actual:" in text


def test_corpus_case_error_is_reported(tmp_path):
    (tmp_path / "BAD-es2016.elp").write_text("p :- q")
    (tmp_path / "BAD-es2016.expected.json").write_text(json.dumps({"semantics": "es2016", "world_views": []}))
    (result,) = run_golden_corpus(tmp_path)
    assert not result.passed and "ElpSyntaxError" in result.error


def test_empty_corpus_directory(tmp_path):
    assert run_golden_corpus(tmp_path) == []


def test_golden_case_provenance_checked():
    with pytest.raises(ValueError):
        GoldenCase("x", "", Semantics.ES2016, (), "folklore")


def test_scaling_report(tmp_path):
    csv_path, fig_path = scaling_report(2, tmp_path)
    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    assert tuple(rows[0]) == FIELDS
    assert {r["n"] for r in rows} == {"1", "2"}
    assert len(rows) == 2 * 3 * 2
    assert len({(r["n"], r["world_views"]) for r in rows}) == 2  # strategies agree
    assert fig_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
