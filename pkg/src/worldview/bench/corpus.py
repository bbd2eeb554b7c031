"""Golden corpus: program files with frozen expected world views.

Each case is a pair ``<name>.elp`` / ``<name>.expected.json``; the JSON has
the solver's JSON output shape without ``stats`` and ``options``, plus
``name`` and ``provenance``: ``stated`` when the expected result is quoted
from published worked examples, ``derived`` when it was computed by the
exhaustive pipeline and then frozen.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Optional

from ..epistemic import Semantics
from ..output import world_view_json
from ..search import SolveOptions, solve
from ..syntax import parse_program

PROVENANCE = ("stated", "derived")


@dataclass(frozen=True)
class GoldenCase:
    name: str
    text: str
    semantics: Semantics
    expected: tuple
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass
class CaseResult:
    name: str
    passed: bool
    expected: list
    actual: list = field(default_factory=list)
    seconds: float = 0.0
    error: Optional[str] = None

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} ({self.seconds:.3f}s)"
        if self.passed:
            return line
        if self.error:
            return f"{line}\n  error: {self.error}"
        return f"{line}\n  expected: {json.dumps(self.expected)}\n  actual:   {json.dumps(self.actual)}"


def default_corpus_dir() -> Path:
    return Path(str(resources.files("worldview") / "corpus"))


def load_corpus(directory=None) -> List[GoldenCase]:
    directory = Path(directory) if directory is not None else default_corpus_dir()
    cases = []
    for elp in sorted(directory.glob("*.elp")):
        meta = json.loads(elp.with_suffix(".expected.json").read_text())
        cases.append(
            GoldenCase(
                meta.get("name", elp.stem),
                elp.read_text(),
                Semantics(meta["semantics"]),
                tuple(meta["world_views"]),
                meta.get("provenance", "derived"),
            )
        )
    return sorted(cases, key=lambda c: c.name)


def run_case(case: GoldenCase, options: Optional[SolveOptions] = None) -> CaseResult:
    start = time.perf_counter()
    try:
        report = solve(parse_program(case.text), case.semantics, options)
    except Exception as exc:  # failures are report entries
        return CaseResult(case.name, False, list(case.expected), seconds=time.perf_counter() - start,
                          error=f"{type(exc).__name__}: {exc}")
    actual = [world_view_json(w) for w in report.world_views]
    return CaseResult(case.name, actual == list(case.expected), list(case.expected), actual,
                      time.perf_counter() - start)


def run_golden_corpus(directory=None, options: Optional[SolveOptions] = None) -> List[CaseResult]:
    return [run_case(c, options) for c in load_corpus(directory)]
