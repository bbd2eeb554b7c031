"""Text and JSON renderings of a :class:`SolveReport`."""

from __future__ import annotations

import json

from .epistemic import Semantics, WorldView
from .search import SolveOptions, SolveReport, SolveStats
from .syntax import parse_literal, parse_negation


def _belief_set_line(b) -> str:
    names = sorted(map(str, b))
    return "{ " + "".join(n + " " for n in names) + "}"


def format_text(report: SolveReport) -> str:
    if not report.world_views:
        return "no world views\n"
    blocks = []
    for i, w in enumerate(report.world_views, 1):
        lines = [f"World view {i}:"] + [_belief_set_line(b) for b in w.belief_sets]
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def world_view_json(w: WorldView) -> dict:
    return {
        "guess": [str(n) for n in w.guess],
        "belief_sets": [sorted(map(str, b)) for b in w.belief_sets],
    }


# scheduling knobs never change results; leaving them out keeps output
# byte-identical across worker counts
SCHEDULING = ("workers", "group_size")


def report_dict(report: SolveReport) -> dict:
    options = {k: v for k, v in report.options.as_dict().items() if k not in SCHEDULING}
    return {
        "semantics": str(report.semantics),
        "count": report.count,
        "world_views": [world_view_json(w) for w in report.world_views],
        "stats": report.stats.as_dict(),
        "options": options,
    }


def format_json(report: SolveReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"


def world_view_from_json(d: dict, sem: Semantics) -> WorldView:
    return WorldView(
        tuple(frozenset(map(parse_literal, b)) for b in d["belief_sets"]),
        tuple(map(parse_negation, d["guess"])),
        sem,
    )


def report_from_json(text: str) -> SolveReport:
    d = json.loads(text)
    sem = Semantics(d["semantics"])
    options = SolveOptions(**d["options"]) if "options" in d else SolveOptions()
    stats = SolveStats(**d["stats"]) if "stats" in d else SolveStats()
    wvs = tuple(world_view_from_json(w, sem) for w in d["world_views"])
    if d.get("count", len(wvs)) != len(wvs):
        raise ValueError("count does not match the number of world views")
    return SolveReport(sem, options, wvs, stats)
