"""Scaling runs on generated eligibility programs, written as CSV plus a
figure."""

from __future__ import annotations

import csv
import time
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

from ..epistemic import Semantics
from ..search import SolveOptions, Strategy, solve
from ..syntax import collect_epistemic_negations, parse_program
from .generators import gen_elig

FIELDS = ("n", "strategy", "pruning", "ep_size", "world_views", "enumerated", "solved", "seconds")


def scaling_rows(ns: Iterable[int], seed: int = 0, semantics: Semantics = Semantics.ES2016,
                 strategies: Sequence[Strategy] = tuple(Strategy),
                 pruning: Sequence[bool] = (True, False)) -> List[Dict]:
    rows = []
    for n in ns:
        program = parse_program(gen_elig(n, seed))
        k = len(collect_epistemic_negations(program))
        for strategy in strategies:
            for prune in pruning:
                opts = SolveOptions(strategy=strategy, consequence_pruning=prune)
                start = time.perf_counter()
                report = solve(program, semantics, opts)
                rows.append({
                    "n": n,
                    "strategy": str(strategy),
                    "pruning": int(prune),
                    "ep_size": k,
                    "world_views": report.count,
                    "enumerated": report.stats.enumerated,
                    "solved": report.stats.solved,
                    "seconds": round(time.perf_counter() - start, 4),
                })
    return rows


def write_csv(rows: List[Dict], path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        w.writerows(rows)
    return path


def plot_scaling(rows: List[Dict], path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_t, ax_s) = plt.subplots(1, 2, figsize=(9, 3.5))
    strategies = sorted({r["strategy"] for r in rows})
    colors = {s: f"C{i}" for i, s in enumerate(strategies)}
    for strategy in strategies:
        for prune in sorted({r["pruning"] for r in rows}, reverse=True):
            pts = [r for r in rows if r["strategy"] == strategy and r["pruning"] == prune]
            if not pts:
                continue
            label = f"{strategy}{'' if prune else ' (no pruning)'}"
            style = dict(color=colors[strategy], ls="-" if prune else "--", marker="o" if prune else "s",
                         mfc="white" if not prune else colors[strategy], label=label)
            ns = [r["n"] for r in pts]
            ax_t.plot(ns, [r["seconds"] for r in pts], **style)
            ax_s.plot(ns, [r["solved"] for r in pts], **style)
    ticks = sorted({r["n"] for r in rows})
    ax_t.set_xticks(ticks)
    ax_s.set_xticks(ticks)
    ax_t.set_xlabel("applicants")
    ax_t.set_ylabel("seconds")
    ax_t.set_yscale("log")
    ax_s.set_xlabel("applicants")
    ax_s.set_ylabel("reducts solved")
    ax_s.set_yscale("symlog", linthresh=1)
    ax_s.set_ylim(bottom=0)
    ax_s.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def scaling_report(max_n: int, out_dir, seed: int = 0, semantics: Semantics = Semantics.ES2016):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = scaling_rows(range(1, max_n + 1), seed, semantics)
    return write_csv(rows, out / "elig_scaling.csv"), plot_scaling(rows, out / "elig_scaling.png")
