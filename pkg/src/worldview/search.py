"""Guess enumeration, pruning, verification and world view assembly."""

from __future__ import annotations

import dataclasses
import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .aspcore import DEFAULT_CAP, consequences
from .epistemic import (
    Guess,
    Semantics,
    WorldView,
    check_guess,
    framework_models,
    is_valid_guess,
    reduct_framework,
    satisfies_subjective,
)
from .errors import OracleMismatchError
from .ground import GroundProgram, ground_program
from .syntax import EpistemicNegation, Program, Rule, collect_epistemic_negations, normalize


class Strategy(enum.Enum):
    MAXIMAL_FIRST = "maximal-first"
    EXHAUSTIVE = "exhaustive"
    FRAMEWORK = "framework"

    def __str__(self) -> str:
        return self.value


# enumeration


class GuessStream:
    """Deterministic stream of subsets of ``ep``.

    ``maximal-first`` yields subsets by non-increasing cardinality, ties in
    lexicographic order of positions; ``exhaustive`` yields all subsets in
    ascending bit order (position i is bit i).  With ``skip_subsets``, any
    proper subset of a guess passed to :meth:`mark_accepted` is skipped.
    """

    def __init__(self, ep: Sequence, order: Strategy = Strategy.MAXIMAL_FIRST, skip_subsets: bool = True):
        self.ep = tuple(ep)
        self.order = Strategy(order)
        if self.order is Strategy.FRAMEWORK:
            raise ValueError("the framework strategy does not enumerate guesses")
        self.skip_subsets = skip_subsets
        self.accepted: List[frozenset] = []
        self.skipped = 0

    def mark_accepted(self, guess: Iterable) -> None:
        self.accepted.append(frozenset(guess))

    def _blocked(self, guess: frozenset) -> bool:
        return self.skip_subsets and any(guess < a for a in self.accepted)

    def _raw_levels(self) -> Iterator[List[frozenset]]:
        k = len(self.ep)
        if self.order is Strategy.MAXIMAL_FIRST:
            for r in range(k, -1, -1):
                yield [frozenset(self.ep[i] for i in c) for c in itertools.combinations(range(k), r)]
        else:
            yield [frozenset(self.ep[i] for i in range(k) if mask >> i & 1) for mask in range(1 << k)]

    def levels(self) -> Iterator[List[frozenset]]:
        """Yield one list per cardinality level (a single list for the
        exhaustive order).  Skipping is evaluated lazily, so acceptances
        recorded while a level is processed affect the following levels."""
        for level in self._raw_levels():
            out = []
            for g in level:
                if self._blocked(g):
                    self.skipped += 1
                else:
                    out.append(g)
            yield out

    def __iter__(self) -> Iterator[frozenset]:
        for level in self._raw_levels():
            for g in level:
                if self._blocked(g):
                    self.skipped += 1
                else:
                    yield g


def enumerate_guesses(ep: Sequence, order=Strategy.MAXIMAL_FIRST, skip_subsets: bool = True) -> GuessStream:
    if isinstance(order, str):
        order = Strategy(order.replace("_", "-"))
    return GuessStream(ep, order, skip_subsets)


def partition_groups(stream: Iterable, group_size: int) -> List[list]:
    if group_size < 1:
        raise ValueError("group_size must be at least 1")
    it = iter(stream)
    groups = []
    while True:
        chunk = list(itertools.islice(it, group_size))
        if not chunk:
            return groups
        groups.append(chunk)


# pruning


@dataclass(frozen=True)
class PartialAssignment:
    forced_in: frozenset = frozenset()
    forced_out: frozenset = frozenset()

    def __post_init__(self):
        if self.forced_in & self.forced_out:
            raise ValueError("a negation cannot be forced both in and out")

    def admits(self, guess: Guess) -> bool:
        return self.forced_in <= guess and not (self.forced_out & guess)

    @property
    def forced(self) -> frozenset:
        return self.forced_in | self.forced_out


def prune_with_consequences(g: GroundProgram, sem: Semantics,
                            ep: Optional[Sequence[EpistemicNegation]] = None,
                            cap: int = DEFAULT_CAP) -> PartialAssignment:
    """Fix guess bits using brave and cautious consequences of the reduct
    framework: a negation whose target holds in every framework answer set
    is never satisfied, one whose target holds in none always is."""
    if ep is None:
        ep = collect_epistemic_negations(g)
    if not ep:
        return PartialAssignment()
    brave, cautious = consequences(reduct_framework(g, sem, ep), cap)
    if cautious.vacuous:
        return PartialAssignment()
    forced_in, forced_out = set(), set()
    for n in ep:
        f = n.target
        if f.depth == 0:
            always, never = f.lit in cautious, f.lit not in brave
        else:
            always, never = f.lit not in brave, f.lit in cautious
        if always:
            forced_out.add(n)
        elif never:
            forced_in.add(n)
    return PartialAssignment(frozenset(forced_in), frozenset(forced_out))


def framework_driven_candidates(g: GroundProgram, sem: Semantics,
                                ep: Optional[Sequence[EpistemicNegation]] = None,
                                cap: int = DEFAULT_CAP) -> List[Guess]:
    """Guesses for which the framework has at least one answer set."""
    if ep is None:
        ep = collect_epistemic_negations(g)
    found = {guess for guess, _ in framework_models(g, sem, ep, cap)}
    return sorted(found, key=lambda guess: guess_key(ep, guess))


# world view constraints


def wvc_violated(w: WorldView, wvc: Rule) -> bool:
    return all(satisfies_subjective(w.belief_sets, e) for e in wvc.body)


def apply_wvcs(world_views: Iterable[WorldView], wvcs: Sequence[Rule]) -> List[WorldView]:
    return [w for w in world_views if not any(wvc_violated(w, c) for c in wvcs)]


# solving


@dataclass(frozen=True)
class SolveOptions:
    strategy: Strategy = Strategy.MAXIMAL_FIRST
    max_world_views: int = 0
    workers: int = 1
    group_size: int = 16
    guess_filter: bool = True
    consequence_pruning: bool = True
    oracle_check: bool = False
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.group_size < 1:
            raise ValueError("group_size must be at least 1")
        if self.max_world_views < 0:
            raise ValueError("max_world_views must be non-negative")

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["strategy"] = str(self.strategy)
        return d


NAIVE = SolveOptions(strategy=Strategy.EXHAUSTIVE, guess_filter=False, consequence_pruning=False)


@dataclass
class SolveStats:
    enumerated: int = 0
    filtered: int = 0
    pruned: int = 0
    skipped: int = 0
    solved: int = 0
    accepted: int = 0

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class SolveReport:
    semantics: Semantics
    options: SolveOptions
    world_views: Tuple[WorldView, ...]
    stats: SolveStats = field(default_factory=SolveStats)
    ep: Tuple[EpistemicNegation, ...] = ()
    accepted: Tuple[Guess, ...] = ()

    @property
    def count(self) -> int:
        return len(self.world_views)


def guess_key(ep: Sequence[EpistemicNegation], guess) -> tuple:
    # descending bit-vector order, first EP member most significant
    return tuple(0 if n in guess else 1 for n in ep)


def canonical_world_views(ep, world_views: Iterable[WorldView]) -> List[WorldView]:
    return sorted(world_views, key=lambda w: guess_key(ep, w.guess))


def maximal_only(guesses: Iterable[Guess]) -> List[Guess]:
    guesses = list(guesses)
    return [g for g in guesses if not any(g < h for h in guesses)]


_CONTEXT = None


def _init_worker(context):
    global _CONTEXT
    _CONTEXT = context


def _evaluate(context, guess: Guess):
    g, ep, sem, use_filter, cap = context
    if use_filter and not is_valid_guess(ep, guess):
        return "filtered", None
    return "solved", check_guess(g, guess, sem, ep, cap)


def _run_group(group):
    return [_evaluate(_CONTEXT, guess) for guess in group]


class _Runner:
    """Evaluates batches of guesses in fixed-size groups, optionally across
    worker processes; results come back in submission order."""

    def __init__(self, context, options: SolveOptions):
        self.context = context
        self.options = options
        self.pool = None
        if options.workers > 1:
            self.pool = ProcessPoolExecutor(options.workers, initializer=_init_worker, initargs=(context,))

    def run(self, guesses: List[Guess]):
        groups = partition_groups(guesses, self.options.group_size)
        if self.pool is None or len(groups) < 2:
            results = [[_evaluate(self.context, x) for x in grp] for grp in groups]
        else:
            results = list(self.pool.map(_run_group, groups))
        return [r for grp in results for r in grp]

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()


def _prepare(p: Program) -> GroundProgram:
    if isinstance(p, GroundProgram):
        return normalize(p)
    return ground_program(normalize(p))


def solve(p: Program, sem: Semantics = Semantics.ES2016, options: Optional[SolveOptions] = None) -> SolveReport:
    """Compute the world views of ``p`` under ``sem``.

    World view constraints are applied after maximality: they remove world
    views but never unblock subsets of the guesses they remove.
    """
    options = options or SolveOptions()
    sem = Semantics(sem)
    g = _prepare(p)
    ep = collect_epistemic_negations(g)
    stats = SolveStats()
    pa = PartialAssignment()
    if options.consequence_pruning and ep:
        pa = prune_with_consequences(g, sem, ep, options.cap)
    free = [n for n in ep if n not in pa.forced]

    runner = _Runner((g, ep, sem, options.guess_filter, options.cap), options)
    accepted: List[WorldView] = []
    output: List[WorldView] = []
    limit = options.max_world_views

    def absorb(guesses, results):
        level = []
        for guess, (status, wv) in zip(guesses, results):
            if status == "filtered":
                stats.filtered += 1
                continue
            stats.solved += 1
            if wv is not None:
                level.append(wv)
        return level

    try:
        if options.strategy is Strategy.MAXIMAL_FIRST:
            stats.pruned = (1 << len(ep)) - (1 << len(free))
            stream = enumerate_guesses(free, Strategy.MAXIMAL_FIRST, skip_subsets=sem is Semantics.ES2016)
            for level in stream.levels():
                guesses = [pa.forced_in | sub for sub in level]
                found = absorb(guesses, runner.run(guesses))
                for wv in found:
                    stream.mark_accepted(frozenset(wv.guess) - pa.forced_in)
                accepted.extend(found)
                output.extend(apply_wvcs(found, g.wvcs))
                if limit and len(output) >= limit:
                    break
            stats.skipped = stream.skipped
        else:
            if options.strategy is Strategy.EXHAUSTIVE:
                stats.pruned = (1 << len(ep)) - (1 << len(free))
                guesses = [pa.forced_in | sub for sub in enumerate_guesses(free, Strategy.EXHAUSTIVE, False)]
            else:
                candidates = framework_driven_candidates(g, sem, ep, options.cap)
                guesses = [c for c in candidates if pa.admits(c)]
                stats.pruned = len(candidates) - len(guesses)
            found = absorb(guesses, runner.run(guesses))
            if sem is Semantics.ES2016:
                keep = set(maximal_only(frozenset(w.guess) for w in found))
                found = [w for w in found if frozenset(w.guess) in keep]
            accepted = found
            output = apply_wvcs(found, g.wvcs)
    finally:
        runner.close()

    stats.enumerated = stats.filtered + stats.pruned + stats.skipped + stats.solved
    stats.accepted = len(accepted)
    output = canonical_world_views(ep, output)
    if limit:
        output = output[:limit]
    report = SolveReport(
        sem,
        options,
        tuple(output),
        stats,
        tuple(ep),
        tuple(frozenset(w.guess) for w in canonical_world_views(ep, accepted)),
    )
    if options.oracle_check:
        _cross_check(g, sem, options, report)
    return report


def _cross_check(g, sem, options, report):
    naive = solve(g, sem, dataclasses.replace(NAIVE, cap=options.cap))
    expected = naive.world_views
    got = report.world_views
    ok = set(got) <= set(expected) if options.max_world_views else got == expected
    if not ok:
        raise OracleMismatchError(
            f"optimized pipeline returned {len(got)} world views, naive pipeline {len(expected)}"
        )
