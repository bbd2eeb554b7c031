from .corpus import CaseResult, GoldenCase, default_corpus_dir, load_corpus, run_case, run_golden_corpus
from .generators import DISJUNCTIVE, ELIG_PATTERNS, elig_patterns, gen_elig, random_program
from .report import scaling_report, scaling_rows

__all__ = [
    "CaseResult",
    "DISJUNCTIVE",
    "ELIG_PATTERNS",
    "GoldenCase",
    "default_corpus_dir",
    "elig_patterns",
    "gen_elig",
    "load_corpus",
    "random_program",
    "run_case",
    "run_golden_corpus",
    "scaling_report",
    "scaling_rows",
]
