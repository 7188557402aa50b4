"""Context-window rule engine for Finnish morphophonology.

Local rules read a focused context window and emit one output segment;
running a rule over a whole word (or sentence) is a single ``extend`` pass.
Deleting rules log positions instead of shortening anything, and one
materialization at the end applies the log.
"""

from .cg import (
    CgRule,
    Condition,
    Reading,
    ReadingSet,
    ReadingsFormatError,
    RuleAction,
    RuleSyntaxError,
    parse_readings,
    parse_rules,
    run_cg,
)
from .gradation import Grade, GradationPattern, PATTERNS, strengthen, weaken
from .generator import CaseTemplate, NounCase, UnsupportedStemError, case_template, generate
from .pipeline import Pipeline, compose, run_pipeline, standard_pipeline
from .vowels import HarmonyClass, VowelClass, classify_vowel, detect_harmony
from .writer import DeletionSet, WriterZipper, lift_pure, materialize, writer_extend
from .zipper import Zipper, extend, extract, from_sequence, move_left, move_right, position, to_sequence

__version__ = "0.1.0"

__all__ = [
    "CaseTemplate",
    "CgRule",
    "Condition",
    "DeletionSet",
    "Grade",
    "GradationPattern",
    "HarmonyClass",
    "NounCase",
    "PATTERNS",
    "Pipeline",
    "Reading",
    "ReadingSet",
    "ReadingsFormatError",
    "RuleAction",
    "RuleSyntaxError",
    "UnsupportedStemError",
    "VowelClass",
    "WriterZipper",
    "Zipper",
    "case_template",
    "classify_vowel",
    "compose",
    "detect_harmony",
    "extend",
    "extract",
    "from_sequence",
    "generate",
    "lift_pure",
    "materialize",
    "move_left",
    "move_right",
    "parse_readings",
    "parse_rules",
    "position",
    "run_cg",
    "run_pipeline",
    "standard_pipeline",
    "strengthen",
    "to_sequence",
    "weaken",
    "writer_extend",
]
