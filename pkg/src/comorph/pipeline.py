"""Chaining local rules over one word with a single deletion sweep.

The standard run is gradation, then harmony, then possessive copy.
Gradation goes first because it may mark characters for deletion and the
vowel rules must see the context those marks describe; the order is
explicit here rather than baked into a merged automaton. Each stage is one
full pass; deletions are applied exactly once, at the end.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .gradation import Grade, gradation_arrow
from .vowels import harmony_arrow, possessive_arrow
from .writer import (
    EMPTY_DELETIONS,
    DeletionSet,
    WriterArrow,
    WriterZipper,
    lift_pure,
    materialize,
    writer_extend,
)
from .zipper import from_sequence, to_sequence


def compose(f: WriterArrow, g: WriterArrow) -> WriterArrow:
    """Chain two deleting rules into one.

    Runs ``f`` over the whole word, then reads ``g`` at the focus of the
    result. The composite's deletion component carries everything
    accumulated so far; set union being idempotent, re-merging it later is
    harmless, and chaining stays associative.
    """

    def composed(wz: WriterZipper) -> tuple[DeletionSet, str]:
        stepped = writer_extend(f, wz)
        deletions, ch = g(stepped)
        return (stepped.log | deletions, ch)

    return composed


# (stage name, arrow); names appear in trace output.
Stage = tuple[str, WriterArrow]

TRACE_INPUT = "input"
TRACE_MATERIALIZE = "materialize"


@dataclass(frozen=True)
class TraceRow:
    stage: str
    chars: str
    deletions: DeletionSet

    def render(self) -> str:
        marks = ",".join(str(i) for i in sorted(self.deletions))
        return f"{self.stage}\t{self.chars}\t{marks}"


@dataclass(frozen=True)
class Pipeline:
    """An ordered sequence of named stages run as one-pass-each."""

    stages: tuple[Stage, ...]

    def _start(self, word: str) -> WriterZipper:
        word = unicodedata.normalize("NFC", word)
        if not word:
            raise ValueError("cannot run the pipeline on an empty word")
        return WriterZipper(EMPTY_DELETIONS, from_sequence(word, 0))

    def run(self, word: str) -> str:
        wz = self._start(word)
        for _, arrow in self.stages:
            wz = writer_extend(arrow, wz)
        return materialize(wz)

    def trace(self, word: str) -> list[TraceRow]:
        """Per-stage snapshots: characters still at full length, plus the log."""
        wz = self._start(word)
        rows = [TraceRow(TRACE_INPUT, "".join(to_sequence(wz.zipper)), wz.log)]
        for name, arrow in self.stages:
            wz = writer_extend(arrow, wz)
            rows.append(TraceRow(name, "".join(to_sequence(wz.zipper)), wz.log))
        rows.append(TraceRow(TRACE_MATERIALIZE, materialize(wz), EMPTY_DELETIONS))
        return rows


def standard_pipeline(grade: Grade) -> Pipeline:
    """Gradation toward ``grade``, then harmony, then possessive copy."""
    return Pipeline(
        (
            ("gradation", gradation_arrow(grade)),
            ("harmony", lift_pure(harmony_arrow)),
            ("possessive", lift_pure(possessive_arrow)),
        )
    )


def run_pipeline(word: str, grade: Grade) -> str:
    """Surface form of ``word`` after the standard three stages."""
    return standard_pipeline(grade).run(word)
