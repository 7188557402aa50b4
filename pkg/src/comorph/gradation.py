"""Finnish consonant gradation.

Eleven alternation patterns, each a two-character window: position 0 is the
read-only left neighbour, position 1 the character that changes. Geminates
outrank clusters, clusters outrank single consonants, and a suppression
check keeps a character that opens a higher-priority window from being
rewritten by a lower-priority rule (the first p of "kaappi" must not fall
to the single-p rule). Deletions are reported as positions to drop, never
applied in place.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum

from .vowels import VOWELS
from .writer import (
    EMPTY_DELETIONS,
    DeletionSet,
    WriterArrow,
    WriterZipper,
    materialize,
    writer_extend,
)
from .zipper import Zipper, from_sequence


class Grade(Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True, slots=True)
class GradationPattern:
    """One alternation row.

    Windows are (left neighbour, focus). None at index 0 means any vowel;
    None at index 1 of the weak window means the segment is deleted.
    """

    kotus_index: int
    strong: tuple[str | None, str]
    weak: tuple[str | None, str | None]
    kind: str
    example: tuple[str, str]
    priority_rank: int

    def source_window(self, grade: Grade) -> tuple[str | None, str | None]:
        """The side matched against when transforming toward ``grade``."""
        return self.strong if grade is Grade.WEAK else self.weak

    def target_window(self, grade: Grade) -> tuple[str | None, str | None]:
        return self.weak if grade is Grade.WEAK else self.strong

    @property
    def deleting(self) -> bool:
        return self.weak[1] is None


QUANTITATIVE = "quantitative"
QUAL_SINGLE = "qualitative-single"
QUAL_CLUSTER = "qualitative-cluster"

# Listed in priority order: geminates, then clusters, then single consonants.
PATTERNS: tuple[GradationPattern, ...] = tuple(
    GradationPattern(k, s, w, kind, ex, rank)
    for rank, (k, s, w, kind, ex) in enumerate(
        [
            (1, ("p", "p"), ("p", None), QUANTITATIVE, ("kaappi", "kaapi")),
            (2, ("t", "t"), ("t", None), QUANTITATIVE, ("matto", "mato")),
            (3, ("k", "k"), ("k", None), QUANTITATIVE, ("kukka", "kuka")),
            (7, ("m", "p"), ("m", "m"), QUAL_CLUSTER, ("kampa", "kamma")),
            (8, ("l", "t"), ("l", "l"), QUAL_CLUSTER, ("kulta", "kulla")),
            (9, ("n", "t"), ("n", "n"), QUAL_CLUSTER, ("ranta", "ranna")),
            (10, ("r", "t"), ("r", "r"), QUAL_CLUSTER, ("parta", "parra")),
            (11, ("n", "k"), ("n", "g"), QUAL_CLUSTER, ("kenkä", "kengä")),
            (4, (None, "p"), (None, "v"), QUAL_SINGLE, ("tupa", "tuva")),
            (5, (None, "t"), (None, "d"), QUAL_SINGLE, ("katu", "kadu")),
            (6, (None, "k"), (None, None), QUAL_SINGLE, ("puku", "puu")),
        ]
    )
)


def _lookups(grade: Grade):
    exact: dict[tuple[str, str], GradationPattern] = {}
    wildcard: dict[str, GradationPattern] = {}
    for pat in PATTERNS:
        c0, c1 = pat.source_window(grade)
        if c1 is None:
            continue  # a deleted segment has no source side to match
        if c0 is None:
            wildcard.setdefault(c1, pat)
        else:
            exact.setdefault((c0, c1), pat)
    return exact, wildcard


_EXACT = {g: _lookups(g)[0] for g in Grade}
_WILDCARD = {g: _lookups(g)[1] for g in Grade}
# Suppression consults geminate/cluster windows only, i.e. the exact ones.
_POS0 = {g: frozenset(_EXACT[g]) for g in Grade}

# Uppercase placeholders are unresolved suffix segments, never gradable
# letters; case folding must leave them distinct from p/t/k/v/d.
_PLACEHOLDERS = frozenset("AOUV")


def _fold(c: str) -> str:
    return c if c in _PLACEHOLDERS else c.lower()


@dataclass(frozen=True, slots=True)
class Keep:
    char: str


@dataclass(frozen=True, slots=True)
class Replace:
    char: str


@dataclass(frozen=True, slots=True)
class Delete:
    char: str  # the original focus, kept in place until materialization


GradationOutcome = Keep | Replace | Delete


def is_pos0(focus: str, right: str | None, grade: Grade) -> bool:
    """Does (focus, right) open a geminate or cluster window on the source side?"""
    if right is None:
        return False
    return (_fold(focus), _fold(right)) in _POS0[grade]


def find_pattern(
    left: str | None, focus: str, grade: Grade
) -> GradationPattern | None:
    """Highest-priority pattern whose source window matches (left, focus).

    Exact windows (geminates and clusters) beat the any-vowel singles; the
    window sets are disjoint, so first match is unambiguous.
    """
    f = _fold(focus)
    l = _fold(left) if left is not None else None
    if l is not None:
        pat = _EXACT[grade].get((l, f))
        if pat is not None:
            return pat
    pat = _WILDCARD[grade].get(f)
    if pat is not None and l in VOWELS:
        return pat
    return None


def gradate_at(z: Zipper[str], grade: Grade) -> GradationOutcome:
    """Grade the focused character of ``z``.

    Suppression is checked first: a character opening a higher-priority
    window is kept untouched so only position 1 of that window transforms.
    Single-consonant patterns additionally need a vowel on the right, the
    true intervocalic position; without this, suffix onsets such as the k
    of -ksi would alternate after every vowel-final stem.
    """
    focus = z.focus
    right = z.right[0] if z.right else None
    if right is not None and is_pos0(focus, right, grade):
        return Keep(focus)
    left = z.left[-1] if z.left else None
    pat = find_pattern(left, focus, grade)
    if pat is None:
        return Keep(focus)
    if pat.kind == QUAL_SINGLE and (right is None or _fold(right) not in VOWELS):
        return Keep(focus)
    out = pat.target_window(grade)[1]
    if out is None:
        return Delete(focus)
    return Replace(out)


def gradation_arrow(grade: Grade) -> WriterArrow:
    """Gradation as a deleting local rule toward ``grade``."""

    def arrow(wz: WriterZipper) -> tuple[DeletionSet, str]:
        outcome = gradate_at(wz.zipper, grade)
        if isinstance(outcome, Delete):
            return (frozenset((len(wz.zipper.left),)), outcome.char)
        return (EMPTY_DELETIONS, outcome.char)

    return arrow


def _gradate_word(word: str, grade: Grade) -> str:
    word = unicodedata.normalize("NFC", word)
    if not word:
        raise ValueError("cannot gradate an empty word")
    start = WriterZipper(EMPTY_DELETIONS, from_sequence(word, 0))
    return materialize(writer_extend(gradation_arrow(grade), start))


def weaken(word: str) -> str:
    """Strong grade to weak grade across the whole word."""
    return _gradate_word(word, Grade.WEAK)


def strengthen(word: str) -> str:
    """Weak grade to strong grade across the whole word.

    Deletion patterns (weakened geminates and dropped k) leave no weak-side
    window to match, so they come back unchanged; restoring them would need
    insertion, which this engine does not do.
    """
    return _gradate_word(word, Grade.STRONG)
