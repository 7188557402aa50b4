"""Vowel harmony and possessive vowel copy.

Finnish vowels split into back (a, o, u), front (ä, ö, y) and neutral
(e, i). Suffix vowels written as the uppercase placeholders A, O, U agree
in backness with the nearest non-neutral stem vowel; neutral vowels are
transparent to the scan. The placeholder V copies the nearest preceding
vowel outright. Underlying forms are lowercase except for the placeholders.
"""

from __future__ import annotations

import warnings
from enum import Enum

from .zipper import Zipper

BACK_VOWELS = frozenset("aou")
FRONT_VOWELS = frozenset("äöy")
NEUTRAL_VOWELS = frozenset("ei")
VOWELS = BACK_VOWELS | FRONT_VOWELS | NEUTRAL_VOWELS


class VowelClass(Enum):
    BACK = "back"
    FRONT = "front"
    NEUTRAL = "neutral"
    NOT_VOWEL = "not-vowel"


class HarmonyClass(Enum):
    BACK = "back"
    FRONT = "front"


# Placeholder letter -> (back realization, front realization).
HARMONY_PLACEHOLDERS = {
    "A": ("a", "ä"),
    "O": ("o", "ö"),
    "U": ("u", "y"),
}

COPY_PLACEHOLDER = "V"


def classify_vowel(c: str) -> VowelClass:
    """Classify one character; placeholders and consonants are NOT_VOWEL."""
    if c in BACK_VOWELS:
        return VowelClass.BACK
    if c in FRONT_VOWELS:
        return VowelClass.FRONT
    if c in NEUTRAL_VOWELS:
        return VowelClass.NEUTRAL
    return VowelClass.NOT_VOWEL


def detect_harmony(z: Zipper[str]) -> HarmonyClass:
    """Scan the left context, nearest first, for a non-neutral vowel.

    Neutral vowels, consonants and unresolved placeholders are skipped.
    Words with no non-neutral vowel to the left take front harmony.
    """
    for c in reversed(z.left):
        if c in BACK_VOWELS:
            return HarmonyClass.BACK
        if c in FRONT_VOWELS:
            return HarmonyClass.FRONT
    return HarmonyClass.FRONT


def harmony_arrow(z: Zipper[str]) -> str:
    """Resolve a focused A/O/U placeholder; leave everything else alone."""
    pair = HARMONY_PLACEHOLDERS.get(z.focus)
    if pair is None:
        return z.focus
    return pair[0] if detect_harmony(z) is HarmonyClass.BACK else pair[1]


def possessive_arrow(z: Zipper[str]) -> str:
    """Resolve a focused V by copying the nearest preceding vowel."""
    if z.focus != COPY_PLACEHOLDER:
        return z.focus
    for c in reversed(z.left):
        if c in VOWELS:
            return c
    warnings.warn(
        f"copy placeholder at position {len(z.left)} has no vowel to its left; "
        "left unresolved",
        stacklevel=2,
    )
    return z.focus
