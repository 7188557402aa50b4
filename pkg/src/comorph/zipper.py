"""Focused non-empty sequences.

A zipper splits a sequence into a focused element plus its left and right
context. ``extend`` re-runs a context-reading local rule at every position,
turning a windowed rule into a whole-sequence pass. Everything here is
immutable and pure.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Generic, TypeVar

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


@dataclass(frozen=True, slots=True)
class Zipper(Generic[A]):
    """Non-empty sequence with a distinguished focus.

    ``left`` holds the context before the focus in word order, so the
    nearest left neighbour is ``left[-1]`` and shifting the focus is a
    constant-size edit at the tuple boundary.
    """

    left: tuple[A, ...]
    focus: A
    right: tuple[A, ...]


def from_sequence(items: Sequence[A], focus_index: int) -> Zipper[A]:
    """Build a zipper over ``items`` focused at ``focus_index``."""
    n = len(items)
    if n == 0:
        raise ValueError("cannot build a zipper from an empty sequence")
    if not 0 <= focus_index < n:
        raise ValueError(f"focus index {focus_index} out of range for length {n}")
    cells = tuple(items)
    return Zipper(cells[:focus_index], cells[focus_index], cells[focus_index + 1 :])


def extract(z: Zipper[A]) -> A:
    """Read the focused element."""
    return z.focus


def position(z: Zipper[A]) -> int:
    """Absolute index of the focus within the sequence."""
    return len(z.left)


def to_sequence(z: Zipper[A]) -> tuple[A, ...]:
    """Flatten back to a plain sequence, left to right."""
    return z.left + (z.focus,) + z.right


def move_left(z: Zipper[A]) -> Zipper[A] | None:
    """Shift the focus one step left, or None at the left edge."""
    if not z.left:
        return None
    return Zipper(z.left[:-1], z.left[-1], (z.focus,) + z.right)


def move_right(z: Zipper[A]) -> Zipper[A] | None:
    """Shift the focus one step right, or None at the right edge."""
    if not z.right:
        return None
    return Zipper(z.left + (z.focus,), z.right[0], z.right[1:])


def extend(z: Zipper[A], f: Callable[[Zipper[A]], B]) -> Zipper[B]:
    """Apply ``f`` at every position of ``z``.

    Each call sees the whole sequence refocused at that position; the result
    keeps the original length and focus position. ``f`` must be pure.
    """
    items = to_sequence(z)
    n = len(items)
    outputs = [f(Zipper(items[:i], items[i], items[i + 1 :])) for i in range(n)]
    k = len(z.left)
    return Zipper(tuple(outputs[:k]), outputs[k], tuple(outputs[k + 1 :]))


def compose(
    f: Callable[[Zipper[A]], B], g: Callable[[Zipper[B]], C]
) -> Callable[[Zipper[A]], C]:
    """Chain two local rules: run ``f`` everywhere, then ``g`` at the focus.

    Associative, with ``extract`` as the identity.
    """

    def composed(z: Zipper[A]) -> C:
        return g(extend(z, f))

    return composed
