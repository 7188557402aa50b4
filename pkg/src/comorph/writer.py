"""Deletion tracking layered over character zippers.

Length-changing rules must not shorten the sequence mid-pass, or later rules
would see shifted positions. Instead each rule returns a set of absolute
indices to drop alongside its output character; the sets merge by union as
the pass runs, and ``materialize`` strips all logged positions once at the
end. Indices refer to the original word and stay valid because no operation
here ever changes the sequence length.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .zipper import Zipper, to_sequence

DeletionSet = frozenset[int]

EMPTY_DELETIONS: DeletionSet = frozenset()


def empty_deletions() -> DeletionSet:
    """The identity of the deletion monoid."""
    return EMPTY_DELETIONS


def union(a: DeletionSet, b: DeletionSet) -> DeletionSet:
    """Merge two deletion sets. Associative, commutative, idempotent."""
    return a | b


@dataclass(frozen=True, slots=True)
class WriterZipper:
    """A character zipper paired with the deletions accumulated so far."""

    log: DeletionSet
    zipper: Zipper[str]

    def __post_init__(self) -> None:
        if self.log:
            n = len(self.zipper.left) + 1 + len(self.zipper.right)
            bad = sorted(i for i in self.log if not 0 <= i < n)
            if bad:
                raise ValueError(
                    f"deletion positions {bad} out of range for length {n}"
                )


# A deleting local rule: reads the focused context, returns the positions it
# wants removed plus its output character.
WriterArrow = Callable[[WriterZipper], tuple[DeletionSet, str]]


def writer_extract(wz: WriterZipper) -> str:
    """Read the focused character; the log plays no part."""
    return wz.zipper.focus


def writer_extend(f: WriterArrow, wz: WriterZipper) -> WriterZipper:
    """Run ``f`` at every position, merging every deletion it requests.

    The incoming log is passed unchanged to ``f`` at each refocusing; the
    new log is the old one unioned with everything ``f`` emitted. The
    character outputs are reassembled into a zipper of the same length and
    focus position, so deletions stay deferred.
    """
    items = to_sequence(wz.zipper)
    n = len(items)
    log = wz.log
    merged = set(log)
    out = []
    for i in range(n):
        deletions, ch = f(WriterZipper(log, Zipper(items[:i], items[i], items[i + 1 :])))
        merged |= deletions
        out.append(ch)
    k = len(wz.zipper.left)
    return WriterZipper(
        frozenset(merged), Zipper(tuple(out[:k]), out[k], tuple(out[k + 1 :]))
    )


def materialize(wz: WriterZipper) -> str:
    """Apply every logged deletion, keeping survivor order.

    This is the only place deletions take effect. Log validity is enforced
    when the WriterZipper is built, so the filter below cannot drop a
    position that does not exist.
    """
    return "".join(c for i, c in enumerate(to_sequence(wz.zipper)) if i not in wz.log)


def lift_pure(f: Callable[[Zipper[str]], str]) -> WriterArrow:
    """Wrap a non-deleting rule so it can run in a deleting pass."""

    def arrow(wz: WriterZipper) -> tuple[DeletionSet, str]:
        return (EMPTY_DELETIONS, f(wz.zipper))

    return arrow
