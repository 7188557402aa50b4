from __future__ import annotations

import hypothesis.strategies as st

from comorph.writer import WriterZipper
from comorph.zipper import Zipper, from_sequence

LAW_ALPHABET = "abcdgh"
FINNISH_LOWER = "abdeghijklmnoprstuvyäö"


@st.composite
def zippers(draw, alphabet=LAW_ALPHABET, min_size=1, max_size=20):
    word = draw(st.text(alphabet=alphabet, min_size=min_size, max_size=max_size))
    focus = draw(st.integers(0, len(word) - 1))
    return from_sequence(word, focus)


@st.composite
def writer_zippers(draw, max_size=20):
    z = draw(zippers(max_size=max_size))
    n = len(z.left) + 1 + len(z.right)
    log = draw(st.frozensets(st.integers(0, n - 1), max_size=4))
    return WriterZipper(log, z)


def make_char_function(salt: int):
    """Deterministic focus+neighbour mapping; distinct salts, distinct rules."""

    def f(z: Zipper) -> str:
        left = z.left[-1] if z.left else "^"
        right = z.right[0] if z.right else "$"
        h = (salt * 7919) ^ (ord(left) * 131) ^ (ord(z.focus) * 31) ^ (ord(right) * 17)
        return LAW_ALPHABET[h % len(LAW_ALPHABET)]

    return f


def make_writer_arrow(salt: int):
    """Sometimes deletes its position (returning the original focus)."""
    base = make_char_function(salt)

    def f(wz: WriterZipper):
        z = wz.zipper
        left = z.left[-1] if z.left else "^"
        h = (salt * 104729) ^ (ord(left) * 43) ^ (ord(z.focus) * 13) ^ len(z.right)
        if h % 3 == 0:
            return (frozenset((len(z.left),)), z.focus)
        return (frozenset(), base(z))

    return f


salts = st.integers(0, 2**16)
char_functions = st.builds(make_char_function, salts)
writer_arrows = st.builds(make_writer_arrow, salts)
