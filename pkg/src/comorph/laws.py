"""Seeded randomized checks of the algebraic contracts.

Covers the three context-pass laws on plain zippers, the identity laws and
log behaviour of the deleting variant, the deletion-set monoid laws, and
the equivalence of stage-by-stage passes with a single pass of the chained
rule. Cases sweep lengths 1 to 20 with every focus position represented;
failures are shrunk greedily before being reported.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

from .pipeline import compose
from .writer import WriterArrow, WriterZipper, lift_pure, writer_extend, writer_extract
from .zipper import Zipper, extend, extract, from_sequence, to_sequence

ALPHABET = "abcdefgh"
MAX_LENGTH = 20
MAX_REPORTED = 5

# (word, focus, f salt, g salt) pins down one checked instance.
Case = tuple[str, int, int, int]
Predicate = Callable[[Case], bool]


@dataclass
class SuiteReport:
    name: str
    cases: int
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def char_arrow(salt: int) -> Callable[[Zipper[str]], str]:
    """A pure rule reading focus and immediate neighbours, keyed by salt."""

    def f(z: Zipper[str]) -> str:
        left = z.left[-1] if z.left else "^"
        right = z.right[0] if z.right else "$"
        h = (salt * 1_000_003) ^ (ord(left) * 131) ^ (ord(z.focus) * 31) ^ (ord(right) * 17)
        return ALPHABET[h % len(ALPHABET)]

    return f


def deleting_arrow(salt: int) -> WriterArrow:
    """Like char_arrow, but sometimes asks to delete its position instead."""
    base = char_arrow(salt)

    def f(wz: WriterZipper) -> tuple[frozenset[int], str]:
        z = wz.zipper
        left = z.left[-1] if z.left else "^"
        h = (salt * 69_069) ^ (ord(left) * 29) ^ (ord(z.focus) * 7) ^ len(z.right)
        if h % 4 == 0:
            return (frozenset((len(z.left),)), z.focus)
        return (frozenset(), base(z))

    return f


def _zipper(case: Case) -> Zipper[str]:
    word, focus, _, _ = case
    return from_sequence(word, focus)


def _writer(case: Case, log: frozenset[int] = frozenset()) -> WriterZipper:
    return WriterZipper(log, _zipper(case))


def _holds_l1(case: Case) -> bool:
    z = _zipper(case)
    return extend(z, extract) == z


def _holds_l2(case: Case) -> bool:
    z = _zipper(case)
    f = char_arrow(case[2])
    return extract(extend(z, f)) == f(z)


def _holds_l3(case: Case) -> bool:
    z = _zipper(case)
    f, g = char_arrow(case[2]), char_arrow(case[3])
    lhs = extend(extend(z, f), g)
    rhs = extend(z, lambda w: g(extend(w, f)))
    return lhs == rhs


def _holds_writer_l1(case: Case) -> bool:
    wz = _writer(case, log=frozenset({0}))
    return writer_extend(lift_pure(extract), wz) == wz


def _holds_writer_l2(case: Case) -> bool:
    wz = _writer(case)
    f = deleting_arrow(case[2])
    return writer_extract(writer_extend(f, wz)) == f(wz)[1]


def _collected(f: WriterArrow, wz: WriterZipper) -> frozenset[int]:
    items = to_sequence(wz.zipper)
    out: set[int] = set()
    for i in range(len(items)):
        refocused = WriterZipper(wz.log, Zipper(items[:i], items[i], items[i + 1 :]))
        out |= f(refocused)[0]
    return frozenset(out)


def _holds_log_associativity(case: Case) -> bool:
    wz = _writer(case, log=frozenset({0}))
    f, g = deleting_arrow(case[2]), deleting_arrow(case[3])
    after_f = writer_extend(f, wz)
    after_g = writer_extend(g, after_f)
    df = _collected(f, wz)
    dg = _collected(g, after_f)
    return after_g.log == (wz.log | df) | dg == wz.log | (df | dg)


def _holds_compose_equivalence(case: Case) -> bool:
    wz = _writer(case)
    f, g = deleting_arrow(case[2]), deleting_arrow(case[3])
    return writer_extend(compose(f, g), wz) == writer_extend(g, writer_extend(f, wz))


def _shrink(case: Case, failing: Predicate) -> Case:
    """Greedy shrink: drop characters, then normalize letters toward 'a'."""
    word, focus, fs, gs = case
    changed = True
    while changed:
        changed = False
        for i in range(len(word)):
            if len(word) == 1:
                break
            shorter = word[:i] + word[i + 1 :]
            refocus = min(focus if focus <= i else focus - 1, len(shorter) - 1)
            candidate = (shorter, max(refocus, 0), fs, gs)
            if failing(candidate):
                word, focus, *_ = candidate
                changed = True
                break
        else:
            for i, c in enumerate(word):
                if c == "a":
                    continue
                candidate = (word[:i] + "a" + word[i + 1 :], focus, fs, gs)
                if failing(candidate):
                    word = candidate[0]
                    changed = True
                    break
    return (word, focus, fs, gs)


def _describe(case: Case) -> str:
    word, focus, fs, gs = case
    return f"word={word!r} focus={focus} salts=({fs}, {gs})"


def _run_suite(name: str, holds: Predicate, seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    shapes = [(n, k) for n in range(1, MAX_LENGTH + 1) for k in range(n)]
    report = SuiteReport(name=name, cases=cases)
    for i in range(cases):
        length, focus = shapes[i % len(shapes)]
        word = "".join(rng.choice(ALPHABET) for _ in range(length))
        case = (word, focus, rng.randrange(1 << 16), rng.randrange(1 << 16))
        if not holds(case):
            if len(report.counterexamples) < MAX_REPORTED:
                small = _shrink(case, lambda c: not holds(c))
                report.counterexamples.append(_describe(small))
    return report


def _check_monoid(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport(name="deletion-monoid", cases=cases)
    for _ in range(cases):
        a, b, c = (
            frozenset(rng.sample(range(MAX_LENGTH), rng.randint(0, 6)))
            for _ in range(3)
        )
        ok = (
            (a | frozenset()) == a
            and (frozenset() | a) == a
            and ((a | b) | c) == (a | (b | c))
            and (a | a) == a
        )
        if not ok and len(report.counterexamples) < MAX_REPORTED:
            report.counterexamples.append(f"sets={a!r}, {b!r}, {c!r}")
    return report


SUITES: tuple[tuple[str, Predicate], ...] = (
    ("zipper-extend-extract-identity", _holds_l1),
    ("zipper-extract-after-extend", _holds_l2),
    ("zipper-extend-associativity", _holds_l3),
    ("writer-extend-extract-identity", _holds_writer_l1),
    ("writer-extract-after-extend", _holds_writer_l2),
    ("writer-log-associativity", _holds_log_associativity),
    ("writer-compose-equivalence", _holds_compose_equivalence),
)


def run_all(seed: int = 0, cases: int = 1000) -> list[SuiteReport]:
    reports = [_check_monoid(seed, cases)]
    for offset, (name, holds) in enumerate(SUITES, start=1):
        reports.append(_run_suite(name, holds, seed + offset, cases))
    return reports
