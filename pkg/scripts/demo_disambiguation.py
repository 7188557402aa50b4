#!/usr/bin/env python3
"""Walk through the bundled disambiguation scenarios, printing each step."""

from comorph.cg import (
    Reading,
    ReadingSet,
    format_reading_set,
    parse_rules,
    run_cg,
)


def rs(surface, *readings):
    return ReadingSet(surface, frozenset(Reading(b, p) for p, b in readings))


SCENARIOS = [
    (
        "kuusi koiraa ('six dogs')",
        "SELECT lukusana IF (+1 nimisana)",
        [rs("kuusi", ("num", "kuusi"), ("noun", "kuusi")), rs("koiraa", ("noun", "koira"))],
    ),
    (
        "kuusi kasvaa ('the spruce grows')",
        "SELECT nimisana IF (+1 teonsana)",
        [rs("kuusi", ("num", "kuusi"), ("noun", "kuusi")), rs("kasvaa", ("verb", "kasvaa"))],
    ),
    (
        "ei voi ('cannot')",
        "SELECT teonsana IF (-1 BASEFORM=ei)",
        [rs("ei", ("verb", "ei")), rs("voi", ("noun", "voi"), ("verb", "voida"))],
    ),
    (
        "four-way ambiguity pruned by a three-rule cascade",
        "REMOVE laatusana IF (NOT -1 lukusana)\n"
        "REMOVE seikkasana IF (-1 nimisana)\n"
        "SELECT teonsana IF (+1 teonsana)",
        [
            rs("koira", ("noun", "koira")),
            rs(
                "tuuli",
                ("noun", "tuuli"),
                ("verb", "tuulla"),
                ("adj", "tuulinen"),
                ("adv", "tuulisesti"),
            ),
            rs("kasvaa", ("verb", "kasvaa")),
        ],
    ),
]


def main() -> None:
    for title, rule_text, sentence in SCENARIOS:
        print(f"== {title}")
        for line in rule_text.splitlines():
            print(f"   rule: {line}")
        out = run_cg(
            sentence,
            parse_rules(rule_text),
            on_fire=lambda n, m, before, after: print(
                f"   rule {n} fired at token {m + 1}: "
                f"{format_reading_set(before)} → {format_reading_set(after)}"
            ),
        )
        for token in out:
            print(f"   {token.surface}\t{format_reading_set(token)}")
        print()


if __name__ == "__main__":
    main()
