"""Named closed-braid fixtures.

Every link is presented as a braid word whose closure realizes it. The
whitehead entry is a 3-strand presentation whose closure has 2 components
with linking number 0, which is all the component/writhe/linking bookkeeping
(and everything built on it) can distinguish.
"""

from __future__ import annotations

from .braids import BraidWord, parse_braid_word

FIXTURE_WORDS: dict[str, str] = {
    "unknot": "B1;",
    "unlink2": "B2;",
    "hopf": "B2; s1 s1",
    "trefoil": "B2; s1 s1 s1",
    "borromean": "B3; s1 s2^-1 s1 s2^-1 s1 s2^-1",
    "whitehead": "B3; s1 s2^-1 s1 s2^-1 s1",
}


def fixture(name: str) -> BraidWord:
    try:
        return parse_braid_word(FIXTURE_WORDS[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURE_WORDS)}") from None
