"""Braid words on n strands: parsing, group operations, closure bookkeeping.

A word is a sequence of letters acting left to right on strand positions.
Classical letters ``s<i>`` carry a sign (``s<i>^-1`` is the inverse crossing);
virtual letters ``v<i>`` are self-inverse position swaps. Index i acts on
positions i and i+1, so a word on n strands admits indices 1 .. n-1.

The closure of a word joins the top of every position to its bottom. All of
its combinatorial data (strand permutation, components, writhe, pairwise
linking numbers, rotation number) falls out of a single sweep over the
letters; see :func:`closure_data`.

Text grammar::

    word   := header letter*
    header := "B" <int> ";"
    letter := "s" <int> | "s" <int> "^-1" | "v" <int>

Letters are whitespace separated. ``parse_braid_word`` and
``format_braid_word`` are mutually inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

CLASSICAL = "classical"
VIRTUAL = "virtual"

_HEADER_RE = re.compile(r"\s*B(\d+)\s*;")
_CLASSICAL_RE = re.compile(r"s(\d+)(\^-1)?$")
_VIRTUAL_RE = re.compile(r"v(\d+)$")


class BraidSyntaxError(ValueError):
    """Malformed braid-word text; ``position`` is the 1-based token index."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Generator:
    """One braid-word letter: a signed classical or a virtual crossing."""

    kind: str
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (CLASSICAL, VIRTUAL):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.kind == VIRTUAL and self.sign != 1:
            raise ValueError("virtual generators are self-inverse; sign must be +1")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def is_classical(self) -> bool:
        return self.kind == CLASSICAL

    def inverse(self) -> Generator:
        if self.kind == VIRTUAL:
            return self
        return Generator(CLASSICAL, self.index, -self.sign)

    def token(self) -> str:
        if self.kind == VIRTUAL:
            return f"v{self.index}"
        return f"s{self.index}" if self.sign == 1 else f"s{self.index}^-1"


def sigma(index: int, sign: int = 1) -> Generator:
    """Classical generator acting on positions index, index+1."""
    return Generator(CLASSICAL, index, sign)


def virt(index: int) -> Generator:
    """Virtual (swap) generator acting on positions index, index+1."""
    return Generator(VIRTUAL, index)


@dataclass(frozen=True)
class BraidWord:
    """A word on ``strands`` positions; the empty word is the identity."""

    strands: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g.index > self.strands - 1:
                raise ValueError(
                    f"generator index {g.index} out of range for {self.strands} strands"
                )

    @property
    def is_classical(self) -> bool:
        return all(g.is_classical for g in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(g.inverse() for g in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid_word(self)


@dataclass(frozen=True)
class ClosureData:
    """Combinatorial data of a closed braid.

    ``permutation[s-1]`` is the end position of the strand starting at
    position s. ``components`` are the permutation cycles, sorted by least
    strand. ``pairwise_lk`` maps every component-index pair (i, j), i < j,
    to the linking number of those two closure components. ``rot`` is the
    rotation number of the closed-braid diagram (one per Seifert circle,
    so it equals the strand count); it is None when the word contains
    virtual letters, for which no planar rotation number is defined.
    """

    permutation: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    writhe: int
    rot: int | None
    pairwise_lk: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def component_of(self, strand: int) -> int:
        for idx, cyc in enumerate(self.components):
            if strand in cyc:
                return idx
        raise ValueError(f"strand {strand} not in any component")


def parse_braid_word(text: str) -> BraidWord:
    """Parse ``Bn; tok tok ...`` into a :class:`BraidWord`.

    Raises :class:`BraidSyntaxError` with the offending token position on
    malformed input or an index outside 1 .. n-1.
    """
    header = _HEADER_RE.match(text)
    if not header:
        raise BraidSyntaxError("missing or malformed header, expected 'Bn;'", position=0)
    strands = int(header.group(1))
    if strands < 1:
        raise BraidSyntaxError("strand count must be >= 1", position=0)
    letters = []
    for pos, token in enumerate(text[header.end():].split(), start=1):
        m = _CLASSICAL_RE.match(token)
        if m:
            kind, index, sign = CLASSICAL, int(m.group(1)), -1 if m.group(2) else 1
        else:
            m = _VIRTUAL_RE.match(token)
            if not m:
                raise BraidSyntaxError(f"syntax error at token {pos}: {token!r}", position=pos)
            kind, index, sign = VIRTUAL, int(m.group(1)), 1
        if not 1 <= index <= strands - 1:
            raise BraidSyntaxError(f"index out of range at token {pos}", position=pos)
        letters.append(Generator(kind, index, sign))
    return BraidWord(strands, tuple(letters))


def format_braid_word(word: BraidWord) -> str:
    """Inverse of :func:`parse_braid_word`."""
    header = f"B{word.strands};"
    if not word.letters:
        return header
    return header + " " + " ".join(g.token() for g in word.letters)


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Concatenate two words on the same strand count; no simplification."""
    if w1.strands != w2.strands:
        raise ValueError(f"strand-count mismatch: {w1.strands} vs {w2.strands}")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs (s s^-1, s^-1 s, v v) to exhaustion."""
    stack: list[Generator] = []
    for g in word.letters:
        if stack and stack[-1].index == g.index and stack[-1].kind == g.kind:
            top = stack[-1]
            cancels = (g.kind == VIRTUAL) or (top.sign == -g.sign)
            if cancels:
                stack.pop()
                continue
        stack.append(g)
    return BraidWord(word.strands, tuple(stack))


def conjugate(word: BraidWord, g: Generator) -> BraidWord:
    """Return g * word * g^-1 on the same strand count (g classical)."""
    if not g.is_classical:
        raise ValueError("conjugating generator must be classical")
    if g.index > word.strands - 1:
        raise ValueError(f"generator index {g.index} out of range for {word.strands} strands")
    return BraidWord(word.strands, (g,) + word.letters + (g.inverse(),))


def stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and append s_n^sign (the closure is unchanged as a link)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    n = word.strands
    return BraidWord(n + 1, word.letters + (Generator(CLASSICAL, n, sign),))


def mirror(word: BraidWord) -> BraidWord:
    """Switch every classical crossing (negate signs); virtual letters stay."""
    return BraidWord(
        word.strands,
        tuple(Generator(g.kind, g.index, -g.sign) if g.is_classical else g for g in word.letters),
    )


def strand_pairs(word: BraidWord) -> list[tuple[int, int, int, bool]]:
    """Per letter: (strand at position i, strand at i+1, sign, is_classical).

    Strands are named by their start position; the sweep tracks which strand
    currently occupies each position (every letter, classical or virtual,
    transposes the occupants).
    """
    content = list(range(1, word.strands + 1))
    out = []
    for g in word.letters:
        i = g.index - 1
        out.append((content[i], content[i + 1], g.sign, g.is_classical))
        content[i], content[i + 1] = content[i + 1], content[i]
    return out


def closure_data(word: BraidWord) -> ClosureData:
    """Permutation, components, writhe, pairwise linking numbers, rotation."""
    n = word.strands
    content = list(range(1, n + 1))
    for g in word.letters:
        i = g.index - 1
        content[i], content[i + 1] = content[i + 1], content[i]
    perm = [0] * n
    for pos, strand in enumerate(content, start=1):
        perm[strand - 1] = pos

    seen = [False] * n
    components = []
    for s in range(1, n + 1):
        if not seen[s - 1]:
            cycle = []
            t = s
            while not seen[t - 1]:
                seen[t - 1] = True
                cycle.append(t)
                t = perm[t - 1]
            components.append(tuple(cycle))
    comp_of = {s: idx for idx, cyc in enumerate(components) for s in cyc}

    classical = word.is_classical
    writhe = 0
    twice_lk: dict[tuple[int, int], int] = {}
    for s1, s2, sign, is_classical in strand_pairs(word):
        if not is_classical:
            continue
        writhe += sign
        c1, c2 = comp_of[s1], comp_of[s2]
        if c1 != c2:
            key = (min(c1, c2), max(c1, c2))
            twice_lk[key] = twice_lk.get(key, 0) + sign

    # Pairwise linking numbers are a classical-diagram notion: every pair of
    # distinct components meets in an even number of signed crossings there.
    # Virtual letters break that parity (strands can pass without a classical
    # crossing), so for virtual words the map is left empty, like rot.
    pairwise = {}
    if classical:
        for i in range(len(components)):
            for j in range(i + 1, len(components)):
                t = twice_lk.get((i, j), 0)
                if t % 2:
                    raise AssertionError(
                        f"odd signed crossing count {t} between components {i} and {j}"
                    )
                pairwise[(i, j)] = t // 2

    rot = n if classical else None
    return ClosureData(
        permutation=tuple(perm),
        components=tuple(components),
        writhe=writhe,
        rot=rot,
        pairwise_lk=pairwise,
    )
