"""Defining relations of braid words with virtual letters, checked as gates.

The catalog lists, for a given strand count, every instance of: the braid
relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and far commutation, the
inverse cancellation s_i s_i^-1 = 1, the virtual involution v_i v_i = 1 and
the symmetric-group relations among the v_i, and the three mixed relations

    s_i^e  v_{i+1} v_i   =  v_{i+1} v_i  s_{i+1}^e
    v_i v_{i+1} s_i^e    =  s_{i+1}^e    v_i v_{i+1}
    v_i s_{i+1}^e v_i    =  v_{i+1} s_i^e v_{i+1}

for both signs e. Each relation is checked at the operator level: classical
letters act as the braiding operator R, virtual letters as the swap, and the
residual is the max-norm difference of the two dense word operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braids import BraidWord, closure_data, sigma, virt
from .engine import WordOperatorDescriptor, dense_matrix
from .rmatrix import RParams

RELATION_NAMES = (
    "braid-YBE",
    "braid-commute",
    "braid-inverse",
    "virtual-involution",
    "virtual-symmetric",
    "mixed-1",
    "mixed-2",
    "mixed-3",
)


@dataclass(frozen=True)
class RelationInstance:
    """Two words on a common strand count asserting one defining relation."""

    name: str
    lhs: BraidWord
    rhs: BraidWord

    def __post_init__(self):
        if self.name not in RELATION_NAMES:
            raise ValueError(f"unknown relation name {self.name!r}")
        if self.lhs.strands != self.rhs.strands:
            raise ValueError("relation sides must share a strand count")
        lp = closure_data(self.lhs).permutation
        rp = closure_data(self.rhs).permutation
        if lp != rp:
            raise ValueError(f"relation {self.name} sides have different permutations")


def relation_catalog(strands: int) -> list[RelationInstance]:
    """All relation instances expressible on the given strand count.

    Families needing more strands than available are omitted, not errors.
    """
    n = strands
    out: list[RelationInstance] = []

    def word(*letters) -> BraidWord:
        return BraidWord(n, tuple(letters))

    for i in range(1, n - 1):
        out.append(
            RelationInstance(
                "braid-YBE",
                word(sigma(i), sigma(i + 1), sigma(i)),
                word(sigma(i + 1), sigma(i), sigma(i + 1)),
            )
        )
        out.append(
            RelationInstance(
                "virtual-symmetric",
                word(virt(i), virt(i + 1), virt(i)),
                word(virt(i + 1), virt(i), virt(i + 1)),
            )
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(
                RelationInstance("braid-commute", word(sigma(i), sigma(j)), word(sigma(j), sigma(i)))
            )
            out.append(
                RelationInstance("virtual-symmetric", word(virt(i), virt(j)), word(virt(j), virt(i)))
            )
    for i in range(1, n):
        for sign in (1, -1):
            out.append(
                RelationInstance("braid-inverse", word(sigma(i, sign), sigma(i, -sign)), word())
            )
        out.append(RelationInstance("virtual-involution", word(virt(i), virt(i)), word()))
    for i in range(1, n - 1):
        for sign in (1, -1):
            out.append(
                RelationInstance(
                    "mixed-1",
                    word(sigma(i, sign), virt(i + 1), virt(i)),
                    word(virt(i + 1), virt(i), sigma(i + 1, sign)),
                )
            )
            out.append(
                RelationInstance(
                    "mixed-2",
                    word(virt(i), virt(i + 1), sigma(i, sign)),
                    word(sigma(i + 1, sign), virt(i), virt(i + 1)),
                )
            )
            out.append(
                RelationInstance(
                    "mixed-3",
                    word(virt(i), sigma(i + 1, sign), virt(i)),
                    word(virt(i + 1), sigma(i, sign), virt(i + 1)),
                )
            )
    return out


def check_relation(instance: RelationInstance, params: RParams) -> float:
    """Max-norm difference of the dense operators of the two sides."""
    lhs = dense_matrix(WordOperatorDescriptor(word=instance.lhs, params=params))
    rhs = dense_matrix(WordOperatorDescriptor(word=instance.rhs, params=params))
    return float(np.max(np.abs(lhs - rhs)))
