"""State-sum link invariants of closed classical braids.

The bracket of a closed braid expands every crossing into parallel arcs
(both arcs labeled 0, weight a; both labeled 1, weight b) or crossed arcs
(distinct labels, weight c), with inverse weights 1/a, 1/b, 1/c at negative
crossings. A global state labels the arcs compatibly; each resulting simple
closed curve evaluates to Q if it carries 0 and 1/Q if it carries 1. The
normalized invariant is

    Z = a^(-writhe) * Q^(-rot) * <bracket>.

Admissible states admit a drastic reduction: at every crossing the labels
swap positions whether the smoothing is parallel (equal labels, swap is a
no-op) or crossed, so labels ride the strands and an admissible state is
exactly a 0/1 labeling of the closure components (2^components states, not
3^crossings). Within one state the crossed-only position flow cannot cross
two equally labeled paths, so it is order preserving on each label class and
therefore the identity: the smoothed loops biject with the strand positions
and the loop evaluation is Q^(strands labeled 0 - strands labeled 1).
:func:`bracket_state_sum` uses this; :func:`bracket_state_sum_naive`
enumerates all 3^crossings smoothings with a union-find over the actual arc
diagram and stands as the independent oracle for the reduction.

The component-labeling sum with flat weights (equal labels a, distinct c,
inverses for negative crossings, no loop factor) is :func:`sigma_zero_one`,
and ``z_special = a^(-writhe) * sigma`` satisfies the exact two-component law
2(1 + (c^2/a^2)^lk).

All values are exact :class:`~braidops.laurent.LaurentValue` sums; the
relation Q^2 = b/a is applied only when callers reduce or evaluate.
:func:`bracket_via_trace` recomputes the bracket numerically as a weighted
trace of the braid-word operator and must agree with the exact sum.
"""

from __future__ import annotations

import cmath
from itertools import product

from .braids import BraidWord, closure_data, strand_pairs
from .engine import WordOperatorDescriptor, weighted_trace
from .laurent import LaurentValue
from .rmatrix import RParams

NAIVE_CROSSING_LIMIT = 12
TRACE_C_EQ_D_TOL = 1e-12


class VirtualWordError(ValueError):
    """A state-sum operation received a word with virtual letters."""


def _require_classical(word: BraidWord, what: str) -> None:
    if not word.is_classical:
        raise VirtualWordError(f"{what} is defined for classical words only")


def _component_letters(word: BraidWord):
    """Per classical letter (component of strand i, of strand i+1, sign)."""
    cd = closure_data(word)
    comp_of = {s: idx for idx, cyc in enumerate(cd.components) for s in cyc}
    sizes = [len(cyc) for cyc in cd.components]
    letters = [
        (comp_of[s1], comp_of[s2], sign)
        for s1, s2, sign, is_classical in strand_pairs(word)
        if is_classical
    ]
    return cd, sizes, letters


def bracket_state_sum(word: BraidWord) -> LaurentValue:
    """Exact bracket of the closure, summed over component labelings."""
    _require_classical(word, "bracket_state_sum")
    _, sizes, letters = _component_letters(word)
    acc: dict[tuple[int, int, int, int], int] = {}
    for labels in product((0, 1), repeat=len(sizes)):
        ea = eb = ec = 0
        for ci, cj, sign in letters:
            li, lj = labels[ci], labels[cj]
            if li != lj:
                ec += sign
            elif li == 0:
                ea += sign
            else:
                eb += sign
        eq = sum(size if lab == 0 else -size for size, lab in zip(sizes, labels))
        expo = (ea, eb, ec, eq)
        acc[expo] = acc.get(expo, 0) + 1
    return LaurentValue(acc)


def sigma_zero_one(word: BraidWord) -> LaurentValue:
    """Component-labeling sum with weights a (equal labels) and c (distinct)."""
    _require_classical(word, "sigma_zero_one")
    _, sizes, letters = _component_letters(word)
    acc: dict[tuple[int, int, int, int], int] = {}
    for labels in product((0, 1), repeat=len(sizes)):
        ea = ec = 0
        for ci, cj, sign in letters:
            if labels[ci] == labels[cj]:
                ea += sign
            else:
                ec += sign
        expo = (ea, 0, ec, 0)
        acc[expo] = acc.get(expo, 0) + 1
    return LaurentValue(acc)


def z_invariant(word: BraidWord) -> LaurentValue:
    """a^(-writhe) Q^(-rot) times the bracket, as an exact value."""
    _require_classical(word, "z_invariant")
    cd = closure_data(word)
    assert cd.rot is not None
    norm = LaurentValue.monomial(1, a=-cd.writhe, q=-cd.rot)
    return norm * bracket_state_sum(word)


def z_special(word: BraidWord) -> LaurentValue:
    """a^(-writhe) times sigma_zero_one; equals 2(1 + (c^2/a^2)^lk) for
    two-component closures."""
    _require_classical(word, "z_special")
    cd = closure_data(word)
    norm = LaurentValue.monomial(1, a=-cd.writhe)
    return norm * sigma_zero_one(word)


def linking_law(lk: int) -> LaurentValue:
    """The exact value 2(1 + (c^2/a^2)^lk)."""
    return LaurentValue.monomial(2) + LaurentValue.monomial(2, a=-2 * lk, c=2 * lk)


def evaluate_at_phases(value: LaurentValue, theta_a: float, theta_b: float, theta_c: float) -> complex:
    """Numeric value at a = e^(i theta_a) etc., Q = e^(i (theta_b - theta_a)/2)."""
    return value.value(
        cmath.exp(1j * theta_a),
        cmath.exp(1j * theta_b),
        cmath.exp(1j * theta_c),
        q_from_phases(theta_a, theta_b),
    )


def q_from_phases(theta_a: float, theta_b: float) -> complex:
    return cmath.exp(1j * (theta_b - theta_a) / 2.0)


def bracket_via_trace(word: BraidWord, params: RParams, q: complex | None = None) -> complex:
    """Numeric bracket as a weighted trace of the braid-word operator.

    Requires the c = d specialization. The per-qubit weights are (Q, 1/Q);
    pass q explicitly to pin the square-root branch, otherwise the principal
    square root of b/a is used.
    """
    if abs(params.c - params.d) > TRACE_C_EQ_D_TOL:
        raise ValueError("bracket_via_trace requires c = d")
    if q is None:
        q = cmath.sqrt(params.b / params.a)
    descriptor = WordOperatorDescriptor(word=word, params=params)
    return weighted_trace(descriptor, (q, 1.0 / q))


class _DisjointSet:
    """Array union-find with path halving; small and allocation-light."""

    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def copy(self) -> _DisjointSet:
        dup = _DisjointSet.__new__(_DisjointSet)
        dup.parent = self.parent.copy()
        return dup

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def _arc_diagram(word: BraidWord):
    """Arc segments of the closed-braid diagram and per-letter plumbing.

    Each position p is cut into segments by the letters that touch it; the
    closure glues the last segment back to the first. Returns the segment
    count, the list of static closure unions, and per letter the four
    incident segments (in_i, in_i1, out_i, out_i1) plus the sign.
    """
    n = word.strands
    touch_count = [0] * (n + 1)
    letter_segments = []
    for g in word.letters:
        i = g.index
        letter_segments.append([touch_count[i], touch_count[i + 1]])
        touch_count[i] += 1
        touch_count[i + 1] += 1

    base = [0] * (n + 1)
    total = 0
    for p in range(1, n + 1):
        base[p] = total
        total += touch_count[p] + 1

    closure_unions = [(base[p], base[p] + touch_count[p]) for p in range(1, n + 1)]
    letters = []
    for g, (seg_i, seg_i1) in zip(word.letters, letter_segments):
        i = g.index
        in_i = base[i] + seg_i
        in_i1 = base[i + 1] + seg_i1
        letters.append((in_i, in_i1, in_i + 1, in_i1 + 1, g.sign))
    return total, closure_unions, letters


def bracket_state_sum_naive(word: BraidWord) -> LaurentValue:
    """Oracle bracket: enumerate all 3^crossings smoothings directly.

    For each smoothing the arcs are glued by union-find, the label
    constraints (parallel smoothings force a label, crossed smoothings force
    the two through-loops to differ) are propagated by 2-coloring, and every
    surviving labeling contributes its loop evaluation. Exponential in the
    crossing count, hence the size guard.
    """
    _require_classical(word, "bracket_state_sum_naive")
    m = len(word.letters)
    if m > NAIVE_CROSSING_LIMIT:
        raise ValueError(f"naive enumeration limited to {NAIVE_CROSSING_LIMIT} crossings, got {m}")

    size, closure_unions, letters = _arc_diagram(word)
    template = _DisjointSet(size)
    for x, y in closure_unions:
        template.union(x, y)

    acc: dict[tuple[int, int, int, int], int] = {}
    for choices in product((0, 1, 2), repeat=m):
        dsu = template.copy()
        ea = eb = ec = 0
        forced_sites = []
        crossed_sites = []
        for (in_i, in_i1, out_i, out_i1, sign), choice in zip(letters, choices):
            if choice == 2:
                dsu.union(in_i, out_i1)
                dsu.union(in_i1, out_i)
                crossed_sites.append((in_i, in_i1))
                ec += sign
            else:
                dsu.union(in_i, out_i)
                dsu.union(in_i1, out_i1)
                forced_sites.append((in_i, in_i1, choice))
                if choice == 0:
                    ea += sign
                else:
                    eb += sign

        forced: dict[int, int] = {}
        ok = True
        for in_i, in_i1, label in forced_sites:
            for arc in (in_i, in_i1):
                root = dsu.find(arc)
                if forced.setdefault(root, label) != label:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue

        edges: dict[int, list[int]] = {}
        for x, y in crossed_sites:
            rx, ry = dsu.find(x), dsu.find(y)
            if rx == ry:
                ok = False
                break
            edges.setdefault(rx, []).append(ry)
            edges.setdefault(ry, []).append(rx)
        if not ok:
            continue

        roots = sorted({dsu.find(x) for x in range(size)})
        color: dict[int, int] = {}
        factor: dict[int, int] = {0: 1}
        for seed in roots:
            if seed in color:
                continue
            color[seed] = 0
            queue = [seed]
            members = []
            while queue:
                node = queue.pop()
                members.append(node)
                for other in edges.get(node, ()):
                    if other in color:
                        if color[other] == color[node]:
                            ok = False
                    else:
                        color[other] = 1 - color[node]
                        queue.append(other)
            if not ok:
                break
            # labels within the connected constraint component are the BFS
            # colors, possibly all flipped; forced roots pin the flip
            flips = {forced[r] ^ color[r] for r in members if r in forced}
            if len(flips) > 1:
                ok = False
                break
            diff = sum(1 if color[r] == 0 else -1 for r in members)
            if len(flips) == 1:
                options = (diff,) if flips == {0} else (-diff,)
            else:
                options = (diff, -diff)  # both global flips are admissible
            new_factor: dict[int, int] = {}
            for eq, count in factor.items():
                for d in options:
                    new_factor[eq + d] = new_factor.get(eq + d, 0) + count
            factor = new_factor
        if not ok:
            continue

        for eq, count in factor.items():
            expo = (ea, eb, ec, eq)
            total = acc.get(expo, 0) + count
            if total:
                acc[expo] = total
            else:
                acc.pop(expo, None)
    return LaurentValue(acc)
