"""Exact integer Laurent arithmetic in the four symbols a, b, c, Q.

A value is a finite sum of monomials ``coef * a^i b^j c^k Q^l`` with integer
coefficients and integer (possibly negative) exponents, stored as a dict from
exponent 4-tuples to coefficients. Addition and multiplication are exact; no
floating point enters until :meth:`LaurentValue.value` substitutes unit
complex numbers for the symbols.

Q is an independent formal symbol here. Callers that work modulo the relation
Q^2 = b/a (the closed-braid normalization identities need it) canonicalize
with :meth:`LaurentValue.q_reduced`, which rewrites every even power of Q into
a b/a power and leaves the Q exponent in {0, 1}.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping

Exponents = tuple[int, int, int, int]


class LaurentValue:
    """Integer-coefficient Laurent polynomial in a, b, c, Q."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        self._terms: dict[Exponents, int] = {}
        if terms:
            for expo, coef in terms.items():
                if coef != 0:
                    self._terms[tuple(expo)] = coef  # type: ignore[index]

    @classmethod
    def zero(cls) -> LaurentValue:
        return cls()

    @classmethod
    def one(cls) -> LaurentValue:
        return cls.monomial(1)

    @classmethod
    def monomial(cls, coef: int, a: int = 0, b: int = 0, c: int = 0, q: int = 0) -> LaurentValue:
        return cls({(a, b, c, q): coef})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentValue):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == LaurentValue.monomial(other)._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: LaurentValue | int) -> LaurentValue:
        if isinstance(other, int):
            other = LaurentValue.monomial(other)
        if not isinstance(other, LaurentValue):
            return NotImplemented
        out = dict(self._terms)
        for expo, coef in other._terms.items():
            new = out.get(expo, 0) + coef
            if new:
                out[expo] = new
            else:
                out.pop(expo, None)
        return LaurentValue(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentValue:
        return LaurentValue({expo: -coef for expo, coef in self._terms.items()})

    def __sub__(self, other: LaurentValue | int) -> LaurentValue:
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentValue:
        return LaurentValue.monomial(other) - self

    def __mul__(self, other: LaurentValue | int) -> LaurentValue:
        if isinstance(other, int):
            if other == 0:
                return LaurentValue()
            return LaurentValue({expo: coef * other for expo, coef in self._terms.items()})
        if not isinstance(other, LaurentValue):
            return NotImplemented
        out: dict[Exponents, int] = {}
        for (a1, b1, c1, q1), coef1 in self._terms.items():
            for (a2, b2, c2, q2), coef2 in other._terms.items():
                expo = (a1 + a2, b1 + b2, c1 + c2, q1 + q2)
                new = out.get(expo, 0) + coef1 * coef2
                if new:
                    out[expo] = new
                else:
                    out.pop(expo, None)
        return LaurentValue(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentValue:
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers are defined for monomials only")
            ((a, b, c, q), coef), = self._terms.items()
            if coef not in (1, -1):
                raise ValueError("negative powers need a unit coefficient")
            base = LaurentValue.monomial(coef, -a, -b, -c, -q)
            return base ** (-exponent)
        result = LaurentValue.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transform(self, fn: Callable[[Exponents], Exponents]) -> LaurentValue:
        """Apply ``fn`` to every exponent tuple, merging collisions exactly."""
        out: dict[Exponents, int] = {}
        for expo, coef in self._terms.items():
            new_expo = fn(expo)
            new = out.get(new_expo, 0) + coef
            if new:
                out[new_expo] = new
            else:
                out.pop(new_expo, None)
        return LaurentValue(out)

    def q_reduced(self) -> LaurentValue:
        """Canonical form modulo Q^2 = b/a; Q exponents end up in {0, 1}."""

        def reduce(expo: Exponents) -> Exponents:
            ea, eb, ec, eq = expo
            half, rem = divmod(eq, 2)
            return (ea - half, eb + half, ec, rem)

        return self.transform(reduce)

    def value(self, a: complex, b: complex, c: complex, q: complex) -> complex:
        """Numeric evaluation at explicit complex values of the symbols."""
        total = 0j
        for (ea, eb, ec, eq), coef in self._terms.items():
            total += coef * a**ea * b**eb * c**ec * q**eq
        return total

    def canonical_str(self) -> str:
        """Deterministic text form: monomials sorted by descending exponent tuple."""
        if not self._terms:
            return "0"
        parts = []
        for expo in sorted(self._terms, reverse=True):
            ea, eb, ec, eq = expo
            parts.append(f"{self._terms[expo]} a^{ea} b^{eb} c^{ec} Q^{eq}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.canonical_str()

    def __repr__(self) -> str:
        return f"LaurentValue({self.canonical_str()!r})"
