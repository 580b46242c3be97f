"""Exact arithmetic for transform amplitudes.

Every single-path amplitude produced by the insertion calculus is a signed
square root of a rational number; sums of interfering paths live in the
Q-vector space spanned by square roots of distinct squarefree integers.  Two
value types cover both: :class:`SignedRadical` for one path product and
:class:`RadicalSum` for canonical sums.  Equality on :class:`RadicalSum` is
exact (canonical form), never floating-point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

RationalLike = Union[int, Fraction]


def squarefree_split(m: int) -> tuple[int, int]:
    """Write m >= 0 as a*a*d with d squarefree; return (a, d).

    Plain trial division.  Radicands coming out of partial-hook products are
    smooth (every prime factor is a small hook difference), so the loop exits
    early in practice.
    """
    if m < 0:
        raise ValueError(f"radicand must be nonnegative, got {m}")
    if m == 0:
        return 0, 1
    square, free = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            square *= p ** (e // 2)
            if e % 2:
                free *= p
        p += 1 if p == 2 else 2
    return square, free * m


def is_squarefree(d: int) -> bool:
    return d >= 1 and squarefree_split(d)[0] == 1


@dataclass(frozen=True)
class SignedRadical:
    """The value ``sign * sqrt(radicand)`` with rational radicand >= 0.

    ``sign`` is 0 exactly when the radicand is 0, so zero has one
    representation.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError(f"radicand must be nonnegative, got {self.radicand}")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign must be 0 exactly when the radicand is 0")

    @classmethod
    def zero(cls) -> "SignedRadical":
        return cls(0, Fraction(0))

    @classmethod
    def one(cls) -> "SignedRadical":
        return cls(1, Fraction(1))

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "SignedRadical") -> "SignedRadical":
        if not isinstance(other, SignedRadical):
            return NotImplemented
        sign = self.sign * other.sign
        if sign == 0:
            return SignedRadical.zero()
        return SignedRadical(sign, self.radicand * other.radicand)

    def __neg__(self) -> "SignedRadical":
        if self.sign == 0:
            return self
        return SignedRadical(-self.sign, self.radicand)

    def to_float(self) -> float:
        return self.sign * math.sqrt(self.radicand)

    def canonical(self) -> "RadicalSum":
        """Rewrite sign*sqrt(p/q) as c*sqrt(d) with d squarefree."""
        return _canonical(self.sign, self.radicand)

    def __str__(self) -> str:
        return str(self.canonical())


@lru_cache(maxsize=None)
def _canonical(sign: int, radicand: Fraction) -> "RadicalSum":
    if sign == 0:
        return RadicalSum.zero()
    # sqrt(p/q) = sqrt(p*q)/q
    square, free = squarefree_split(radicand.numerator * radicand.denominator)
    coeff = Fraction(sign * square, radicand.denominator)
    return RadicalSum._make({free: coeff})


class RadicalSum:
    """Canonical finite sum ``sum_d c_d * sqrt(d)`` over squarefree d >= 1.

    Because square roots of distinct squarefree integers are linearly
    independent over Q, the term map is a unique normal form: two sums are
    equal iff their maps agree, and the empty map is zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for d, c in items:
            d = int(d)
            if not is_squarefree(d):
                raise ValueError(f"radicand {d} is not a squarefree positive integer")
            c = Fraction(c)
            acc[d] = acc.get(d, Fraction(0)) + c
        self._terms = tuple(sorted((d, c) for d, c in acc.items() if c))

    @classmethod
    def _make(cls, acc: Mapping[int, Fraction]) -> "RadicalSum":
        # internal fast path: caller guarantees squarefree keys
        obj = object.__new__(cls)
        obj._terms = tuple(sorted((d, c) for d, c in acc.items() if c))
        return obj

    @classmethod
    def zero(cls) -> "RadicalSum":
        return cls._make({})

    @classmethod
    def one(cls) -> "RadicalSum":
        return cls._make({1: Fraction(1)})

    @classmethod
    def from_rational(cls, q: RationalLike) -> "RadicalSum":
        return cls._make({1: Fraction(q)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return RadicalSum._make(acc)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum._make({d: -c for d, c in self._terms})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, SignedRadical):
            other = other.canonical()
        else:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                # sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd;
                # the cofactors are coprime squarefrees, so the product stays squarefree
                g = math.gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                acc[d] = acc.get(d, Fraction(0)) + c1 * c2 * g
        return RadicalSum._make(acc)

    __rmul__ = __mul__

    def to_float(self) -> float:
        return sum(float(c) * math.sqrt(d) for d, c in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, SignedRadical)):
            other = _coerce(other)
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def triples(self) -> list[list[int]]:
        """Serialized form: [numerator, denominator, radicand] per term, radicand ascending."""
        return [[c.numerator, c.denominator, d] for d, c in self._terms]

    @classmethod
    def from_triples(cls, data: Iterable[Iterable[int]]) -> "RadicalSum":
        terms = []
        for item in data:
            num, den, d = (int(v) for v in item)
            terms.append((d, Fraction(num, den)))
        return cls(terms)

    def __repr__(self) -> str:
        return f"RadicalSum({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (d, c) in enumerate(self._terms):
            mag = abs(c)
            if d == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({d})"
            else:
                body = f"{mag}*sqrt({d})"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(out)


def _coerce(value) -> RadicalSum | None:
    if isinstance(value, RadicalSum):
        return value
    if isinstance(value, SignedRadical):
        return value.canonical()
    if isinstance(value, (int, Fraction)):
        return RadicalSum.from_rational(value)
    return None
