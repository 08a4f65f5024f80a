"""Exact Laurent polynomials in q with quarter-integer exponents.

Exponents are stored as integer *quarters* (q^{3/2} has key 6) and
coefficients are Python ints, so nothing ever rounds or overflows.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable sparse polynomial {quarters: coeff} with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # trusted constructor: terms already nonzero; only sorts
        p = object.__new__(cls)
        p._terms = {e: terms[e] for e in sorted(terms)}
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, quarters: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({quarters: coeff} if coeff else {})

    @classmethod
    def q_power(cls, exponent) -> LaurentPoly:
        """q**exponent for an exponent in (1/4)Z given as int or Fraction."""
        return cls.monomial(to_quarters(exponent))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, quarters: int) -> int:
        return self._terms.get(quarters, 0)

    def min_quarters(self) -> int | None:
        return next(iter(self._terms), None)

    def max_quarters(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.monomial(0, other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def shift(self, quarters: int) -> LaurentPoly:
        """Multiply by q**(quarters/4)."""
        if not quarters:
            return self
        return LaurentPoly._raw({e + quarters: c for e, c in self._terms.items()})

    def invert_q(self) -> LaurentPoly:
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def to_json_obj(self) -> list[list]:
        return [[e, str(c)] for e, c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | list) -> LaurentPoly:
        data = json.loads(text) if isinstance(text, str) else text
        return cls((int(e), int(c)) for e, c in data)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            ex = Fraction(e, 4)
            if ex == 0:
                parts.append(str(c))
                continue
            mono = "q" if ex == 1 else f"q^{ex}" if ex.denominator == 1 and ex > 0 else f"q^({ex})"
            parts.append(mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def to_quarters(exponent) -> int:
    """Convert an exponent in (1/4)Z (int or Fraction) to integer quarters."""
    q4 = exponent * 4
    if q4 != int(q4):
        raise ValueError(f"exponent {exponent} is not a multiple of 1/4")
    return int(q4)


def shift(p: LaurentPoly, quarters: int) -> LaurentPoly:
    return p.shift(quarters)


def invert_q(p: LaurentPoly) -> LaurentPoly:
    return p.invert_q()


def evaluate_at_one(p: LaurentPoly) -> int:
    return p.evaluate_at_one()


@lru_cache(maxsize=None)
def _gauss_terms(a: int, b: int) -> tuple[int, ...]:
    # dense integer-exponent coefficients of [a choose b]_q, via
    # [a, b] = [a-1, b-1] + q^b [a-1, b]
    if b == 0 or b == a:
        return (1,)
    left = _gauss_terms(a - 1, b - 1)
    right = _gauss_terms(a - 1, b)
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + b] += c
    return tuple(out)


@lru_cache(maxsize=4096)
def gaussian_binomial(a: int, b: int) -> LaurentPoly:
    """The Gaussian polynomial [a choose b]_q; zero unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return LaurentPoly.zero()
    return LaurentPoly._raw({4 * i: c for i, c in enumerate(_gauss_terms(a, b)) if c})
