"""Exact Laurent polynomials in one and two variables.

Coefficients are :class:`fractions.Fraction`, exponents are (tuples of)
Python ints, and zero coefficients are never stored, so two polynomials are
equal exactly when their coefficient maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "LaurentPoly2", "PolyError"]


class PolyError(ValueError):
    pass


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class _Laurent:
    """Shared sparse-dict machinery; subclasses fix the exponent type."""

    __slots__ = ("_terms", "_vars", "_hash")
    _nvars = 0

    def __init__(self, terms: Mapping | Iterable = (), variables=None):
        if variables is None:
            variables = self._default_vars
        variables = tuple(variables) if not isinstance(variables, str) else (variables,)
        if len(variables) != self._nvars:
            raise PolyError(f"expected {self._nvars} variable name(s), got {variables!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for e, c in items:
            e = self._coerce_exp(e)
            acc[e] = acc.get(e, 0) + _coerce_coeff(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._vars = variables
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, variables):
        p = cls.__new__(cls)
        p._terms = terms
        p._vars = variables
        p._hash = None
        return p

    # ------------------------------------------------------------------ basics
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def variables(self) -> tuple:
        return self._vars

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def coeff(self, e) -> Fraction:
        return self._terms.get(self._coerce_exp(e), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.constant(other, self._vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    @classmethod
    def constant(cls, c, variables=None):
        return cls({cls._zero_exp: c}, variables)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.constant(other, self._vars)
        if not isinstance(other, type(self)):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other._vars != self._vars:
            raise PolyError(f"variable mismatch: {self._vars} vs {other._vars}")
        return other

    # ------------------------------------------------------------- arithmetic
    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __add__(self, other):
        if isinstance(other, Number) and not isinstance(other, (int, Fraction)):
            return NotImplemented
        other = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._raw(out, self._vars)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Number) and not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self._raw({}, self._vars)
            return self._raw({e: c * other for e, c in self._terms.items()}, self._vars)
        if isinstance(other, Number):
            return NotImplemented
        other = self._check(other)
        add = self._add_exp
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw({e: c for e, c in out.items() if c != 0}, self._vars)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an int")
        if n < 0:
            if not self.is_monomial():
                raise PolyError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            inv_e = self._scale_exp(e, -1)
            base = self._raw({inv_e: 1 / c}, self._vars)
            return base ** (-n)
        result = self.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -------------------------------------------------------------- rendering
    def to_json(self) -> list:
        """Sorted ``[exponent, coefficient]`` pairs; coefficients as int or "p/q"."""
        out = []
        for e, c in sorted(self._terms.items()):
            cj = c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append([list(e) if isinstance(e, tuple) else e, cj])
        return out

    @classmethod
    def from_json(cls, pairs, variables=None):
        terms = []
        for e, c in pairs:
            e = tuple(e) if isinstance(e, list) else e
            terms.append((e, Fraction(c)))
        return cls(terms, variables)


class LaurentPoly(_Laurent):
    """Laurent polynomial in a single variable (default ``q``).

    >>> q = LaurentPoly.var()
    >>> (q + q**-1) * (q - q**-1)
    LaurentPoly('-1*q^-2 + 1*q^2')
    """

    __slots__ = ()
    _nvars = 1
    _default_vars = ("q",)
    _zero_exp = 0

    @staticmethod
    def _coerce_exp(e) -> int:
        if isinstance(e, tuple):
            (e,) = e
        if not isinstance(e, int):
            raise TypeError(f"exponent must be int, got {e!r}")
        return e

    @staticmethod
    def _add_exp(a, b):
        return a + b

    @staticmethod
    def _scale_exp(e, k):
        return e * k

    @classmethod
    def var(cls, name: str = "q"):
        return cls({1: 1}, (name,))

    @classmethod
    def monomial(cls, e: int, c=1, name: str = "q"):
        return cls({e: c}, (name,))

    @property
    def var_name(self) -> str:
        return self._vars[0]

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise PolyError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def eval_numeric(self, x) -> complex | float:
        """Evaluate in floating point; ``x`` must be nonzero."""
        if x == 0:
            raise PolyError("cannot evaluate a Laurent polynomial at 0")
        return sum(float(c) * x ** e for e, c in self._terms.items()) if self._terms else 0.0

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(q) -> p(1/q)``."""
        return self._raw({-e: c for e, c in self._terms.items()}, self._vars)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises :class:`PolyError` if there is a remainder."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        lo_d, hi_d = other.degree_range()
        lead = other._terms[hi_d]
        quot: dict = {}
        while rem:
            hi = max(rem)
            if hi - hi_d < min(rem) - lo_d:
                break
            e = hi - hi_d
            c = rem[hi] / lead
            quot[e] = c
            for e2, c2 in other._terms.items():
                k = e + e2
                v = rem.get(k, 0) - c * c2
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise PolyError("polynomial division is not exact")
        return self._raw(quot, self._vars)

    def __str__(self):
        if not self._terms:
            return "0"
        v = self._vars[0]
        parts = []
        for e, c in sorted(self._terms.items()):
            cs = str(c)
            parts.append(cs if e == 0 else f"{cs}*{v}^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"


class LaurentPoly2(_Laurent):
    """Laurent polynomial in two variables (default ``q``, ``z``)."""

    __slots__ = ()
    _nvars = 2
    _default_vars = ("q", "z")
    _zero_exp = (0, 0)

    @staticmethod
    def _coerce_exp(e) -> tuple[int, int]:
        e = tuple(e)
        if len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise TypeError(f"exponent must be a pair of ints, got {e!r}")
        return e

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _scale_exp(e, k):
        return (e[0] * k, e[1] * k)

    @classmethod
    def var(cls, which: int, variables=("q", "z")):
        e = (1, 0) if which == 0 else (0, 1)
        return cls({e: 1}, variables)

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1, variables=("q", "z")):
        return cls({(e1, e2): c}, variables)

    def eval_numeric(self, x, y) -> complex | float:
        if not self._terms:
            return 0.0
        if x == 0 and any(e[0] < 0 for e in self._terms):
            raise PolyError(f"pole: {self._vars[0]} = 0")
        if y == 0 and any(e[1] < 0 for e in self._terms):
            raise PolyError(f"pole: {self._vars[1]} = 0")
        return sum(float(c) * x ** e1 * y ** e2 for (e1, e2), c in self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        v1, v2 = self._vars
        parts = []
        for (e1, e2), c in sorted(self._terms.items()):
            mono = "*".join(s for s in (f"{v1}^{e1}" if e1 else "", f"{v2}^{e2}" if e2 else "") if s)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly2('{self}')"
