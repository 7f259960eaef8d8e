"""Exact arithmetic in the rational function field Q(t_1, ..., t_k).

A :class:`Poly` is a sparse multivariate polynomial with rational
coefficients; monomials are sorted tuples of ``(name, exponent)`` pairs, so
polynomials over different sets of indeterminates mix freely.  A
:class:`Scalar` is a quotient of two polys, normalized by content but not
gcd-reduced; equality is decided by cross-multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, Iterable, Optional, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
ONE_MONO: Monomial = ()

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ScalarError(ArithmeticError):
    """Raised on division by zero and other undefined scalar operations."""


@lru_cache(maxsize=None)
def name_key(name: str) -> tuple:
    """Natural sort key, so that ``q2`` sorts before ``q10``."""
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


@lru_cache(maxsize=1 << 16)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_quo(b: Monomial, a: Monomial) -> Monomial:
    d = dict(b)
    for v, e in a:
        d[v] -= e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 16)
def mono_key(m: Monomial) -> tuple:
    """Sort key for graded lex order; the smallest key is the leading monomial."""
    return (-mono_degree(m), tuple((name_key(v), -e) for v, e in sorted(m, key=lambda t: name_key(t[0]))))


def _mono_str(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in sorted(m, key=lambda t: name_key(t[0])))


class Poly:
    """Sparse polynomial over Q; ``terms`` never stores a zero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None):
        self.terms: Dict[Monomial, Fraction] = terms if terms is not None else {}

    @classmethod
    def const(cls, c) -> "Poly":
        c = Fraction(c)
        return cls({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        return cls({((name, exp),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def const_value(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(t)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if len(self.terms) == 1 and ONE_MONO in self.terms:
            return other.scale(self.terms[ONE_MONO])
        if len(other.terms) == 1 and ONE_MONO in other.terms:
            return self.scale(other.terms[ONE_MONO])
        t: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(t)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly()
        if c == 1:
            return self
        return Poly({m: v * c for m, v in self.terms.items()})

    def mul_mono(self, mono: Monomial) -> "Poly":
        return Poly({mono_mul(m, mono): c for m, c in self.terms.items()})

    def leading(self) -> Tuple[Monomial, Fraction]:
        m = min(self.terms, key=mono_key)
        return m, self.terms[m]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def monomial_gcd(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        common = dict(next(it))
        for m in it:
            dm = dict(m)
            for v in list(common):
                e = min(common[v], dm.get(v, 0))
                if e:
                    common[v] = e
                else:
                    del common[v]
            if not common:
                break
        return tuple(sorted(common.items()))

    def div_mono(self, mono: Monomial) -> "Poly":
        return Poly({mono_quo(m, mono): c for m, c in self.terms.items()})

    def exact_div(self, other: "Poly") -> Optional["Poly"]:
        """Quotient ``self / other`` if it is a polynomial, else None."""
        if other.is_zero():
            raise ScalarError("polynomial division by zero")
        lm_g, lc_g = other.leading()
        rem = self
        quo: Dict[Monomial, Fraction] = {}
        while not rem.is_zero():
            lm_r, lc_r = rem.leading()
            if not mono_divides(lm_g, lm_r):
                return None
            m = mono_quo(lm_r, lm_g)
            c = lc_r / lc_g
            quo[m] = quo.get(m, 0) + c
            rem = rem - other.mul_mono(m).scale(c)
        return Poly({m: c for m, c in quo.items() if c})

    def __pow__(self, e: int) -> "Poly":
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if not m:
                body = str(a)
            elif a == 1:
                body = _mono_str(m)
            else:
                body = f"{a}*{_mono_str(m)}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """Element of Q(t_1, ..., t_k), stored as ``num / den``.

    ``den`` is a primitive integer polynomial with positive leading
    coefficient; common monomial factors are cancelled and an exact
    polynomial quotient is taken when one exists.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None, _normalized: bool = False):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ScalarError("division by zero")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # construction

    @classmethod
    def coerce(cls, x: ScalarLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Poly.const(x), _ONE_POLY, _normalized=True)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def var(cls, name: str) -> "Scalar":
        if not NAME_RE.match(name):
            raise ValueError(f"invalid indeterminate name {name!r}")
        return cls(Poly.var(name), _ONE_POLY, _normalized=True)

    @classmethod
    def parse(cls, text: str, names: Optional[Iterable[str]] = None) -> "Scalar":
        from .expr import parse_scalar

        return parse_scalar(text, names)

    # predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self.num.const_value() / self.den.const_value()

    def laurent_monomial(self) -> Optional[Tuple[Fraction, Dict[str, int]]]:
        """``(coefficient, exponents)`` if self is c * t^e with e in Z^k, else None."""
        if len(self.num.terms) != 1 or len(self.den.terms) != 1:
            return None
        (mn, cn), = self.num.terms.items()
        (md, cd), = self.den.terms.items()
        exps = dict(mn)
        for v, e in md:
            exps[v] = exps.get(v, 0) - e
        return cn / cd, {v: e for v, e in exps.items() if e}

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    # arithmetic

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.coerce(other)
            else:
                return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.coerce(other)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.coerce(other)
        if self.den.is_const() and other.den.is_const():
            return Scalar(self.num * other.num, _ONE_POLY, _normalized=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ScalarError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "Scalar":
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            if self.is_zero():
                raise ScalarError("zero raised to a negative power")
            return Scalar(self.den ** (-e), self.num ** (-e))
        if e == 0:
            return ONE
        return Scalar(self.num ** e, self.den ** e)

    # printing

    def to_str(self) -> str:
        if self.den.is_const():
            return self.num.to_str()
        # clear fractions in the numerator: (1/2)/q1 prints as 1/(2*q1)
        b = lcm(*(Fraction(c).denominator for c in self.num.terms.values()))
        num, den = self.num.scale(b), self.den.scale(b)
        n = num.to_str()
        if len(num.terms) > 1 or _needs_parens_as_factor(n):
            n = f"({n})"
        d = den.to_str()
        if len(den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    __str__ = to_str

    def __repr__(self):
        return f"Scalar({self.to_str()!r})"


def _needs_parens_as_factor(s: str) -> bool:
    # "-q1" as numerator of a quotient would bind as -(q1/d), which is equal anyway,
    # but "1/2*q1" would not; parenthesize anything with '/'.
    return "/" in s


_ONE_POLY = Poly.const(1)


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if num.is_zero():
        return num, _ONE_POLY
    if den.is_const():
        c = den.const_value()
        return (num if c == 1 else num.scale(1 / c)), _ONE_POLY
    common = num.monomial_gcd()
    dcommon = den.monomial_gcd()
    shared = tuple(sorted((v, min(e, dict(dcommon).get(v, 0))) for v, e in common if dict(dcommon).get(v, 0)))
    if shared:
        num = num.div_mono(shared)
        den = den.div_mono(shared)
    c = den.content()
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        num = num.scale(1 / c)
        den = den.scale(1 / c)
    if len(den.terms) > 1:
        q = num.exact_div(den)
        if q is not None:
            return q, _ONE_POLY
    elif den.is_const():
        return num, _ONE_POLY
    return num, den


ZERO = Scalar(Poly(), _ONE_POLY, _normalized=True)
ONE = Scalar(Poly.const(1), _ONE_POLY, _normalized=True)


# Operation-level API


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> Scalar:
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def scalar_eq(a: ScalarLike, b: ScalarLike) -> bool:
    return Scalar.coerce(a) == Scalar.coerce(b)


def scalar_pow(a: ScalarLike, e: int) -> Scalar:
    return Scalar.coerce(a) ** e


def is_root_of_unity(a: ScalarLike) -> bool:
    """Only +1 and -1 are roots of unity in Q(t_1, ..., t_k)."""
    a = Scalar.coerce(a)
    if a.is_zero():
        raise ScalarError("zero is not a unit")
    return a.is_const() and abs(a.const_value()) == 1


def scalar_print(a: ScalarLike) -> str:
    return Scalar.coerce(a).to_str()


def scalar_parse(text: str, names: Optional[Iterable[str]] = None) -> Scalar:
    return Scalar.parse(text, names)
