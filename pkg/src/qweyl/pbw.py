"""PBW normal forms in A_n^{Q,Gamma}(K).

Monomials are exponent tuples ``(b_1, a_1, ..., b_n, a_n)`` standing for
y_1^{b_1} x_1^{a_1} ... y_n^{b_n} x_n^{a_n}.  Slot ``2(i-1)`` holds y_i and
slot ``2(i-1)+1`` holds x_i, which is the Ore tower order.

Multiplication reduces to right-multiplying a normal monomial by a single
generator.  If the generator is not smaller than the last letter of the
monomial it is appended; otherwise the last letter ``h`` is peeled off and
``h*g`` is rewritten with one of the local rules

    R1  y_i y_j -> gamma_ij y_j y_i                   (i > j)
    R2  x_i x_j -> q_j^-1 gamma_ij x_j x_i            (i > j)
    R3  x_i y_j -> q_j gamma_ji y_j x_i               (i > j)
    R4  y_i x_j -> gamma_ji x_j y_i                   (i > j)
    R5  x_j y_j -> q_j y_j x_j + z_{j-1}

R5's correction only involves indices below j, so the recursion terminates.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .expr import Add, FreeExpr, Gen, Lit, Mul, Neg, Pow, Sub
from .presentation import AlgebraParams, GeneratorRef
from .scalars import ONE, Scalar, ScalarLike

Mono = Tuple[int, ...]
Terms = Dict[Mono, Scalar]

NEG_INF = float("-inf")


def _accumulate(out: Terms, mono: Mono, c: Scalar) -> None:
    prev = out.get(mono)
    s = c if prev is None else prev + c
    if s.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = s


def _bump(m: Mono, pos: int, by: int = 1) -> Mono:
    return m[:pos] + (m[pos] + by,) + m[pos + 1:]


class _Tables:
    """Per-presentation rewriting data and memo tables."""

    def __init__(self, p: AlgebraParams):
        self.p = p
        self.size = 2 * p.n
        self.one: Mono = (0,) * self.size
        self.swap: Dict[Tuple[int, int], Scalar] = {}
        for h in range(self.size):
            for g in range(h):
                self.swap[h, g] = self._swap_coeff(h, g)
        # z_{k-1} - 1 as (coefficient, y-slot, x-slot) triples, for R5
        self.z_tail: List[List[Tuple[Scalar, int, int]]] = [[]]
        for k in range(1, p.n + 1):
            self.z_tail.append(self.z_tail[-1] + [(p.qi(k) - 1, 2 * (k - 1), 2 * (k - 1) + 1)])
        self.mono_gen: Dict[Tuple[Mono, int], Terms] = {}
        self.mono_mono: Dict[Tuple[Mono, Mono], Terms] = {}

    def _swap_coeff(self, h: int, g: int) -> Scalar:
        """Scalar c with (letter h)(letter g) = c (letter g)(letter h) + correction, h > g."""
        p = self.p
        i, hx = h // 2 + 1, h % 2 == 1
        j, gx = g // 2 + 1, g % 2 == 1
        if i == j:
            return p.qi(j)  # R5
        if not hx and not gx:
            return p.g(i, j)  # R1
        if hx and gx:
            return p.qi(j).inverse() * p.g(i, j)  # R2
        if hx and not gx:
            return p.qi(j) * p.g(j, i)  # R3
        return p.g(j, i)  # R4

    def mul_gen(self, m: Mono, g: int) -> Terms:
        key = (m, g)
        hit = self.mono_gen.get(key)
        if hit is not None:
            return hit
        h = self.size - 1
        while h >= 0 and m[h] == 0:
            h -= 1
        if h <= g:
            out = {_bump(m, g): ONE}
        else:
            rest = _bump(m, h, -1)
            c = self.swap[h, g]
            out: Terms = {}
            for mono, coef in self.mul_gen(rest, g).items():
                for mono2, coef2 in self.mul_gen(mono, h).items():
                    _accumulate(out, mono2, c * coef * coef2)
            if h == g + 1 and g % 2 == 0:
                # R5 correction: rest * z_{k-1}
                _accumulate(out, rest, ONE)
                for zc, ys, xs in self.z_tail[g // 2]:
                    for mono, coef in self.mul_gen(rest, ys).items():
                        for mono2, coef2 in self.mul_gen(mono, xs).items():
                            _accumulate(out, mono2, zc * coef * coef2)
        self.mono_gen[key] = out
        return out

    def mul_mono(self, m1: Mono, m2: Mono) -> Terms:
        key = (m1, m2)
        hit = self.mono_mono.get(key)
        if hit is not None:
            return hit
        cur: Terms = {m1: ONE}
        for pos, e in enumerate(m2):
            for _ in range(e):
                nxt: Terms = {}
                for mono, coef in cur.items():
                    for mono2, coef2 in self.mul_gen(mono, pos).items():
                        _accumulate(nxt, mono2, coef * coef2)
                cur = nxt
        self.mono_mono[key] = cur
        return cur


def tables(p: AlgebraParams) -> _Tables:
    t = p.cache.get("pbw")
    if t is None:
        t = p.cache["pbw"] = _Tables(p)
    return t


def _mono_key(m: Mono):
    return (-sum(m), tuple(-e for e in m))


def mono_str(m: Mono) -> str:
    parts = []
    for pos, e in enumerate(m):
        if e:
            name = f"{'y' if pos % 2 == 0 else 'x'}{pos // 2 + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _looks_negative(c: Scalar) -> bool:
    return len(c.num.terms) == 1 and next(iter(c.num.terms.values())) < 0


class PbwPolynomial:
    """A K-linear combination of PBW monomials of one presentation."""

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms: Optional[Terms] = None):
        self.params = params
        self.terms: Terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    # constructors

    @classmethod
    def zero(cls, p: AlgebraParams) -> "PbwPolynomial":
        return cls(p)

    @classmethod
    def const(cls, p: AlgebraParams, c: ScalarLike = 1) -> "PbwPolynomial":
        return cls(p, {(0,) * (2 * p.n): Scalar.coerce(c)})

    @classmethod
    def monomial(cls, p: AlgebraParams, mono: Iterable[int], c: ScalarLike = 1) -> "PbwPolynomial":
        mono = tuple(mono)
        if len(mono) != 2 * p.n or any(e < 0 for e in mono):
            raise ValueError(f"bad PBW exponent vector {mono}")
        return cls(p, {mono: Scalar.coerce(c)})

    @classmethod
    def generator(cls, p: AlgebraParams, ref: GeneratorRef) -> "PbwPolynomial":
        if not 1 <= ref.index <= p.n:
            raise ValueError(f"generator index {ref.index} exceeds n={p.n}")
        return cls.monomial(p, _bump((0,) * (2 * p.n), ref.position))

    @classmethod
    def x(cls, p: AlgebraParams, i: int) -> "PbwPolynomial":
        return cls.generator(p, GeneratorRef("X", i))

    @classmethod
    def y(cls, p: AlgebraParams, i: int) -> "PbwPolynomial":
        return cls.generator(p, GeneratorRef("Y", i))

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(not any(m) for m in self.terms)

    def coeff(self, mono: Mono) -> Scalar:
        from .scalars import ZERO

        return self.terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> List[Tuple[Mono, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def _check(self, other: "PbwPolynomial") -> None:
        if self.params is not other.params and self.params != other.params:
            raise ValueError("polynomials belong to different presentations")

    # arithmetic

    def __add__(self, other) -> "PbwPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return PbwPolynomial(self.params, out)

    __radd__ = __add__

    def __neg__(self) -> "PbwPolynomial":
        return PbwPolynomial(self.params, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "PbwPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PbwPolynomial":
        return self._coerce(other) - self

    def scale(self, c: ScalarLike) -> "PbwPolynomial":
        c = Scalar.coerce(c)
        if c.is_zero():
            return PbwPolynomial(self.params)
        return PbwPolynomial(self.params, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "PbwPolynomial":
        if isinstance(other, (Scalar, int)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        self._check(other)
        t = tables(self.params)
        out: Terms = {}
        for m2, c2 in other.terms.items():
            for m1, c1 in self.terms.items():
                cc = c1 * c2
                for m, c in t.mul_mono(m1, m2).items():
                    _accumulate(out, m, cc * c)
        return PbwPolynomial(self.params, out)

    def __rmul__(self, other) -> "PbwPolynomial":
        return self.scale(other)

    def __pow__(self, e: int) -> "PbwPolynomial":
        if e < 0:
            raise ValueError("negative power")
        result = PbwPolynomial.const(self.params)
        for _ in range(e):
            result = result * self
        return result

    def _coerce(self, other) -> "PbwPolynomial":
        if isinstance(other, PbwPolynomial):
            self._check(other)
            return other
        return PbwPolynomial.const(self.params, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PbwPolynomial):
            if isinstance(other, (Scalar, int)):
                other = PbwPolynomial.const(self.params, other)
            else:
                return NotImplemented
        if self.params is not other.params and self.params != other.params:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    __hash__ = None  # type: ignore[assignment]

    # printing

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = _looks_negative(c)
            a = -c if neg else c
            ms = mono_str(m)
            if not any(m):
                body = a.to_str()
            elif a == ONE:
                body = ms
            else:
                s = a.to_str()
                if len(a.num.terms) > 1 and a.den.is_const():
                    s = f"({s})"
                body = f"{s}*{ms}"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    __str__ = to_str

    def __repr__(self):
        return f"PbwPolynomial({self.to_str()!r})"


# Operation-level API


def pbw_add(f: PbwPolynomial, g: PbwPolynomial) -> PbwPolynomial:
    return f + g


def pbw_scale(c: ScalarLike, f: PbwPolynomial) -> PbwPolynomial:
    return f.scale(c)


def pbw_mul(f: PbwPolynomial, g: PbwPolynomial) -> PbwPolynomial:
    return f * g


def commutator(f: PbwPolynomial, g: PbwPolynomial) -> PbwPolynomial:
    return f * g - g * f


def nf(e: FreeExpr, p: AlgebraParams) -> PbwPolynomial:
    """Normal form of a free-algebra expression, by bottom-up evaluation."""
    if isinstance(e, Lit):
        return PbwPolynomial.const(p, e.value)
    if isinstance(e, Gen):
        return PbwPolynomial.generator(p, e.ref)
    if isinstance(e, Neg):
        return -nf(e.arg, p)
    if isinstance(e, Add):
        return nf(e.left, p) + nf(e.right, p)
    if isinstance(e, Sub):
        return nf(e.left, p) - nf(e.right, p)
    if isinstance(e, Mul):
        return nf(e.left, p) * nf(e.right, p)
    if isinstance(e, Pow):
        return nf(e.base, p) ** e.exp
    raise TypeError(f"not an expression node: {e!r}")


def nf_str(text: str, p: AlgebraParams) -> PbwPolynomial:
    from .expr import parse_expr

    return nf(parse_expr(text, p), p)


def z_element(i: int, p: AlgebraParams) -> PbwPolynomial:
    """z_i = 1 + sum_{k<=i} (q_k - 1) y_k x_k, with z_0 = 1."""
    if not 0 <= i <= p.n:
        raise ValueError(f"z index {i} out of range [0, {p.n}]")
    zs = p.cache.get("z")
    if zs is None:
        zs = [PbwPolynomial.const(p)]
        for k in range(1, p.n + 1):
            mono = [0] * (2 * p.n)
            mono[2 * (k - 1)] = mono[2 * (k - 1) + 1] = 1
            zs.append(zs[-1] + PbwPolynomial.monomial(p, mono, p.qi(k) - 1))
        p.cache["z"] = zs
    return zs[i]


def total_degree(f: PbwPolynomial):
    """Largest total degree of a monomial; -inf for the zero element."""
    return max((sum(m) for m in f.terms), default=NEG_INF)


def filtration_degree(f: PbwPolynomial):
    """Degree with d(x_n) = d(y_n) = 1 and all other generators of degree 0."""
    return max((m[-2] + m[-1] for m in f.terms), default=NEG_INF)


def monomial_count(n: int, d: int) -> int:
    """Number of PBW monomials of total degree <= d in 2n generators."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return comb(d + 2 * n, 2 * n)


def monomials_up_to(n: int, d: int) -> Iterator[Mono]:
    """All exponent vectors of length 2n with total degree <= d, by degree."""
    size = 2 * n

    def rec(prefix, slots, budget):
        if slots == 1:
            yield prefix + (budget,)
            return
        for e in range(budget, -1, -1):
            yield from rec(prefix + (e,), slots - 1, budget - e)

    for deg in range(d + 1):
        yield from rec((), size, deg)
