"""Surface syntax for scalars and free-algebra expressions.

Grammar (whitespace insignificant, ``*`` never elided)::

    expr   := term (('+' | '-') term)*
    term   := '-'? factor (('*' | '/') factor)*
    factor := atom ('^' '-'? INT)?
    atom   := INT | NAME | GEN | '(' expr ')'

``GEN`` is ``x<digits>`` or ``y<digits>``; ``/`` only accepts a scalar right
operand.  The tree is built through smart constructors that fold every
scalar-only subtree into a single :class:`Lit`, so parse and print are
mutually inverse on trees built the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Union

from .presentation import GeneratorRef
from .scalars import NAME_RE, Scalar, ScalarError


class ParseError(ValueError):
    """Syntax error; ``pos`` is a 1-based column, ``line`` is set for spec files."""

    def __init__(self, message: str, pos: int, expected: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.pos = pos
        self.expected = expected
        self.line = line
        super().__init__(str(self))

    def __str__(self):
        where = f"line {self.line}, column {self.pos}" if self.line is not None else f"position {self.pos}"
        s = f"{where}: {self.message}"
        if self.expected:
            s += f" (expected {self.expected})"
        return s


# AST


@dataclass(frozen=True)
class Lit:
    value: Scalar


@dataclass(frozen=True)
class Gen:
    ref: GeneratorRef


@dataclass(frozen=True)
class Neg:
    arg: "FreeExpr"


@dataclass(frozen=True)
class Add:
    left: "FreeExpr"
    right: "FreeExpr"


@dataclass(frozen=True)
class Sub:
    left: "FreeExpr"
    right: "FreeExpr"


@dataclass(frozen=True)
class Mul:
    left: "FreeExpr"
    right: "FreeExpr"


@dataclass(frozen=True)
class Pow:
    base: "FreeExpr"
    exp: int


FreeExpr = Union[Lit, Gen, Neg, Add, Sub, Mul, Pow]


def lit(value) -> Lit:
    return Lit(Scalar.coerce(value))


def gen(kind: str, index: int) -> Gen:
    return Gen(GeneratorRef(kind, index))


def neg(a: FreeExpr) -> FreeExpr:
    if isinstance(a, Lit):
        return Lit(-a.value)
    return Neg(a)


def add(a: FreeExpr, b: FreeExpr) -> FreeExpr:
    if isinstance(a, Lit) and isinstance(b, Lit):
        return Lit(a.value + b.value)
    return Add(a, b)


def sub(a: FreeExpr, b: FreeExpr) -> FreeExpr:
    if isinstance(a, Lit) and isinstance(b, Lit):
        return Lit(a.value - b.value)
    return Sub(a, b)


def mul(a: FreeExpr, b: FreeExpr) -> FreeExpr:
    if isinstance(a, Lit) and isinstance(b, Lit):
        return Lit(a.value * b.value)
    return Mul(a, b)


def power(a: FreeExpr, e: int) -> FreeExpr:
    if isinstance(a, Lit):
        return Lit(a.value ** e)
    if e < 0:
        raise ValueError("negative power of a non-scalar expression")
    return Pow(a, e)


# Lexer

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>[xy]\d+)(?![A-Za-z0-9_])|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")
GEN_NAME_RE = re.compile(r"[xy]\d+\Z")


@dataclass
class Token:
    kind: str  # int, gen, name, op, eof
    text: str
    pos: int


def tokenize(s: str) -> List[Token]:
    out = []
    i = 0
    while True:
        while i < len(s) and s[i].isspace():
            i += 1
        if i >= len(s):
            break
        m = _TOKEN_RE.match(s, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {s[i]!r}", i + 1)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start + 1))
        i = m.end()
    out.append(Token("eof", "", len(s) + 1))
    return out


class _Parser:
    def __init__(self, text: str, names: Optional[Iterable[str]], n: Optional[int], scalar_only: bool):
        self.toks = tokenize(text)
        self.i = 0
        self.names = set(names) if names is not None else None
        self.n = n
        self.scalar_only = scalar_only

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def eat(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def fail(self, expected: str):
        t = self.tok
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {got}", t.pos, expected)

    def parse(self) -> FreeExpr:
        e = self.expr()
        if self.tok.kind != "eof":
            self.fail("operator or end of input")
        return e

    def expr(self) -> FreeExpr:
        e = self.term()
        while True:
            if self.eat("+"):
                e = add(e, self.term())
            elif self.eat("-"):
                e = sub(e, self.term())
            else:
                return e

    def term(self) -> FreeExpr:
        negate = self.eat("-")
        e = self.factor()
        if negate:
            e = neg(e)
        while True:
            if self.eat("*"):
                e = mul(e, self.factor())
            elif self.tok.kind == "op" and self.tok.text == "/":
                pos = self.tok.pos
                self.i += 1
                d = self.factor()
                if not isinstance(d, Lit):
                    raise ParseError("division by a non-scalar expression", pos)
                if d.value.is_zero():
                    raise ParseError("division by zero", pos)
                e = mul(e, Lit(d.value.inverse()))
            else:
                return e

    def factor(self) -> FreeExpr:
        base = self.atom()
        if self.eat("^"):
            sign = -1 if self.eat("-") else 1
            t = self.tok
            if t.kind != "int":
                self.fail("integer exponent")
            self.i += 1
            e = sign * int(t.text)
            if e < 0 and not isinstance(base, Lit):
                raise ParseError("negative exponent on a non-scalar expression", t.pos)
            try:
                return power(base, e)
            except ScalarError as err:
                raise ParseError(str(err), t.pos) from None
        return base

    def atom(self) -> FreeExpr:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Lit(Scalar.coerce(int(t.text)))
        if t.kind == "name":
            if self.names is not None and t.text not in self.names:
                raise ParseError(f"undeclared indeterminate {t.text!r}", t.pos)
            self.i += 1
            return Lit(Scalar.var(t.text))
        if t.kind == "gen":
            if self.scalar_only:
                raise ParseError(f"generator {t.text!r} not allowed in a scalar expression", t.pos, "scalar")
            index = int(t.text[1:])
            if index < 1 or (self.n is not None and index > self.n):
                raise ParseError(f"generator index {index} exceeds n={self.n}", t.pos)
            self.i += 1
            return gen(t.text[0].upper(), index)
        if self.eat("("):
            e = self.expr()
            if not self.eat(")"):
                self.fail("')'")
            return e
        self.fail("integer, name, generator or '('")


def parse_scalar(text: str, names: Optional[Iterable[str]] = None) -> Scalar:
    """Parse a scalar expression; ``names`` restricts the allowed indeterminates."""
    e = _Parser(text, names, None, scalar_only=True).parse()
    assert isinstance(e, Lit)
    return e.value


def parse_expr(text: str, params) -> FreeExpr:
    """Parse an element of the free algebra on x_1, y_1, ..., x_n, y_n."""
    return _Parser(text, params.indeterminates, params.n, scalar_only=False).parse()


# Printer

_FACTOR_RE = re.compile(r"(\d+|[A-Za-z][A-Za-z0-9_]*)(\^\d+)?\Z")


def _is_term_shaped(s: str) -> bool:
    """No '+' or '-' outside parentheses, except a leading sign."""
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and k > 0:
            return False
    return True


def _lit_str(v: Scalar, ctx: str) -> str:
    s = v.to_str()
    if ctx == "expr" or _FACTOR_RE.match(s) or (ctx == "term" and _is_term_shaped(s)):
        return s
    return f"({s})"


def _factor(e: FreeExpr) -> str:
    if isinstance(e, Lit):
        return _lit_str(e.value, "factor")
    if isinstance(e, Gen):
        return str(e.ref)
    if isinstance(e, Pow):
        return f"{_atom(e.base)}^{e.exp}"
    return f"({_print(e)})"


def _atom(e: FreeExpr) -> str:
    if isinstance(e, Gen) or (isinstance(e, Lit) and _FACTOR_RE.match(e.value.to_str()) and "^" not in e.value.to_str()):
        return _factor(e)
    return f"({_print(e)})"


def _term(e: FreeExpr) -> str:
    if isinstance(e, Mul):
        return f"{_term(e.left)}*{_factor(e.right)}"
    if isinstance(e, Neg):
        return f"-{_factor(e.arg)}"
    if isinstance(e, Lit):
        return _lit_str(e.value, "term")
    return _factor(e)


def _print(e: FreeExpr) -> str:
    if isinstance(e, Add):
        return f"{_print(e.left)} + {_term(e.right)}"
    if isinstance(e, Sub):
        return f"{_print(e.left)} - {_term(e.right)}"
    if isinstance(e, Lit):
        return _lit_str(e.value, "expr")
    return _term(e)


def print_expr(e: FreeExpr) -> str:
    return _print(e)


def is_generator_name(name: str) -> bool:
    return bool(GEN_NAME_RE.match(name))


def valid_indeterminate_name(name: str) -> bool:
    return bool(NAME_RE.match(name)) and not is_generator_name(name)
