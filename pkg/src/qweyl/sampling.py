"""Seeded random instances: presentations, scalars, words, expressions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from . import expr as E
from .pbw import PbwPolynomial, monomials_up_to
from .presentation import AlgebraParams, GeneratorRef, from_upper
from .scalars import ONE, Scalar


@dataclass(frozen=True)
class SamplingConfig:
    seed: int = 0
    max_word_len: int = 6
    max_degree: int = 4
    max_terms: int = 3
    expr_depth: int = 4
    # exponents of Laurent-monomial parameters are drawn from [-max_exp, max_exp]
    max_exp: int = 2

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(self.seed * 1_000_003 + salt)


def symbolic_names(n: int) -> List[str]:
    names = [f"q{i}" for i in range(1, n + 1)]
    names += [f"g{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return names


def symbolic_presentation(n: int) -> AlgebraParams:
    """q_i and gamma_ij (i < j) are independent indeterminates."""
    q = [Scalar.var(f"q{i}") for i in range(1, n + 1)]
    upper = {(i, j): Scalar.var(f"g{i}{j}") for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return from_upper(n, q, upper, symbolic_names(n))


def random_laurent(rng: random.Random, names: Sequence[str], max_exp: int, coeffs=(1, 1, 1, 2, -1, Fraction(1, 2), 3)) -> Scalar:
    s = Scalar.coerce(rng.choice(coeffs))
    for v in rng.sample(list(names), k=rng.randint(0, min(2, len(names)))):
        e = rng.choice([k for k in range(-max_exp, max_exp + 1) if k])
        s = s * Scalar.var(v) ** e
    return s


def random_presentation(rng: random.Random, n: int, cfg: SamplingConfig = SamplingConfig()) -> AlgebraParams:
    """Random valid presentation whose parameters are Laurent monomials in the symbolic names."""
    names = symbolic_names(n)
    q = []
    for i in range(1, n + 1):
        # q_i always involves its own indeterminate, so it is never a root of unity
        qi = random_laurent(rng, [v for v in names if v != f"q{i}"], 1) * Scalar.var(f"q{i}") ** rng.choice((1, 1, 2, -1))
        q.append(qi)
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            upper[i, j] = random_laurent(rng, names, cfg.max_exp)
    return from_upper(n, q, upper, names)


def random_scalar(rng: random.Random, names: Sequence[str]) -> Scalar:
    """Nonzero scalar: a Laurent monomial, occasionally a binomial like (q1 - 2)."""
    s = random_laurent(rng, names, 2)
    if names and rng.random() < 0.2:
        s = s * (Scalar.var(rng.choice(list(names))) + rng.choice((1, -2, 3)))
    return s


def random_word(rng: random.Random, n: int, max_len: int) -> List[GeneratorRef]:
    return [GeneratorRef(rng.choice("XY"), rng.randint(1, n)) for _ in range(rng.randint(0, max_len))]


def random_expr(rng: random.Random, p: AlgebraParams, depth: int) -> E.FreeExpr:
    """Random canonical AST (scalar-only subtrees folded)."""
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.3:
            return E.Lit(random_scalar(rng, p.indeterminates))
        return E.gen(rng.choice("XY"), rng.randint(1, p.n))
    k = rng.randrange(5)
    if k == 0:
        return E.neg(random_expr(rng, p, depth - 1))
    if k == 1:
        return E.add(random_expr(rng, p, depth - 1), random_expr(rng, p, depth - 1))
    if k == 2:
        return E.sub(random_expr(rng, p, depth - 1), random_expr(rng, p, depth - 1))
    if k == 3:
        return E.mul(random_expr(rng, p, depth - 1), random_expr(rng, p, depth - 1))
    return E.power(random_expr(rng, p, depth - 1), rng.randint(0, 2))


def random_pbw(rng: random.Random, p: AlgebraParams, max_degree: int, max_terms: int, nonzero: bool = True) -> PbwPolynomial:
    monos = list(monomials_up_to(p.n, max_degree))
    while True:
        f = PbwPolynomial(p)
        for _ in range(rng.randint(1, max_terms)):
            f = f + PbwPolynomial.monomial(p, rng.choice(monos), random_scalar(rng, p.indeterminates))
        if not (nonzero and f.is_zero()):
            return f


def random_mu(rng: random.Random, p: AlgebraParams) -> List[Scalar]:
    return [random_scalar(rng, p.indeterminates) for _ in range(p.n)]


def word_expr(word: Sequence[GeneratorRef]) -> E.FreeExpr:
    """Left-nested product of the generators, or 1 for the empty word."""
    if not word:
        return E.Lit(ONE)
    e: E.FreeExpr = E.Gen(word[0])
    for g in word[1:]:
        e = E.mul(e, E.Gen(g))
    return e
