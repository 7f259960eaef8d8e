"""Exact linear algebra over K, and left division by the normal elements z_i."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union

from .pbw import PbwPolynomial, monomials_up_to, total_degree, z_element
from .scalars import ZERO, Scalar, ScalarLike


@dataclass
class LinearSystem:
    """Rows ``(coefficients, rhs)``; ``unknowns`` labels the columns."""

    rows: List[Tuple[List[ScalarLike], ScalarLike]]
    unknowns: List[Hashable]

    def __post_init__(self):
        for coeffs, _ in self.rows:
            if len(coeffs) != len(self.unknowns):
                raise ValueError("row length differs from the number of unknowns")


@dataclass(frozen=True)
class Inconsistent:
    """Row ``row`` of the input reduces to ``0 = nonzero``."""

    row: int


class _Eliminator:
    """Incremental sparse Gaussian elimination.

    Each stored pivot row has its pivot at its smallest column (in the
    caller's column order) with coefficient 1.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: Dict[int, Tuple[Dict[int, Scalar], Scalar]] = {}

    def add(self, row: Dict[int, Scalar], rhs: Scalar) -> bool:
        """Insert an equation; False if it is inconsistent with the previous ones."""
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while row:
            col = min(row)
            v = row[col]
            piv = self.pivots.get(col)
            if piv is None:
                inv = v.inverse()
                row = {c: w * inv for c, w in row.items()}
                row[col] = Scalar.coerce(1)
                self.pivots[col] = (row, rhs * inv)
                return True
            prow, prhs = piv
            for c, w in prow.items():
                s = row.get(c, ZERO) - v * w
                if s.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = s
            rhs = rhs - v * prhs
        return rhs.is_zero()

    def solution(self) -> List[Scalar]:
        x = [ZERO] * self.ncols
        for col in sorted(self.pivots, reverse=True):
            prow, prhs = self.pivots[col]
            acc = prhs
            for c, w in prow.items():
                if c != col and not x[c].is_zero():
                    acc = acc - w * x[c]
            x[col] = acc
        return x


def solve_sparse(rows: Sequence[Tuple[Dict[int, Scalar], Scalar]], ncols: int) -> Union[List[Scalar], Inconsistent]:
    elim = _Eliminator(ncols)
    for k, (row, rhs) in enumerate(rows):
        if not elim.add(dict(row), Scalar.coerce(rhs)):
            return Inconsistent(k)
    return elim.solution()


def solve(sys: LinearSystem) -> Union[Dict[Hashable, Scalar], Inconsistent]:
    """One solution (free unknowns set to 0) or an inconsistency witness."""
    rows = [({c: Scalar.coerce(v) for c, v in enumerate(coeffs)}, Scalar.coerce(rhs)) for coeffs, rhs in sys.rows]
    res = solve_sparse(rows, len(sys.unknowns))
    if isinstance(res, Inconsistent):
        return res
    return dict(zip(sys.unknowns, res))


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a matrix over Q or K."""
    if not matrix:
        return 0
    elim = _Eliminator(len(matrix[0]))
    for row in matrix:
        elim.add({c: Scalar.coerce(Fraction(v) if isinstance(v, int) else v) for c, v in enumerate(row)}, ZERO)
    return len(elim.pivots)


def _left_multiple_system(z: PbwPolynomial, a: PbwPolynomial, degree: int):
    """Equations for sum_m u_m z*m = a over monomials m of total degree <= degree."""
    monos = list(monomials_up_to(a.params.n, degree))
    monos.reverse()  # eliminate top degree first
    eqs: Dict[tuple, Dict[int, Scalar]] = {}
    for col, m in enumerate(monos):
        prod = z * PbwPolynomial.monomial(a.params, m)
        for t, c in prod.terms.items():
            eqs.setdefault(t, {})[col] = c
    for t in a.terms:
        eqs.setdefault(t, {})
    rows = [(eqs[t], a.terms.get(t, ZERO)) for t in sorted(eqs, key=lambda t: (-sum(t), t))]
    return monos, rows


def left_divide(z: PbwPolynomial, a: PbwPolynomial, degree: int) -> Optional[PbwPolynomial]:
    """b with z*b = a and total_degree(b) <= degree, if one exists."""
    monos, rows = _left_multiple_system(z, a, degree)
    res = solve_sparse(rows, len(monos))
    if isinstance(res, Inconsistent):
        return None
    b = PbwPolynomial(a.params, {m: c for m, c in zip(monos, res) if not c.is_zero()})
    if z * b != a:  # pragma: no cover - elimination is exact
        raise AssertionError("left division produced a wrong quotient")
    return b


def divide_by_z(i: int, a: PbwPolynomial) -> Optional[PbwPolynomial]:
    """The quotient b with z_i * b = a, or None if a is not in z_i A."""
    p = a.params
    if not 1 <= i <= p.n:
        raise ValueError(f"z index {i} out of range [1, {p.n}]")
    if a.is_zero():
        return a
    z = z_element(i, p)
    deg = total_degree(a)
    tight = max(0, deg - 2)
    b = left_divide(z, a, tight)
    if b is None and tight < deg:
        b = left_divide(z, a, deg)
    return b


def span_coordinates(vectors: Sequence[PbwPolynomial], target: PbwPolynomial) -> Optional[List[Scalar]]:
    """Coefficients c with sum c_k vectors[k] = target, or None."""
    eqs: Dict[tuple, Dict[int, Scalar]] = {}
    for col, v in enumerate(vectors):
        for t, c in v.terms.items():
            eqs.setdefault(t, {})[col] = c
    for t in target.terms:
        eqs.setdefault(t, {})
    rows = [(eqs[t], target.terms.get(t, ZERO)) for t in sorted(eqs, key=lambda t: (-sum(t), t))]
    res = solve_sparse(rows, len(vectors))
    return None if isinstance(res, Inconsistent) else res
