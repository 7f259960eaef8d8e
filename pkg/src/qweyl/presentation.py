"""Presentations (n, Q, Gamma) of multiparameter quantized Weyl algebras.

Spec file format (``#`` starts a comment)::

    indeterminates: q1 q2 g
    n: 2
    q: q1, q2
    gamma: 1, g ; 1/g, 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import ONE, Scalar, ScalarError, is_root_of_unity


@dataclass(frozen=True)
class GeneratorRef:
    """Generator ``x_i`` (kind ``"X"``) or ``y_i`` (kind ``"Y"``).

    Ordered by tower position: y_1 < x_1 < y_2 < x_2 < ...
    """

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("X", "Y"):
            raise ValueError(f"bad generator kind {self.kind!r}")

    @property
    def ord(self) -> int:
        return 2 * self.index - (1 if self.kind == "Y" else 0)

    @property
    def position(self) -> int:
        """0-based slot in a PBW exponent vector."""
        return self.ord - 1

    def __str__(self):
        return f"{self.kind.lower()}{self.index}"


@dataclass(frozen=True)
class Violation:
    code: str
    indices: Tuple[int, ...]
    message: str

    def __str__(self):
        return f"VIOLATION code={self.code} indices={','.join(map(str, self.indices))} {self.message}"


class ValidationError(ValueError):
    def __init__(self, violations: List[Violation]):
        self.violations = violations
        super().__init__("; ".join(v.message for v in violations))


@dataclass(frozen=True, eq=False)
class AlgebraParams:
    """The presentation of A_n^{Q,Gamma}(K).

    ``gamma`` is stored in full; skew-symmetry is checked by :func:`validate`,
    never imposed.  ``cache`` holds multiplication tables built by the PBW
    engine and is not part of the value.
    """

    n: int
    q: Tuple[Scalar, ...]
    gamma: Tuple[Tuple[Scalar, ...], ...]
    indeterminates: Tuple[str, ...] = ()
    cache: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(Scalar.coerce(c) for c in self.q))
        object.__setattr__(self, "gamma", tuple(tuple(Scalar.coerce(c) for c in row) for row in self.gamma))
        object.__setattr__(self, "indeterminates", tuple(self.indeterminates))
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if len(self.q) != self.n:
            raise ValueError("q must have n entries")
        if len(self.gamma) != self.n or any(len(row) != self.n for row in self.gamma):
            raise ValueError("gamma must be n×n")

    # 1-based accessors, matching the usual indexing of q_i and gamma_ij
    def qi(self, i: int) -> Scalar:
        return self.q[i - 1]

    def g(self, i: int, j: int) -> Scalar:
        return self.gamma[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, AlgebraParams) or self.n != other.n:
            return False
        return self.q == other.q and self.gamma == other.gamma

    __hash__ = object.__hash__

    def restrict(self, i: int) -> "AlgebraParams":
        """Presentation of the subalgebra generated by x_1, y_1, ..., x_i, y_i."""
        return AlgebraParams(i, self.q[:i], tuple(row[:i] for row in self.gamma[:i]), self.indeterminates)


def from_upper(n: int, q: Sequence, upper: Dict[Tuple[int, int], object], indeterminates=()) -> AlgebraParams:
    """Build a skew-symmetric presentation from gamma_ij, i < j (1-based keys)."""
    rows = [[ONE] * n for _ in range(n)]
    for (i, j), v in upper.items():
        v = Scalar.coerce(v)
        rows[i - 1][j - 1] = v
        rows[j - 1][i - 1] = v.inverse()
    return AlgebraParams(n, tuple(q), tuple(tuple(r) for r in rows), tuple(indeterminates))


def validate(p: AlgebraParams) -> List[Violation]:
    """Every violated presentation invariant; an empty list means valid."""
    out: List[Violation] = []
    for i in range(1, p.n + 1):
        qi = p.qi(i)
        if qi.is_zero():
            out.append(Violation("q-zero", (i,), f"q_{i} = 0"))
        elif is_root_of_unity(qi):
            out.append(Violation("q-root-of-unity", (i,), f"q_{i} is a root of unity"))
    for i in range(1, p.n + 1):
        for j in range(1, p.n + 1):
            gij = p.g(i, j)
            if gij.is_zero():
                out.append(Violation("gamma-zero", (i, j), f"gamma_{i}{j} = 0"))
                continue
            if i == j and gij != ONE:
                out.append(Violation("gamma-diagonal", (i,), f"gamma_{i}{i} != 1"))
            elif i < j and not p.g(j, i).is_zero() and gij * p.g(j, i) != ONE:
                out.append(Violation("gamma-skew", (i, j), f"gamma_{i}{j}*gamma_{j}{i} != 1"))
    return out


def is_valid(p: AlgebraParams) -> bool:
    return not validate(p)


# Spec files


def parse_spec(text: str, check: bool = True) -> AlgebraParams:
    """Parse a presentation file; with ``check`` a failed validation raises ValidationError."""
    from .expr import ParseError, parse_scalar, valid_indeterminate_name

    seen: Dict[str, Tuple[int, int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", len(line) - len(line.lstrip()) + 1, line=lineno)
        key, value = line.split(":", 1)
        k = key.strip()
        if k not in ("indeterminates", "n", "q", "gamma"):
            raise ParseError(f"unknown key {k!r}", len(key) - len(key.lstrip()) + 1, line=lineno)
        if k in seen:
            raise ParseError(f"duplicate key {k!r}", 1, line=lineno)
        seen[k] = (lineno, len(key) + 2, value)
    for k in ("n", "q", "gamma"):
        if k not in seen:
            raise ParseError(f"missing key {k!r}", 1, line=len(text.splitlines()) + 1)

    def field_error(k, msg, offset=0):
        lineno, col, _ = seen[k]
        return ParseError(msg, col + offset, line=lineno)

    names: List[str] = []
    if "indeterminates" in seen:
        _, col, value = seen["indeterminates"]
        for name in value.split():
            if not valid_indeterminate_name(name):
                raise field_error("indeterminates", f"invalid indeterminate name {name!r}", value.find(name))
            if name in names:
                raise field_error("indeterminates", f"duplicate indeterminate {name!r}", value.find(name))
            names.append(name)

    _, _, nval = seen["n"]
    try:
        n = int(nval.strip())
    except ValueError:
        raise field_error("n", f"n must be an integer, got {nval.strip()!r}") from None
    if n < 1:
        raise field_error("n", "n must be positive")

    def scalars(k: str, chunk: str, offset: int) -> List[Scalar]:
        out = []
        for piece in chunk.split(","):
            try:
                out.append(parse_scalar(piece, names))
            except ParseError as e:
                raise field_error(k, e.message, offset + e.pos - 1) from None
            except ScalarError as e:
                raise field_error(k, str(e), offset) from None
            offset += len(piece) + 1
        return out

    q = scalars("q", seen["q"][2], 0)
    if len(q) != n:
        raise field_error("q", f"q must have n={n} entries, got {len(q)}")
    rows = []
    offset = 0
    gtext = seen["gamma"][2]
    for chunk in gtext.split(";"):
        rows.append(scalars("gamma", chunk, offset))
        offset += len(chunk) + 1
    if len(rows) != n or any(len(r) != n for r in rows):
        raise field_error("gamma", "gamma must be n×n")
    p = AlgebraParams(n, tuple(q), tuple(tuple(r) for r in rows), tuple(names))
    if check:
        violations = validate(p)
        if violations:
            raise ValidationError(violations)
    return p


def format_spec(p: AlgebraParams) -> str:
    lines = [
        f"indeterminates: {' '.join(p.indeterminates)}".rstrip(),
        f"n: {p.n}",
        "q: " + ", ".join(c.to_str() for c in p.q),
        "gamma: " + " ; ".join(", ".join(c.to_str() for c in row) for row in p.gamma),
    ]
    return "\n".join(lines) + "\n"


# Genericity


@dataclass(frozen=True)
class GenericityResult:
    rank: Optional[int]
    generic: Optional[bool]
    reason: Optional[str] = None

    @property
    def decidable(self) -> bool:
        return self.rank is not None


def genericity_rank(p: AlgebraParams) -> GenericityResult:
    """Rank of the group generated by Q and gamma_ij (i < j), for Laurent-monomial parameters."""
    from .linalg import rank

    entries = [(f"q_{i}", p.qi(i)) for i in range(1, p.n + 1)]
    entries += [(f"gamma_{i}{j}", p.g(i, j)) for i in range(1, p.n + 1) for j in range(i + 1, p.n + 1)]
    vectors = []
    for label, s in entries:
        lm = s.laurent_monomial()
        if lm is None or lm[0] != 1:
            return GenericityResult(None, None, f"{label} is not a monomial with coefficient 1")
        vectors.append(lm[1])
    variables = sorted({v for e in vectors for v in e})
    matrix = [[Fraction(e.get(v, 0)) for v in variables] for e in vectors]
    r = rank(matrix)
    return GenericityResult(r, r == p.n * (p.n + 1) // 2)
