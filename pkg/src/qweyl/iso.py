"""Isomorphisms between multiparameter quantized Weyl algebras.

For non-root-of-unity q_i, two presentations are isomorphic exactly when
they have the same n and some sign vector eps relates their parameters by

    q'_i = q_i^{eps_i}
    gamma'_ij = gamma_ij          (eps_i, eps_j) = (+1, +1)
                gamma_ji          (-1, +1)
                q_i^-1 gamma_ji   (+1, -1)
                q_i gamma_ij      (-1, -1)

and every isomorphism is one of the maps phi_{mu,eps} built here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import span_coordinates
from .pbw import PbwPolynomial, filtration_degree, z_element
from .presentation import AlgebraParams, from_upper, validate
from .scalars import ONE, Scalar, ScalarLike

SignVector = Tuple[int, ...]


class IsoError(ValueError):
    pass


def format_eps(eps: Sequence[int]) -> str:
    return "(" + ",".join("+1" if e == 1 else "-1" for e in eps) + ")"


def parse_eps(text: str) -> SignVector:
    out = []
    for tok in text.strip().strip("()").split(","):
        tok = tok.strip()
        if tok in ("+1", "1", "+"):
            out.append(1)
        elif tok in ("-1", "-"):
            out.append(-1)
        else:
            raise ValueError(f"bad sign {tok!r}, expected +1 or -1")
    return tuple(out)


def _check_eps(eps: Sequence[int], n: int) -> SignVector:
    eps = tuple(eps)
    if len(eps) != n:
        raise IsoError(f"sign vector has length {len(eps)}, expected {n}")
    if any(e not in (1, -1) for e in eps):
        raise IsoError("sign vector entries must be +1 or -1")
    return eps


@dataclass(frozen=True)
class IsoDecision:
    isomorphic: bool
    eps: Optional[SignVector] = None
    reason: Optional[str] = None
    detail: Tuple[Tuple[str, int], ...] = ()

    def serialize(self) -> str:
        if self.isomorphic:
            return f"ISOMORPHIC eps={format_eps(self.eps)}"
        detail = ",".join(f"{k}={v}" for k, v in self.detail)
        return f"NOT-ISOMORPHIC reason={self.reason} detail={detail}"

    def to_json(self) -> dict:
        if self.isomorphic:
            return {"isomorphic": True, "eps": list(self.eps)}
        return {"isomorphic": False, "reason": self.reason, "detail": dict(self.detail)}


def expected_gamma(A: AlgebraParams, eps: Sequence[int], i: int, j: int) -> Scalar:
    """gamma'_ij (i < j) forced by eps."""
    ei, ej = eps[i - 1], eps[j - 1]
    if (ei, ej) == (1, 1):
        return A.g(i, j)
    if (ei, ej) == (-1, 1):
        return A.g(j, i)
    if (ei, ej) == (1, -1):
        return A.qi(i).inverse() * A.g(j, i)
    return A.qi(i) * A.g(i, j)


def condition_failure(A: AlgebraParams, B: AlgebraParams, eps: Sequence[int]) -> Optional[IsoDecision]:
    """The first condition violated by (A, B, eps), or None if all hold."""
    if A.n != B.n:
        return IsoDecision(False, reason="gk-dimension", detail=(("n", A.n), ("m", B.n)))
    for i in range(1, A.n + 1):
        if B.qi(i) != A.qi(i) ** eps[i - 1]:
            return IsoDecision(False, reason="q-condition", detail=(("i", i),))
    for i in range(1, A.n + 1):
        for j in range(i + 1, A.n + 1):
            if B.g(i, j) != expected_gamma(A, eps, i, j):
                return IsoDecision(False, reason="gamma-condition", detail=(("i", i), ("j", j)))
    return None


def satisfies_conditions(A: AlgebraParams, B: AlgebraParams, eps: Sequence[int]) -> bool:
    return condition_failure(A, B, eps) is None


def _require_valid(p: AlgebraParams, label: str) -> None:
    v = validate(p)
    if v:
        raise IsoError(f"presentation {label} is invalid: " + "; ".join(x.message for x in v))


def decide_iso(A: AlgebraParams, B: AlgebraParams) -> IsoDecision:
    """Decide whether A and B are isomorphic; the sign vector is unique when they are."""
    _require_valid(A, "A")
    _require_valid(B, "B")
    if A.n != B.n:
        return IsoDecision(False, reason="gk-dimension", detail=(("n", A.n), ("m", B.n)))
    eps = []
    for i in range(1, A.n + 1):
        # q_i = q_i^-1 would make q_i a root of unity, so at most one branch holds
        if B.qi(i) == A.qi(i):
            eps.append(1)
        elif B.qi(i) == A.qi(i).inverse():
            eps.append(-1)
        else:
            return IsoDecision(False, reason="q-condition", detail=(("i", i),))
    failure = condition_failure(A, B, eps)
    if failure is not None:
        return failure
    return IsoDecision(True, eps=tuple(eps))


def partner_presentation(A: AlgebraParams, eps: Sequence[int]) -> AlgebraParams:
    """The presentation B with A ~ B via eps."""
    eps = _check_eps(eps, A.n)
    q = [A.qi(i) ** eps[i - 1] for i in range(1, A.n + 1)]
    upper = {(i, j): expected_gamma(A, eps, i, j) for i in range(1, A.n + 1) for j in range(i + 1, A.n + 1)}
    return from_upper(A.n, q, upper, A.indeterminates)


def lambda_of(eps: Sequence[int], A: AlgebraParams) -> List[Scalar]:
    """lambda_i = q_i^{(eps_i - 1)/2} lambda_{i-1}, lambda_0 = 1."""
    eps = _check_eps(eps, A.n)
    out = []
    lam = ONE
    for i, e in enumerate(eps, 1):
        if e == -1:
            lam = lam * A.qi(i).inverse()
        out.append(lam)
    return out


@dataclass(frozen=True)
class IsoWitness:
    eps: SignVector
    mu: Tuple[Scalar, ...]
    lam: Tuple[Scalar, ...]

    @classmethod
    def make(cls, A: AlgebraParams, eps: Sequence[int], mu: Sequence[ScalarLike]) -> "IsoWitness":
        eps = _check_eps(eps, A.n)
        mu = tuple(Scalar.coerce(m) for m in mu)
        if len(mu) != A.n:
            raise IsoError(f"mu has length {len(mu)}, expected {A.n}")
        for i, m in enumerate(mu, 1):
            if m.is_zero():
                raise IsoError(f"mu_{i} is zero")
        return cls(eps, mu, tuple(lambda_of(eps, A)))


@dataclass
class Homomorphism:
    """Algebra map given by the images of x_1, y_1, ..., x_n, y_n."""

    source: AlgebraParams
    target: AlgebraParams
    images: Tuple[PbwPolynomial, ...]
    verified: bool = False

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != 2 * self.source.n:
            raise ValueError("need 2n generator images")
        for im in self.images:
            if im.params is not self.target and im.params != self.target:
                raise ValueError("image does not live in the target algebra")

    def image_x(self, i: int) -> PbwPolynomial:
        return self.images[2 * (i - 1)]

    def image_y(self, i: int) -> PbwPolynomial:
        return self.images[2 * (i - 1) + 1]

    def _slot_image(self, pos: int) -> PbwPolynomial:
        # PBW slot 2(i-1) is y_i, slot 2(i-1)+1 is x_i
        i = pos // 2 + 1
        return self.image_y(i) if pos % 2 == 0 else self.image_x(i)

    def apply(self, f: PbwPolynomial) -> PbwPolynomial:
        if f.params is not self.source and f.params != self.source:
            raise ValueError("element does not live in the source algebra")
        out = PbwPolynomial(self.target)
        powers: Dict[Tuple[int, int], PbwPolynomial] = {}
        for mono, c in f.terms.items():
            term = PbwPolynomial.const(self.target, c)
            for pos, e in enumerate(mono):
                if e:
                    key = (pos, e)
                    if key not in powers:
                        powers[key] = self._slot_image(pos) ** e
                    term = term * powers[key]
            out = out + term
        return out

    def __call__(self, f: PbwPolynomial) -> PbwPolynomial:
        return self.apply(f)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """``other`` after ``self``."""
        if other.source is not self.target and other.source != self.target:
            raise ValueError("maps are not composable")
        return Homomorphism(self.source, other.target, tuple(other.apply(im) for im in self.images))

    def is_identity(self) -> bool:
        if self.source != self.target:
            return False
        p = self.target
        return all(
            self.image_x(i) == PbwPolynomial.x(p, i) and self.image_y(i) == PbwPolynomial.y(p, i)
            for i in range(1, p.n + 1)
        )

    def lines(self) -> List[str]:
        out = []
        for i in range(1, self.source.n + 1):
            out.append(f"x{i} -> {self.image_x(i)}")
            out.append(f"y{i} -> {self.image_y(i)}")
        return out

    def to_json(self) -> dict:
        images = {}
        for i in range(1, self.source.n + 1):
            images[f"x{i}"] = str(self.image_x(i))
            images[f"y{i}"] = str(self.image_y(i))
        return {"images": images, "verified": self.verified}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and all(
            a == b for a, b in zip(self.images, other.images)
        )


def relation_residuals(h: Homomorphism) -> List[Tuple[str, PbwPolynomial]]:
    """Each defining relation of the source, as ``lhs - rhs`` evaluated on the images."""
    p = h.source
    T = h.target
    X, Y = h.image_x, h.image_y
    out = []
    for i in range(1, p.n + 1):
        for j in range(1, p.n + 1):
            out.append((f"rel1(i={i},j={j})", Y(i) * Y(j) - (Y(j) * Y(i)).scale(p.g(i, j))))
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            out.append((f"rel2(i={i},j={j})", X(i) * X(j) - (X(j) * X(i)).scale(p.qi(i) * p.g(i, j))))
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            out.append((f"rel3(i={i},j={j})", X(i) * Y(j) - (Y(j) * X(i)).scale(p.g(j, i))))
    for i in range(1, p.n + 1):
        for j in range(1, i):
            out.append((f"rel4(i={i},j={j})", X(i) * Y(j) - (Y(j) * X(i)).scale(p.qi(j) * p.g(j, i))))
    for j in range(1, p.n + 1):
        rhs = PbwPolynomial.const(T)
        for k in range(1, j):
            rhs = rhs + (Y(k) * X(k)).scale(p.qi(k) - 1)
        out.append((f"rel5(j={j})", X(j) * Y(j) - (Y(j) * X(j)).scale(p.qi(j)) - rhs))
    return out


def verify_hom(h: Homomorphism) -> List[str]:
    """Labels of the source relations the images violate; empty means h is a homomorphism."""
    bad = [label for label, r in relation_residuals(h) if not r.is_zero()]
    h.verified = not bad
    return bad


def build_iso(A: AlgebraParams, B: AlgebraParams, eps: Sequence[int], mu: Sequence[ScalarLike]) -> Homomorphism:
    """phi_{mu,eps}: x_i -> mu_i x'_i or mu_i y'_i, y_i -> lam_i/mu_i y'_i or -lam_i/mu_i x'_i."""
    w = IsoWitness.make(A, eps, mu)
    failure = condition_failure(A, B, w.eps)
    if failure is not None:
        raise IsoError(f"eps={format_eps(w.eps)} is not a witness: {failure.serialize()}")
    images = []
    for i in range(1, A.n + 1):
        m, lam = w.mu[i - 1], w.lam[i - 1]
        if w.eps[i - 1] == 1:
            images.append(PbwPolynomial.x(B, i).scale(m))
            images.append(PbwPolynomial.y(B, i).scale(lam / m))
        else:
            images.append(PbwPolynomial.y(B, i).scale(m))
            images.append(PbwPolynomial.x(B, i).scale(-lam / m))
    return Homomorphism(A, B, tuple(images))


def _single_term(f: PbwPolynomial):
    if len(f.terms) != 1:
        raise IsoError(f"image {f} is not a scaled generator")
    (mono, c), = f.terms.items()
    if sum(mono) != 1:
        raise IsoError(f"image {f} is not a scaled generator")
    return mono.index(1), c


def invert_iso(w: IsoWitness, A: AlgebraParams, B: AlgebraParams) -> Homomorphism:
    """The inverse of phi_{mu,eps}, found by solving each image equation for its generator."""
    phi = build_iso(A, B, w.eps, w.mu)
    inv: Dict[int, PbwPolynomial] = {}
    for i in range(1, A.n + 1):
        for src in (PbwPolynomial.x(A, i), PbwPolynomial.y(A, i)):
            # phi(src) = c * g'  =>  g' -> c^-1 * src
            slot, c = _single_term(phi.apply(src))
            inv[slot] = src.scale(c.inverse())
    if len(inv) != 2 * B.n:
        raise IsoError("generator images do not cover the target")
    images = []
    for i in range(1, B.n + 1):
        images.append(inv[2 * (i - 1) + 1])
        images.append(inv[2 * (i - 1)])
    return Homomorphism(B, A, tuple(images))


def automorphism(A: AlgebraParams, mu: Sequence[ScalarLike]) -> Homomorphism:
    """The scaling automorphism x_i -> mu_i x_i, y_i -> mu_i^-1 y_i."""
    return build_iso(A, A, (1,) * A.n, mu)


class LemmaOutcome(Enum):
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    CONCLUSION_HOLDS = "conclusion-holds"
    COUNTEREXAMPLE = "counterexample"


def _is_scaled(f: PbwPolynomial, slot: int) -> bool:
    if len(f.terms) != 1:
        return False
    (mono,) = f.terms
    return sum(mono) == 1 and mono[slot] == 1


def check_lemma_instance(a: PbwPolynomial, b: PbwPolynomial) -> LemmaOutcome:
    """Test one pair against the degree-two factorization lemma for the last index.

    Hypothesis: d(ab) = 2 and ab lies in the K-span of z_1, ..., z_n, where d
    counts x_n and y_n.  Conclusion: (a, b) is (mu x_n, nu y_n) or
    (mu y_n, nu x_n).
    """
    if a.is_scalar() or b.is_scalar():
        raise ValueError("lemma instances must be nonconstant")
    p = a.params
    ab = a * b
    if filtration_degree(ab) != 2:
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    zs = [z_element(k, p) for k in range(1, p.n + 1)]
    if span_coordinates(zs, ab) is None:
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    ys, xs = 2 * (p.n - 1), 2 * (p.n - 1) + 1
    if (_is_scaled(a, xs) and _is_scaled(b, ys)) or (_is_scaled(a, ys) and _is_scaled(b, xs)):
        return LemmaOutcome.CONCLUSION_HOLDS
    return LemmaOutcome.COUNTEREXAMPLE
