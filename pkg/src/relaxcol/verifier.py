"""Algebraic verification of colorings.

A map f: V -> P is an (s)-coloring of K exactly when

    c(V) = ∏_p c_≤s(f⁻¹p)

holds in the Stanley–Reisner ring of K.  This module evaluates both sides
as normal forms and packages them into a :class:`Certificate`.  It shares
no code with the combinatorial check in :mod:`relaxcol.coloring`, so
comparing the two is a genuine cross-check.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .asc import SimplicialComplex
from .coloring import Coloring, is_coloring
from .errors import ContextMismatchError, InvalidWitnessError, InvariantViolation
from .polyring import Polynomial, SRContext, c_leq, parse_polynomial


@dataclass
class Certificate:
    """Witness for (or against) the Stanley–Reisner identity.

    Colors are one-based in every serialized field.
    """

    complex: str
    s: int
    coloring: list[int]
    verdict: bool
    lhs: str
    rhs: str
    factors: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "complex": self.complex,
            "s": self.s,
            "coloring": list(self.coloring),
            "verdict": self.verdict,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "factors": [{"color": f["color"], "poly": f["poly"]} for f in self.factors],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            complex=str(data["complex"]),
            s=int(data["s"]),
            coloring=[int(c) for c in data["coloring"]],
            verdict=bool(data["verdict"]),
            lhs=str(data["lhs"]),
            rhs=str(data["rhs"]),
            factors=[{"color": int(f["color"]), "poly": str(f["poly"])} for f in data["factors"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def recheck(self, K: SimplicialComplex) -> bool:
        """Re-derive the identity from the stored polynomials.

        Parses every stored normal form, checks the left side is c(V),
        that the factors multiply to the right side, that each factor is the
        truncated class of its fiber, and that the verdict matches.
        """
        ctx = SRContext(K)
        f = Coloring.from_one_based(self.coloring, len(self.factors) or None)
        if len(f) != K.m:
            raise ContextMismatchError("certificate coloring does not fit the complex")
        lhs = parse_polynomial(self.lhs, K.vertices)
        rhs = parse_polynomial(self.rhs, K.vertices)
        if lhs != ctx.total_chern():
            return False
        factors = [parse_polynomial(fac["poly"], K.vertices) for fac in self.factors]
        for fac, poly in zip(self.factors, factors):
            expected = ctx.normal_form(c_leq(K.vertices, f.fiber(fac["color"] - 1), self.s))
            if poly != expected or poly.degree() > self.s:
                return False
        if ctx.product(factors) != rhs:
            return False
        return self.verdict == (lhs == rhs)


def _certificate(K, f, s, ctx, complex_id) -> Certificate:
    if len(f) != K.m:
        raise ContextMismatchError(f"coloring has {len(f)} entries but the complex has {K.m} vertices")
    lhs = ctx.total_chern()
    factors = [ctx.normal_form(c_leq(K.vertices, fiber, s)) for fiber in f.fibers()]
    rhs = ctx.product(factors)
    return Certificate(
        complex=complex_id or K.digest(),
        s=s,
        coloring=f.one_based(),
        verdict=lhs == rhs,
        lhs=lhs.to_text(),
        rhs=rhs.to_text(),
        factors=[{"color": p + 1, "poly": fac.to_text()} for p, fac in enumerate(factors)],
    )


def algebraic_verdict(K: SimplicialComplex, f: Coloring, s: int, ctx: SRContext | None = None, lhs: Polynomial | None = None) -> bool:
    """Just the yes/no of the identity, reusing ``ctx`` and c(V) when given."""
    ctx = ctx or SRContext(K)
    if lhs is None:
        lhs = ctx.total_chern()
    rhs = Polynomial.constant(K.vertices, 1)
    for fiber in f.fibers():
        rhs = ctx.mul(rhs, c_leq(K.vertices, fiber, s))
    return lhs == rhs


def verify_coloring_algebraically(K: SimplicialComplex, f: Coloring, s: int, complex_id: str | None = None) -> Certificate:
    if s < 1:
        raise ValueError("s must be >= 1")
    return _certificate(K, f, s, SRContext(K), complex_id)


def verify_coloring_s1(K: SimplicialComplex, f: Coloring, complex_id: str | None = None) -> Certificate:
    """The s = 1 case: c(V) against ∏_p (1 + Σ f⁻¹p)."""
    return _certificate(K, f, 1, SRContext(K), complex_id)


def factorization_certificate(K: SimplicialComplex, f: Coloring, s: int, complex_id: str | None = None) -> Certificate:
    """Factors c_p of degree <= s with ∏(1+v) = ∏ c_p in the Stanley–Reisner ring."""
    if not is_coloring(K, f, s):
        raise InvalidWitnessError(f"the given map is not an s={s} coloring")
    cert = _certificate(K, f, s, SRContext(K), complex_id)
    if not cert.verdict:
        raise InvariantViolation(f"valid coloring {cert.coloring} failed the ring identity on {cert.complex}")
    return cert


@dataclass
class CrossCheckReport:
    complex: str
    s: int
    palette_size: int
    trials: int
    colorings: int

    def __str__(self):
        return (f"{self.complex} s={self.s} r={self.palette_size}: "
                f"{self.trials} maps, {self.colorings} colorings, 0 disagreements")


def _compare(K, s, maps, r, ctx, complex_id) -> CrossCheckReport:
    lhs = ctx.total_chern()
    trials = hits = 0
    for a in maps:
        f = Coloring(tuple(a), r)
        comb = is_coloring(K, f, s)
        alg = algebraic_verdict(K, f, s, ctx, lhs)
        if comb != alg:
            raise InvariantViolation(
                f"disagreement on {complex_id}: s={s} coloring={f.one_based()} "
                f"combinatorial={comb} algebraic={alg} facets={K.facet_labels()}"
            )
        trials += 1
        hits += comb
    return CrossCheckReport(complex_id, s, r, trials, hits)


def cross_check(K: SimplicialComplex, s: int, trials: int, seed: int = 0, palette_size: int = 3, complex_id: str | None = None) -> CrossCheckReport:
    """Random maps V -> {0..r-1}; both verdicts must agree on every one."""
    rng = random.Random(seed)
    maps = ([rng.randrange(palette_size) for _ in range(K.m)] for _ in range(trials))
    return _compare(K, s, maps, palette_size, SRContext(K), complex_id or K.digest())


def exhaustive_cross_check(K: SimplicialComplex, s: int, palette_size: int = 3, complex_id: str | None = None) -> CrossCheckReport:
    """Every map V -> {0..r-1}; both verdicts must agree on every one."""
    maps = itertools.product(range(palette_size), repeat=K.m)
    return _compare(K, s, maps, palette_size, SRContext(K), complex_id or K.digest())
