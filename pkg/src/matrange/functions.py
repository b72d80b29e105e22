"""The function model: exact polynomials plus two transcendental families
with fully known ramification data.

A totally ramified value (TRV) of f is a value a such that every root of
f(z) = a has multiplicity at least 2; an entire function has at most two,
a polynomial at most one. A non-constant entire function omits at most one
value, and omitting one rules TRVs out. The detector and the catalog
metadata enforce these bounds as hard invariants.

Catalog families:
  * sin family      f(z) = ((a-b)/2) sin(cz+d) + (a+b)/2, a != b, c != 0:
                    omits nothing, TRVs exactly {a, b}, every ramified
                    preimage has multiplicity exactly 2 (the second
                    derivative is nonzero where sin = +-1).
  * exp-poly family f(z) = v + P(z) e^(cz+d), P monic, c != 0:
                    if P = 1 it omits v and has no TRVs; otherwise v is a
                    TRV iff every zero of P is multiple, and the preimages
                    of v are exactly the zeros of P.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalInvariantError, ParseError, PreconditionError
from .polynomials import (
    Poly,
    RootWithMultiplicity,
    gaussian_rational_roots,
    gcd_monic,
    multiplicity_multiset,
    squarefree_decomposition,
    squarefree_part,
    critical_value_polynomial,
)
from .scalars import GaussianRational, Qi, parse_scalar, render_scalar

__all__ = [
    "EntireFunction",
    "polynomial_function",
    "sin_family",
    "exp_poly_family",
    "RamificationProfile",
    "TrvEntry",
    "TheoremCase",
    "PreimageKind",
    "PreimageInfo",
    "ramification_profile",
    "preimage_roots",
    "validate",
]


class TheoremCase(Enum):
    OMITS_VALUE = "I"
    NO_TRV = "II"
    ONE_TRV = "III"
    TWO_TRV = "IV"


@dataclass(frozen=True)
class TrvEntry:
    value: GaussianRational
    multiplicity_multiset: tuple  # sorted, every entry >= 2
    has_infinitely_many_preimages: bool


@dataclass(frozen=True)
class RamificationProfile:
    omitted_values: tuple
    trv_entries: tuple
    theorem_case: TheoremCase


@dataclass(frozen=True)
class EntireFunction:
    kind: str  # "polynomial" | "sin_family" | "exp_poly"
    poly: Poly | None = None  # polynomial P, or the P of the exp-poly family
    a: GaussianRational | None = None
    b: GaussianRational | None = None
    c: GaussianRational | None = None
    d: GaussianRational | None = None
    v: GaussianRational | None = None

    def render(self):
        if self.kind == "polynomial":
            return {"type": "polynomial", "coeffs": self.poly.render()}
        if self.kind == "sin_family":
            return {
                "type": "sin_family",
                "a": render_scalar(self.a),
                "b": render_scalar(self.b),
                "c": render_scalar(self.c),
                "d": render_scalar(self.d),
            }
        return {
            "type": "exp_poly",
            "v": render_scalar(self.v),
            "p_coeffs": self.poly.render(),
            "c": render_scalar(self.c),
            "d": render_scalar(self.d),
        }

    @staticmethod
    def parse(obj) -> "EntireFunction":
        if not isinstance(obj, dict) or "type" not in obj:
            raise ParseError('function JSON must carry a "type" field')
        kind = obj["type"]
        try:
            if kind == "polynomial":
                return polynomial_function(Poly.parse(obj["coeffs"]))
            if kind == "sin_family":
                return sin_family(*(parse_scalar(obj[k]) for k in ("a", "b", "c", "d")))
            if kind == "exp_poly":
                return exp_poly_family(
                    parse_scalar(obj["v"]),
                    Poly.parse(obj["p_coeffs"]),
                    parse_scalar(obj["c"]),
                    parse_scalar(obj["d"]),
                )
        except KeyError as e:
            raise ParseError(f"function spec missing field {e.args[0]!r}") from e
        raise ParseError(f"unknown function type {kind!r}")


def polynomial_function(p: Poly) -> EntireFunction:
    if p.degree < 1:
        raise PreconditionError("constant functions are excluded: need degree >= 1")
    return EntireFunction(kind="polynomial", poly=p)


def sin_family(a, b, c, d) -> EntireFunction:
    a, b, c, d = Qi(a), Qi(b), Qi(c), Qi(d)
    if a == b:
        raise PreconditionError("sin family needs a != b")
    if c.is_zero():
        raise PreconditionError("sin family needs c != 0")
    return EntireFunction(kind="sin_family", a=a, b=b, c=c, d=d)


def exp_poly_family(v, p: Poly, c, d) -> EntireFunction:
    v, c, d = Qi(v), Qi(c), Qi(d)
    if p.is_zero() or not p.monic() == p:
        raise PreconditionError("exp-poly family needs a monic P")
    if c.is_zero():
        raise PreconditionError("exp-poly family needs c != 0")
    return EntireFunction(kind="exp_poly", v=v, poly=p, c=c, d=d)


# -- TRV detection for polynomials ---------------------------------------------


def polynomial_trvs(p: Poly):
    """TRVs of a polynomial with Q(i) coefficients. Candidates are the Q(i)
    roots of the critical value polynomial; a candidate survives iff every
    root of P - a is multiple, tested exactly by s^2 | (P - a) with s the
    square-free part. The unique TRV of a Q(i) polynomial is itself fixed by
    every automorphism of C over Q(i), so searching Q(i) roots loses nothing."""
    if p.degree < 2:
        return []
    found = []
    for cand in gaussian_rational_roots(critical_value_polynomial(p)):
        shifted = p.shift(cand.root)
        s = squarefree_part(shifted)
        if (s * s).divides(shifted):
            found.append(
                TrvEntry(
                    cand.root,
                    tuple(multiplicity_multiset(shifted)),
                    has_infinitely_many_preimages=False,
                )
            )
    if len(found) > 1:
        raise InternalInvariantError(
            "a polynomial can have at most one totally ramified value; "
            f"detector reported {len(found)}"
        )
    return found


# -- profiles ------------------------------------------------------------------


def ramification_profile(f: EntireFunction) -> RamificationProfile:
    if f.kind == "polynomial":
        trvs = tuple(polynomial_trvs(f.poly))
        case = TheoremCase.ONE_TRV if trvs else TheoremCase.NO_TRV
        return RamificationProfile((), trvs, case)
    if f.kind == "sin_family":
        trvs = tuple(
            TrvEntry(value, (2,), has_infinitely_many_preimages=True)
            for value in sorted((f.a, f.b), key=lambda x: x.sort_key())
        )
        return RamificationProfile((), trvs, TheoremCase.TWO_TRV)
    # exp-poly family
    if f.poly.is_constant():
        return RamificationProfile((f.v,), (), TheoremCase.OMITS_VALUE)
    mults = multiplicity_multiset(f.poly)
    if min(mults) >= 2:
        trvs = (TrvEntry(f.v, tuple(mults), has_infinitely_many_preimages=False),)
        return RamificationProfile((), trvs, TheoremCase.ONE_TRV)
    return RamificationProfile((), (), TheoremCase.NO_TRV)


class PreimageKind(Enum):
    FINITE = "finite"
    INFINITELY_MANY_SIMPLE = "infinitely_many_simple"
    INFINITELY_MANY_ALL_MULTIPLICITY_2 = "infinitely_many_all_multiplicity_2"
    EMPTY = "empty"


@dataclass(frozen=True)
class PreimageInfo:
    kind: PreimageKind
    roots: tuple = ()  # RootWithMultiplicity, Q(i) roots only
    complete: bool = True  # all roots accounted for by the listed ones
    multiset: tuple = ()  # exact multiplicity multiset over C (finite kinds)


def preimage_roots(f: EntireFunction, value) -> PreimageInfo:
    """Structure of the solution set of f(z) = value."""
    value = Qi(value)
    if f.kind == "polynomial":
        shifted = f.poly.shift(value)
        roots = tuple(gaussian_rational_roots(shifted))
        mults = tuple(multiplicity_multiset(shifted))
        complete = sum(r.multiplicity for r in roots) == shifted.degree
        return PreimageInfo(PreimageKind.FINITE, roots, complete, mults)
    if f.kind == "sin_family":
        if value in (f.a, f.b):
            return PreimageInfo(PreimageKind.INFINITELY_MANY_ALL_MULTIPLICITY_2)
        return PreimageInfo(PreimageKind.INFINITELY_MANY_SIMPLE)
    # exp-poly family
    if value == f.v:
        if f.poly.is_constant():
            return PreimageInfo(PreimageKind.EMPTY)
        roots = tuple(gaussian_rational_roots(f.poly))
        mults = tuple(multiplicity_multiset(f.poly))
        complete = sum(r.multiplicity for r in roots) == f.poly.degree
        return PreimageInfo(PreimageKind.FINITE, roots, complete, mults)
    return PreimageInfo(PreimageKind.INFINITELY_MANY_SIMPLE)


def validate(f: EntireFunction) -> RamificationProfile:
    """Re-derive the profile and assert its structural bounds."""
    profile = ramification_profile(f)
    if len(profile.omitted_values) > 1:
        raise InternalInvariantError("more than one omitted value")
    if len(profile.trv_entries) > 2:
        raise InternalInvariantError("more than two totally ramified values")
    if profile.omitted_values and profile.trv_entries:
        raise InternalInvariantError("an omitting function cannot have TRVs")
    for entry in profile.trv_entries:
        if any(m < 2 for m in entry.multiplicity_multiset):
            raise InternalInvariantError("TRV multiplicity below 2")
    return profile
