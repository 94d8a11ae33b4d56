"""Parameter tuples, spectra and feasibility checks for strongly regular graphs."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .quadext import QuadExt


class InfeasibleParamsError(ValueError):
    """Parameter tuple cannot belong to any strongly regular graph."""


class DegenerateParamsError(ValueError):
    """Operation undefined for disconnected or complete-multipartite parameters."""


class SrgType(enum.Enum):
    TYPE_I_ONLY = "I"
    TYPE_II_ONLY = "II"
    BOTH = "I+II"


class FeasibilityLevel(enum.IntEnum):
    """Cumulative feasibility filters; each level implies all previous ones."""

    COUNTING = 1
    INTEGRALITY = 2
    KREIN = 3
    ABSOLUTE_BOUND = 4


@dataclass(frozen=True)
class EdgeRegularParams:
    """(v, k, lam): v vertices, valency k, lam common neighbours per edge."""

    v: int
    k: int
    lam: int

    def validate(self) -> None:
        if self.v < 2:
            raise InfeasibleParamsError(f"v={self.v} < 2")
        if not 0 < self.k <= self.v - 1:
            raise InfeasibleParamsError(f"k={self.k} out of range for v={self.v}")
        if not 0 <= self.lam <= self.k - 1:
            raise InfeasibleParamsError(f"lambda={self.lam} out of range for k={self.k}")


@dataclass(frozen=True)
class SrgParams:
    """(v, k, lam, mu) parameter tuple of a strongly regular graph.

    The record itself is permissive (feasibility checks accept arbitrary
    integer tuples); operations with a validity precondition call validate().
    """

    v: int
    k: int
    lam: int
    mu: int

    def validate(self) -> None:
        if self.v < 2:
            raise InfeasibleParamsError(f"v={self.v} < 2")
        if not 0 < self.k <= self.v - 2:
            raise InfeasibleParamsError(f"k={self.k} out of range for v={self.v}")
        if not 0 <= self.lam <= self.k - 1:
            raise InfeasibleParamsError(f"lambda={self.lam} out of range for k={self.k}")
        if not 0 <= self.mu <= self.k:
            raise InfeasibleParamsError(f"mu={self.mu} out of range for k={self.k}")
        lhs = (self.v - self.k - 1) * self.mu
        rhs = self.k * (self.k - self.lam - 1)
        if lhs != rhs:
            raise InfeasibleParamsError(
                f"counting identity fails: (v-k-1)mu={lhs} != k(k-lambda-1)={rhs}"
            )

    @property
    def edge_regular(self) -> EdgeRegularParams:
        return EdgeRegularParams(self.v, self.k, self.lam)

    def is_connected(self) -> bool:
        return self.mu > 0

    def is_coconnected(self) -> bool:
        return self.v - 2 * self.k + self.lam > 0

    def to_json_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}


@dataclass(frozen=True)
class Spectrum:
    """Exact eigenvalue data of a strongly regular graph.

    r >= s are the restricted eigenvalues with multiplicities f, g; for
    conference parameters with irrational eigenvalues f = g = (v-1)/2.
    """

    r: QuadExt
    s: QuadExt
    f: int
    g: int
    type_tag: SrgType


def parse_params_string(text: str) -> SrgParams | EdgeRegularParams:
    """Parse "v,k,l,m" or "v k l" (comma or whitespace separated)."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if len(parts) not in (3, 4):
        raise ValueError(f"expected 3 or 4 integers, got {text!r}")
    nums = [int(p) for p in parts]
    if len(nums) == 3:
        return EdgeRegularParams(*nums)
    return SrgParams(*nums)


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _is_conference(v: int, k: int, lam: int, mu: int) -> bool:
    return 2 * k == v - 1 and 4 * lam == v - 5 and 4 * mu == v - 1


def is_sum_of_two_squares(n: int) -> bool:
    """True iff n = a^2 + b^2: every prime factor congruent to 3 mod 4 must
    occur to an even power."""
    if n < 0:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if p % 4 == 3 and e % 2:
                return False
        p += 1 if p == 2 else 2
    return n % 4 != 3


def classify(p: SrgParams) -> SrgType:
    """Type I: conference parameter conditions; type II: integer eigenvalues."""
    p.validate()
    conf = _is_conference(p.v, p.k, p.lam, p.mu)
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    square = _is_perfect_square(disc)
    if conf and square:
        return SrgType.BOTH
    if conf:
        return SrgType.TYPE_I_ONLY
    if square:
        return SrgType.TYPE_II_ONLY
    raise InfeasibleParamsError(
        f"{p} is neither conference nor has integer eigenvalues"
    )


def spectrum(p: SrgParams) -> Spectrum:
    """Exact r >= s with r+s = lam-mu and rs = mu-k, plus multiplicities.

    r, s are the roots of x^2 - (lam-mu)x - (k-mu).  Multiplicities come from
    the trace identities f,g = ((v-1) -/+ (2k+(v-1)(lam-mu))/(r-s))/2 when the
    eigenvalues are rational, and f = g = (v-1)/2 in the conference case.
    """
    p.validate()
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc < 0:
        raise InfeasibleParamsError(f"negative eigenvalue discriminant {disc}")
    tag = classify(p)
    half = Fraction(1, 2)
    root = QuadExt.sqrt(disc)
    r = (QuadExt.make(p.lam - p.mu) + root) * half
    s = (QuadExt.make(p.lam - p.mu) - root) * half
    if not root.is_rational:
        # conference case with irrational eigenvalues
        if (p.v - 1) % 2:
            raise InfeasibleParamsError(
                f"irrational eigenvalues need v odd, got v={p.v}"
            )
        f = g = (p.v - 1) // 2
    else:
        diff = root.as_fraction()  # r - s
        if diff == 0:
            raise InfeasibleParamsError("repeated restricted eigenvalue")
        numer = 2 * p.k + (p.v - 1) * (p.lam - p.mu)
        shift = Fraction(numer) / diff
        f2 = Fraction(p.v - 1) - shift
        g2 = Fraction(p.v - 1) + shift
        f = f2 / 2
        g = g2 / 2
        if f.denominator != 1 or g.denominator != 1 or f < 0 or g < 0:
            raise InfeasibleParamsError(
                f"non-integral or negative multiplicities f={f}, g={g}"
            )
        f, g = int(f), int(g)
    return Spectrum(r=r, s=s, f=f, g=g, type_tag=tag)


def complement(p: SrgParams) -> SrgParams:
    """Complement parameters (v, v-k-1, v-2k+mu-2, v-2k+lam).

    Requires connected and co-connected input; the complement spectrum
    satisfies r_bar = -s-1 and s_bar = -r-1.
    """
    p.validate()
    if p.mu == 0:
        raise DegenerateParamsError(f"{p} is disconnected (mu=0)")
    if p.v - 2 * p.k + p.lam == 0:
        raise DegenerateParamsError(f"{p} is complete multipartite (v-2k+lambda=0)")
    return SrgParams(p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lam)


def params_bounds_check(p: SrgParams) -> tuple[int, int]:
    """Return the slacks (v-2k+lambda, k-lambda-1).

    Zero first slack means complete multipartite; zero second slack means the
    complement is complete multipartite (a disjoint union of cliques).
    """
    p.validate()
    return p.v - 2 * p.k + p.lam, p.k - p.lam - 1


def is_feasible(p: SrgParams, level: FeasibilityLevel) -> tuple[bool, Optional[str]]:
    """Check cumulative feasibility constraints; returns (ok, failing constraint).

    Accepts arbitrary integer tuples.  COUNTING covers the basic counting
    identity and parameter ranges; INTEGRALITY the eigenvalue multiplicities
    (or the conference conditions); KREIN the two Krein inequalities evaluated
    exactly; ABSOLUTE_BOUND the absolute bound v <= f(f+3)/2, v <= g(g+3)/2.
    """
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    # counting
    if v < 2:
        return False, "v>=2"
    if not 0 < k <= v - 2:
        return False, "0<k<=v-2"
    if not 0 <= lam <= k - 1:
        return False, "0<=lambda<=k-1"
    if not 0 <= mu <= k:
        return False, "0<=mu<=k"
    if (v - k - 1) * mu != k * (k - lam - 1):
        return False, "counting identity"
    if v - 2 * k + lam < 0:
        return False, "v-2k+lambda>=0"
    if level < FeasibilityLevel.INTEGRALITY:
        return True, None
    # integrality
    conf = _is_conference(v, k, lam, mu)
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc < 0:
        return False, "nonnegative discriminant"
    t = isqrt(disc)
    square = t * t == disc
    if square:
        if (lam - mu + t) % 2:
            return False, "integer eigenvalues"
        if t == 0:
            return False, "distinct restricted eigenvalues"
        numer = 2 * k + (v - 1) * (lam - mu)
        if numer % t:
            if not conf:
                return False, "integral multiplicities"
        else:
            f2 = (v - 1) - numer // t
            g2 = (v - 1) + numer // t
            if f2 % 2 or f2 < 0 or g2 < 0:
                if not conf:
                    return False, "integral multiplicities"
    elif not conf:
        return False, "conference or perfect-square discriminant"
    if conf and not is_sum_of_two_squares(v):
        # a conference graph requires v to be a sum of two squares
        return False, "conference sum of two squares"
    if level < FeasibilityLevel.KREIN:
        return True, None
    if mu == 0 or v - 2 * k + lam == 0:
        # Krein and absolute-bound conditions apply to primitive parameter
        # tuples only; disjoint unions of cliques and complete multipartite
        # graphs (and their complements) are exempt
        return True, None
    spec = spectrum(p)
    r, s = spec.r, spec.s
    # Krein conditions, exact
    lhs1 = (r + 1) * (k + r + 2 * r * s)
    rhs1 = (k + r) * (s + 1) * (s + 1)
    if (lhs1 - rhs1).sign() > 0:
        return False, "Krein 1"
    lhs2 = (s + 1) * (k + s + 2 * r * s)
    rhs2 = (k + s) * (r + 1) * (r + 1)
    if (lhs2 - rhs2).sign() > 0:
        return False, "Krein 2"
    if level < FeasibilityLevel.ABSOLUTE_BOUND:
        return True, None
    if 2 * v > spec.f * (spec.f + 3):
        return False, "absolute bound (f)"
    if 2 * v > spec.g * (spec.g + 3):
        return False, "absolute bound (g)"
    return True, None
