"""Sparse multivariate polynomials over the rationals.

The variable list is fixed as (t, w, b, c, v, k, lam, mu, r, s); exponent
vectors are dense tuples over this list so serialized polynomials are
deterministic.  PolyFrac adds quotients with monomial denominators, which is
all the identity checker needs (denominators only ever involve s and mu).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

VARS = ("t", "w", "b", "c", "v", "k", "lam", "mu", "r", "s")
NVARS = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


class ArityMismatchError(ValueError):
    """Exponent vector does not match the fixed variable list."""


def _coerce_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational coefficient")


class MPoly:
    """Immutable sparse polynomial; no zero coefficients are stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != NVARS:
                raise ArityMismatchError(f"exponent vector {exp} has wrong arity")
            if coeff != 0:
                clean[tuple(exp)] = Fraction(coeff)
        self.terms = clean

    @staticmethod
    def zero() -> "MPoly":
        return MPoly()

    @staticmethod
    def const(c) -> "MPoly":
        c = _coerce_scalar(c)
        return MPoly({_ZERO_EXP: c}) if c else MPoly()

    @staticmethod
    def var(name: str) -> "MPoly":
        exp = [0] * NVARS
        exp[_VAR_INDEX[name]] = 1
        return MPoly({tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(coeff, exponents: Mapping[str, int]) -> "MPoly":
        exp = [0] * NVARS
        for name, e in exponents.items():
            exp[_VAR_INDEX[name]] = e
        return MPoly({tuple(exp): _coerce_scalar(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_ZERO_EXP}

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + coeff
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other):
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation / display ------------------------------------------------

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at rational values for every variable that occurs."""
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exp):
                if e:
                    term *= Fraction(point[VARS[i]]) ** e
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            factors = [str(coeff)]
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(VARS[i])
                elif e > 1:
                    factors.append(f"{VARS[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly<{self}>"


@dataclass(frozen=True)
class PolyFrac:
    """Quotient num / (coeff * monomial); the denominator is always a single
    monomial, kept reduced against the numerator's common monomial factor."""

    num: MPoly
    den_coeff: Fraction
    den_exp: tuple

    @staticmethod
    def from_poly(p) -> "PolyFrac":
        p = MPoly._coerce(p)
        if p is NotImplemented:
            raise TypeError("expected polynomial or rational")
        return PolyFrac(p, Fraction(1), _ZERO_EXP)

    @staticmethod
    def var(name: str) -> "PolyFrac":
        return PolyFrac.from_poly(MPoly.var(name))

    def _reduced(self) -> "PolyFrac":
        if self.num.is_zero():
            return PolyFrac(MPoly.zero(), Fraction(1), _ZERO_EXP)
        common = list(self.den_exp)
        for exp in self.num.terms:
            common = [min(c, e) for c, e in zip(common, exp)]
            if not any(common):
                break
        if not any(common):
            return self
        num = MPoly(
            {
                tuple(e - c for e, c in zip(exp, common)): coeff
                for exp, coeff in self.num.terms.items()
            }
        )
        den = tuple(e - c for e, c in zip(self.den_exp, common))
        return PolyFrac(num, self.den_coeff, den)

    @property
    def den(self) -> MPoly:
        return MPoly({self.den_exp: self.den_coeff})

    def is_polynomial(self) -> bool:
        return not any(self.den_exp)

    def as_poly(self) -> MPoly:
        reduced = self._reduced()
        if not reduced.is_polynomial():
            raise ValueError(f"residual denominator {reduced.den}")
        return reduced.num * (1 / reduced.den_coeff)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- field operations ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, PolyFrac):
            return x
        if isinstance(x, (MPoly, int, Fraction)):
            return PolyFrac.from_poly(x)
        return NotImplemented

    def __add__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = self.num * MPoly({other.den_exp: other.den_coeff}) + other.num * MPoly(
            {self.den_exp: self.den_coeff}
        )
        den_exp = tuple(a + b for a, b in zip(self.den_exp, other.den_exp))
        return PolyFrac(num, self.den_coeff * other.den_coeff, den_exp)._reduced()

    __radd__ = __add__

    def __neg__(self):
        return PolyFrac(-self.num, self.den_coeff, self.den_exp)

    def __sub__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den_exp = tuple(a + b for a, b in zip(self.den_exp, other.den_exp))
        return PolyFrac(
            self.num * other.num, self.den_coeff * other.den_coeff, den_exp
        )._reduced()

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = PolyFrac.from_poly(1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if len(other.num.terms) != 1:
            raise ValueError("PolyFrac division requires a monomial divisor")
        ((m_exp, m_coeff),) = other.num.terms.items()
        num = self.num * MPoly({other.den_exp: other.den_coeff})
        den_exp = tuple(a + b for a, b in zip(self.den_exp, m_exp))
        return PolyFrac(num, self.den_coeff * m_coeff, den_exp)._reduced()

    def __rtruediv__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = PolyFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        reduced = self._reduced()
        return hash((reduced.num, reduced.den_coeff, reduced.den_exp))
