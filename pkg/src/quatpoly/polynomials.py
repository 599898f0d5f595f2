"""Polynomials with quaternion coefficients and a central variable.

Coefficients sit on the left of powers of x and x commutes with every
coefficient, so multiplication follows (p x^i)(q x^j) = (p q) x^{i+j}.
The ring has no unique factorization, evaluation is not a ring
homomorphism, and only division by the *right* works termwise; the
functions here implement the right-sided toolkit: division with
remainder, greatest common right divisors, right evaluation, and the
norm-like companion polynomial P * conj(P) with central coefficients.

:class:`CentralPoly` models the commutative subring F[x] of central
(rational) coefficients, which is where companion polynomials and
minimal polynomials of conjugacy classes live.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .algebra import (
    AlgebraParams,
    CentralClass,
    ConjClass,
    Quaternion,
    SphereClass,
    rational,
)
from .errors import InvariantViolation, PreconditionError

#: Degree of the zero polynomial; compares below every integer degree.
MINUS_INFINITY = float("-inf")

_Scalar = Union[int, Fraction]


def _format_terms(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _x_part(degree: int) -> str:
    if degree == 0:
        return ""
    return "x" if degree == 1 else f"x^{degree}"


class QPoly:
    """An immutable polynomial with quaternion coefficients.

    Coefficients are stored constant-first; trailing zeros are trimmed
    on construction so equal polynomials compare equal.
    """

    __slots__ = ("algebra", "_coeffs")

    def __init__(self, algebra: AlgebraParams, coeffs: Iterable = ()):
        items = [self._coerce_coeff(algebra, c) for c in coeffs]
        while items and items[-1].is_zero:
            items.pop()
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "_coeffs", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def _coerce_coeff(algebra: AlgebraParams, value) -> Quaternion:
        if isinstance(value, Quaternion):
            if value.algebra != algebra:
                raise PreconditionError(
                    f"coefficient algebra {value.algebra!r} does not match {algebra!r}"
                )
            return value
        if isinstance(value, (int, Fraction)):
            return algebra.scalar(value)
        raise PreconditionError(f"cannot use {value!r} as a quaternion coefficient")

    # -- constructors ------------------------------------------------------

    @classmethod
    def x(cls, algebra: AlgebraParams) -> "QPoly":
        return cls(algebra, (0, 1))

    @classmethod
    def constant(cls, value: Quaternion) -> "QPoly":
        return cls(value.algebra, (value,))

    @classmethod
    def monomial(cls, coeff: Quaternion, power: int) -> "QPoly":
        if power < 0:
            raise PreconditionError("monomial power must be nonnegative")
        return cls(coeff.algebra, (0,) * power + (coeff,))

    # -- basic structure ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Quaternion, ...]:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self.leading == 1

    @property
    def leading(self) -> Quaternion:
        if not self._coeffs:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, power: int) -> Quaternion:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return self.algebra.zero

    def _check_same_ring(self, other: "QPoly"):
        if other.algebra != self.algebra:
            raise PreconditionError(
                f"mixed algebras: {self.algebra!r} vs {other.algebra!r}"
            )

    # -- ring operations -----------------------------------------------------

    def _coerce_operand(self, other) -> "QPoly | None":
        if isinstance(other, QPoly):
            self._check_same_ring(other)
            return other
        if isinstance(other, (Quaternion, int, Fraction)):
            return QPoly(self.algebra, (other,))
        return None

    def __add__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        n = max(len(self._coeffs), len(p._coeffs))
        return QPoly(
            self.algebra,
            (self.coefficient(m) + p.coefficient(m) for m in range(n)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        return p - self

    def __neg__(self):
        return QPoly(self.algebra, (-c for c in self._coeffs))

    def __mul__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        if self.is_zero or p.is_zero:
            return QPoly(self.algebra)
        out = [self.algebra.zero] * (len(self._coeffs) + len(p._coeffs) - 1)
        for m, cm in enumerate(self._coeffs):
            if cm.is_zero:
                continue
            for n, cn in enumerate(p._coeffs):
                out[m + n] = out[m + n] + cm * cn
        return QPoly(self.algebra, out)

    def __rmul__(self, other):
        # Only constants land here; order matters, so multiply on the left.
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        return p * self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise PreconditionError("polynomial powers must be nonnegative")
        result = QPoly(self.algebra, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return right_divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.algebra == other.algebra and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.algebra, self._coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- polynomial-specific operations ---------------------------------------

    def evaluate(self, point) -> Quaternion:
        """Right evaluation: powers of the point stand to the right of
        the coefficients, so P(q) = sum a_m q^m via a right-sided Horner
        scheme.  This is the evaluation for which the remainder theorem
        P(q) = P mod (x - q) holds."""
        q = QPoly._coerce_coeff(self.algebra, point) if not isinstance(point, Quaternion) else point
        if q.algebra != self.algebra:
            raise PreconditionError("evaluation point from a different algebra")
        if self.is_zero:
            return self.algebra.zero
        acc = self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            acc = acc * q + c
        return acc

    def monic(self) -> "QPoly":
        """Left-normalize by the inverse of the leading coefficient."""
        lead = self.leading
        if lead == 1:
            return self
        return lead.inverse() * self

    def conjugate_coeffs(self) -> "QPoly":
        """Apply quaternion conjugation to every coefficient."""
        return QPoly(self.algebra, (c.conjugate() for c in self._coeffs))

    def companion(self) -> "CentralPoly":
        """The central polynomial P * conj(P), of degree 2 deg P.

        Its coefficients are invariant under coefficient conjugation,
        hence central.  The minimal polynomial of every conjugacy class
        containing a root of P divides the companion, which is what
        makes it the root-finding workhorse.
        """
        prod = self * self.conjugate_coeffs()
        coeffs = []
        for c in prod.coeffs:
            if not c.is_central:
                raise InvariantViolation(
                    f"companion coefficient {c} is not central"
                )
            coeffs.append(c.w)
        return CentralPoly(coeffs)

    def coefficients_central(self) -> bool:
        return all(c.is_central for c in self._coeffs)

    def __str__(self) -> str:
        parts: list[tuple[str, str]] = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            q = self._coeffs[d]
            if q.is_zero:
                continue
            xp = _x_part(d)
            comps = [(v, u) for v, u in zip(q.coords(), ("", "i", "j", "k")) if v != 0]
            if len(comps) == 1:
                value, unit = comps[0]
                sign = "-" if value < 0 else "+"
                mag = abs(value)
                if unit:
                    coeff_text = ("" if mag == 1 else str(mag)) + unit
                else:
                    coeff_text = "" if (d > 0 and mag == 1) else str(mag)
                body = coeff_text + (" " if coeff_text and xp else "") + xp
            else:
                if all(v < 0 for v, _ in comps):
                    sign = "-"
                    q = -q
                else:
                    sign = "+"
                body = f"({q})" + (f" {xp}" if xp else "")
            parts.append((sign, body))
        return _format_terms(parts)

    def __repr__(self) -> str:
        return f"QPoly({self})"


class CentralPoly:
    """A polynomial with rational (central) coefficients, constant-first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        items = [rational(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "_coeffs", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("CentralPoly is immutable")

    @classmethod
    def x(cls) -> "CentralPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff, power: int) -> "CentralPoly":
        if power < 0:
            raise PreconditionError("monomial power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def _coerce_operand(self, other) -> "CentralPoly | None":
        if isinstance(other, CentralPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return CentralPoly((other,))
        return None

    def __add__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        n = max(len(self._coeffs), len(p._coeffs))
        return CentralPoly(self.coefficient(m) + p.coefficient(m) for m in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        return p - self

    def __neg__(self):
        return CentralPoly(-c for c in self._coeffs)

    def __mul__(self, other):
        p = self._coerce_operand(other)
        if p is None:
            return NotImplemented
        if self.is_zero or p.is_zero:
            return CentralPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(p._coeffs) - 1)
        for m, cm in enumerate(self._coeffs):
            if cm == 0:
                continue
            for n, cn in enumerate(p._coeffs):
                out[m + n] += cm * cn
        return CentralPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise PreconditionError("polynomial powers must be nonnegative")
        result = CentralPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not isinstance(other, CentralPoly):
            return NotImplemented
        if other.is_zero:
            raise PreconditionError("division by the zero polynomial")
        quot = [Fraction(0)] * max(0, len(self._coeffs) - len(other._coeffs) + 1)
        rem = list(self._coeffs)
        dlead = other.leading
        dd = len(other._coeffs) - 1
        while len(rem) - 1 >= dd and rem:
            t = rem[-1] / dlead
            shift = len(rem) - 1 - dd
            quot[shift] = t
            for n, cn in enumerate(other._coeffs):
                rem[shift + n] -= t * cn
            while rem and rem[-1] == 0:
                rem.pop()
        return CentralPoly(quot), CentralPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "CentralPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def evaluate(self, point):
        """Horner evaluation; the point may be rational or a quaternion."""
        if isinstance(point, Quaternion):
            return self.lift(point.algebra).evaluate(point)
        value = rational(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def monic(self) -> "CentralPoly":
        lead = self.leading
        if lead == 1:
            return self
        return CentralPoly(c / lead for c in self._coeffs)

    def derivative(self) -> "CentralPoly":
        return CentralPoly(m * c for m, c in enumerate(self._coeffs) if m > 0)

    def squarefree_part(self) -> "CentralPoly":
        """The monic product of the distinct irreducible factors.

        Dividing out gcd(P, P') collapses every repeated factor to
        multiplicity one; root finding on the result stays well
        conditioned where the original clusters badly.
        """
        if self.is_zero:
            raise PreconditionError("the zero polynomial has no square-free part")
        deriv = self.derivative()
        if deriv.is_zero:
            return CentralPoly((1,))
        return (self // central_gcd(self, deriv)).monic()

    def lift(self, algebra: AlgebraParams) -> QPoly:
        """Embed into the quaternion polynomial ring over ``algebra``."""
        return QPoly(algebra, self._coeffs)

    def __str__(self) -> str:
        parts: list[tuple[str, str]] = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            value = self._coeffs[d]
            if value == 0:
                continue
            xp = _x_part(d)
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            coeff_text = "" if (d > 0 and mag == 1) else str(mag)
            parts.append((sign, coeff_text + (" " if coeff_text and xp else "") + xp))
        return _format_terms(parts)

    def __repr__(self) -> str:
        return f"CentralPoly({self})"


# -- free functions ---------------------------------------------------------


def right_divrem(dividend: QPoly, divisor: QPoly) -> tuple[QPoly, QPoly]:
    """Right division with remainder: dividend = quotient * divisor + rem.

    The remainder has degree strictly below the divisor's.  The divisor
    only needs an invertible leading coefficient, so in a division
    algebra any nonzero divisor works.
    """
    dividend._check_same_ring(divisor)
    if divisor.is_zero:
        raise PreconditionError("division by the zero polynomial")
    if dividend.is_zero or dividend.degree < divisor.degree:
        return QPoly(dividend.algebra), dividend
    lead_inv = divisor.leading.inverse()
    q_coeffs = [dividend.algebra.zero] * (dividend.degree - divisor.degree + 1)
    rem = dividend
    while not rem.is_zero and rem.degree >= divisor.degree:
        shift = rem.degree - divisor.degree
        t = rem.leading * lead_inv
        q_coeffs[shift] = t
        rem = rem - QPoly.monomial(t, shift) * divisor
    return QPoly(dividend.algebra, q_coeffs), rem


def eval_right(poly: QPoly, point) -> Quaternion:
    """Right evaluation, sum of a_m q^m; see :meth:`QPoly.evaluate`."""
    return poly.evaluate(point)


def eval_product(left: QPoly, right: QPoly, point) -> Quaternion:
    """Evaluate (left * right) at a point without forming the product.

    Evaluation is not multiplicative.  Writing h = right(q): if h = 0
    the product vanishes at q; otherwise

        (left * right)(q) = left(h q h^{-1}) * h,

    so the left factor is evaluated at a conjugate of the point.
    """
    left._check_same_ring(right)
    h = right.evaluate(point)
    if h.is_zero:
        return left.algebra.zero
    q = QPoly._coerce_coeff(left.algebra, point) if not isinstance(point, Quaternion) else point
    return left.evaluate(h * q * h.inverse()) * h


def gcrd(first: QPoly, second: QPoly) -> QPoly:
    """Greatest common right divisor, normalized monic.

    Computed by the right Euclidean algorithm; the result right-divides
    both inputs and every common right divisor right-divides it.
    """
    first._check_same_ring(second)
    if first.is_zero and second.is_zero:
        raise PreconditionError("gcrd(0, 0) is undefined")
    p, s = first, second
    while not s.is_zero:
        p, s = s, right_divrem(p, s)[1]
    return p.monic()


def central_gcd(first: CentralPoly, second: CentralPoly) -> CentralPoly:
    """Monic greatest common divisor in the commutative ring F[x]."""
    if first.is_zero and second.is_zero:
        raise PreconditionError("gcd(0, 0) is undefined")
    p, s = first, second
    while not s.is_zero:
        p, s = s, (p % s)
    return p.monic()


def minimal_polynomial(cls: ConjClass) -> CentralPoly:
    """The monic central polynomial vanishing on a conjugacy class.

    Central value v: x - v.  Sphere with trace t and norm n: the
    irreducible quadratic x^2 - t x + n.
    """
    if isinstance(cls, CentralClass):
        return CentralPoly((-cls.value, 1))
    if isinstance(cls, SphereClass):
        return CentralPoly((cls.norm, -cls.trace, 1))
    raise PreconditionError(f"{cls!r} is not a conjugacy class")
