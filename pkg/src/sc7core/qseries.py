"""Truncated formal power series with exact coefficients.

A QSeries knows its coefficients for exponents 0..precision-1; exponents
at or beyond the precision are unknown, never implicitly zero.  Binary
operations truncate to the smaller precision.  Coefficients are exact
integers or Fractions (the latter only where inversion demands them).

The two series builders here are the self-conjugate t-core generating
function and eta-quotient expansion; both work in dense integer arrays
with sparse binomial factors, so a precision of a few thousand costs well
under a second.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate


def format_coefficient(v) -> str:
    """Exact serialization: integers bare, rationals as "p/q"."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class QSeries:
    """Power series truncated at a fixed precision, exact arithmetic."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        c = tuple(_normalize(v) for v in coeffs)
        if not c:
            raise ValueError("a QSeries needs at least the constant term")
        self._coeffs = c

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int):
        if not 0 <= n < len(self._coeffs):
            raise IndexError(
                f"coefficient of q^{n} is beyond precision {len(self._coeffs)}"
            )
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(format_coefficient(v) for v in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"QSeries([{head}{tail}], precision={len(self._coeffs)})"

    def __add__(self, other: "QSeries") -> "QSeries":
        p = min(len(self._coeffs), len(other._coeffs))
        return QSeries([self._coeffs[i] + other._coeffs[i] for i in range(p)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        p = min(len(self._coeffs), len(other._coeffs))
        return QSeries([self._coeffs[i] - other._coeffs[i] for i in range(p)])

    def __neg__(self) -> "QSeries":
        return QSeries([-v for v in self._coeffs])

    def __mul__(self, other: "QSeries") -> "QSeries":
        p = min(len(self._coeffs), len(other._coeffs))
        out = [0] * p
        for i in range(p):
            a = self._coeffs[i]
            if a == 0:
                continue
            for j in range(p - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(out)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse by the standard recurrence.

        Requires an invertible constant term; coefficients may leave the
        integers, so the result uses Fractions where needed.
        """
        c = self._coeffs
        if c[0] == 0:
            raise ValueError("cannot invert a series with constant term 0")
        inv0 = Fraction(1) / c[0]
        out = [inv0]
        for k in range(1, len(c)):
            s = sum(c[j] * out[k - j] for j in range(1, k + 1) if c[j])
            out.append(-inv0 * s)
        return QSeries(out)

    def to_json(self) -> str:
        return json.dumps([format_coefficient(v) if isinstance(v, Fraction)
                           else v for v in self._coeffs])

    @staticmethod
    def one(prec: int) -> "QSeries":
        return QSeries([1] + [0] * (prec - 1))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the smaller precision."""
    return a * b


# In-place sparse kernels.  Multiplying by (1 + s*q^m) is a single shifted
# add; dividing by (1 + s*q^m) is the recurrence b[i] = a[i] - s*b[i-m],
# which walks each residue class mod m as a running (alternating) sum.

def _mul_binomial(c: list, m: int, sign: int) -> None:
    if sign == 1:
        c[m:] = [x + y for x, y in zip(c[m:], c)]
    else:
        c[m:] = [x - y for x, y in zip(c[m:], c)]


def _div_binomial(c: list, m: int, sign: int) -> None:
    if sign == -1:
        for r in range(m):
            seg = c[r::m]
            if len(seg) > 1:
                c[r::m] = accumulate(seg)
    else:
        for r in range(m):
            seg = c[r::m]
            if len(seg) > 1:
                c[r::m] = accumulate(seg, lambda acc, x: x - acc)


def euler_factor(scale: int, sign: int, prec: int) -> QSeries:
    """Expansion of prod_{n>=1} (1 + sign*q^(scale*n)) to the precision."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if prec < 1:
        raise ValueError("precision must be positive")
    c = [0] * prec
    c[0] = 1
    for m in range(scale, prec, scale):
        _mul_binomial(c, m, sign)
    return QSeries(c)


def sc_series(t: int, prec: int) -> QSeries:
    """Generating function for self-conjugate t-core counts, t odd:

        prod_{n>=1} (1 - q^(2tn))^((t-1)/2) (1 + q^(2n-1)) / (1 + q^(t(2n-1)))

    The coefficient of q^n is the number of self-conjugate t-cores of n.
    """
    if t < 1 or t % 2 == 0:
        raise ValueError(f"t must be a positive odd integer, got {t}")
    if prec < 1:
        raise ValueError("precision must be positive")
    c = [0] * prec
    c[0] = 1
    for m in range(2 * t, prec, 2 * t):
        for _ in range((t - 1) // 2):
            _mul_binomial(c, m, -1)
    for m in range(1, prec, 2):
        _mul_binomial(c, m, 1)
    for m in range(t, prec, 2 * t):
        _div_binomial(c, m, 1)
    return QSeries(c)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product prod_k eta(scale_k * tau)^(exp_k).

    Each eta factor contributes a global prefactor q^(scale*exp/24); the
    net power must come out a non-negative integer for the product to be
    a plain power series, and that is asserted at construction (a
    fractional net power is a hard error, not a truncation).
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(s), int(e)) for s, e in self.factors))
        for scale, exponent in self.factors:
            if scale < 1:
                raise ValueError(f"eta argument scale must be positive, got {scale}")
            if exponent == 0:
                raise ValueError("zero exponents are pointless; drop the factor")
        lead = self.leading_power
        if lead.denominator != 1 or lead < 0:
            raise ValueError(
                f"net q-power of the eta quotient is {lead}, "
                "need a non-negative integer"
            )

    @property
    def leading_power(self) -> Fraction:
        return sum((Fraction(s * e, 24) for s, e in self.factors), Fraction(0))


def eta_quotient_series(spec: EtaQuotientSpec, prec: int) -> QSeries:
    """q-expansion of the eta quotient, including the q^leading_power shift.

    Negative exponents divide by (1 - q^(scale*n)) factors exactly; the
    constant term of every inverted factor is 1, so coefficients stay
    integers.
    """
    if prec < 1:
        raise ValueError("precision must be positive")
    shift = int(spec.leading_power)
    body = prec - shift
    if body <= 0:
        return QSeries([0] * prec)
    c = [0] * body
    c[0] = 1
    for scale, exponent in spec.factors:
        for m in range(scale, body, scale):
            if exponent > 0:
                for _ in range(exponent):
                    _mul_binomial(c, m, -1)
            else:
                for _ in range(-exponent):
                    _div_binomial(c, m, -1)
    return QSeries([0] * shift + c)


# eta(2t)^2 eta(14t) eta(7t) eta(28t) / (eta(4t) eta(t)): its expansion is
# sum_n sc7(n) q^(n+2), so the shift of 2 places sc7(n) at exponent n+2.
SC7_ETA_QUOTIENT = EtaQuotientSpec(((2, 2), (14, 1), (7, 1), (28, 1), (4, -1), (1, -1)))
