"""Extended-range signed reals as (sign, mantissa, decimal exponent) triples.

Hermite values H_n(t) overflow native floats long before the densities built
from them do, so recurrences and prefactors are carried in this representation
and collapsed to a native float only at the end.  Signed addition is done on
aligned mantissas, not in log space, so cancellation near sign changes stays
exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG10_2 = math.log10(2.0)

# exponent gap beyond which the smaller addend cannot affect the larger
_ALIGN_LIMIT = 40


@dataclass(frozen=True)
class ExtendedReal:
    """A real number sign * mantissa * 10**exponent with mantissa in [1, 10)."""

    sign: int
    mantissa: float
    exponent: int

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "ExtendedReal":
        return ExtendedReal(0, 0.0, 0)

    @classmethod
    def from_float(cls, x: float) -> "ExtendedReal":
        if x == 0.0:
            return cls.zero()
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x!r} as ExtendedReal")
        sign = 1 if x > 0 else -1
        return cls._normalise(sign, abs(x), 0)

    @classmethod
    def from_log10(cls, log10_abs: float, sign: int = 1) -> "ExtendedReal":
        """Build sign * 10**log10_abs."""
        if sign == 0:
            return cls.zero()
        e = math.floor(log10_abs)
        m = 10.0 ** (log10_abs - e)
        return cls._normalise(int(math.copysign(1, sign)), m, e)

    @classmethod
    def from_scaled_pow2(cls, mantissa: float, exp2: int) -> "ExtendedReal":
        """Build mantissa * 2**exp2 (binary-scaled recurrence output)."""
        if mantissa == 0.0:
            return cls.zero()
        sign = 1 if mantissa > 0 else -1
        m = abs(mantissa)
        # exact when the value fits in a native float
        if abs(exp2) < 900 and -300 < math.log10(m) + exp2 * LOG10_2 < 300:
            return cls.from_float(math.copysign(math.ldexp(m, exp2), mantissa))
        return cls.from_log10(math.log10(m) + exp2 * LOG10_2, sign)

    @classmethod
    def _normalise(cls, sign: int, mag: float, exponent: int) -> "ExtendedReal":
        if mag == 0.0:
            return cls.zero()
        shift = math.floor(math.log10(mag))
        m = mag / 10.0**shift
        e = exponent + shift
        # guard against log10 landing on a boundary
        while m >= 10.0:
            m /= 10.0
            e += 1
        while m < 1.0:
            m *= 10.0
            e -= 1
        return cls(sign, m, e)

    # -- conversions ------------------------------------------------------

    def to_float(self) -> float:
        """Native float value; 0.0 / +-inf outside the native range."""
        if self.sign == 0:
            return 0.0
        if self.exponent > 308:
            return math.inf * self.sign
        if self.exponent < -320:
            return 0.0
        return self.sign * self.mantissa * 10.0**self.exponent

    def log10(self) -> float:
        """log10 of the magnitude (-inf for zero)."""
        if self.sign == 0:
            return -math.inf
        return math.log10(self.mantissa) + self.exponent

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "ExtendedReal":
        return ExtendedReal(-self.sign, self.mantissa, self.exponent)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            other = ExtendedReal.from_float(float(other))
        if self.sign == 0 or other.sign == 0:
            return ExtendedReal.zero()
        return self._normalise(self.sign * other.sign,
                               self.mantissa * other.mantissa,
                               self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            other = ExtendedReal.from_float(float(other))
        if other.sign == 0:
            raise ZeroDivisionError("ExtendedReal division by zero")
        if self.sign == 0:
            return ExtendedReal.zero()
        return self._normalise(self.sign * other.sign,
                               self.mantissa / other.mantissa,
                               self.exponent - other.exponent)

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = ExtendedReal.from_float(float(other))
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        hi, lo = (self, other) if self.exponent >= other.exponent else (other, self)
        gap = hi.exponent - lo.exponent
        if gap > _ALIGN_LIMIT:
            return hi
        m = hi.sign * hi.mantissa + lo.sign * lo.mantissa * 10.0**-gap
        if m == 0.0:
            return ExtendedReal.zero()
        return self._normalise(1 if m > 0 else -1, abs(m), hi.exponent)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = ExtendedReal.from_float(float(other))
        return self + (-other)

    def __abs__(self) -> "ExtendedReal":
        return ExtendedReal(abs(self.sign), self.mantissa, self.exponent)

    # -- comparisons (by represented value) --------------------------------

    def _cmp(self, other) -> int:
        diff = (self - other)
        return diff.sign

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- helpers ------------------------------------------------------------

    def rel_diff(self, other: "ExtendedReal") -> float:
        """|self - other| / max(|self|, |other|); 0 when both are zero."""
        if self.sign == 0 and other.sign == 0:
            return 0.0
        big = self if abs(self).log10() >= abs(other).log10() else other
        num = self - other
        if num.sign == 0:
            return 0.0
        return 10.0 ** (num.log10() - big.log10())

    def __repr__(self) -> str:
        if self.sign == 0:
            return "ExtendedReal(0)"
        s = "-" if self.sign < 0 else ""
        return f"ExtendedReal({s}{self.mantissa:.15g}e{self.exponent:+d})"
