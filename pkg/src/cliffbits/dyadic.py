"""Exact dyadic rationals: integers divided by powers of two.

The null-vector constructions introduce denominators that are powers of
two and nothing else, so the coefficient ring of the exact kernel is
closed under +, -, * and equality can be structural.  Instances are
treated as immutable.
"""

from __future__ import annotations

import re

_COEFF_RE = re.compile(r"^([+-]?\d+)(?:/(?:2\^(\d+)|(\d+)))?$")


def _reduced(numerator: int, exponent: int) -> "DyadicRational":
    # internal fast path: arguments already known to be ints, exponent >= 0
    if numerator == 0:
        exponent = 0
    elif exponent and not numerator & 1:
        shift = (numerator & -numerator).bit_length() - 1
        if shift > exponent:
            shift = exponent
        numerator >>= shift
        exponent -= shift
    out = object.__new__(DyadicRational)
    out.numerator = numerator
    out.exponent = exponent
    return out


class DyadicRational:
    """numerator / 2**exponent in reduced form.

    Reduced means the numerator is odd whenever the exponent is
    positive; zero is stored as (0, 0).
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int = 0):
        if not isinstance(numerator, int) or not isinstance(exponent, int):
            raise TypeError("numerator and exponent must be integers")
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        if numerator == 0:
            exponent = 0
        elif exponent and not numerator & 1:
            shift = (numerator & -numerator).bit_length() - 1
            if shift > exponent:
                shift = exponent
            numerator >>= shift
            exponent -= shift
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def parse(cls, text: str) -> "DyadicRational":
        """Parse '3', '-5/8' or '7/2^4'; the denominator must be a power of 2."""
        m = _COEFF_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a dyadic coefficient: {text!r}")
        num = int(m.group(1))
        if m.group(2) is not None:
            return cls(num, int(m.group(2)))
        if m.group(3) is not None:
            den = int(m.group(3))
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator must be a power of 2: {text!r}")
            return cls(num, den.bit_length() - 1)
        return cls(num)

    def __add__(self, other):
        if isinstance(other, int):
            onum, oexp = other, 0
        elif isinstance(other, DyadicRational):
            onum, oexp = other.numerator, other.exponent
        else:
            return NotImplemented
        e = self.exponent
        if e == oexp:
            return _reduced(self.numerator + onum, e)
        if e < oexp:
            return _reduced((self.numerator << (oexp - e)) + onum, oexp)
        return _reduced(self.numerator + (onum << (e - oexp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        elif not isinstance(other, DyadicRational):
            return NotImplemented
        return self + _reduced(-other.numerator, other.exponent)

    def __rsub__(self, other):
        if isinstance(other, int):
            return DyadicRational(other) + _reduced(-self.numerator, self.exponent)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            onum, oexp = other, 0
        elif isinstance(other, DyadicRational):
            onum, oexp = other.numerator, other.exponent
        else:
            return NotImplemented
        return _reduced(self.numerator * onum, self.exponent + oexp)

    __rmul__ = __mul__

    def __neg__(self):
        return _reduced(-self.numerator, self.exponent)

    def __abs__(self):
        return _reduced(abs(self.numerator), self.exponent)

    def __bool__(self):
        return self.numerator != 0

    def __eq__(self, other):
        if isinstance(other, DyadicRational):
            return (self.numerator == other.numerator
                    and self.exponent == other.exponent)
        if isinstance(other, int):
            return self.exponent == 0 and self.numerator == other
        return NotImplemented

    def __hash__(self):
        # ints with exponent 0 must hash like plain ints
        if self.exponent == 0:
            return hash(self.numerator)
        return hash((self.numerator, self.exponent))

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self):
        return f"DyadicRational({self.numerator}, {self.exponent})"
