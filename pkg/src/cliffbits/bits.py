"""Bit extraction and sign-valued bits.

A bit b in {0, 1} and a sign s in {+1, -1} are interchangeable through
s = 1 - 2*b.  The mod-8 periodicity formulas are all statements about
the three least significant bits of an integer, extracted here.
"""

from __future__ import annotations

import math

# A sign-valued bit: +1 or -1.
SignBit = int


def bit_to_sign(b: int) -> SignBit:
    """Map a {0, 1} bit to the sign 1 - 2*b."""
    if b not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {b!r}")
    return 1 - 2 * b


def sign_to_bit(s: SignBit) -> int:
    """Inverse of bit_to_sign."""
    if s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {s!r}")
    return (1 - s) // 2


def bit(n: int, i: int) -> int:
    """The i-th binary digit of a non-negative integer."""
    if n < 0:
        raise ValueError("n must be non-negative; reduce mod 2^k first")
    if i < 0:
        raise ValueError("bit index must be non-negative")
    return (n >> i) & 1


def sign_bit(n: int, i: int) -> SignBit:
    """The i-th bit of n as a sign, equal to (-1) ** (n // 2**i)."""
    return 1 - 2 * bit(n, i)


def lucas_sign(n: int, i: int) -> SignBit:
    """(-1) ** C(n, 2^i), with the binomial evaluated exactly.

    Deliberately not a bit lookup: this is the independent cross-check
    that the parity of C(n, 2^i) picks out bit i of n.
    """
    if n < 0 or i < 0:
        raise ValueError("lucas_sign needs n >= 0 and i >= 0")
    return -1 if math.comb(n, 1 << i) & 1 else 1


def half_pochhammer_sign(n: int) -> SignBit:
    """(-1) ** (n*(n-1)/2) for n >= 0; equals sign_bit(n, 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return -1 if (n * (n - 1) // 2) & 1 else 1


def neg_mod8(n: int) -> int:
    """(-n) mod 8, in [0, 8)."""
    return (-n) % 8
