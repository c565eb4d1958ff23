"""Exact brute-force Clifford algebra over a diagonal metric.

This is the ground-truth layer.  Blades are bitmasks (bit i set means
generator g{i+1} is a factor, factors ordered by increasing index),
multivectors are sparse blade -> DyadicRational maps, and every product
is normal-ordered by explicit transposition counting.  Nothing here is
clever; the fast engine is checked against this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType

from .dyadic import DyadicRational
from .instrument import counters

# A blade is a bitmask of generator indices.
Blade = int

_ZERO = DyadicRational(0)
_ONE = DyadicRational(1)


class MetricError(ValueError):
    """Operands do not live in the same algebra."""


class ParseError(ValueError):
    """Malformed multivector text."""


@dataclass(frozen=True)
class Metric:
    """Diagonal metric: the square (+1 or -1) of each generator."""

    squares: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.squares):
            raise ValueError("generator squares must be +1 or -1")

    @classmethod
    def block(cls, k: int, l: int) -> "Metric":
        """First k generators square to +1, the remaining l to -1."""
        if k < 0 or l < 0:
            raise ValueError("k and l must be non-negative")
        return cls((1,) * k + (-1,) * l)

    @classmethod
    def interleaved(cls, m: int) -> "Metric":
        """Neutral layout: odd positions square to +1, even positions to -1."""
        if m < 0:
            raise ValueError("m must be non-negative")
        return cls((1, -1) * m)

    @property
    def n(self) -> int:
        return len(self.squares)

    @property
    def k(self) -> int:
        return sum(1 for s in self.squares if s > 0)

    @property
    def l(self) -> int:
        return sum(1 for s in self.squares if s < 0)

    @property
    def nu(self) -> int:
        return self.k - self.l


def blade_product(a: Blade, b: Blade, metric: Metric) -> tuple[int, Blade]:
    """Product of two basis blades as (sign, result mask).

    The result mask is a XOR b; the sign counts the transpositions that
    normal-order the concatenation, times the metric squares of the
    contracted generators.
    """
    n = metric.n
    if a < 0 or b < 0 or a >> n or b >> n:
        raise MetricError(f"blade out of range for n={n}")
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    squares = metric.squares
    while common:
        rest = common & (common - 1)
        if squares[(common ^ rest).bit_length() - 1] < 0:
            sign = -sign
        common = rest
    return sign, a ^ b


class Multivector:
    """Finitely supported map from blades to dyadic coefficients.

    Treated as immutable; all arithmetic returns new instances.
    """

    __slots__ = ("metric", "_terms")

    def __init__(self, metric: Metric, terms=None):
        clean: dict[int, DyadicRational] = {}
        n = metric.n
        if terms:
            for mask, coeff in dict(terms).items():
                if mask < 0 or mask >> n:
                    raise MetricError(f"blade {mask:#x} out of range for n={n}")
                if isinstance(coeff, int):
                    coeff = DyadicRational(coeff)
                elif not isinstance(coeff, DyadicRational):
                    raise TypeError("coefficients must be int or DyadicRational")
                if coeff:
                    clean[mask] = coeff
        self.metric = metric
        self._terms = clean

    @classmethod
    def _raw(cls, metric: Metric, terms: dict) -> "Multivector":
        mv = object.__new__(cls)
        mv.metric = metric
        mv._terms = terms
        return mv

    @classmethod
    def zero(cls, metric: Metric) -> "Multivector":
        return cls._raw(metric, {})

    @classmethod
    def scalar(cls, metric: Metric, value) -> "Multivector":
        return cls(metric, {0: value})

    @classmethod
    def from_blade(cls, metric: Metric, mask: Blade, coeff=1) -> "Multivector":
        return cls(metric, {mask: coeff})

    @classmethod
    def generator(cls, metric: Metric, i: int) -> "Multivector":
        """The generator g_i, 1-indexed."""
        if not 1 <= i <= metric.n:
            raise ValueError(f"generator index {i} outside 1..{metric.n}")
        return cls._raw(metric, {1 << (i - 1): _ONE})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, mask: Blade) -> DyadicRational:
        return self._terms.get(mask, _ZERO)

    def _coerce(self, other):
        if isinstance(other, (int, DyadicRational)):
            return Multivector.scalar(self.metric, other)
        if isinstance(other, Multivector):
            if other.metric != self.metric:
                raise MetricError("operands over different metrics")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mv_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mv_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mv_sub(other, self)

    def __neg__(self):
        return Multivector._raw(self.metric, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, DyadicRational)):
            return mv_scale(self, other)
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, DyadicRational)):
            return mv_scale(self, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, DyadicRational)):
            other = Multivector.scalar(self.metric, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.metric == other.metric and self._terms == other._terms

    __hash__ = None  # mutable-looking container; equality only

    def grade_involution(self) -> "Multivector":
        return grade_involution(self)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask in sorted(self._terms, key=lambda m: (m.bit_count(), m)):
            c = self._terms[mask]
            neg = c.numerator < 0
            mag = abs(c)
            if mask == 0:
                body = str(mag)
            else:
                gens = " ".join(f"g{i + 1}" for i in range(self.metric.n)
                                if (mask >> i) & 1)
                body = gens if mag == _ONE else f"{mag} {gens}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<Multivector n={self.metric.n}: {self}>"

    @classmethod
    def parse(cls, text: str, metric: Metric) -> "Multivector":
        """Parse text like '1/2 g1 g2 - 3 g4'.

        Terms are separated by + or -; a term is an optional dyadic
        coefficient followed by generator names g1..gn in any order
        (repeated or out-of-order generators are canonicalized with the
        proper sign).
        """
        s = text.strip()
        if not s:
            raise ParseError("empty multivector text")
        if s[0] not in "+-":
            s = "+ " + s
        chunks = re.split(r"([+-])", s)
        if chunks[0].strip():
            raise ParseError(f"unexpected leading text {chunks[0]!r}")
        it = iter(chunks[1:])
        acc: dict[int, DyadicRational] = {}
        for sgn, body in zip(it, it):
            tokens = body.split()
            if not tokens:
                raise ParseError("sign without a term")
            sign = 1 if sgn == "+" else -1
            coeff = None
            mask = 0
            gens_seen = False
            for tok in tokens:
                gm = re.fullmatch(r"g([1-9]\d*)", tok)
                if gm:
                    idx = int(gm.group(1))
                    if idx > metric.n:
                        raise ParseError(
                            f"generator g{idx} outside an algebra with n={metric.n}")
                    s2, mask = blade_product(mask, 1 << (idx - 1), metric)
                    sign *= s2
                    gens_seen = True
                    continue
                if coeff is not None or gens_seen:
                    raise ParseError(f"unexpected token {tok!r}")
                try:
                    coeff = DyadicRational.parse(tok)
                except ValueError as exc:
                    raise ParseError(str(exc)) from None
            value = coeff if coeff is not None else _ONE
            if sign < 0:
                value = -value
            prev = acc.get(mask)
            total = value if prev is None else prev + value
            if total:
                acc[mask] = total
            elif prev is not None:
                del acc[mask]
        return cls._raw(metric, acc)


def _check_same_metric(x: Multivector, y: Multivector):
    if x.metric != y.metric:
        raise MetricError("operands over different metrics")


def mv_add(x: Multivector, y: Multivector) -> Multivector:
    _check_same_metric(x, y)
    acc = dict(x._terms)
    for mask, c in y._terms.items():
        prev = acc.get(mask)
        total = c if prev is None else prev + c
        if total:
            acc[mask] = total
        elif prev is not None:
            del acc[mask]
    return Multivector._raw(x.metric, acc)


def mv_sub(x: Multivector, y: Multivector) -> Multivector:
    return mv_add(x, -y)


def mv_scale(x: Multivector, c) -> Multivector:
    if isinstance(c, int):
        c = DyadicRational(c)
    if not c:
        return Multivector.zero(x.metric)
    return Multivector._raw(x.metric, {m: v * c for m, v in x._terms.items()})


def mv_mul(x: Multivector, y: Multivector) -> Multivector:
    """Exact product; the blade-pair count goes to the op counters."""
    _check_same_metric(x, y)
    squares = x.metric.squares
    acc: dict[int, DyadicRational] = {}
    yitems = list(y._terms.items())
    for amask, acoef in x._terms.items():
        for bmask, bcoef in yitems:
            # inlined blade_product, kept in sync with it for speed
            swaps = 0
            t = amask >> 1
            while t:
                swaps += (t & bmask).bit_count()
                t >>= 1
            sign = swaps & 1
            common = amask & bmask
            while common:
                rest = common & (common - 1)
                if squares[(common ^ rest).bit_length() - 1] < 0:
                    sign ^= 1
                common = rest
            c = acoef * bcoef
            if sign:
                c = -c
            key = amask ^ bmask
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
    counters.blade_pairs += len(x._terms) * len(yitems)
    return Multivector._raw(x.metric, {m: c for m, c in acc.items() if c})


def grade_involution(x: Multivector) -> Multivector:
    """Flip the sign of every odd-grade coefficient."""
    return Multivector._raw(
        x.metric,
        {m: (-c if m.bit_count() & 1 else c) for m, c in x._terms.items()})


def volume_element(metric: Metric) -> Blade:
    """The product of all generators in index order, as a mask."""
    return (1 << metric.n) - 1


def omega_squared_oracle(metric: Metric) -> int:
    """Square of the volume element, straight from the blade product."""
    w = volume_element(metric)
    sign, rest = blade_product(w, w, metric)
    assert rest == 0
    return sign


def center_check(metric: Metric) -> bool:
    """Whether the volume element spans a nontrivial piece of the center.

    Checks the explicit commutators with every generator.  For n = 0
    the volume element is the scalar 1 and contributes nothing beyond
    the base field, so the answer is False.
    """
    n = metric.n
    if n == 0:
        return False
    w = volume_element(metric)
    for i in range(n):
        g = 1 << i
        if blade_product(w, g, metric) != blade_product(g, w, metric):
            return False
    return True


def tau_blade(k: int, l: int) -> Blade:
    """Mask of the dual-automorphism element in the block metric.

    The negative-square generators when k, l are both even; the
    positive-square generators when both are odd.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    if (k + l) & 1:
        raise ValueError("tau is undefined for odd n = k + l")
    if k & 1:
        return (1 << k) - 1
    return ((1 << l) - 1) << k


def tau_squared_oracle(k: int, l: int) -> int:
    metric = Metric.block(k, l)
    t = tau_blade(k, l)
    return blade_product(t, t, metric)[0]


def omega_tau_squared_oracle(k: int, l: int) -> int:
    metric = Metric.block(k, l)
    t = tau_blade(k, l)
    w = volume_element(metric)
    _, wt = blade_product(w, t, metric)
    # the +-1 prefactor of the combined blade squares away
    return blade_product(wt, wt, metric)[0]


def dual_automorphism_check(k: int, l: int) -> bool:
    """Verify t g_i t^-1 == g_i^-1 and (w t) g_i (w t)^-1 == -g_i^-1 for all i."""
    metric = Metric.block(k, l)
    t = tau_blade(k, l)
    t_sq = tau_squared_oracle(k, l)          # t^-1 = t^2 * t
    w = volume_element(metric)
    _, wt = blade_product(w, t, metric)
    wt_sq = omega_tau_squared_oracle(k, l)   # (w t)^-1 = (w t)^2 * (w t)
    for i in range(k + l):
        g = 1 << i
        g_inv_sign = metric.squares[i]       # g^-1 = (g^2) g
        s1, m1 = blade_product(t, g, metric)
        s2, m2 = blade_product(m1, t, metric)
        if (s1 * s2 * t_sq, m2) != (g_inv_sign, g):
            return False
        s3, m3 = blade_product(wt, g, metric)
        s4, m4 = blade_product(m3, wt, metric)
        if (s3 * s4 * wt_sq, m4) != (-g_inv_sign, g):
            return False
    return True
