import pytest
from hypothesis import given, settings

from cliffbits import (DyadicRational, Metric, MetricError, Multivector,
                       ParseError, blade_product, center_check,
                       dual_automorphism_check, grade_involution, mv_mul,
                       omega_squared_oracle, tau_blade, tau_squared_oracle,
                       volume_element)

from conftest import multivectors

E22 = Metric.block(2, 2)
I2 = Metric.interleaved(2)


def test_metric_constructors():
    assert Metric.block(2, 1).squares == (1, 1, -1)
    assert Metric.interleaved(2).squares == (1, -1, 1, -1)
    assert Metric.block(0, 0).n == 0
    m = Metric.block(3, 1)
    assert (m.k, m.l, m.nu) == (3, 1, 2)


def test_interleaved_counts():
    m = Metric.interleaved(3)
    assert (m.k, m.l) == (3, 3)


def test_generator_squares():
    g1 = Multivector.generator(E22, 1)
    g3 = Multivector.generator(E22, 3)
    one = Multivector.scalar(E22, 1)
    assert mv_mul(g1, g1) == one
    assert mv_mul(g3, g3) == -1 * one


def test_generators_anticommute():
    g1 = Multivector.generator(E22, 1)
    g2 = Multivector.generator(E22, 2)
    assert mv_mul(g2, g1) == -1 * mv_mul(g1, g2)


def test_blade_product_examples():
    # g1 g2 times g2 contracts to g1 with the metric sign
    sign, mask = blade_product(0b0011, 0b0010, E22)
    assert (sign, mask) == (1, 0b0001)
    sign, mask = blade_product(0b0010, 0b0011, E22)
    assert (sign, mask) == (-1, 0b0001)
    # disjoint supports just count transpositions
    sign, mask = blade_product(0b0100, 0b0011, E22)
    assert (sign, mask) == (1, 0b0111)
    sign, mask = blade_product(0b0001, 0b0110, E22)
    assert (sign, mask) == (1, 0b0111)


def test_scalar_blade_is_identity():
    sign, mask = blade_product(0, 0b1011, E22)
    assert (sign, mask) == (1, 0b1011)


def test_null_square_in_neutral_metric():
    # (1 + g1)(1 - g1) = 0 when g1^2 = +1: a rank-one idempotent pair
    one = Multivector.scalar(I2, 1)
    g1 = Multivector.generator(I2, 1)
    assert mv_mul(one + g1, one - g1) == Multivector.zero(I2)


def test_associativity_exhaustive_small():
    m = Metric.block(2, 1)
    dim = 1 << 3
    for a in range(dim):
        for b in range(dim):
            s1, ab = blade_product(a, b, m)
            for c in range(dim):
                s2, abc = blade_product(ab, c, m)
                s3, bc = blade_product(b, c, m)
                s4, abc2 = blade_product(a, bc, m)
                assert (s1 * s2, abc) == (s3 * s4, abc2)


@given(multivectors(E22), multivectors(E22), multivectors(E22))
@settings(max_examples=40)
def test_product_bilinear_associative(x, y, z):
    assert mv_mul(mv_mul(x, y), z) == mv_mul(x, mv_mul(y, z))
    assert mv_mul(x + y, z) == mv_mul(x, z) + mv_mul(y, z)
    assert mv_mul(x, y + z) == mv_mul(x, y) + mv_mul(x, z)


@given(multivectors(E22))
def test_grade_involution_is_automorphism(x):
    y = Multivector.generator(E22, 1) + Multivector.scalar(E22, 2)
    assert grade_involution(mv_mul(x, y)) == mv_mul(grade_involution(x),
                                                    grade_involution(y))
    assert grade_involution(grade_involution(x)) == x


def test_volume_element_square():
    # positive-definite plane: (g1 g2)^2 = -1
    assert omega_squared_oracle(Metric.block(2, 0)) == -1
    assert omega_squared_oracle(Metric.block(1, 1)) == 1
    assert omega_squared_oracle(Metric.block(0, 2)) == -1
    assert omega_squared_oracle(Metric.block(3, 0)) == -1
    assert volume_element(E22) == 0b1111


def test_center_examples():
    assert center_check(Metric.block(0, 1)) is True
    assert center_check(Metric.block(1, 1)) is False
    assert center_check(Metric.block(2, 1)) is True
    assert center_check(Metric.block(0, 0)) is False


def test_tau_blade_selection():
    # even k, l: the last l generators; odd k, l: the first k
    assert tau_blade(2, 2) == 0b1100
    assert tau_blade(1, 1) == 0b0001
    assert tau_blade(0, 2) == 0b0011
    assert tau_blade(3, 1) == 0b0111
    with pytest.raises(ValueError):
        tau_blade(2, 1)


def test_tau_squares():
    assert tau_squared_oracle(2, 2) == -1
    assert tau_squared_oracle(1, 1) == 1
    assert tau_squared_oracle(0, 2) == -1
    assert tau_squared_oracle(0, 4) == 1
    assert tau_squared_oracle(0, 6) == -1
    assert tau_squared_oracle(4, 0) == 1


def test_dual_automorphisms_small():
    for k in range(5):
        for l in range(5):
            if (k + l) % 2 == 0:
                assert dual_automorphism_check(k, l)


def test_parse_basic():
    x = Multivector.parse("1/2 g1 g2 + 3", E22)
    assert x.coefficient(0b0011) == DyadicRational(1, 1)
    assert x.coefficient(0) == 3
    assert x.coefficient(0b0001) == 0


def test_parse_canonicalizes_generator_order():
    # g2 g1 = -g1 g2, and repeated generators contract through the metric
    assert Multivector.parse("g2 g1", E22) == -1 * Multivector.parse("g1 g2", E22)
    assert Multivector.parse("g3 g3", E22) == Multivector.parse("-1", E22)
    assert Multivector.parse("2 g1 g1", E22) == Multivector.parse("2", E22)


def test_parse_rejects_garbage():
    for bad in ("g0", "g5", "1/3 g1", "g1 2", "", "+", "2 2", "g1g2"):
        with pytest.raises(ParseError):
            Multivector.parse(bad, E22)


@given(multivectors(E22))
def test_parse_print_roundtrip(x):
    assert Multivector.parse(str(x), E22) == x


def test_str_ordering_and_signs():
    x = Multivector.parse("g3 - 2 g1 g2 + 1/4", E22)
    assert str(x) == "1/4 + g3 - 2 g1 g2"
    assert str(Multivector.zero(E22)) == "0"


def test_mixed_metric_rejected():
    x = Multivector.scalar(E22, 1)
    y = Multivector.scalar(I2, 1)
    with pytest.raises(MetricError):
        mv_mul(x, y)
    with pytest.raises(MetricError):
        _ = x + y


def test_scalar_coercion():
    x = Multivector.parse("g1", E22)
    assert x + 1 == Multivector.parse("1 + g1", E22)
    assert DyadicRational(1, 1) * x == Multivector.parse("1/2 g1", E22)
    assert x - 1 == Multivector.parse("g1 - 1", E22)
