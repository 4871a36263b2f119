import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from calicert.exactnum import (
    QuadExt,
    RadicandMismatch,
    parse_quadext,
    qext_arith,
    qext_sign,
)


def test_sign_examples():
    assert qext_sign(QuadExt(0, 0, 2)) == 0
    assert qext_sign(QuadExt(-2, 1, 2)) == -1          # sqrt(2) < 2
    assert qext_sign(QuadExt(-4, 3, 2)) == 1           # 3*sqrt(2) > 4 since 18 > 16


def test_arith_examples():
    assert QuadExt(1, 1, 2) * QuadExt(1, -1, 2) == QuadExt(-1)
    assert QuadExt(0, 1, 2) ** 2 == QuadExt(2)
    inv = 1 / QuadExt(3, 1, 2)
    assert inv == QuadExt(F(3, 7), F(-1, 7), 2)
    assert inv * QuadExt(3, 1, 2) == QuadExt(1)
    assert qext_arith(QuadExt(1, 1, 2), QuadExt(1, -1, 2), "mul") == QuadExt(-1)


def test_radicand_mismatch_and_zero_division():
    with pytest.raises(RadicandMismatch):
        QuadExt(1, 1, 2) + QuadExt(1, 1, 3)
    with pytest.raises(ZeroDivisionError):
        QuadExt(1) / QuadExt(0)
    # rationals mix with any radicand
    assert QuadExt(2) + QuadExt(0, 1, 3) == QuadExt(2, 1, 3)


def test_normalization():
    x = QuadExt(0, 1, 8)
    assert (x.a, x.b, x.d) == (F(0), F(2), 2)
    y = QuadExt(1, 0, 5)
    assert y.d == 0 and y.is_rational
    assert QuadExt(0, 1, 12) == QuadExt(0, 2, 3)
    # normalizing twice equals normalizing once
    z = QuadExt(x.a, x.b, x.d)
    assert (z.a, z.b, z.d) == (x.a, x.b, x.d)


def test_parser():
    assert parse_quadext("2*sqrt(2)") == QuadExt(0, 2, 2)
    assert parse_quadext("-3 + 1/7*sqrt(10)") == QuadExt(-3, F(1, 7), 10)
    assert parse_quadext("5/3") == QuadExt(F(5, 3))
    assert parse_quadext("-sqrt(6)") == QuadExt(0, -1, 6)
    with pytest.raises(ValueError):
        parse_quadext("2 +* 3")


def test_ordering_is_exact():
    r10 = QuadExt(0, 1, 10)
    assert QuadExt(9) > 3 + r10
    assert QuadExt(9) < 3 + 2 * r10
    assert 3 + 2 * r10 < QuadExt(15)


rats = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


@settings(max_examples=300, deadline=None)
@given(rats, rats, rats, rats, rats, rats, st.sampled_from([2, 3, 5, 6, 7, 10]))
def test_field_axioms(a1, b1, a2, b2, a3, b3, d):
    x, y, z = QuadExt(a1, b1, d), QuadExt(a2, b2, d), QuadExt(a3, b3, d)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if y:
        assert (x / y) * y == x


def test_field_axioms_bulk():
    # spot check on 10^4 pseudo-random triples with exact equality
    import random

    rng = random.Random(12)
    for _ in range(10000):
        d = rng.choice([2, 3, 5, 10])
        vals = [
            QuadExt(F(rng.randint(-50, 50), rng.randint(1, 9)),
                    F(rng.randint(-50, 50), rng.randint(1, 9)), d)
            for _ in range(3)
        ]
        x, y, z = vals
        assert x * (y + z) == x * y + x * z


def test_sign_agrees_with_float():
    import random

    rng = random.Random(7)
    for _ in range(10000):
        d = rng.choice([2, 3, 5, 6, 10])
        x = QuadExt(F(rng.randint(-100, 100), rng.randint(1, 20)),
                    F(rng.randint(-100, 100), rng.randint(1, 20)), d)
        approx = float(x)
        if abs(approx) > 1e-6:
            assert qext_sign(x) == (1 if approx > 0 else -1)


def test_float_and_str_roundtrip():
    x = QuadExt(-3, F(1, 7), 10)
    assert parse_quadext(str(x)) == x
    assert math.isclose(float(x), -3 + math.sqrt(10) / 7)
