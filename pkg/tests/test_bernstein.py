import random
from fractions import Fraction as F

import pytest

from calicert import formulas
from calicert.bernstein import (
    CertFailure,
    bern_certify,
    bern_expand,
    bern_expand_parametric,
    parametric_reexpand,
)
from calicert.exactnum import QuadExt
from calicert.polycore import MPoly, parse_poly

ROOT2 = QuadExt(0, 1, 2)


def test_quadratic_example():
    p = parse_poly("5*t^2 - 3*t + 1")
    c3 = bern_expand(p, 0, 1, 3)
    assert [str(c) for c in c3.coeffs] == ["1", "0", "2", "3"]
    assert c3.verdict == "positive"
    c2 = bern_expand(p, 0, 1, 2)
    assert c2.verdict == "inconclusive"
    assert bern_certify(p, 0, 1, max_m=10).m == 3


def test_displayed_quartic_coefficients():
    cert = bern_expand(formulas.BPOLY_EXAMPLE, -3, F(1, 2), 4)
    assert cert.coeffs == formulas.BPOLY_EXAMPLE_COEFFS
    assert cert.verdict == "positive"
    assert cert.polynomial() == formulas.BPOLY_EXAMPLE


def test_certify_inner_edge():
    p = parse_poly("4*t^6 - 4*t^5 - 93*t^4 + 78*t^3 + 240*t^2 - 408*t + 192")
    assert bern_certify(p, 0, F(1, 2)).m == 6


def test_failure_is_a_value():
    out = bern_certify(parse_poly("t"), -1, 1, max_m=12)
    assert isinstance(out, CertFailure)
    assert out.last_degree == 12
    assert out.negative_coeff.sign() < 0


def test_preconditions():
    p = parse_poly("t^3")
    with pytest.raises(ValueError):
        bern_expand(p, 0, 1, 2)
    with pytest.raises(ValueError):
        bern_expand(p, 1, 0, 5)


def test_soundness_by_sampling():
    p = parse_poly("t^4 - 2*t^3 - 12*t^2 - 16*t + 20")
    cert = bern_expand(p, -3, F(1, 2), 4)
    assert cert.verdict == "positive"
    a, b = float(cert.a), float(cert.b)
    for k in range(1001):
        t = a + (b - a) * k / 1000
        assert p.eval_float({"t": t}) > -1e-9


def test_degree_elevation_invariance():
    p = parse_poly("t^3 - 2*t + 1")
    for m in (3, 4, 5, 9):
        cert = bern_expand(p, -2, 3, m)
        assert cert.polynomial() == p


def test_basis_roundtrip():
    p = parse_poly("7*t^5 - t^2 + 4")
    cert = bern_expand(p, F(-1, 3), F(5, 2), 6)
    again = cert.to_basis("binomial").to_basis("scaled")
    assert again.coeffs == cert.coeffs
    assert cert.to_basis("binomial").polynomial() == p


def test_irrational_endpoints_roundtrip():
    p = parse_poly("t^4 - 2*t^3 - 12*t^2 - 16*t + 20")
    cert = bern_expand(p, -2 * ROOT2, 0, 6)
    assert cert.polynomial() == p
    assert all(c.d in (0, 2) for c in cert.coeffs)


def test_quintic_edge_degrees():
    q = formulas.l1_top_quintic()
    right = bern_certify(q, 0, F(1, 2), max_m=16)
    assert right.m == 13 and right.verdict == "positive"
    left = bern_certify(q, -2 * ROOT2, 0, max_m=16)
    assert left.m == 5 and left.verdict == "positive"


def test_parametric_trivial():
    p = parse_poly("1 - v + v*w^2")
    coeffs = bern_expand_parametric(p, "v", 0, 1, 1)
    assert coeffs[0] == MPoly.const(1)
    assert coeffs[1] == parse_poly("w^2")
    assert parametric_reexpand(coeffs, "v", 0, 1) == p


def test_parametric_q_family():
    P = 8 * formulas.QUARTIC_A * formulas.QUARTIC_C - 3 * formulas.QUARTIC_B ** 2
    coeffs = bern_expand_parametric(P, "v", 0, F(5, 2), 2)
    assert coeffs[0] == formulas.Q_BERN[0]
    assert coeffs[1] == formulas.Q_BERN[1]
    assert coeffs[2] == formulas.Q_BERN[2]
    assert parametric_reexpand(coeffs, "v", 0, F(5, 2)) == P


def test_parametric_reexpansion_random():
    rng = random.Random(23)
    for _ in range(10):
        terms = MPoly.const(0)
        for _ in range(5):
            terms = terms + (
                MPoly.const(F(rng.randint(-9, 9)))
                * MPoly.var("v") ** rng.randint(0, 4)
                * MPoly.var("w") ** rng.randint(0, 3)
            )
        m = 4 + rng.randint(0, 2)
        coeffs = bern_expand_parametric(terms, "v", -1, 2, m)
        assert parametric_reexpand(coeffs, "v", -1, 2) == terms


def test_min_coeff_margin():
    cert = bern_expand(formulas.BPOLY_EXAMPLE, -3, F(1, 2), 4)
    assert cert.min_coeff() == QuadExt(F(141, 2401))


from hypothesis import given, settings, strategies as st


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), min_size=1, max_size=6),
    st.integers(-3, 2),
    st.integers(1, 4),
    st.integers(0, 3),
)
def test_expansion_reproduces_polynomial(coeffs, a, width, elevate):
    p = MPoly.univariate("t", coeffs)
    deg = p.degree_in("t")
    b = F(a) + width
    for basis in ("scaled", "binomial"):
        cert = bern_expand(p, a, b, deg + elevate, basis)
        assert cert.polynomial() == p
