"""Negative controls: perturbed inputs must make the exact checks fail.

These guard the checking machinery itself; a comparison that cannot fail
verifies nothing.
"""

import random
from fractions import Fraction as F

from calicert import curvforms, formulas
from calicert.bernstein import bern_expand
from calicert.curvforms import (
    CAYLEY_VECTORS,
    KIND_CAYLEY,
    _group_vector,
    _quad_value,
    free_symbols,
    group_dependents,
    quadform_m,
    wang_specialization_check,
)
from calicert.exactnum import QuadExt
from calicert.octalg import FormTable, PSI7, basis_vector, slag_reduction
from calicert.polycore import MPoly, parse_poly


def test_variant_closed_form_fails_determinant_identity():
    from calicert.curvforms import det6_reduced

    assert det6_reduced() == 4 * formulas.F_DET
    assert det6_reduced() != 4 * formulas.F_DET_VARIANT


def test_perturbed_matrix_breaks_block_identity():
    free = free_symbols(KIND_CAYLEY)
    t = group_dependents(KIND_CAYLEY, free)
    l0, l1, l2, l3 = MPoly.variables("l0", "l1", "l2", "l3")
    lhs = MPoly.const(0)
    for a in (4, 5, 6, 7):
        for i in range(4):
            for j in range(4):
                lhs = lhs + t.get(a, i, j) ** 2
    for k in range(4):
        lhs = lhs + (
            l0 ** 2 * t.get(4, 0, k) ** 2
            + l1 ** 2 * t.get(5, 1, k) ** 2
            + l2 ** 2 * t.get(6, 2, k) ** 2
            + l3 ** 2 * t.get(7, 3, k) ** 2
            + 2 * l0 * l1 * t.get(4, 1, k) * t.get(5, 0, k)
            + 2 * l0 * l2 * t.get(4, 2, k) * t.get(6, 0, k)
            + 2 * l0 * l3 * t.get(4, 3, k) * t.get(7, 0, k)
            + 2 * l1 * l2 * t.get(5, 2, k) * t.get(6, 1, k)
            + 2 * l1 * l3 * t.get(5, 3, k) * t.get(7, 1, k)
            + 2 * l2 * l3 * t.get(6, 3, k) * t.get(7, 2, k)
        )
    bad = [row[:] for row in quadform_m(l0, l1, l2, l3)]
    bad[0][1] = bad[0][1] + 1
    bad[1][0] = bad[1][0] + 1
    rhs = _quad_value(bad, _group_vector(t, CAYLEY_VECTORS[4]))
    rhs = rhs + _quad_value(quadform_m(l1, l2, l3, l0), _group_vector(t, CAYLEY_VECTORS[5]))
    rhs = rhs + _quad_value(quadform_m(l2, l3, l0, l1), _group_vector(t, CAYLEY_VECTORS[6]))
    rhs = rhs + _quad_value(quadform_m(l3, l0, l1, l2), _group_vector(t, CAYLEY_VECTORS[7]))
    assert lhs != rhs


def test_flipped_group_sign_breaks_block_identity():
    free = free_symbols(KIND_CAYLEY)
    t = group_dependents(KIND_CAYLEY, free)
    l0, l1, l2, l3 = MPoly.variables("l0", "l1", "l2", "l3")
    good = _quad_value(quadform_m(l1, l2, l3, l0), _group_vector(t, CAYLEY_VECTORS[5]))
    flipped = tuple((-s, k) for s, k in CAYLEY_VECTORS[5])
    # flipping every sign leaves a quadratic form unchanged; flip just one
    flipped = (flipped[0],) + CAYLEY_VECTORS[5][1:]
    other = _quad_value(quadform_m(l1, l2, l3, l0), _group_vector(t, flipped))
    assert good != other


def test_wrong_bernstein_claim_detected():
    cert = bern_expand(parse_poly("5*t^2 - 3*t + 1"), 0, 1, 3)
    tampered = tuple(list(cert.coeffs[:-1]) + [cert.coeffs[-1] + 1])
    from calicert.bernstein import BernCert

    bad = BernCert(cert.a, cert.b, cert.m, cert.basis, tampered, cert.verdict, cert.var)
    assert bad.polynomial() != parse_poly("5*t^2 - 3*t + 1")


def test_wrong_phase_sign_breaks_reduction():
    # the reduction with the opposite phase orientation must not verify:
    # compare against Re[+(1+i*lam) z] instead of Re[-(1+i*lam) z]
    lam = MPoly.var("l")
    one = MPoly.const(1)
    u = [MPoly.const(0)] * 7
    u[3] = one
    u[6] = lam
    sym = FormTable(7, 4, {k: MPoly.const(c) for k, c in PSI7.coeffs.items()})
    lhs = sym.contract(u).contract([MPoly.const(QuadExt.of(c)) for c in basis_vector(7, 0)])
    from calicert.octalg import _complex_wedge, _dx7, _dy7, _poly_form

    zs = [(_poly_form(_dx7(i)), _poly_form(_dy7(i))) for i in (1, 2)]
    re, im = _complex_wedge(zs)
    wrong = re.scale(one) - im.scale(lam)
    assert lhs != wrong
    assert slag_reduction("coass_phase")  # the stated orientation does verify


def test_off_locus_wang_residual_is_large():
    # breaking the constraint locus must produce a visible residual, not a
    # silently-agreeing pair of formulas
    rng = random.Random(5)
    try:
        res = wang_specialization_check("coass", [0.4, 0.3, 0.9], seed=1)
    except ValueError:
        return  # rejected outright is equally acceptable
    assert res > 1e-6


def test_relation_violating_tensor_detected():
    free = {k: F(1) for g in curvforms.CAYLEY_GROUPS.values() for k in g}
    t = group_dependents(KIND_CAYLEY, free)
    t.entries[(4, 0, 0)] = t.entries.get((4, 0, 0), 0) + 1
    assert any(r != 0 for r in t.residuals())
