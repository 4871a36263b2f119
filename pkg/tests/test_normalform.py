import itertools
import math
import random
from fractions import Fraction as F

import pytest

from calicert.exactnum import QuadExt
from calicert.normalform import (
    CG0,
    CGM,
    CGP,
    CS0,
    CSP,
    associative_normal_form,
    cayley_normal_form,
    classify,
    coass_normal_form,
    jacobi_eigh,
    lawson_osserman,
    lift3,
    lift4,
    sample_cg0,
    sample_cgplus,
    sample_cs0,
    sample_csplus,
    so4_induced_so3,
    _matmul,
)
from calicert import octalg


def diag_coass(a, b, c):
    return [[0, a, 0, 0], [0, 0, b, 0], [0, 0, 0, c]]


def test_jacobi_small():
    vals, V = jacobi_eigh([[2.0, 1.0], [1.0, 2.0]])
    assert sorted(round(v, 12) for v in vals) == [1.0, 3.0]
    # columns orthonormal
    for i in range(2):
        for j in range(2):
            g = sum(V[k][i] * V[k][j] for k in range(2))
            assert abs(g - (1.0 if i == j else 0.0)) < 1e-12


def test_coass_normal_form_examples():
    nf = coass_normal_form([[0] * 4] * 3)
    assert nf.values == (0.0, 0.0, 0.0) and nf.component == CG0

    _, J = lawson_osserman([1, 0, 0, 0])
    nf = coass_normal_form(J)
    r5 = math.sqrt(5)
    assert nf.component == CGP
    assert max(abs(a - b) for a, b in zip(nf.values, (r5, r5, r5 / 2))) < 1e-12

    nf = coass_normal_form(diag_coass(2, 2, F(4, 3)))
    assert nf.component == CGP
    assert max(abs(a - b) for a, b in zip(nf.values, (2, 2, 4 / 3))) < 1e-12


def test_coass_rejects_noncoassociative():
    with pytest.raises(ValueError):
        coass_normal_form(diag_coass(1, 1, 1))


def test_coass_rank_deficient():
    nf = coass_normal_form(diag_coass(0.7, -0.7, 0.0))
    assert nf.component == CG0
    assert sorted(nf.values) == sorted((0.7, -0.7, 0.0))


def test_associative_normal_form_examples():
    nf = associative_normal_form([[0] * 3] * 3)
    assert nf.values == (0.0, 0.0, 0.0)
    r3 = math.sqrt(3)
    nf = associative_normal_form([[r3, 0, 0], [0, r3, 0], [0, 0, r3]])
    assert max(abs(v - r3) for v in nf.values) < 1e-12
    with pytest.raises(ValueError):
        associative_normal_form([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])


def test_cayley_normal_form_examples():
    nf = cayley_normal_form([[0] * 4] * 4)
    assert nf.values == (0.0, 0.0, 0.0, 0.0) and nf.component == CS0
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    nf = cayley_normal_form(ident)
    assert nf.component == CSP and max(abs(v - 1) for v in nf.values) < 1e-12
    l0 = lift4(1, 2, 3)
    assert l0 == QuadExt(0)
    J = [[0.0] * 4 for _ in range(4)]
    for i, v in enumerate((0.0, 1.0, 2.0, 3.0)):
        J[i][i] = v
    nf = cayley_normal_form(J)
    assert sorted(nf.values) == [0.0, 1.0, 2.0, 3.0]
    s1 = sum(nf.values)
    assert abs(s1 - 6) < 1e-12


def test_lift_examples():
    assert lift3(0, 0) == QuadExt(0)
    r3 = QuadExt(0, 1, 3)
    assert lift3(r3, r3) == r3
    assert lift4(1, 2, 3) == QuadExt(0)
    with pytest.raises(ZeroDivisionError):
        lift3(1, 1)
    # sigma2 = 1 rejection: (1, 0, 1) has pairwise product sum exactly 1
    with pytest.raises(ZeroDivisionError):
        lift4(1, 0, 1)


def test_classify_examples():
    assert classify([0.0, 0.0, 0.0]) == CG0
    r3 = math.sqrt(3)
    assert classify([r3, r3, r3]) == CGP
    assert classify([-r3, -r3, -r3]) == CGM
    r5 = math.sqrt(5)
    assert classify([r5, r5, r5 / 2]) == CGP
    with pytest.raises(ValueError):
        classify([1.0, 1.0, 1.0])  # off locus


def test_locus_closure_exact():
    rng = random.Random(2)
    for _ in range(10000):
        l1 = F(rng.randint(-60, 60), rng.randint(1, 40))
        l2 = F(rng.randint(-60, 60), rng.randint(1, 40))
        if l1 * l2 == 1:
            continue
        l3 = lift3(l1, l2).as_rational()
        assert l1 + l2 + l3 == l1 * l2 * l3


def test_component_sampling_bounds():
    rng = random.Random(13)
    for _ in range(10000):
        vals = sample_cg0(rng, 3.0)
        s2 = vals[0] * vals[1] + vals[1] * vals[2] + vals[2] * vals[0]
        assert s2 <= 1e-9
    for _ in range(10000):
        vals = sample_cgplus(rng)
        s2 = vals[0] * vals[1] + vals[1] * vals[2] + vals[2] * vals[0]
        assert s2 >= 9 - 1e-9


def test_cs_sampling_bounds():
    rng = random.Random(14)
    for _ in range(10000):
        vals = sample_cs0(rng)
        s2 = sum(vals[i] * vals[j] for i, j in itertools.combinations(range(4), 2))
        assert s2 <= 1e-9
    for _ in range(10000):
        vals = sample_csplus(rng)
        s2 = sum(vals[i] * vals[j] for i, j in itertools.combinations(range(4), 2))
        assert s2 >= 6 - 1e-9
        assert sum(vals) >= 4 - 1e-9


def test_lawson_osserman_properties():
    rng = random.Random(4)
    for _ in range(200):
        x = [rng.uniform(-2, 2) for _ in range(4)]
        if sum(c * c for c in x) < 0.05:
            continue
        f, J = lawson_osserman(x)
        r = math.sqrt(sum(c * c for c in x))
        assert abs(math.sqrt(sum(c * c for c in f)) - math.sqrt(5) / 2 * r) < 1e-9
        fneg, _ = lawson_osserman([-c for c in x])
        assert max(abs(a - b) for a, b in zip(f, fneg)) < 1e-12
    f, _ = lawson_osserman([1, 0, 0, 0])
    assert abs(f[0] - math.sqrt(5) / 2) < 1e-15 and f[1] == 0.0 and f[2] == 0.0
    with pytest.raises(ValueError):
        lawson_osserman([0, 0, 0, 0])


def test_lawson_osserman_jacobian_vs_finite_differences():
    rng = random.Random(9)
    h = 1e-6
    for _ in range(25):
        x = [rng.uniform(-1.5, 1.5) for _ in range(4)]
        if sum(c * c for c in x) < 0.3:
            continue
        _, J = lawson_osserman(x)
        for a in range(4):
            xp = list(x)
            xm = list(x)
            xp[a] += h
            xm[a] -= h
            fp, _ = lawson_osserman(xp)
            fm, _ = lawson_osserman(xm)
            for i in range(3):
                fd = (fp[i] - fm[i]) / (2 * h)
                assert abs(fd - J[i][a]) < 1e-8


def test_so4_so3_intertwiner_orthogonal():
    rng = random.Random(6)

    def rot4(i, j, th):
        R = [[1.0 if a == b else 0.0 for b in range(4)] for a in range(4)]
        R[i][i] = R[j][j] = math.cos(th)
        R[i][j] = -math.sin(th)
        R[j][i] = math.sin(th)
        return R

    for _ in range(20):
        g = rot4(0, 1, rng.uniform(0, 6))
        g = _matmul(g, rot4(1, 2, rng.uniform(0, 6)))
        g = _matmul(g, rot4(2, 3, rng.uniform(0, 6)))
        A = so4_induced_so3(g)
        for i in range(3):
            for j in range(3):
                gij = sum(A[k][i] * A[k][j] for k in range(3))
                assert abs(gij - (1.0 if i == j else 0.0)) < 1e-12


def test_roundtrip_through_frame():
    """Building a graph from the adapted frame and re-extracting recovers the
    values up to permutation and global sign."""
    rng = random.Random(21)
    for _ in range(30):
        lam = sample_cg0(rng)
        frame = octalg.coass_frame(lam)
        # tangent frame spans the graph of J over the x-coordinates
        cols = [[frame[a][4 + i] for a in range(4)] for i in range(3)]
        base = [[frame[a][j] for a in range(4)] for j in range(4)]
        # J maps x-coords to y-coords: solve J * base = cols (base is 4x4)
        import numpy

        B = numpy.array(base).T
        Y = numpy.array(cols).T
        Jm = numpy.linalg.solve(B.T, Y).T
        nf = coass_normal_form(Jm.tolist())
        got = sorted(abs(v) for v in nf.values)
        want = sorted(abs(v) for v in lam)
        assert max(abs(a - b) for a, b in zip(got, want)) < 1e-8
