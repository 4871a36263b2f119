import math
import random
from fractions import Fraction as F

import pytest

from calicert.exactnum import QuadExt
from calicert.octalg import (
    CAYLEY8,
    PSI7,
    CalPlane,
    associative_graph_plane,
    associator,
    basis_check,
    basis_vector,
    cayley_frame,
    cayley_graph_plane,
    coass_frame,
    coass_frame_exact,
    coass_graph_plane,
    cross7,
    dot,
    is_calibrated,
    slag_reduction,
    triple_cross8,
)
from calicert.normalform import lift3, lift4, lawson_osserman, sample_cg0, sample_cs0
from calicert.polycore import MPoly


def e7(i):
    return basis_vector(7, i)


def e8(i):
    return basis_vector(8, i)


def test_cross_examples():
    assert cross7(e7(0), e7(1)) == [QuadExt(0)] * 4 + [QuadExt(-1), QuadExt(0), QuadExt(0)]
    u = [QuadExt(x) for x in (1, 2, 3, 4, 5, 6, 7)]
    assert all(not c for c in cross7(u, u))


def test_associator_examples():
    assert associator(e7(1), e7(2), e7(3))[0] == QuadExt(2)
    assert sum(1 for c in associator(e7(1), e7(2), e7(3)) if c) == 1
    assert all(not c for c in associator(e7(4), e7(5), e7(6)))
    u = [QuadExt(x) for x in (1, 0, -2, 1, 3, 0, 1)]
    v = [QuadExt(x) for x in (0, 1, 1, 1, 0, 2, 0)]
    assert all(not c for c in associator(u, u, v))


def test_triple_cross_examples():
    got = triple_cross8(e8(1), e8(2), e8(3))
    assert got[0] == QuadExt(1) and sum(1 for c in got if c) == 1
    got = triple_cross8(e8(5), e8(6), e8(7))
    assert got[4] == QuadExt(1) and sum(1 for c in got if c) == 1
    u = [QuadExt(x) for x in (1, 2, 0, 0, 1, 0, 0, 3)]
    v = [QuadExt(x) for x in (0, 1, 1, 0, 0, 2, 0, 0)]
    assert all(not c for c in triple_cross8(u, u, v))


def test_cross_product_invariants_exact():
    rng = random.Random(31)
    for _ in range(10000):
        u = [QuadExt(F(rng.randint(-4, 4), rng.randint(1, 3))) for _ in range(7)]
        v = [QuadExt(F(rng.randint(-4, 4), rng.randint(1, 3))) for _ in range(7)]
        w = cross7(u, v)
        assert not dot(w, u)
        assert not dot(w, v)
        # |u x v|^2 = |u|^2 |v|^2 - <u,v>^2
        assert dot(w, w) == dot(u, u) * dot(v, v) - dot(u, v) ** 2


def test_is_calibrated_examples():
    plane = CalPlane("coassociative", [e7(0), e7(1), e7(2), e7(3)])
    assert is_calibrated(plane) == 1
    plane = CalPlane("coassociative", [e7(0), e7(1), e7(2), e7(6)])
    assert is_calibrated(plane) is None
    with pytest.raises(ValueError):
        is_calibrated(CalPlane("coassociative", [e7(0), e7(0), e7(2), e7(3)]))


def test_lawson_osserman_plane_is_coassociative():
    _, J = lawson_osserman([1.0, 0.0, 0.0, 0.0])
    assert is_calibrated(coass_graph_plane(J)) in (1, -1)


def test_associative_calibration():
    plane = associative_graph_plane([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert is_calibrated(plane) in (1, -1)
    r3 = 3 ** 0.5
    plane = associative_graph_plane([[r3, 0, 0], [0, r3, 0], [0, 0, r3]])
    assert is_calibrated(plane) in (1, -1)
    # antisymmetric slope is not associative
    plane = associative_graph_plane([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    assert is_calibrated(plane) is None


def test_cayley_calibration_exact():
    J = [[F(0)] * 4 for _ in range(4)]
    assert is_calibrated(cayley_graph_plane(J)) == 1
    ident = [[F(1) if i == j else F(0) for j in range(4)] for i in range(4)]
    assert is_calibrated(cayley_graph_plane(ident)) == -1
    # exact diagonal point on the inner locus component
    l = [F(1, 5), F(-1, 3), F(2, 7)]
    w = lift4(*l).as_rational()
    diag = [[F(0)] * 4 for _ in range(4)]
    for i, v in enumerate([w, *l]):
        diag[i][i] = v
    assert is_calibrated(cayley_graph_plane(diag)) == 1
    # breaking the locus breaks the calibration
    diag[0][0] = w + 1
    assert is_calibrated(cayley_graph_plane(diag)) is None


def test_graphical_characterizations_agree():
    rng = random.Random(8)
    for _ in range(50):
        lam = sample_cg0(rng)
        J = [[0.0] * 4 for _ in range(3)]
        for i, v in enumerate(lam):
            J[i][i + 1] = v
        plane = coass_graph_plane(J)
        sign = is_calibrated(plane)
        assert sign is not None
        # |psi(orthonormalized)| = 1 within 1e-9
        vs = [[float(c) for c in v] for v in plane.vectors]
        basis = []
        for v in vs:
            for b in basis:
                proj = sum(x * y for x, y in zip(v, b))
                v = [x - proj * y for x, y in zip(v, b)]
            n = math.sqrt(sum(x * x for x in v))
            basis.append([x / n for x in v])
        from calicert.octalg import PSI7_F

        val = PSI7_F(*basis)
        assert abs(abs(val) - 1) < 1e-9
        assert (1 if val > 0 else -1) == sign


def test_coass_frame_examples():
    frame = coass_frame([0.0, 0.0, 0.0], 1)
    for i in range(7):
        for j in range(7):
            assert frame[i][j] == (1.0 if i == j else 0.0)
    r3 = math.sqrt(3)
    ok, violations = basis_check("g2", coass_frame([r3, r3, r3], -1))
    assert ok, violations
    with pytest.raises(ValueError):
        coass_frame([1.0, 1.0, 1.0])  # off locus
    with pytest.raises(ValueError):
        coass_frame([math.sqrt(3)] * 3, 1)  # wrong orientation flag


def test_cayley_frame_examples():
    from calicert.octalg import CAYLEY8_F

    frame = cayley_frame([0.0, 0.0, 0.0, 0.0])
    for i in range(8):
        for j in range(8):
            assert frame[i][j] == (1.0 if i == j else 0.0)
    assert float(CAYLEY8_F(*[frame[i] for i in range(4)])) == 1.0
    with pytest.raises(ValueError):
        cayley_frame([1.0, 1.0, 1.0, 1.0])  # outer component


def test_basis_check_detects_flip():
    frame = [row[:] for row in coass_frame([0.0, 0.0, 0.0], 1)]
    frame[0][0] = -1.0
    ok, violations = basis_check("g2", frame)
    assert not ok and violations


def test_basis_check_random_frames():
    rng = random.Random(77)
    for _ in range(100):
        lam = sample_cg0(rng)
        ok, violations = basis_check("g2", coass_frame(lam))
        assert ok, (lam, violations[:2])
    for _ in range(100):
        quad = sample_cs0(rng)
        ok, violations = basis_check("spin7", cayley_frame(quad))
        assert ok, (quad, violations[:2])


def test_exact_frame_tracks_scales():
    vectors, scales = coass_frame_exact([F(1, 2), F(1, 3), lift3(F(1, 2), F(1, 3)).as_rational()])
    assert len(vectors) == 7
    for v, s in zip(vectors, scales):
        assert dot(v, v) == s


def test_spin7_basis_check_exact_at_standard():
    frame = [[QuadExt(1 if i == j else 0) for j in range(8)] for i in range(8)]
    ok, violations = basis_check("spin7", frame)
    assert ok and not violations


def test_slag_reductions():
    for ident in ("coass_x0", "coass_phase", "cayley_assoc", "cayley_phase"):
        assert slag_reduction(ident)
    # degenerate two-form case at zero slope
    assert slag_reduction("coass_phase", 0)
    assert slag_reduction("cayley_phase", F(2, 3))
    with pytest.raises(ValueError):
        slag_reduction("nonsense")


def test_associative_functional_expansion():
    """The linear functional cutting out associative graphs, fully symbolically."""
    from calicert.octalg import FormTable

    B = [[MPoly.var(f"b{i}{j}") for j in range(1, 4)] for i in range(1, 4)]
    zero, one = MPoly.const(0), MPoly.const(1)
    psi = FormTable(7, 4, {k: MPoly.const(c) for k, c in PSI7.coeffs.items()})
    vs = []
    for i in range(3):
        v = [zero] * 7
        v[4 + i] = one
        for j in range(3):
            v[1 + j] = B[i][j]
        vs.append(v)
    func = psi.contract(vs[0]).contract(vs[1]).contract(vs[2])
    comp = [func.coeffs.get((k,), zero) for k in range(7)]
    det = (
        B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1])
        - B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0])
        + B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0])
    )
    tr = B[0][0] + B[1][1] + B[2][2]
    want = [
        -det + tr,
        B[2][1] - B[1][2],
        B[0][2] - B[2][0],
        B[1][0] - B[0][1],
        B[0][0] * B[1][2] - B[0][2] * B[1][0] - B[0][0] * B[2][1] + B[0][1] * B[2][0],
        B[0][1] * B[1][2] - B[0][2] * B[1][1] - B[1][0] * B[2][1] + B[1][1] * B[2][0],
        B[0][1] * B[2][2] - B[0][2] * B[2][1] + B[1][2] * B[2][0] - B[1][0] * B[2][2],
    ]
    assert comp == want


def test_symbolic_graph_calibration_values():
    from calicert.octalg import FormTable

    l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
    zero, one = MPoly.const(0), MPoly.const(1)
    psi = FormTable(7, 4, {k: MPoly.const(c) for k, c in PSI7.coeffs.items()})
    v0 = [one] + [zero] * 6
    v1 = [zero, one, zero, zero, l1, zero, zero]
    v2 = [zero, zero, one, zero, zero, l2, zero]
    v3 = [zero, zero, zero, one, zero, zero, l3]
    assert psi(v0, v1, v2, v3) == one - l1 * l2 - l2 * l3 - l3 * l1

    l0 = MPoly.var("l0")
    phi8 = FormTable(8, 4, {k: MPoly.const(c) for k, c in CAYLEY8.coeffs.items()})
    vs = []
    for i, li in enumerate((l0, l1, l2, l3)):
        v = [zero] * 8
        v[i] = one
        v[4 + i] = li
        vs.append(v)
    sigma2 = l0 * l1 + l0 * l2 + l0 * l3 + l1 * l2 + l1 * l3 + l2 * l3
    assert phi8(*vs) == one + l0 * l1 * l2 * l3 - sigma2
    # the orthogonal quadruple gives sigma1 - sigma3, vanishing on the locus
    ws = []
    for i, li in enumerate((l0, l1, l2, l3)):
        v = [zero] * 8
        v[4 + i] = one
        v[i] = -li
        ws.append(v)
    val = phi8(vs[0], ws[1], ws[2], ws[3])
    s1 = l0 + l1 + l2 + l3
    s3 = l0 * l1 * l2 + l0 * l1 * l3 + l0 * l2 * l3 + l1 * l2 * l3
    assert val == s1 - s3
