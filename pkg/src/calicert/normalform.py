"""Signed singular-value normal forms of graphical calibrated planes.

A graphical coassociative/associative/Cayley plane is brought to the diagonal
model span{dx_i + lam_i dy_i} by structure-group rotations that act
block-diagonally on the domain and range.  The recovered lam_i are signed:
their elementary symmetric polynomials satisfy sigma_1 = sigma_3, and the sign
pattern decides the connected component of the constraint locus.

The eigen/SVD work is done by cyclic Jacobi sweeps on 3x3/4x4 symmetric
matrices; nothing here needs an external linear algebra stack.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import QuadExt
from . import octalg

JACOBI_TOL = 1e-13
LOCUS_RTOL = 1e-8
# CS+ requires sigma_1 >= 4 on the nose; allow this much float slack below 4
CS_PLUS_BAND = 1e-6

CG0, CGP, CGM = "CG0", "CG+", "CG-"
CS0, CSP, CSM = "CS0", "CS+", "CS-"


@dataclass
class SingularTriple:
    values: tuple[float, float, float]
    component: str
    residual: float


@dataclass
class SingularQuad:
    values: tuple[float, float, float, float]
    component: str
    residual: float


# -- small dense numerics -----------------------------------------------------


def jacobi_eigh(matrix: Sequence[Sequence[float]], tol: float = JACOBI_TOL):
    """Eigenvalues and orthonormal eigenvectors of a small symmetric matrix by
    cyclic Jacobi rotations.  Returns (values, V) with columns of V the
    eigenvectors, A = V diag(values) V^T."""
    n = len(matrix)
    a = [[float(matrix[i][j]) for j in range(n)] for i in range(n)]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    scale = max(abs(a[i][j]) for i in range(n) for j in range(n)) or 1.0
    for _ in range(100):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p][q]) <= tol * scale / (n * n):
                    continue
                theta = 0.5 * math.atan2(2 * a[p][q], a[q][q] - a[p][p])
                c, s = math.cos(theta), math.sin(theta)
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    akp, akq = a[p][k], a[q][k]
                    a[p][k] = c * akp - s * akq
                    a[q][k] = s * akp + c * akq
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    values = [a[i][i] for i in range(n)]
    return values, v


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a):
    return [list(row) for row in zip(*a)]


def _det_f(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0.0
    for j in range(n):
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total += ((-1) ** j) * m[0][j] * _det_f(minor)
    return total


# -- the SO(4) -> SO(3) intertwiner -------------------------------------------

# antisymmetric matrices of the three self-dual 2-forms on R^4
_W = [
    ((0, 1, 1), (2, 3, 1)),
    ((0, 2, 1), (3, 1, 1)),
    ((0, 3, 1), (1, 2, 1)),
]


def _w_matrix(entries):
    m = [[0.0] * 4 for _ in range(4)]
    for i, j, s in entries:
        m[i][j] = float(s)
        m[j][i] = -float(s)
    return m


def so4_induced_so3(g: Sequence[Sequence[float]]):
    """The SO(3) matrix A with pullback(g) om_i = sum_j A[i][j] om_j, where
    om_i are the self-dual 2-forms paired with the range coordinates."""
    ws = [_w_matrix(e) for e in _W]
    gt = _transpose(g)
    out = []
    for wi in ws:
        pulled = _matmul(gt, _matmul(wi, g))
        row = []
        for wj in ws:
            val = 0.0
            for a in range(4):
                for b in range(a + 1, 4):
                    val += pulled[a][b] * wj[a][b]
            row.append(val / 2.0)
        out.append(row)
    return out


# -- lifts and classification ---------------------------------------------------


def lift3(l1, l2):
    """Third slot of the three-variable constraint locus: (l1+l2)/(l1*l2-1)."""
    if isinstance(l1, (int, Fraction, QuadExt)) and isinstance(l2, (int, Fraction, QuadExt)):
        l1, l2 = QuadExt.of(l1), QuadExt.of(l2)
        den = l1 * l2 - 1
        if not den:
            raise ZeroDivisionError("l1*l2 = 1 is off the locus")
        return (l1 + l2) / den
    l1, l2 = float(l1), float(l2)
    den = l1 * l2 - 1
    if den == 0:
        raise ZeroDivisionError("l1*l2 = 1 is off the locus")
    return (l1 + l2) / den


def lift4(l1, l2, l3):
    """Zeroth slot of the four-variable locus: (s1~ - s3~)/(s2~ - 1)."""
    exact = all(isinstance(x, (int, Fraction, QuadExt)) for x in (l1, l2, l3))
    if exact:
        l1, l2, l3 = (QuadExt.of(x) for x in (l1, l2, l3))
    else:
        l1, l2, l3 = (float(x) for x in (l1, l2, l3))
    s1 = l1 + l2 + l3
    s2 = l1 * l2 + l2 * l3 + l3 * l1
    s3 = l1 * l2 * l3
    den = s2 - 1
    if (exact and not den) or (not exact and den == 0):
        raise ZeroDivisionError("sigma_2 = 1 is off the locus")
    return (s1 - s3) / den


def _on_locus(values, rtol=LOCUS_RTOL) -> float:
    vals = [float(v) for v in values]
    s1 = sum(vals)
    s3 = sum(
        vals[i] * vals[j] * vals[k] for i, j, k in itertools.combinations(range(len(vals)), 3)
    )
    residual = abs(s1 - s3)
    if residual > rtol * (1 + abs(s1)):
        raise ValueError(f"values violate sigma1 = sigma3 (residual {residual:g})")
    return residual


def classify(values: Sequence[float]) -> str:
    """Connected component of the constraint locus for a triple or quadruple."""
    vals = [float(v) for v in values]
    _on_locus(vals)
    if len(vals) == 3:
        products = [vals[i] * vals[j] for i, j in itertools.combinations(range(3), 2)]
        same_sign = all(v > 0 for v in vals) or all(v < 0 for v in vals)
        if same_sign and all(p > 1 for p in products):
            return CGP if vals[0] > 0 else CGM
        if all(p < 1 for p in products):
            return CG0
        raise ValueError("sign pattern matches no component of the locus")
    if len(vals) == 4:
        drops = []
        for i in range(4):
            rest = [vals[j] for j in range(4) if j != i]
            drops.append(rest[0] * rest[1] + rest[1] * rest[2] + rest[2] * rest[0])
        if all(d < 1 for d in drops):
            return CS0
        if all(d > 1 for d in drops):
            s1 = sum(vals)
            if s1 >= 4 - CS_PLUS_BAND:
                return CSP
            if s1 <= -4 + CS_PLUS_BAND:
                return CSM
            raise ValueError(f"sigma1 = {s1:g} out of range for the outer components")
        raise ValueError("sign pattern matches no component of the locus")
    raise ValueError("classify expects 3 or 4 values")


def _canonical(vals: list[float]) -> list[float]:
    """Sorted descending, global sign flipped so the largest magnitude is >= 0."""
    vals = sorted(vals, reverse=True)
    if -vals[-1] > vals[0]:
        vals = sorted([-v for v in vals], reverse=True)
    return vals


# -- normal forms -----------------------------------------------------------------


def coass_normal_form(J: Sequence[Sequence[float]], tol: float = 1e-8) -> SingularTriple:
    """Signed singular values of a coassociative graph plane.

    Follows the structure of the normal-form construction: rotate the domain
    by the SVD factor V in SO(4), rotate the range by the induced SO(3)
    matrix, then diagonalize the resulting symmetric 3x3 block.
    """
    J = [[float(J[i][a]) for a in range(4)] for i in range(3)]
    plane = octalg.coass_graph_plane(J)
    if octalg.is_calibrated(plane) is None:
        raise ValueError("graph plane is not coassociative")
    jtj = _matmul(_transpose(J), J)
    vals, V = jacobi_eigh(jtj)
    order = sorted(range(4), key=lambda i: vals[i])
    perm = [order[0]] + sorted(order[1:])
    V = [[V[r][c] for c in perm] for r in range(4)]
    if _det_f(V) < 0:
        for r in range(4):
            V[r][0] = -V[r][0]
    A = so4_induced_so3(V)
    Bfull = _matmul(_transpose(A), _matmul(J, V))
    kercol = max(abs(Bfull[i][0]) for i in range(3))
    scale = 1 + max(abs(x) for row in J for x in row)
    if kercol > tol * scale:
        raise ValueError("graph plane has no kernel direction; not coassociative")
    B = [[Bfull[i][a + 1] for a in range(3)] for i in range(3)]
    skew = max(abs(B[i][j] - B[j][i]) for i in range(3) for j in range(3))
    if skew > tol * scale:
        raise ValueError("normal-form block is not symmetric; not coassociative")
    Bs = [[(B[i][j] + B[j][i]) / 2 for j in range(3)] for i in range(3)]
    lams, _ = jacobi_eigh(Bs)
    lams = _canonical(lams)
    residual = _on_locus(lams)
    return SingularTriple(tuple(lams), classify(lams), residual)


def associative_normal_form(J: Sequence[Sequence[float]], tol: float = 1e-8) -> SingularTriple:
    """Signed singular values of an associative graph plane.

    The vanishing associator forces the slope matrix to be symmetric with
    trace equal to determinant; the values are its eigenvalues.
    """
    J = [[float(J[i][j]) for j in range(3)] for i in range(3)]
    plane = octalg.associative_graph_plane(J)
    if octalg.is_calibrated(plane) is None:
        raise ValueError("graph plane is not associative")
    scale = 1 + max(abs(x) for row in J for x in row)
    skew = max(abs(J[i][j] - J[j][i]) for i in range(3) for j in range(3))
    if skew > tol * scale:
        raise ValueError("slope matrix is not symmetric; not associative")
    lams, _ = jacobi_eigh(J)
    lams = _canonical(lams)
    residual = _on_locus(lams)
    return SingularTriple(tuple(lams), classify(lams), residual)


def cayley_normal_form(J: Sequence[Sequence[float]], tol: float = 1e-8) -> SingularQuad:
    """Signed singular values of a Cayley graph plane.

    The unsigned values are the singular values of the slope matrix; the sign
    pattern is pinned down by the constraint locus together with the sign of
    the calibration on the graphical orientation (+1 on the component through
    the origin, -1 on the outer ones).
    """
    J = [[float(J[i][a]) for a in range(4)] for i in range(4)]
    plane = octalg.cayley_graph_plane(J)
    cal_sign = octalg.is_calibrated(plane)
    if cal_sign is None:
        raise ValueError("graph plane is not Cayley")
    jtj = _matmul(_transpose(J), J)
    vals, _ = jacobi_eigh(jtj)
    svals = [math.sqrt(max(v, 0.0)) for v in vals]
    s1ref = sum(svals)
    best = None
    for signs in itertools.product((1, -1), repeat=3):
        cand = [svals[0]] + [s * v for s, v in zip(signs, svals[1:])]
        s1 = sum(cand)
        s3 = sum(cand[i] * cand[j] * cand[k] for i, j, k in itertools.combinations(range(4), 3))
        residual = abs(s1 - s3)
        if residual > tol * (1 + abs(s1)) + 10 * tol * (1 + s1ref) ** 3:
            continue
        cand = _canonical(cand)
        try:
            comp = classify(cand)
        except ValueError:
            continue
        want = CS0 if cal_sign > 0 else (CSP, CSM)
        if (comp == CS0) != (cal_sign > 0):
            continue
        if best is None or residual < best[0]:
            best = (residual, cand, comp)
    if best is None:
        raise ValueError("no sign pattern matches the constraint locus")
    residual, cand, comp = best
    return SingularQuad(tuple(cand), comp, residual)


# -- the explicit Lipschitz minimal cone ------------------------------------------


# -- locus samplers (used by sampling checks and test harnesses) -------------------


def sample_cg0(rng, spread: float = 1.0) -> tuple[float, float, float]:
    """Random point of the inner component: lift the third slope, keep all
    pairwise products below 1."""
    while True:
        l1 = rng.uniform(-spread, spread)
        l2 = rng.uniform(-spread, spread)
        if abs(l1 * l2 - 1) < 1e-6:
            continue
        l3 = lift3(l1, l2)
        vals = (l1, l2, l3)
        if all(vals[i] * vals[j] < 1 for i, j in itertools.combinations(range(3), 2)):
            return vals


def sample_cgplus(rng, lo: float = 1.05, hi: float = 3.0) -> tuple[float, float, float]:
    while True:
        l1 = rng.uniform(lo, hi)
        l2 = rng.uniform(lo, hi)
        if l1 * l2 <= 1 + 1e-9:
            continue
        l3 = lift3(l1, l2)
        vals = (l1, l2, l3)
        if all(v > 0 for v in vals) and all(
            vals[i] * vals[j] > 1 for i, j in itertools.combinations(range(3), 2)
        ):
            return vals


def sample_cs0(rng, spread: float = 0.8) -> tuple[float, float, float, float]:
    while True:
        ls = [rng.uniform(-spread, spread) for _ in range(3)]
        s2 = ls[0] * ls[1] + ls[1] * ls[2] + ls[2] * ls[0]
        if abs(s2 - 1) < 1e-6:
            continue
        w = lift4(*ls)
        vals = (w, *ls)
        drops = []
        for i in range(4):
            rest = [vals[j] for j in range(4) if j != i]
            drops.append(rest[0] * rest[1] + rest[1] * rest[2] + rest[2] * rest[0])
        if all(d < 1 for d in drops):
            return vals


def sample_csplus(rng, spread: float = 0.25) -> tuple[float, float, float, float]:
    while True:
        ls = [1.0 + rng.uniform(-spread, spread) for _ in range(3)]
        s2 = ls[0] * ls[1] + ls[1] * ls[2] + ls[2] * ls[0]
        if s2 <= 1 + 1e-6:
            continue
        w = lift4(*ls)
        vals = (w, *ls)
        try:
            if classify(vals) == CSP:
                return vals
        except ValueError:
            continue


# -- the explicit Lipschitz minimal cone ------------------------------------------


_HALF_ROOT5 = math.sqrt(5) / 2


def lawson_osserman(x: Sequence[float]):
    """The explicit Lipschitz map R^4 -> R^3 whose graph is a cone with
    constant singular values, together with its differential.

    Returns (f(x), J(x)) with J the closed-form 3x4 Jacobian.
    """
    x0, x1, x2, x3 = (float(c) for c in x)
    r2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3
    if r2 == 0:
        raise ValueError("the map is singular at the origin")
    r = math.sqrt(r2)
    q = (
        x0 * x0 + x1 * x1 - x2 * x2 - x3 * x3,
        2 * x1 * x2 + 2 * x0 * x3,
        2 * x1 * x3 - 2 * x0 * x2,
    )
    f = tuple(_HALF_ROOT5 * qi / r for qi in q)
    dq = (
        (2 * x0, 2 * x1, -2 * x2, -2 * x3),
        (2 * x3, 2 * x2, 2 * x1, 2 * x0),
        (-2 * x2, 2 * x3, -2 * x0, 2 * x1),
    )
    xs = (x0, x1, x2, x3)
    J = [
        [_HALF_ROOT5 * (dq[i][a] / r - q[i] * xs[a] / (r * r2)) for a in range(4)]
        for i in range(3)
    ]
    return f, J
