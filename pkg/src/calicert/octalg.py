"""Multilinear algebra of the associative, coassociative and Cayley calibrations.

Coordinates are fixed once: R^7 is ordered (x0, x1, x2, x3, y1, y2, y3) and
R^8 is ordered (x0..x3, y0..y3).  With om_i = dx0^dxi + dxj^dxk (cyclic ijk)
and gm_i the same in y, the three calibration forms are

    phi = dy123 - dy1^om1 - dy2^om2 - dy3^om3              (3-form on R^7)
    psi = dx0123 - dy23^om1 - dy31^om2 - dy12^om3          (4-form on R^7)
    Phi = dx0123 + dy0123 - om1^gm1 - om2^gm2 - om3^gm3    (4-form on R^8)

phi's metric dual is the 7-dimensional cross product, psi's the associator,
Phi's the triple cross product.  All orientation-sensitive signs downstream
(the delta flag, component classification) depend on these conventions.

Forms are stored sparsely over sorted index tuples.  Coefficients may be
exact scalars, floats, or polynomials, so the same contraction code serves
numeric checks and symbolic identities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import QuadExt
from .polycore import MPoly


def _iszero(c) -> bool:
    if isinstance(c, float):
        return c == 0.0
    return not c


class FormTable:
    """A sparse alternating k-form: map from strictly increasing index tuples
    to coefficients."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs=None):
        self.n = n
        self.k = k
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if not _iszero(c):
                    self.coeffs[tuple(key)] = c

    @staticmethod
    def one_form(n: int, i: int) -> "FormTable":
        return FormTable(n, 1, {(i,): QuadExt(1)})

    def __add__(self, other: "FormTable") -> "FormTable":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("form arity/dimension mismatch")
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key)
            s = c if s is None else s + c
            if _iszero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return FormTable(self.n, self.k, out)

    def __neg__(self):
        return FormTable(self.n, self.k, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "FormTable":
        return FormTable(self.n, self.k, {k: c * factor for k, c in self.coeffs.items()})

    def wedge(self, other: "FormTable") -> "FormTable":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out: dict = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                merged = ka + kb
                if len(set(merged)) != len(merged):
                    continue
                order = sorted(range(len(merged)), key=lambda i: merged[i])
                sign = _perm_sign(order)
                key = tuple(sorted(merged))
                c = ca * cb if sign == 1 else -(ca * cb)
                s = out.get(key)
                s = c if s is None else s + c
                if _iszero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        return FormTable(self.n, self.k + other.k, out)

    def contract(self, v: Sequence) -> "FormTable":
        """Interior product: (i_v w)(a, ...) = w(v, a, ...)."""
        out: dict = {}
        for key, c in self.coeffs.items():
            for p, idx in enumerate(key):
                if _iszero(v[idx]):
                    continue
                rest = key[:p] + key[p + 1:]
                term = c * v[idx]
                if p % 2:
                    term = -term
                s = out.get(rest)
                s = term if s is None else s + term
                if _iszero(s):
                    out.pop(rest, None)
                else:
                    out[rest] = s
        return FormTable(self.n, self.k - 1, out)

    def restrict_away(self, dead: Sequence[int]) -> "FormTable":
        """Drop every term that involves one of the given coordinate indices."""
        dead = set(dead)
        return FormTable(
            self.n, self.k, {k: c for k, c in self.coeffs.items() if not dead & set(k)}
        )

    def coefficient(self, indices: Sequence[int]):
        """Coefficient on an arbitrary index tuple, with alternation signs."""
        idx = tuple(indices)
        if len(set(idx)) != len(idx):
            return QuadExt(0)
        order = sorted(range(len(idx)), key=lambda i: idx[i])
        c = self.coeffs.get(tuple(sorted(idx)))
        if c is None:
            return QuadExt(0)
        return c if _perm_sign(order) == 1 else -c

    def __call__(self, *vectors: Sequence):
        if len(vectors) != self.k:
            raise ValueError(f"{self.k}-form applied to {len(vectors)} vectors")
        form = self
        for v in vectors:
            form = form.contract(v)
        z = form.coeffs.get(())
        if z is not None:
            return z
        # zero of the same kind as the stored coefficients
        for c in self.coeffs.values():
            return c * 0
        return QuadExt(0)

    def __eq__(self, other):
        if not isinstance(other, FormTable):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        for key in keys:
            a = self.coeffs.get(key)
            b = other.coeffs.get(key)
            if a is None:
                if not _iszero(b):
                    return False
            elif b is None:
                if not _iszero(a):
                    return False
            elif not _iszero(a - b):
                return False
        return True

    def __hash__(self):
        raise TypeError("FormTable is not hashable")

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key in sorted(self.coeffs):
            parts.append(f"({self.coeffs[key]})*e{''.join(map(str, key))}")
        return " + ".join(parts)


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- coordinate conventions ----------------------------------------------------

# R^7 slots: x0 x1 x2 x3 y1 y2 y3  ->  0 1 2 3 4 5 6
# R^8 slots: x0 x1 x2 x3 y0 y1 y2 y3 -> 0 1 2 3 4 5 6 7

X7 = {i: i for i in range(4)}
Y7 = {i: 3 + i for i in (1, 2, 3)}
X8 = {i: i for i in range(4)}
Y8 = {i: 4 + i for i in range(4)}

_CYCLES = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def _dx7(i):
    return FormTable.one_form(7, X7[i])


def _dy7(i):
    return FormTable.one_form(7, Y7[i])


def _dx8(i):
    return FormTable.one_form(8, X8[i])


def _dy8(i):
    return FormTable.one_form(8, Y8[i])


def _omega(i: int, dx) -> FormTable:
    j, k = _CYCLES[i]
    return dx(0).wedge(dx(i)) + dx(j).wedge(dx(k))


def _build_phi() -> FormTable:
    phi = _dy7(1).wedge(_dy7(2)).wedge(_dy7(3))
    for i in (1, 2, 3):
        phi = phi - _dy7(i).wedge(_omega(i, _dx7))
    return phi


def _build_psi() -> FormTable:
    psi = _dx7(0).wedge(_dx7(1)).wedge(_dx7(2)).wedge(_dx7(3))
    for i in (1, 2, 3):
        j, k = _CYCLES[i]
        psi = psi - _dy7(j).wedge(_dy7(k)).wedge(_omega(i, _dx7))
    return psi


def _build_cayley() -> FormTable:
    out = _dx8(0).wedge(_dx8(1)).wedge(_dx8(2)).wedge(_dx8(3))
    out = out + _dy8(0).wedge(_dy8(1)).wedge(_dy8(2)).wedge(_dy8(3))
    for i in (1, 2, 3):
        out = out - _omega(i, _dx8).wedge(_omega(i, _dy8))
    return out


PHI7 = _build_phi()
PSI7 = _build_psi()
CAYLEY8 = _build_cayley()


def _float_form(form: FormTable) -> FormTable:
    return FormTable(form.n, form.k, {k: float(c) for k, c in form.coeffs.items()})


PHI7_F = _float_form(PHI7)
PSI7_F = _float_form(PSI7)
CAYLEY8_F = _float_form(CAYLEY8)


def basis_vector(n: int, i: int, one=None):
    one = QuadExt(1) if one is None else one
    v = [QuadExt(0)] * n
    v[i] = one
    return v


# -- products ------------------------------------------------------------------


def _pick(exact_form: FormTable, float_form: FormTable, vectors) -> tuple[FormTable, object]:
    if _is_exact(vectors):
        return exact_form, QuadExt(0)
    return float_form, 0.0


def cross7(u: Sequence, v: Sequence) -> list:
    """Vector cross product on R^7: <u x v, w> = phi(u, v, w)."""
    if len(u) != 7 or len(v) != 7:
        raise ValueError("cross7 requires 7-vectors")
    table, zero = _pick(PHI7, PHI7_F, (u, v))
    form = table.contract(u).contract(v)
    return [form.coeffs.get((i,), zero) for i in range(7)]


def associator(u: Sequence, v: Sequence, w: Sequence) -> list:
    """Associator on R^7: <z, [u,v,w]> = 2 psi(z, u, v, w)."""
    if any(len(x) != 7 for x in (u, v, w)):
        raise ValueError("associator requires 7-vectors")
    table, zero = _pick(PSI7, PSI7_F, (u, v, w))
    # psi(z,u,v,w) = -psi(u,v,w,z): contract u,v,w then flip the sign
    form = table.contract(u).contract(v).contract(w)
    return [-2 * form.coeffs.get((i,), zero) for i in range(7)]


def triple_cross8(u: Sequence, v: Sequence, w: Sequence) -> list:
    """Triple cross product on R^8: <z, u x v x w> = Phi(z, u, v, w)."""
    if any(len(x) != 8 for x in (u, v, w)):
        raise ValueError("triple_cross8 requires 8-vectors")
    table, zero = _pick(CAYLEY8, CAYLEY8_F, (u, v, w))
    form = table.contract(u).contract(v).contract(w)
    return [-form.coeffs.get((i,), zero) for i in range(8)]


def dot(u: Sequence, v: Sequence):
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


# -- planes and calibration tests ----------------------------------------------

KIND_COASS = "coassociative"
KIND_ASSOC = "associative"
KIND_CAYLEY = "cayley"

_KIND_DIMS = {KIND_COASS: (7, 4), KIND_ASSOC: (7, 3), KIND_CAYLEY: (8, 4)}


@dataclass
class CalPlane:
    """An oriented k-plane given by an ordered spanning set."""

    kind: str
    vectors: list

    def __post_init__(self):
        n, k = _KIND_DIMS[self.kind]
        if len(self.vectors) != k or any(len(v) != n for v in self.vectors):
            raise ValueError(f"{self.kind} plane needs {k} vectors of dimension {n}")


def _is_exact(vectors) -> bool:
    return all(isinstance(c, (QuadExt, int, Fraction)) for v in vectors for c in v)


def _to_exact(vectors):
    return [[QuadExt.of(c) for c in v] for v in vectors]


def _rank_exact(rows: list) -> int:
    """Row rank by Gaussian elimination over the exact field."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [c * inv for c in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _float_norm(v):
    return math.sqrt(sum(float(c) ** 2 for c in v))


def _gram_independent_float(vectors, tol=1e-9) -> bool:
    basis = []
    for v in vectors:
        w = [float(c) for c in v]
        for b in basis:
            proj = sum(a * c for a, c in zip(w, b))
            w = [a - proj * c for a, c in zip(w, b)]
        nw = math.sqrt(sum(c * c for c in w))
        if nw <= tol * max(1.0, _float_norm(v)):
            return False
        basis.append([c / nw for c in w])
    return True


FLOAT_TOL = 1e-9


def is_calibrated(plane: CalPlane, tol: float = FLOAT_TOL):
    """Kind-specific calibration test.

    Returns +1 or -1 (the sign of the calibration on the oriented plane) when
    calibrated, or None when not.  Exact inputs are decided exactly; float
    inputs to the given tolerance after normalization.
    """
    vs = plane.vectors
    exact = _is_exact(vs)
    if exact:
        vs = _to_exact(vs)
        if _rank_exact(vs) != len(vs):
            raise ValueError("spanning set is linearly dependent")
    else:
        vs = [[float(c) for c in v] for v in vs]
        if not _gram_independent_float(vs):
            raise ValueError("spanning set is linearly dependent")

    def _sign_of(value):
        if exact:
            return value.sign()
        return 1 if value > 0 else -1

    if plane.kind == KIND_COASS:
        phi = PHI7 if exact else PHI7_F
        psi = PSI7 if exact else PSI7_F
        scale = 1.0 if exact else max(_float_norm(v) for v in vs) ** 3
        for triple in itertools.combinations(range(4), 3):
            val = phi(*(vs[i] for i in triple))
            if exact:
                if val:
                    return None
            elif abs(float(val)) > tol * scale:
                return None
        return _sign_of(psi(*vs))
    if plane.kind == KIND_ASSOC:
        phi = PHI7 if exact else PHI7_F
        bracket = associator(*vs)
        scale = 1.0 if exact else max(_float_norm(v) for v in vs) ** 3
        if exact:
            if any(c for c in bracket):
                return None
        elif _float_norm([float(c) for c in bracket]) > tol * scale:
            return None
        return _sign_of(phi(*vs))
    if plane.kind == KIND_CAYLEY:
        for triple in itertools.combinations(range(4), 3):
            t = triple_cross8(*(vs[i] for i in triple))
            if exact:
                if _rank_exact(vs + [t]) != 4:
                    return None
            else:
                w = [float(c) for c in t]
                basis = []
                for v in vs:
                    b = [float(c) for c in v]
                    for prev in basis:
                        proj = sum(x * y for x, y in zip(b, prev))
                        b = [x - proj * y for x, y in zip(b, prev)]
                    nb = _float_norm(b)
                    basis.append([c / nb for c in b])
                for b in basis:
                    proj = sum(x * y for x, y in zip(w, b))
                    w = [x - proj * y for x, y in zip(w, b)]
                if _float_norm(w) > tol * max(1.0, _float_norm(t)):
                    return None
        cayley = CAYLEY8 if exact else CAYLEY8_F
        return _sign_of(cayley(*vs))
    raise ValueError(f"unknown plane kind {plane.kind!r}")


# -- graph planes ---------------------------------------------------------------


def coass_graph_plane(J) -> CalPlane:
    """Graph plane of a linear map R^4 -> R^3: columns J[i][a] = dy_i/dx_a."""
    vs = []
    for a in range(4):
        v = [0.0] * 7 if not _is_exact(J) else [QuadExt(0)] * 7
        v[a] = QuadExt(1) if _is_exact(J) else 1.0
        for i in range(3):
            v[4 + i] = J[i][a] if _is_exact(J) else float(J[i][a])
        vs.append(v)
    return CalPlane(KIND_COASS, vs)


def associative_graph_plane(J) -> CalPlane:
    """Graph plane of a linear map (y1,y2,y3) -> (x1,x2,x3)."""
    exact = _is_exact(J)
    vs = []
    for i in range(3):
        v = [QuadExt(0)] * 7 if exact else [0.0] * 7
        v[4 + i] = QuadExt(1) if exact else 1.0
        for j in range(3):
            v[1 + j] = J[j][i] if exact else float(J[j][i])
        vs.append(v)
    return CalPlane(KIND_ASSOC, vs)


def cayley_graph_plane(J) -> CalPlane:
    """Graph plane of a linear map R^4 -> R^4 in R^8."""
    exact = _is_exact(J)
    vs = []
    for a in range(4):
        v = [QuadExt(0)] * 8 if exact else [0.0] * 8
        v[a] = QuadExt(1) if exact else 1.0
        for i in range(4):
            v[4 + i] = J[i][a] if exact else float(J[i][a])
        vs.append(v)
    return CalPlane(KIND_CAYLEY, vs)


# -- adapted frames --------------------------------------------------------------


def coass_frame(lam: Sequence[float], delta: int | None = None, tol: float = 1e-8):
    """The adapted orthonormal frame for a coassociative graph plane with
    signed singular values lam (float mode)."""
    l1, l2, l3 = (float(x) for x in lam)
    s1, s3 = l1 + l2 + l3, l1 * l2 * l3
    if abs(s1 - s3) > tol * (1 + abs(s1)):
        raise ValueError("singular values do not satisfy the constraint locus")
    same_sign = all(x > 0 for x in lam) or all(x < 0 for x in lam)
    d = -1 if (same_sign and l1 * l2 > 1) else 1
    if delta is None:
        delta = d
    elif delta != d:
        raise ValueError(f"orientation flag {delta} inconsistent with component (expect {d})")
    frame = [[0.0] * 7 for _ in range(7)]
    frame[0][0] = float(delta)
    for i, li in enumerate((l1, l2, l3), start=1):
        s = math.sqrt(1 + li * li)
        frame[i][i] = 1 / s
        frame[i][3 + i] = li / s
        frame[3 + i][3 + i] = delta / s
        frame[3 + i][i] = -delta * li / s
    return frame


def cayley_frame(lam: Sequence[float], tol: float = 1e-8):
    """The adapted orthonormal frame for a Cayley graph plane on the component
    through the origin (float mode)."""
    ls = [float(x) for x in lam]
    s1 = sum(ls)
    s3 = sum(ls[i] * ls[j] * ls[k] for i, j, k in itertools.combinations(range(4), 3))
    if abs(s1 - s3) > tol * (1 + abs(s1)):
        raise ValueError("singular values do not satisfy the constraint locus")
    for i in range(4):
        others = [ls[j] for j in range(4) if j != i]
        pair = others[0] * others[1] + others[1] * others[2] + others[2] * others[0]
        if pair >= 1:
            raise ValueError("frame is defined on the component through the origin only")
    frame = [[0.0] * 8 for _ in range(8)]
    for i, li in enumerate(ls):
        s = math.sqrt(1 + li * li)
        frame[i][i] = 1 / s
        frame[i][4 + i] = li / s
        frame[4 + i][4 + i] = 1 / s
        frame[4 + i][i] = -li / s
    return frame


def coass_frame_exact(lam: Sequence) -> tuple[list, list]:
    """Unnormalized adapted frame with the squared scales 1 + lam_i^2 kept
    separate (exact mode)."""
    lam = [QuadExt.of(x) for x in lam]
    s1 = lam[0] + lam[1] + lam[2]
    s3 = lam[0] * lam[1] * lam[2]
    if s1 != s3:
        raise ValueError("singular values do not satisfy the constraint locus")
    same = all(x.sign() > 0 for x in lam) or all(x.sign() < 0 for x in lam)
    delta = QuadExt(-1 if (same and (lam[0] * lam[1] - 1).sign() > 0) else 1)
    vectors = [basis_vector(7, 0, delta)]
    scales = [QuadExt(1)]
    for i, li in enumerate(lam, start=1):
        v = [QuadExt(0)] * 7
        v[i] = QuadExt(1)
        v[3 + i] = li
        vectors.append(v)
        scales.append(1 + li * li)
    for i, li in enumerate(lam, start=1):
        v = [QuadExt(0)] * 7
        v[3 + i] = delta
        v[i] = -delta * li
        vectors.append(v)
        scales.append(1 + li * li)
    return vectors, scales


def calibrated_frame(kind: str, lam: Sequence, delta: int | None = None):
    """Adapted frame dispatch (float mode)."""
    if kind == KIND_COASS:
        return coass_frame(lam, delta)
    if kind == KIND_CAYLEY:
        return cayley_frame(lam)
    raise ValueError(f"no adapted frame for kind {kind!r}")


# -- basis checks -----------------------------------------------------------------


def _structure_coeff(form: FormTable, *indices: int):
    return form.coefficient(indices)


def basis_check(kind: str, frame, tol: float = FLOAT_TOL):
    """Verify that an ordered orthonormal frame reproduces the coordinate
    product table: all 21 pairwise cross products for g2, all 56 triple cross
    products for spin7.  Returns (ok, violations)."""
    exact = _is_exact(frame)
    vs = _to_exact(frame) if exact else [[float(c) for c in v] for v in frame]
    n = 7 if kind == "g2" else 8
    if len(vs) != n or any(len(v) != n for v in vs):
        raise ValueError(f"{kind} basis check needs {n} vectors of dimension {n}")
    for i in range(n):
        for j in range(i, n):
            g = dot(vs[i], vs[j])
            want = 1 if i == j else 0
            if exact:
                if g != QuadExt(want):
                    raise ValueError("input frame is not orthonormal")
            elif abs(float(g) - want) > 1e-9:
                raise ValueError("input frame is not orthonormal")
    violations = []
    if kind == "g2":
        for i, j in itertools.combinations(range(7), 2):
            got = cross7(vs[i], vs[j])
            want = [QuadExt(0)] * 7 if exact else [0.0] * 7
            for k in range(7):
                c = _structure_coeff(PHI7, i, j, k)
                if _iszero(c):
                    continue
                for a in range(7):
                    want[a] = want[a] + (c if exact else float(c)) * vs[k][a]
            residual = [g - w for g, w in zip(got, want)]
            if exact:
                bad = any(c for c in residual)
            else:
                bad = _float_norm([float(c) for c in residual]) > tol
            if bad:
                violations.append(((i, j), [str(c) for c in residual] if exact else _float_norm(residual)))
    elif kind == "spin7":
        for i, j, k in itertools.combinations(range(8), 3):
            got = triple_cross8(vs[i], vs[j], vs[k])
            want = [QuadExt(0)] * 8 if exact else [0.0] * 8
            for l in range(8):
                c = _structure_coeff(CAYLEY8, l, i, j, k)
                if _iszero(c):
                    continue
                for a in range(8):
                    want[a] = want[a] + (c if exact else float(c)) * vs[l][a]
            residual = [g - w for g, w in zip(got, want)]
            if exact:
                bad = any(c for c in residual)
            else:
                bad = _float_norm([float(c) for c in residual]) > tol
            if bad:
                violations.append(((i, j, k), [str(c) for c in residual] if exact else _float_norm(residual)))
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    return (not violations), violations


# -- reductions to the complex volume form -----------------------------------------


def _complex_wedge(parts: list[tuple[FormTable, FormTable]]) -> tuple[FormTable, FormTable]:
    """Wedge of complex 1-forms given as (real, imaginary) pairs."""
    re, im = parts[0]
    for re2, im2 in parts[1:]:
        re, im = re.wedge(re2) - im.wedge(im2), re.wedge(im2) + im.wedge(re2)
    return re, im


def slag_reduction(identity_id: str, lam=None) -> bool:
    """Exact form-table identities reducing symmetric calibrated cones to the
    real part of a phase-rotated complex volume form.

    The phase factor cos + i sin = (1 + i*lam)/sqrt(1 + lam^2) enters with the
    square root cleared from both sides, so each identity is polynomial in the
    slope parameter and is checked symbolically.
    """
    lam_poly = MPoly.var("l") if lam is None else MPoly.const(QuadExt.of(lam))
    one = MPoly.const(1)

    if identity_id == "coass_x0":
        lhs = PSI7.contract(basis_vector(7, 0))
        zs = [(_dx7(i), _dy7(i)) for i in (1, 2, 3)]
        rhs, _ = _complex_wedge(zs)
        return lhs == rhs

    if identity_id == "coass_phase":
        # unnormalized direction dx3 + lam*dy3; both sides carry sqrt(1+lam^2)
        u = [MPoly.const(0)] * 7
        u[3] = one
        u[6] = lam_poly
        sym = FormTable(7, 4, {k: MPoly.const(c) for k, c in PSI7.coeffs.items()})
        lhs = sym.contract(u).contract(_embed_poly(basis_vector(7, 0)))
        zs = [(_poly_form(_dx7(i)), _poly_form(_dy7(i))) for i in (1, 2)]
        re, im = _complex_wedge(zs)
        # phase pi + arctan(lam): Re[-(1 + i lam) z] = -re + lam*im
        rhs = re.scale(-one) + im.scale(lam_poly)
        return lhs == rhs

    if identity_id == "cayley_assoc":
        lhs = CAYLEY8.contract(basis_vector(8, 0))
        rhs = _dx8(1).wedge(_dx8(2)).wedge(_dx8(3))
        for i in (1, 2, 3):
            rhs = rhs - _dx8(i).wedge(_omega(i, _dy8))
        return lhs == rhs

    if identity_id == "cayley_phase":
        u = [MPoly.const(0)] * 8
        u[0] = one
        u[4] = lam_poly
        sym = FormTable(8, 4, {k: MPoly.const(c) for k, c in CAYLEY8.coeffs.items()})
        lhs = sym.contract(u).restrict_away([0, 4])
        zs = [(_poly_form(_dx8(i)), _poly_form(_dy8(i))) for i in (1, 2, 3)]
        re, im = _complex_wedge(zs)
        # phase arctan(lam): Re[(1 + i lam) z] = re - lam*im
        rhs = re.scale(one) - im.scale(lam_poly)
        return lhs == rhs

    raise ValueError(f"unknown identity {identity_id!r}")


def _poly_form(form: FormTable) -> FormTable:
    return FormTable(form.n, form.k, {k: MPoly.const(c) for k, c in form.coeffs.items()})


def _embed_poly(v) -> list:
    return [MPoly.const(QuadExt.of(c)) for c in v]
