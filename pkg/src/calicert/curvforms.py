"""Second-fundamental-form constraint spaces and curvature quadratic forms.

For a calibrated graph the tensor h[a][i][j] = <D_{e_i} e_j, e_a> satisfies
sixteen linear relations beyond the symmetry in (i, j).  Solving them leaves
15 free components in the 4-dimensional R^7 case and 24 in the R^8 case; the
free components group into column vectors against which the Laplacian of the
log calibration density is an explicit quadratic form.

This module builds the exact kernel of the relations, reconstructs full
tensors from the free group coordinates, assembles the three quadratic-form
matrices, and verifies (symbolically, over the free components) that the raw
specialization of the Laplacian identity equals the grouped block form.  It
also runs the determinant identity suite that reduces those block matrices to
closed forms on the constraint locus.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import formulas, octalg
from .exactnum import QuadExt
from .polycore import (
    MPoly,
    RatFunc,
    det_poly,
    substitute,
    substitute_many,
    symmetric_reduce,
)

KIND_COASS = "coass"
KIND_ASSOC = "assoc"
KIND_CAYLEY = "cayley"

_INDEXES = {
    KIND_COASS: ((4, 5, 6), (0, 1, 2, 3)),
    KIND_CAYLEY: ((4, 5, 6, 7), (0, 1, 2, 3)),
    KIND_ASSOC: ((0, 1, 2, 3), (4, 5, 6)),
}


def sff_unknowns(kind: str) -> list[tuple[int, int, int]]:
    normals, tangents = _INDEXES[kind]
    return [
        (a, i, j)
        for a in normals
        for i, j in itertools.combinations_with_replacement(tangents, 2)
    ]


def sff_relations(kind: str) -> list[list[tuple[int, int, int]]]:
    """The sixteen (twelve for assoc) relations as signed index triples."""
    normals, tangents = _INDEXES[kind]
    rows = []
    if kind == KIND_COASS:
        patterns = [
            ((4, 1, 1), (5, 2, 1), (6, 3, 1)),
            ((4, 0, 1), (5, 3, 1), (6, 2, -1)),
            ((4, 3, 1), (5, 0, -1), (6, 1, -1)),
            ((4, 2, 1), (5, 1, -1), (6, 0, 1)),
        ]
    elif kind == KIND_CAYLEY:
        patterns = [
            ((4, 0, 1), (5, 1, 1), (6, 2, 1), (7, 3, 1)),
            ((4, 1, 1), (5, 0, -1), (6, 3, -1), (7, 2, 1)),
            ((4, 2, 1), (5, 3, 1), (6, 0, -1), (7, 1, -1)),
            ((4, 3, 1), (5, 2, -1), (6, 1, 1), (7, 0, -1)),
        ]
    elif kind == KIND_ASSOC:
        patterns = [
            ((1, 4, 1), (2, 5, 1), (3, 6, 1)),
            ((0, 4, 1), (3, 5, 1), (2, 6, -1)),
            ((3, 4, 1), (0, 5, -1), (1, 6, -1)),
            ((2, 4, 1), (1, 5, -1), (0, 6, 1)),
        ]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    for i in tangents:
        for pat in patterns:
            rows.append([(a, j, i, s) for a, j, s in pat])
    return rows


def _key(a: int, i: int, j: int) -> tuple[int, int, int]:
    return (a, i, j) if i <= j else (a, j, i)


def sff_constraint_space(kind: str, drop_relation: int | None = None):
    """Exact kernel of the linear relations over the symmetric components.

    Returns (dimension, basis, unknowns): basis vectors are Fraction dicts
    keyed by (a, i, j) with i <= j.
    """
    unknowns = sff_unknowns(kind)
    index = {u: k for k, u in enumerate(unknowns)}
    rows = []
    relations = sff_relations(kind)
    for r, rel in enumerate(relations):
        if r == drop_relation:
            continue
        row = [Fraction(0)] * len(unknowns)
        for a, j, i, s in rel:
            row[index[_key(a, j, i)]] += s
        rows.append(row)
    # exact row reduction
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(len(unknowns)):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [c * inv for c in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free_cols = [c for c in range(len(unknowns)) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = {unknowns[fc]: Fraction(1)}
        for r, pc in enumerate(pivots):
            val = -m[r][fc]
            if val:
                vec[unknowns[pc]] = val
        basis.append(vec)
    return len(free_cols), basis, unknowns


# -- grouped free coordinates ----------------------------------------------------

COASS_GROUPS = {
    0: ((4, 2, 3), (5, 3, 1), (6, 1, 2)),
    1: ((5, 0, 3), (5, 1, 2), (6, 0, 2), (6, 3, 1)),
    2: ((6, 0, 1), (6, 2, 3), (4, 0, 3), (4, 1, 2)),
    3: ((4, 0, 2), (4, 3, 1), (5, 0, 1), (5, 2, 3)),
}

# dependent components in terms of the free ones (all coefficients +-1)
COASS_DEPENDENTS = {
    (4, 0, 1): (((6, 1, 2), 1), ((5, 3, 1), -1)),
    (5, 0, 2): (((4, 2, 3), 1), ((6, 1, 2), -1)),
    (6, 0, 3): (((5, 3, 1), 1), ((4, 2, 3), -1)),
    (4, 0, 0): (((5, 0, 3), -1), ((6, 0, 2), 1)),
    (4, 1, 1): (((5, 1, 2), -1), ((6, 3, 1), -1)),
    (4, 2, 2): (((5, 1, 2), 1), ((6, 0, 2), -1)),
    (4, 3, 3): (((5, 0, 3), 1), ((6, 3, 1), 1)),
    (5, 0, 0): (((6, 0, 1), -1), ((4, 0, 3), 1)),
    (5, 1, 1): (((6, 0, 1), 1), ((4, 1, 2), 1)),
    (5, 2, 2): (((6, 2, 3), -1), ((4, 1, 2), -1)),
    (5, 3, 3): (((6, 2, 3), 1), ((4, 0, 3), -1)),
    (6, 0, 0): (((4, 0, 2), -1), ((5, 0, 1), 1)),
    (6, 1, 1): (((4, 3, 1), 1), ((5, 0, 1), -1)),
    (6, 2, 2): (((4, 0, 2), 1), ((5, 2, 3), 1)),
    (6, 3, 3): (((4, 3, 1), -1), ((5, 2, 3), -1)),
}

CAYLEY_GROUPS = {
    4: ((5, 0, 1), (5, 2, 3), (6, 0, 2), (6, 1, 3), (7, 0, 3), (7, 1, 2)),
    5: ((4, 0, 1), (4, 2, 3), (6, 0, 3), (6, 1, 2), (7, 0, 2), (7, 1, 3)),
    6: ((4, 0, 2), (4, 1, 3), (5, 0, 3), (5, 1, 2), (7, 0, 1), (7, 2, 3)),
    7: ((4, 0, 3), (4, 1, 2), (5, 0, 2), (5, 1, 3), (6, 0, 1), (6, 2, 3)),
}

# solved from the sixteen relations; verified against the kernel basis in tests
CAYLEY_DEPENDENTS = {
    (4, 0, 0): (((5, 0, 1), -1), ((6, 0, 2), -1), ((7, 0, 3), -1)),
    (4, 1, 1): (((5, 0, 1), 1), ((6, 1, 3), 1), ((7, 1, 2), -1)),
    (4, 2, 2): (((5, 2, 3), -1), ((6, 0, 2), 1), ((7, 1, 2), 1)),
    (4, 3, 3): (((5, 2, 3), 1), ((6, 1, 3), -1), ((7, 0, 3), 1)),
    (5, 0, 0): (((4, 0, 1), 1), ((6, 0, 3), -1), ((7, 0, 2), 1)),
    (5, 1, 1): (((4, 0, 1), -1), ((6, 1, 2), -1), ((7, 1, 3), -1)),
    (5, 2, 2): (((4, 2, 3), 1), ((6, 1, 2), 1), ((7, 0, 2), -1)),
    (5, 3, 3): (((4, 2, 3), -1), ((6, 0, 3), 1), ((7, 1, 3), 1)),
    (6, 0, 0): (((4, 0, 2), 1), ((5, 0, 3), 1), ((7, 0, 1), -1)),
    (6, 1, 1): (((4, 1, 3), -1), ((5, 1, 2), 1), ((7, 0, 1), 1)),
    (6, 2, 2): (((4, 0, 2), -1), ((5, 1, 2), -1), ((7, 2, 3), -1)),
    (6, 3, 3): (((4, 1, 3), 1), ((5, 0, 3), -1), ((7, 2, 3), 1)),
    (7, 0, 0): (((4, 0, 3), 1), ((5, 0, 2), -1), ((6, 0, 1), 1)),
    (7, 1, 1): (((4, 1, 2), 1), ((5, 1, 3), 1), ((6, 0, 1), -1)),
    (7, 2, 2): (((4, 1, 2), -1), ((5, 0, 2), 1), ((6, 2, 3), 1)),
    (7, 3, 3): (((4, 0, 3), -1), ((5, 1, 3), -1), ((6, 2, 3), -1)),
}

# grouped column vectors: (sign, key) entries in the order the matrices expect
COASS_VECTORS = {
    0: ((1, (4, 2, 3)), (1, (5, 3, 1)), (1, (6, 1, 2))),
    1: ((1, (5, 0, 3)), (1, (5, 1, 2)), (1, (6, 0, 2)), (1, (6, 3, 1))),
    2: ((1, (6, 0, 1)), (1, (6, 2, 3)), (1, (4, 0, 3)), (1, (4, 1, 2))),
    3: ((1, (4, 0, 2)), (1, (4, 3, 1)), (1, (5, 0, 1)), (1, (5, 2, 3))),
}

CAYLEY_VECTORS = {
    4: ((1, (5, 2, 3)), (1, (6, 1, 3)), (1, (7, 1, 2)), (1, (5, 0, 1)), (1, (6, 0, 2)), (1, (7, 0, 3))),
    5: ((1, (6, 0, 3)), (1, (7, 0, 2)), (1, (4, 2, 3)), (-1, (6, 1, 2)), (-1, (7, 1, 3)), (-1, (4, 0, 1))),
    6: ((1, (7, 0, 1)), (1, (4, 1, 3)), (1, (5, 0, 3)), (1, (7, 2, 3)), (1, (4, 0, 2)), (1, (5, 1, 2))),
    7: ((-1, (4, 1, 2)), (-1, (5, 0, 2)), (-1, (6, 0, 1)), (1, (4, 0, 3)), (1, (5, 1, 3)), (1, (6, 2, 3))),
}


class SffTensor:
    """Full second-fundamental-form tensor with h[a][i][j] = h[a][j][i]."""

    def __init__(self, kind: str, entries: Mapping[tuple[int, int, int], object]):
        self.kind = kind
        self.entries = {_key(*k): v for k, v in entries.items()}

    def get(self, a: int, i: int, j: int):
        return self.entries.get(_key(a, i, j), 0)

    def residuals(self) -> list:
        out = []
        for rel in sff_relations(self.kind):
            total = 0
            for a, j, i, s in rel:
                total = total + s * self.get(a, j, i)
            out.append(total)
        return out


def group_dependents(kind: str, free: Mapping[tuple[int, int, int], object]) -> SffTensor:
    """Reconstruct the full tensor from the free grouped coordinates."""
    if kind == KIND_COASS:
        groups, deps = COASS_GROUPS, COASS_DEPENDENTS
    elif kind == KIND_CAYLEY:
        groups, deps = CAYLEY_GROUPS, CAYLEY_DEPENDENTS
    else:
        raise ValueError(f"no grouped coordinates for kind {kind!r}")
    names = [k for g in groups.values() for k in g]
    entries = {}
    for k in names:
        entries[k] = free.get(k, 0)
    for target, combo in deps.items():
        val = 0
        for key, sign in combo:
            val = val + sign * entries[key]
        entries[target] = val
    return SffTensor(kind, entries)


def free_symbols(kind: str) -> dict[tuple[int, int, int], MPoly]:
    groups = COASS_GROUPS if kind == KIND_COASS else CAYLEY_GROUPS
    return {
        k: MPoly.var(f"h{k[0]}{k[1]}{k[2]}") for g in groups.values() for k in g
    }


# -- the quadratic-form matrices ---------------------------------------------------


def quadform_l0(l, m, n):
    """3x3 form paired with the fully off-diagonal group."""
    l, m, n = (_sym(x) for x in (l, m, n))
    return [
        [6 + m * m + n * n, -2 + l * m - n * n, -2 + n * l - m * m],
        [-2 + l * m - n * n, 6 + n * n + l * l, -2 + m * n - l * l],
        [-2 + n * l - m * m, -2 + m * n - l * l, 6 + l * l + m * m],
    ]


def quadform_l(l, m, n):
    """4x4 form paired with each mixed group."""
    l, m, n = (_sym(x) for x in (l, m, n))
    z = l * 0
    return [
        [z + 4, z, -1 + m * n, 1 + n * l],
        [z, 4 + (l + m) ** 2, -1 - l * m, 1 + l * l],
        [-1 + m * n, -1 - l * m, z + 4, z],
        [1 + n * l, 1 + l * l, z, 4 + (l + n) ** 2],
    ]


def quadform_m(e, l, m, n):
    """6x6 form paired with each group in the R^8 case."""
    e, l, m, n = (_sym(x) for x in (e, l, m, n))
    z = e * 0
    return [
        [z + 4, -1 + l * m, -1 + n * l, z, -1 - e * m, 1 + e * n],
        [-1 + l * m, z + 4, -1 + m * n, 1 + e * l, z, -1 - e * n],
        [-1 + n * l, -1 + m * n, z + 4, -1 - e * l, 1 + e * m, z],
        [z, 1 + e * l, -1 - e * l, 4 + (e + l) ** 2, 1 + e * e, 1 + e * e],
        [-1 - e * m, z, 1 + e * m, 1 + e * e, 4 + (e + m) ** 2, 1 + e * e],
        [1 + e * n, -1 - e * n, z, 1 + e * e, 1 + e * e, 4 + (e + n) ** 2],
    ]


def _sym(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, str):
        return MPoly.var(x)
    if isinstance(x, (int, Fraction, QuadExt)):
        return MPoly.const(x)
    return x  # floats pass through for numeric evaluation


def build_quadform(kind: str, args: Sequence):
    """Dispatch: 'l0' and 'l' take three slope symbols, 'm' takes four."""
    if kind == "l0":
        return quadform_l0(*args)
    if kind == "l":
        return quadform_l(*args)
    if kind == "m":
        return quadform_m(*args)
    raise ValueError(f"unknown quadratic form {kind!r}")


# -- Laplacian quadratic-form identity ----------------------------------------------


def _quad_value(mat, vec):
    total = MPoly.const(0)
    for i, vi in enumerate(vec):
        for j, vj in enumerate(vec):
            total = total + mat[i][j] * vi * vj
    return total


def _group_vector(tensor: SffTensor, pattern) -> list:
    return [sign * tensor.get(*key) for sign, key in pattern]


def laplacian_quadform_identity(kind: str) -> bool:
    """Exact polynomial identity between the raw specialization of the
    Laplacian of the log calibration density and the grouped block form."""
    if kind == KIND_COASS:
        free = free_symbols(kind)
        t = group_dependents(kind, free)
        l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
        lhs = MPoly.const(0)
        for a in (4, 5, 6):
            for i in range(4):
                for j in range(4):
                    lhs = lhs + t.get(a, i, j) ** 2
        for k in range(4):
            lhs = lhs + (
                l1 ** 2 * t.get(4, 1, k) ** 2
                + l2 ** 2 * t.get(5, 2, k) ** 2
                + l3 ** 2 * t.get(6, 3, k) ** 2
                + 2 * l1 * l2 * t.get(4, 2, k) * t.get(5, 1, k)
                + 2 * l2 * l3 * t.get(5, 3, k) * t.get(6, 2, k)
                + 2 * l3 * l1 * t.get(4, 3, k) * t.get(6, 1, k)
            )
        rhs = _quad_value(quadform_l0(l1, l2, l3), _group_vector(t, COASS_VECTORS[0]))
        rhs = rhs + _quad_value(quadform_l(l1, l2, l3), _group_vector(t, COASS_VECTORS[1]))
        rhs = rhs + _quad_value(quadform_l(l2, l3, l1), _group_vector(t, COASS_VECTORS[2]))
        rhs = rhs + _quad_value(quadform_l(l3, l1, l2), _group_vector(t, COASS_VECTORS[3]))
        return lhs == rhs
    if kind == KIND_CAYLEY:
        free = free_symbols(kind)
        t = group_dependents(kind, free)
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
        rhs = _quad_value(quadform_m(l0, l1, l2, l3), _group_vector(t, CAYLEY_VECTORS[4]))
        rhs = rhs + _quad_value(quadform_m(l1, l2, l3, l0), _group_vector(t, CAYLEY_VECTORS[5]))
        rhs = rhs + _quad_value(quadform_m(l2, l3, l0, l1), _group_vector(t, CAYLEY_VECTORS[6]))
        rhs = rhs + _quad_value(quadform_m(l3, l0, l1, l2), _group_vector(t, CAYLEY_VECTORS[7]))
        return lhs == rhs
    raise ValueError(f"no Laplacian identity for kind {kind!r}")


# -- numeric cross-check against the ambient master formula -------------------------


def _form_value_f(form, vectors):
    return float(form(*vectors))


def wang_specialization_check(kind: str, lam: Sequence[float], h_free=None, seed=None) -> float:
    """Assemble Laplacian(log (star Omega)^-1) from the ambient master formula
    on the adapted frame and compare with the specialized expression.

    Returns the absolute difference; lam must lie on the constraint locus
    (the inner component for the R^8 case).
    """
    rng = random.Random(seed)
    if kind == KIND_COASS:
        lam = [float(x) for x in lam]
        frame = octalg.coass_frame(lam)
        tangents, normals = frame[:4], frame[4:]
        same = all(x > 0 for x in lam) or all(x < 0 for x in lam)
        delta = -1.0 if (same and lam[0] * lam[1] > 1) else 1.0
        omega = octalg.FormTable(7, 4, {(0, 1, 2, 3): delta})
        groups = COASS_GROUPS
        alphas = (4, 5, 6)
    elif kind == KIND_CAYLEY:
        lam = [float(x) for x in lam]
        frame = octalg.cayley_frame(lam)
        tangents, normals = frame[:4], frame[4:]
        omega = octalg.FormTable(8, 4, {(0, 1, 2, 3): 1.0})
        groups = CAYLEY_GROUPS
        alphas = (4, 5, 6, 7)
    else:
        raise ValueError(f"no specialization check for kind {kind!r}")

    if h_free is None:
        h_free = {
            k: rng.uniform(-1, 1) for g in groups.values() for k in g
        }
    tensor = group_dependents(kind, h_free)

    def h(a, i, k):
        return float(tensor.get(a, i, k))

    star = _form_value_f(omega, tangents)
    total_h2 = sum(
        h(a, i, j) ** 2 for a in alphas for i in range(4) for j in range(4)
    )
    # Laplacian of star Omega: replace tangent slots pairwise by normals
    lap = -star * total_h2
    for (p, q) in itertools.combinations(range(4), 2):
        for ai, a in enumerate(alphas):
            for bi, b in enumerate(alphas):
                slots = list(tangents)
                slots[p] = normals[ai]
                slots[q] = normals[bi]
                om = _form_value_f(omega, slots)
                if om == 0.0:
                    continue
                for k in range(4):
                    lap += 2 * om * h(a, p, k) * h(b, q, k)
    # gradient of star Omega
    grad2 = 0.0
    for k in range(4):
        ek = 0.0
        for p in range(4):
            for ai, a in enumerate(alphas):
                slots = list(tangents)
                slots[p] = normals[ai]
                om = _form_value_f(omega, slots)
                if om:
                    ek += om * h(a, p, k)
        grad2 += ek * ek
    target = (-star * lap + grad2) / (star * star)

    if kind == KIND_COASS:
        l1, l2, l3 = lam
        ref = total_h2
        for k in range(4):
            ref += (
                l1 ** 2 * h(4, 1, k) ** 2
                + l2 ** 2 * h(5, 2, k) ** 2
                + l3 ** 2 * h(6, 3, k) ** 2
                + 2 * l1 * l2 * h(4, 2, k) * h(5, 1, k)
                + 2 * l2 * l3 * h(5, 3, k) * h(6, 2, k)
                + 2 * l3 * l1 * h(4, 3, k) * h(6, 1, k)
            )
    else:
        l0, l1, l2, l3 = lam
        ref = total_h2
        for k in range(4):
            ref += (
                l0 ** 2 * h(4, 0, k) ** 2
                + l1 ** 2 * h(5, 1, k) ** 2
                + l2 ** 2 * h(6, 2, k) ** 2
                + l3 ** 2 * h(7, 3, k) ** 2
                + 2 * l0 * l1 * h(4, 1, k) * h(5, 0, k)
                + 2 * l0 * l2 * h(4, 2, k) * h(6, 0, k)
                + 2 * l0 * l3 * h(4, 3, k) * h(7, 0, k)
                + 2 * l1 * l2 * h(5, 2, k) * h(6, 1, k)
                + 2 * l1 * l3 * h(5, 3, k) * h(7, 1, k)
                + 2 * l2 * l3 * h(6, 3, k) * h(7, 2, k)
            )
    return abs(target - ref)


# -- determinant identity suite ------------------------------------------------------


@dataclass
class IdentityResult:
    id: str
    status: str
    wall_time_ms: float
    detail: str = ""


def _result(ident: str, ok: bool, started: float, detail: str = "") -> IdentityResult:
    return IdentityResult(
        ident, "verified" if ok else "failed", (time.perf_counter() - started) * 1000, detail
    )


def det3_symbolic() -> MPoly:
    l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
    return det_poly(quadform_l0(l1, l2, l3))


def det4_symbolic() -> MPoly:
    l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
    return det_poly(quadform_l(l3, l1, l2))


def det6_symbolic() -> MPoly:
    l0, l1, l2, l3 = MPoly.variables("l0", "l1", "l2", "l3")
    return det_poly(quadform_m(l0, l1, l2, l3))


def det6_reduced() -> MPoly:
    """det of the 6x6 form as a polynomial in (s1, s2, s3 -> locus, w)."""
    det = det6_symbolic().rename({"l0": "w"})
    reduced = symmetric_reduce(det, ["l1", "l2", "l3"], ["s1", "s2", "s3"])
    s1, s2, w = MPoly.variables("s1", "s2", "w")
    return reduced.subs_polys({"s3": s1 + w * (1 - s2)})


def det_identity_suite(kind: str = "all") -> list[IdentityResult]:
    """The five determinant identities, verified exactly modulo the locus."""
    out = []
    run3 = kind in ("all", KIND_COASS)
    run6 = kind in ("all", KIND_CAYLEY)

    if run3:
        started = time.perf_counter()
        det3 = det3_symbolic()
        reduced = symmetric_reduce(det3, ["l1", "l2", "l3"], ["s1", "s2", "s3"])
        s1 = MPoly.var("s1")
        on_locus = reduced.subs_polys({"s3": s1})
        ok = on_locus == formulas.DET3_REDUCED
        out.append(_result("det3_reduction", ok, started, "3x3 determinant in (s1, s2) on the locus"))

        started = time.perf_counter()
        det4 = det4_symbolic()
        l1, l2 = MPoly.variables("l1", "l2")
        t = l1 * l2
        lift = RatFunc(l1 + l2, l1 * l2 - 1)
        det4_sub = substitute(det4, "l3", lift)
        s_rf = RatFunc(-(t * (t - 1)) - (l1 + l2) ** 2, t - 1)
        t_rf = RatFunc.of(t)
        lhs = det4_sub * RatFunc.of((1 - t) ** 2) - 4 * (1 - t_rf) * s_rf * (8 - s_rf * s_rf)
        rhs = substitute_many(formulas.L1_POLY, {"s": s_rf, "t": t_rf})
        ok = lhs == rhs
        out.append(_result("det4_inner_identity", ok, started, "4x4 determinant vs quadratic-in-s closed form"))

        started = time.perf_counter()
        u_rf = RatFunc.of((l1 - l2) ** 2)
        rhs_poly = (
            -4 * MPoly.var("u") ** 3
            - MPoly.var("u") ** 2 * formulas.DET4_U2
            + MPoly.var("u") * formulas.DET4_U1
            + formulas.DET4_U0
        )
        lhs = det4_sub * RatFunc.of((1 - t) ** 4)
        rhs = substitute_many(rhs_poly, {"u": u_rf, "t": t_rf})
        ok = lhs == rhs
        out.append(_result("det4_outer_identity", ok, started, "4x4 determinant vs cubic-in-u closed form"))

    if run6:
        started = time.perf_counter()
        reduced = det6_reduced()
        ok = reduced == 4 * formulas.F_DET
        out.append(_result("det6_equals_4f", ok, started, "6x6 determinant = 4*(closed form) on the locus"))

        started = time.perf_counter()
        l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
        disc = ((l1 - l2) * (l2 - l3) * (l3 - l1)) ** 2
        disc_red = symmetric_reduce(disc, ["l1", "l2", "l3"], ["s1", "s2", "s3"])
        s1, s2, w = MPoly.variables("s1", "s2", "w")
        disc_locus = disc_red.subs_polys({"s3": s1 + w * (1 - s2)})
        ok = disc_locus == formulas.G_DISC
        out.append(_result("disc_equals_g", ok, started, "squared slope-difference product on the locus"))

    return out


# -- numeric evaluators used by sampling checks and the region CLI --------------------


def det3_value(l1: float, l2: float, l3: float) -> float:
    s1, s2 = l1 + l2 + l3, l1 * l2 + l2 * l3 + l3 * l1
    return 4 * (8 - s2 * s2) * (4 - s2) + s1 * s1 * (40 - (3 - s2) ** 2)


def det4_value(l1: float, l2: float, l3: float) -> float:
    """det of the 4x4 form with distinguished slot the lift of (l1, l2)."""
    t = l1 * l2
    if t == 1:
        raise ZeroDivisionError
    s = -(l1 * l2 + l2 * l3 + l3 * l1)
    val = (
        s * s * (-(t ** 4) + 2 * t ** 3 + 12 * t * t + 16 * t - 20)
        + 2 * s * (2 * t ** 5 - 7 * t ** 4 - 24 * t ** 3 + 68 * t * t - 42 * t + 12)
        + (4 * t ** 6 - 4 * t ** 5 - 93 * t ** 4 + 78 * t ** 3 + 240 * t * t - 408 * t + 192)
    )
    return (val + 4 * (1 - t) * s * (8 - s * s)) / (1 - t) ** 2


def quadform_values_at(lam: Sequence[float]):
    """Numeric [det L0, det L(1,2,3), det L(2,3,1), det L(3,1,2)] at a locus point."""
    l1, l2, l3 = lam
    return [
        det3_value(l1, l2, l3),
        det4_value(l2, l3, l1),
        det4_value(l3, l1, l2),
        det4_value(l1, l2, l3),
    ]
