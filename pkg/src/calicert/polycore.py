"""Sparse multivariate polynomial algebra with exact coefficients.

Polynomials are stored as a map from exponent vectors to nonzero
:class:`~calicert.exactnum.QuadExt` coefficients over an ordered variable
registry.  The canonical term order is graded-lexicographic, which makes
printing and leading-term computations deterministic.

Besides ring arithmetic the module provides the operations the verification
suites are built on: substitution of rational functions with denominator
clearing, rewriting of symmetric polynomials in the elementary symmetric
generators, fraction-free (Bareiss) determinants with a cofactor cross-check,
the explicit 16-term quartic discriminant, Sturm-sequence real root isolation,
and exact sign evaluation of a univariate polynomial at an algebraic number.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Mapping, Sequence

from .exactnum import QuadExt

Scalar = QuadExt


def _to_scalar(value) -> QuadExt:
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadExt(value)
    raise TypeError(f"cannot use {type(value).__name__} as polynomial coefficient")


class MPoly:
    """Sparse multivariate polynomial over QuadExt coefficients.

    ``registry`` is a tuple of variable names kept in sorted order; ``terms``
    maps exponent tuples (one entry per registry slot) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("registry", "terms")

    def __init__(self, registry: Sequence[str] = (), terms: Mapping[tuple, QuadExt] | None = None):
        registry = tuple(registry)
        if list(registry) != sorted(registry):
            raise ValueError("variable registry must be sorted")
        self.registry = registry
        self.terms = dict(terms) if terms else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(value, registry: Sequence[str] = ()) -> "MPoly":
        value = _to_scalar(value)
        registry = tuple(registry)
        if not value:
            return MPoly(registry)
        return MPoly(registry, {(0,) * len(registry): value})

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly((name,), {(1,): QuadExt(1)})

    @staticmethod
    def variables(*names: str) -> "list[MPoly]":
        return [MPoly.var(n) for n in names]

    @staticmethod
    def univariate(name: str, coeffs: Sequence) -> "MPoly":
        """Build sum(coeffs[k] * name**k) from a low-to-high coefficient list."""
        terms = {}
        for k, c in enumerate(coeffs):
            c = _to_scalar(c)
            if c:
                terms[(k,)] = c
        return MPoly((name,), terms)

    # -- registry plumbing -------------------------------------------------

    def _with_registry(self, registry: tuple) -> "MPoly":
        if registry == self.registry:
            return self
        idx = [registry.index(v) for v in self.registry]
        n = len(registry)
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for i, e in zip(idx, exp):
                new[i] = e
            terms[tuple(new)] = c
        return MPoly(registry, terms)

    @staticmethod
    def _aligned(p: "MPoly", q: "MPoly") -> tuple["MPoly", "MPoly"]:
        if p.registry == q.registry:
            return p, q
        merged = tuple(sorted(set(p.registry) | set(q.registry)))
        return p._with_registry(merged), q._with_registry(merged)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant(self) -> QuadExt:
        """The coefficient of the constant term."""
        z = (0,) * len(self.registry)
        return self.terms.get(z, QuadExt(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.registry:
            return 0
        i = self.registry.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coeff_of(self, name: str, power: int) -> "MPoly":
        """Coefficient of name**power, as a polynomial in the other variables."""
        if name not in self.registry:
            return self if power == 0 else MPoly(self.registry)
        i = self.registry.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                e = list(exp)
                e[i] = 0
                terms[tuple(e)] = c
        return MPoly(self.registry, terms)

    def coeffs_in(self, name: str) -> "list[MPoly]":
        """Coefficients [c0, ..., cN] with self = sum ck * name**k."""
        return [self.coeff_of(name, k) for k in range(self.degree_in(name) + 1)]

    def is_univariate_rational(self) -> bool:
        used = {v for exp in self.terms for v, e in zip(self.registry, exp) if e}
        return len(used) <= 1 and all(c.is_rational for c in self.terms.values())

    def single_variable(self) -> str | None:
        used = sorted({v for exp in self.terms for v, e in zip(self.registry, exp) if e})
        if len(used) == 1:
            return used[0]
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = MPoly._aligned(self, other)
        terms = dict(p.terms)
        for exp, c in q.terms.items():
            s = terms.get(exp)
            s = c if s is None else s + c
            if s:
                terms[exp] = s
            elif exp in terms:
                del terms[exp]
        return MPoly(p.registry, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.registry, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_mpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = MPoly._aligned(self, other)
        if len(p.terms) < len(q.terms):
            p, q = q, p
        terms: dict = {}
        for eq, cq in q.terms.items():
            for ep, cp in p.terms.items():
                exp = tuple(a + b for a, b in zip(ep, eq))
                c = cp * cq
                s = terms.get(exp)
                s = c if s is None else s + c
                if s:
                    terms[exp] = s
                elif exp in terms:
                    del terms[exp]
        return MPoly(p.registry, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = MPoly.const(1, self.registry)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = _to_scalar(other)
        return self * other.inverse()

    def __eq__(self, other):
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = MPoly._aligned(self, other)
        return p.terms == q.terms

    def __hash__(self):
        raise TypeError("MPoly is not hashable")

    # -- evaluation and substitution ----------------------------------------

    def subs_values(self, values: Mapping[str, object]) -> "MPoly":
        """Substitute exact scalar values for some variables."""
        vals = {k: _to_scalar(v) for k, v in values.items()}
        keep = tuple(v for v in self.registry if v not in vals)
        out = MPoly(keep)
        for exp, c in self.terms.items():
            coeff = c
            kept = []
            for name, e in zip(self.registry, exp):
                if name in vals:
                    coeff = coeff * vals[name] ** e
                else:
                    kept.append(e)
            out = out + MPoly(keep, {tuple(kept): coeff}) if coeff else out
        return out

    def eval_exact(self, values: Mapping[str, object]) -> QuadExt:
        out = self.subs_values(values)
        if not out.is_constant():
            missing = [v for v in out.registry if out.degree_in(v)]
            raise ValueError(f"missing values for {missing}")
        return out.constant()

    def eval_float(self, values: Mapping[str, float]) -> float:
        total = 0.0
        for exp, c in self.terms.items():
            t = float(c)
            for name, e in zip(self.registry, exp):
                if e:
                    t *= values[name] ** e
            total += t
        return total

    def subs_polys(self, assignments: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables (no denominators)."""
        out = MPoly.const(0)
        for exp, c in self.terms.items():
            term = MPoly.const(c)
            for name, e in zip(self.registry, exp):
                if not e:
                    continue
                repl = assignments.get(name)
                term = term * (repl ** e if repl is not None else MPoly.var(name) ** e)
            out = out + term
        return out

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        new_names = [mapping.get(v, v) for v in self.registry]
        if len(set(new_names)) != len(new_names):
            raise ValueError("variable rename collision")
        order = sorted(range(len(new_names)), key=lambda i: new_names[i])
        registry = tuple(new_names[i] for i in order)
        terms = {tuple(exp[i] for i in order): c for exp, c in self.terms.items()}
        return MPoly(registry, terms)

    # -- ordering and printing ----------------------------------------------

    def _grlex_key(self, exp: tuple) -> tuple:
        return (sum(exp), exp)

    def leading(self) -> tuple[tuple, QuadExt]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=self._grlex_key)
        return exp, self.terms[exp]

    def sorted_terms(self) -> list[tuple[tuple, QuadExt]]:
        return sorted(self.terms.items(), key=lambda kv: self._grlex_key(kv[0]), reverse=True)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.registry, exp)
                if e
            )
            cs = str(c)
            if any(exp):
                if cs == "1":
                    piece = mono
                elif cs == "-1":
                    piece = f"-{mono}"
                elif c.is_rational:
                    piece = f"{cs}*{mono}"
                else:
                    piece = f"({cs})*{mono}"
            else:
                piece = cs
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"MPoly({self})"


def _as_mpoly(value) -> "MPoly":
    if isinstance(value, MPoly):
        return value
    if isinstance(value, (int, Fraction, QuadExt)):
        return MPoly.const(value)
    return NotImplemented


def poly_arith(p: MPoly, q, op: str) -> MPoly:
    """Named arithmetic entry point: op in {add, sub, mul, pow}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise ValueError(f"unknown op {op!r}")


# -- rational functions -------------------------------------------------------


class RatFunc:
    """Quotient of two MPoly.  Not reduced; equality is cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        num = _as_mpoly(num)
        den = MPoly.const(1) if den is None else _as_mpoly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def of(value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return RatFunc(_as_mpoly(value))

    def __add__(self, other):
        other = RatFunc.of(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) + (-self)

    def __mul__(self, other):
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.of(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        return RatFunc(self.num ** n, self.den ** n)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other):
        other = RatFunc.of(other)
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("RatFunc is not hashable")

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def substitute(p: MPoly, var: str, r: RatFunc | MPoly) -> RatFunc:
    """Replace ``var`` by a rational function, clearing denominators.

    The result has denominator den(r)**deg_var(p); all other variables pass
    through untouched.
    """
    r = RatFunc.of(r)
    deg = p.degree_in(var)
    num = MPoly.const(0)
    for k, ck in enumerate(p.coeffs_in(var)):
        num = num + ck * r.num ** k * r.den ** (deg - k)
    return RatFunc(num, r.den ** deg)


def substitute_many(p: MPoly, assignments: Mapping[str, RatFunc | MPoly]) -> RatFunc:
    """Simultaneous substitution of rational functions for several variables.

    Result denominator is prod den(r_k)**deg_k(p), the single cleared
    denominator for all substituted variables."""
    rfs = {k: RatFunc.of(v) for k, v in assignments.items()}
    degs = {k: p.degree_in(k) for k in rfs}
    den = MPoly.const(1)
    for k, rf in rfs.items():
        den = den * rf.den ** degs[k]
    total = MPoly.const(0)
    for exp, c in p.terms.items():
        t = MPoly.const(c)
        for name, e in zip(p.registry, exp):
            if name in rfs:
                t = t * rfs[name].num ** e * rfs[name].den ** (degs[name] - e)
            elif e:
                t = t * MPoly.var(name) ** e
        total = total + t
    return RatFunc(total, den)


# -- elementary symmetric rewriting -------------------------------------------


def elementary_symmetric(vars_: Sequence[str], k: int) -> MPoly:
    names = sorted(vars_)
    n = len(names)
    terms = {}
    if k == 0:
        return MPoly.const(1, names)
    for subset in itertools.combinations(range(n), k):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = QuadExt(1)
    return MPoly(tuple(names), terms)


def is_symmetric(p: MPoly, sym_vars: Sequence[str]) -> bool:
    """Invariance under a transposition and the full cycle of sym_vars."""
    names = list(sym_vars)
    if len(names) < 2:
        return True
    swap = {names[0]: names[1], names[1]: names[0]}
    cyc = {names[i]: names[(i + 1) % len(names)] for i in range(len(names))}
    return p.rename(swap) == p and p.rename(cyc) == p


def symmetric_reduce(p: MPoly, sym_vars: Sequence[str], s_names: Sequence[str]) -> MPoly:
    """Rewrite p, symmetric in sym_vars, as a polynomial in the elementary
    symmetric polynomials (named s_names) and any remaining variables.

    Uses iterated leading-term elimination in graded-lex order.  Raises if p
    is not symmetric in sym_vars.
    """
    sym = sorted(sym_vars)
    if len(s_names) != len(sym):
        raise ValueError("need one output name per symmetric variable")
    if not is_symmetric(p, sym):
        raise ValueError("polynomial is not symmetric in the given variables")
    order = {v: i for i, v in enumerate(sym)}
    elems = [elementary_symmetric(sym, k) for k in range(1, len(sym) + 1)]
    svars = [MPoly.var(n) for n in s_names]

    result = MPoly.const(0)
    rest = p
    while not rest.is_zero:
        # group terms by their exponent pattern on the symmetric variables
        best = None
        for exp in rest.terms:
            lam = tuple(
                exp[rest.registry.index(v)] if v in rest.registry else 0 for v in sym
            )
            key = (sum(lam), lam)
            if best is None or key > best[0]:
                best = (key, lam)
        lam = best[1]
        if not any(lam):
            result = result + rest
            break
        if list(lam) != sorted(lam, reverse=True):
            raise ValueError("leading exponent not weakly decreasing; not symmetric")
        # coefficient of the monomial prod sym[i]**lam[i] in the extra variables
        coeff_terms = {}
        for exp, c in rest.terms.items():
            match = True
            extra = []
            for v in rest.registry:
                e = exp[rest.registry.index(v)]
                if v in order:
                    if e != lam[order[v]]:
                        match = False
                        break
                else:
                    extra.append((v, e))
            if match:
                coeff_terms[tuple(e for _, e in extra)] = c
        extras = tuple(v for v in rest.registry if v not in order)
        coeff = MPoly(extras, coeff_terms)
        # elementary-symmetric product with the same leading exponent
        piece_sym = MPoly.const(1)
        piece_s = MPoly.const(1)
        for i in range(len(sym)):
            step = lam[i] - (lam[i + 1] if i + 1 < len(sym) else 0)
            if step:
                piece_sym = piece_sym * elems[i] ** step
                piece_s = piece_s * svars[i] ** step
        rest = rest - coeff * piece_sym
        result = result + coeff * piece_s
    return result


# -- exact division and determinants ------------------------------------------


def divexact(p: MPoly, q: MPoly) -> MPoly:
    """Exact polynomial division; raises ValueError if q does not divide p."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    p, q = MPoly._aligned(p, q)
    if p.is_zero:
        return MPoly(p.registry)
    qexp, qc = q.leading()
    quotient = {}
    rest = p
    while not rest.is_zero:
        rexp, rc = rest.leading()
        exp = tuple(a - b for a, b in zip(rexp, qexp))
        if any(e < 0 for e in exp):
            raise ValueError("inexact polynomial division")
        c = rc / qc
        quotient[exp] = c
        rest = rest - MPoly(p.registry, {exp: c}) * q
    return MPoly(p.registry, quotient)


def det_cofactor(matrix: Sequence[Sequence]) -> MPoly:
    """Determinant by first-row cofactor expansion (oracle for small sizes)."""
    m = [[_as_mpoly(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 1:
        return m[0][0]
    total = MPoly.const(0)
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sub = det_cofactor(minor)
        term = m[0][j] * sub
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_bareiss(matrix: Sequence[Sequence]) -> MPoly:
    """Fraction-free determinant via Bareiss elimination with exact division."""
    m = [[_as_mpoly(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if pivot is None:
                return MPoly.const(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = MPoly.const(0)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def det_poly(matrix: Sequence[Sequence]) -> MPoly:
    """Exact determinant.  Sizes up to 4 are cross-checked against cofactor
    expansion; larger sizes (max 8) use Bareiss elimination alone."""
    n = len(matrix)
    if n > 8:
        raise ValueError("det_poly supports sizes up to 8")
    det = det_bareiss(matrix)
    if n <= 4:
        check = det_cofactor(matrix)
        if det != check:
            raise AssertionError("Bareiss and cofactor determinants disagree")
    return det


def quartic_discriminant(a, b, c, d, e) -> MPoly:
    """Discriminant of a*x^4 + b*x^3 + c*x^2 + d*x + e (explicit 16 terms)."""
    a, b, c, d, e = (_as_mpoly(x) for x in (a, b, c, d, e))
    return (
        b * b * c * c * d * d
        - 4 * a * c ** 3 * d * d
        - 4 * b ** 3 * d ** 3
        + 18 * a * b * c * d ** 3
        - 27 * a * a * d ** 4
        - 4 * b * b * c ** 3 * e
        + 16 * a * c ** 4 * e
        + 18 * b ** 3 * c * d * e
        - 80 * a * b * c * c * d * e
        - 6 * a * b * b * d * d * e
        + 144 * a * a * c * d * d * e
        - 27 * b ** 4 * e * e
        + 144 * a * b * b * c * e * e
        - 128 * a * a * c * c * e * e
        - 192 * a * a * b * d * e * e
        + 256 * a ** 3 * e ** 3
    )


# -- dense univariate utilities over Fraction ---------------------------------


def dense_coeffs(p: MPoly, var: str | None = None) -> list[Fraction]:
    """Low-to-high rational coefficient list of a univariate polynomial."""
    if var is None:
        var = p.single_variable() or (p.registry[0] if p.registry else "t")
    cs = []
    for k in range(p.degree_in(var) + 1):
        c = p.coeff_of(var, k)
        if not c.is_constant():
            raise ValueError("polynomial is not univariate")
        cs.append(c.constant().as_rational())
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


def _uv_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _uv_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


def _uv_deriv(p: Sequence[Fraction]) -> list[Fraction]:
    return _uv_trim([k * c for k, c in enumerate(p)][1:])


def _uv_rem(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) >= len(q) and _uv_trim(p):
        factor = p[-1] / q[-1]
        shift = len(p) - len(q)
        for i, c in enumerate(q):
            p[i + shift] -= factor * c
        p.pop()
        _uv_trim(p)
    return p


def _uv_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p, q = _uv_trim(list(p)), _uv_trim(list(q))
    while q:
        p, q = q, _uv_trim(_uv_rem(p, q))
    if p:
        lead = p[-1]
        p = [c / lead for c in p]
    return p


def squarefree_part(p: Sequence[Fraction]) -> list[Fraction]:
    g = _uv_gcd(p, _uv_deriv(p))
    if len(g) <= 1:
        return _uv_trim(list(p))
    return _uv_quo(p, g)


def _uv_quo(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p = list(p)
    out = [Fraction(0)] * (len(p) - len(q) + 1)
    while len(p) >= len(q) and _uv_trim(p):
        factor = p[-1] / q[-1]
        shift = len(p) - len(q)
        out[shift] = factor
        for i, c in enumerate(q):
            p[i + shift] -= factor * c
        p.pop()
        _uv_trim(p)
    return _uv_trim(out)


def sturm_chain(p: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [_uv_trim(list(p)), _uv_deriv(p)]
    while chain[-1]:
        r = [-c for c in _uv_rem(chain[-2], chain[-1])]
        if not _uv_trim(r):
            break
        chain.append(r)
    return [c for c in chain if c]


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _uv_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Sequence[Fraction], lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of distinct real roots of (squarefree) p in the interval (lo, hi]."""
    if chain is None:
        chain = sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def root_bound(p: Sequence[Fraction]) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def sturm_isolate(
    p: MPoly | Sequence[Fraction], width: Fraction = Fraction(1, 8)
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, one per distinct real root of p.

    The square-free part of p is used, so multiple roots are isolated once.
    Intervals never have a root at an endpoint, and each is bisected down to
    the requested width.
    """
    coeffs = dense_coeffs(p) if isinstance(p, MPoly) else _uv_trim(list(p))
    if not coeffs:
        raise ValueError("zero polynomial has every point as a root")
    sf = squarefree_part(coeffs)
    if len(sf) <= 1:
        return []
    chain = sturm_chain(sf)
    bound = root_bound(sf)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(sf, lo, hi, chain)
        if n == 0:
            continue
        if n == 1 and _uv_eval(sf, lo) != 0 and _uv_eval(sf, hi) != 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _uv_eval(sf, mid) == 0:
            # rational root exactly at the midpoint: fence it off
            width = (hi - lo) / 4
            while True:
                a, b = mid - width, mid + width
                if (
                    _uv_eval(sf, a) != 0
                    and _uv_eval(sf, b) != 0
                    and sturm_count(sf, a, b, chain) == 1
                ):
                    break
                width /= 2
            out.append((a, b))
            stack.append((lo, a))
            stack.append((b, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    if width is not None:
        out = [refine_interval(sf, lo, hi, width) for lo, hi in out]
    return sorted(out)


def refine_interval(
    p: Sequence[Fraction], lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of squarefree p down to the given width."""
    flo = _uv_eval(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = _uv_eval(p, mid)
        if fmid == 0:
            quarter = (hi - lo) / 8
            lo, hi = mid - quarter, mid + quarter
            flo = _uv_eval(p, lo)
            continue
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


class AlgNum:
    """A real algebraic number: a squarefree rational polynomial together
    with an isolating interval certified by a Sturm count of exactly one."""

    __slots__ = ("coeffs", "lo", "hi", "_chain")

    def __init__(self, poly: MPoly | Sequence[Fraction], lo, hi):
        coeffs = dense_coeffs(poly) if isinstance(poly, MPoly) else _uv_trim(list(poly))
        coeffs = squarefree_part(coeffs)
        lo, hi = Fraction(lo), Fraction(hi)
        chain = sturm_chain(coeffs)
        if _uv_eval(coeffs, lo) == 0 or _uv_eval(coeffs, hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")
        if sturm_count(coeffs, lo, hi, chain) != 1:
            raise ValueError("interval does not isolate exactly one real root")
        self.coeffs = coeffs
        self.lo = lo
        self.hi = hi
        self._chain = chain

    def refine(self, width: Fraction) -> tuple[Fraction, Fraction]:
        self.lo, self.hi = refine_interval(self.coeffs, self.lo, self.hi, Fraction(width))
        return self.lo, self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        lo, hi = refine_interval(self.coeffs, self.lo, self.hi, Fraction(1, 10 ** 17))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"AlgNum(root in ({self.lo}, {self.hi}))"


REFINE_CAP = 256


def sign_at_algebraic(q: MPoly | Sequence[Fraction], alpha: AlgNum, shift=0) -> int:
    """Exact sign of q(alpha + shift).

    Detects q(alpha + shift) == 0 through a gcd with the defining polynomial;
    otherwise bisects the isolating interval until q has constant nonzero sign
    on it.  Raises RuntimeError after REFINE_CAP bisections (never guesses).
    """
    shift = Fraction(shift)
    qc = dense_coeffs(q) if isinstance(q, MPoly) else _uv_trim(list(q))
    if not qc:
        return 0
    # q(t + shift) by binomial expansion
    shifted = list(qc)
    if shift:
        out = [Fraction(0)] * len(shifted)
        for k, c in enumerate(shifted):
            for j in range(k + 1):
                out[j] += c * math.comb(k, j) * shift ** (k - j)
        shifted = _uv_trim(out)
    if not shifted:
        return 0
    g = _uv_gcd(list(alpha.coeffs), shifted)
    if len(g) > 1 and sturm_count(g, alpha.lo, alpha.hi) == 1:
        return 0
    qchain = sturm_chain(squarefree_part(shifted))
    lo, hi = alpha.lo, alpha.hi
    for _ in range(REFINE_CAP):
        vlo, vhi = _uv_eval(shifted, lo), _uv_eval(shifted, hi)
        if vlo != 0 and vhi != 0 and (vlo > 0) == (vhi > 0):
            if sturm_count(squarefree_part(shifted), lo, hi, qchain) == 0:
                return 1 if vlo > 0 else -1
        lo, hi = refine_interval(alpha.coeffs, lo, hi, (hi - lo) / 2)
    raise RuntimeError("sign_at_algebraic: refinement cap exceeded")


# -- resultants (for discriminant reporting) ----------------------------------


def sylvester_resultant(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """Resultant of two rational univariate polynomials (Sylvester matrix)."""
    p, q = _uv_trim(list(p)), _uv_trim(list(q))
    m, n = len(p) - 1, len(q) - 1
    if m < 0 or n < 0:
        return Fraction(0)
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(n):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        rows.append(row)
    mat = [[MPoly.const(c) for c in row] for row in rows]
    return det_bareiss(mat).constant().as_rational()


def discriminant_univariate(p: Sequence[Fraction]) -> Fraction:
    """Discriminant via resultant with the derivative, standard normalization."""
    p = _uv_trim(list(p))
    n = len(p) - 1
    res = sylvester_resultant(p, _uv_deriv(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / p[-1]


# -- polynomial text grammar ---------------------------------------------------

_PTOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|\^|[()+\-*/])")


def parse_poly(text: str) -> MPoly:
    """Parse the polynomial grammar, e.g. ``t^4 - 2*t^3 + 20*t + 20`` or
    ``(24+8*sqrt(2)) - (88+76*sqrt(2))*t``."""
    toks = []
    pos = 0
    while pos < len(text):
        m = _PTOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad polynomial text near {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take():
        nonlocal i
        if i >= len(toks):
            raise ValueError(f"unexpected end of polynomial {text!r}")
        tok = toks[i]
        i += 1
        return tok

    def atom() -> MPoly:
        nonlocal i
        tok = peek()
        if tok == "(":
            take()
            e = expr()
            if peek() != ")":
                raise ValueError(f"missing ')' in {text!r}")
            take()
            return e
        if tok is None:
            raise ValueError(f"unexpected end of polynomial {text!r}")
        if tok == "sqrt":
            take()
            if take() != "(":
                raise ValueError("sqrt requires parentheses")
            d = int(take())
            if take() != ")":
                raise ValueError("sqrt requires parentheses")
            return MPoly.const(QuadExt.root(d))
        if tok.isdigit():
            take()
            return MPoly.const(Fraction(int(tok)))
        if tok[0].isalpha() or tok[0] == "_":
            take()
            return MPoly.var(tok)
        raise ValueError(f"unexpected token {tok!r} in {text!r}")

    def power() -> MPoly:
        base = atom()
        if peek() in ("^", "**"):
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            tok = take()
            if not tok.isdigit():
                raise ValueError("exponent must be an integer")
            if neg:
                raise ValueError("negative exponents are not polynomials")
            return base ** int(tok)
        return base

    def product() -> MPoly:
        out = power()
        while peek() in ("*", "/"):
            op = take()
            rhs = power()
            if op == "*":
                out = out * rhs
            else:
                if not rhs.is_constant():
                    raise ValueError("division only by scalar constants")
                out = out / rhs.constant()
        return out

    def expr() -> MPoly:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        out = product() * sign
        while peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
            out = out + product() * sign
        return out

    result = expr()
    if i != len(toks):
        raise ValueError(f"trailing tokens in polynomial {text!r}")
    return result
