"""Bernstein-basis expansion and positivity certificates on intervals.

A polynomial p with deg(p) <= m expands uniquely over [a, b] as

    scaled basis:    p(t) = sum_k d_k (b-t)^(m-k) (t-a)^k
    binomial basis:  p(t) = sum_k c_k C(m,k) u^k (1-u)^(m-k),  u = (t-a)/(b-a)

with c_k = d_k (b-a)^m / C(m,k).  Nonnegative interior coefficients with
strictly positive end coefficients certify positivity of p on [a, b]; the
certificate is exact because all arithmetic stays in Q or a single Q(sqrt(d)).

The expansion is closed-form (affine change of variable followed by the
monomial-to-Bernstein triangular transform); no linear system is solved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactnum import QuadExt
from .polycore import MPoly

VERDICT_POSITIVE = "positive"
VERDICT_NONNEGATIVE = "nonnegative"
VERDICT_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BernCert:
    """A positivity certificate: interval, degree, basis and coefficient list."""

    a: QuadExt
    b: QuadExt
    m: int
    basis: str
    coeffs: tuple
    verdict: str
    var: str = "t"

    def min_coeff(self) -> QuadExt:
        out = self.coeffs[0]
        for c in self.coeffs[1:]:
            if c < out:
                out = c
        return out

    def polynomial(self) -> MPoly:
        """Re-expand the certificate back into the monomial basis (exact)."""
        t = MPoly.var(self.var)
        left = MPoly.const(self.b) - t
        right = t - MPoly.const(self.a)
        total = MPoly.const(0)
        if self.basis == "scaled":
            for k, d in enumerate(self.coeffs):
                total = total + MPoly.const(d) * left ** (self.m - k) * right ** k
            return total
        scale = ((self.b - self.a) ** self.m).inverse()
        for k, c in enumerate(self.coeffs):
            total = total + MPoly.const(c * comb(self.m, k) * scale) * right ** k * left ** (self.m - k)
        return total

    def to_basis(self, basis: str) -> "BernCert":
        if basis == self.basis:
            return self
        width = (self.b - self.a) ** self.m
        if basis == "binomial":
            coeffs = tuple(d * width / comb(self.m, k) for k, d in enumerate(self.coeffs))
        elif basis == "scaled":
            coeffs = tuple(c * comb(self.m, k) / width for k, c in enumerate(self.coeffs))
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return BernCert(self.a, self.b, self.m, basis, coeffs, self.verdict, self.var)


@dataclass(frozen=True)
class CertFailure:
    """Search outcome when no degree up to the cap certifies the sign."""

    last_degree: int
    negative_index: int
    negative_coeff: QuadExt

    verdict = "failure"


def _verdict(coeffs: Sequence[QuadExt]) -> str:
    signs = [c.sign() for c in coeffs]
    if any(s < 0 for s in signs):
        return VERDICT_INCONCLUSIVE
    if signs[0] > 0 and signs[-1] > 0:
        return VERDICT_POSITIVE
    return VERDICT_NONNEGATIVE


def _scalar_coeffs(p: MPoly, var: str) -> list[QuadExt]:
    out = []
    for k in range(p.degree_in(var) + 1):
        c = p.coeff_of(var, k)
        if not c.is_constant():
            raise ValueError("polynomial must be univariate for bern_expand")
        out.append(c.constant())
    return out


def _binomial_coeffs_from_shifted(q: Sequence[QuadExt], m: int) -> list[QuadExt]:
    """c_k = sum_j C(k,j)/C(m,j) q_j for p(a+(b-a)u) = sum_j q_j u^j."""
    out = []
    for k in range(m + 1):
        acc = QuadExt(0)
        for j in range(min(k, len(q) - 1) + 1):
            acc = acc + q[j] * Fraction(comb(k, j), comb(m, j))
        out.append(acc)
    return out


def bern_expand(p: MPoly, a, b, m: int, basis: str = "scaled", var: str | None = None) -> BernCert:
    """Exact Bernstein expansion of a univariate p over [a, b] at degree m."""
    a, b = QuadExt.of(a), QuadExt.of(b)
    if basis not in ("scaled", "binomial"):
        raise ValueError(f"unknown basis {basis!r}")
    if not (a < b):
        raise ValueError("interval endpoints must satisfy a < b")
    if var is None:
        var = p.single_variable() or (p.registry[0] if p.registry else "t")
    deg = p.degree_in(var)
    if deg > m:
        raise ValueError(f"degree {deg} exceeds Bernstein degree {m}")
    coeffs = _scalar_coeffs(p, var)
    width = b - a
    # shifted coefficients of p(a + width*u) in u, by Horner
    shifted: list[QuadExt] = [QuadExt(0)] * (deg + 1)
    for c in reversed(coeffs):
        # multiply the accumulator by (a + width*u), then add c
        nxt = [QuadExt(0)] * (deg + 1)
        for j in range(deg):
            nxt[j + 1] = shifted[j] * width
        for j in range(deg + 1):
            nxt[j] = nxt[j] + shifted[j] * a
        nxt[0] = nxt[0] + c
        shifted = nxt
    cbin = _binomial_coeffs_from_shifted(shifted, m)
    if basis == "binomial":
        out = tuple(cbin)
    else:
        scale = (width ** m).inverse()
        out = tuple(c * comb(m, k) * scale for k, c in enumerate(cbin))
    return BernCert(a, b, m, basis, out, _verdict(out), var)


def bern_certify(p: MPoly, a, b, max_m: int = 64, basis: str = "scaled", var: str | None = None):
    """Minimal certifying Bernstein degree between deg(p) and max_m.

    Returns the first BernCert whose verdict is not inconclusive, else a
    CertFailure recording the offending coefficient at the last degree tried.
    """
    if var is None:
        var = p.single_variable() or (p.registry[0] if p.registry else "t")
    deg = p.degree_in(var)
    last = None
    for m in range(deg, max_m + 1):
        cert = bern_expand(p, a, b, m, basis, var)
        if cert.verdict != VERDICT_INCONCLUSIVE:
            return cert
        last = cert
    neg_idx = max(i for i, c in enumerate(last.coeffs) if c.sign() < 0)
    return CertFailure(last.m, neg_idx, last.coeffs[neg_idx])


def bern_expand_parametric(
    p: MPoly, main_var: str, a, b, m: int, basis: str = "binomial"
) -> list[MPoly]:
    """Bernstein expansion in one variable with polynomial coefficients.

    Endpoints must be rational.  Returns the m+1 coefficient polynomials in
    the remaining variables; re-expanding against the chosen basis reproduces
    p identically in the full ring.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("interval endpoints must satisfy a < b")
    deg = p.degree_in(main_var)
    if deg > m:
        raise ValueError(f"degree {deg} exceeds Bernstein degree {m}")
    width = b - a
    shifted = p.subs_polys({main_var: MPoly.univariate("_u", [a, width])})
    q = [shifted.coeff_of("_u", j) for j in range(deg + 1)]
    out = []
    for k in range(m + 1):
        acc = MPoly.const(0)
        for j in range(min(k, deg) + 1):
            acc = acc + q[j] * Fraction(comb(k, j), comb(m, j))
        out.append(acc)
    if basis == "scaled":
        out = [c * Fraction(comb(m, k)) / QuadExt(width ** m) for k, c in enumerate(out)]
    elif basis != "binomial":
        raise ValueError(f"unknown basis {basis!r}")
    return out


def parametric_reexpand(coeffs: Sequence[MPoly], main_var: str, a, b, basis: str = "binomial") -> MPoly:
    """Inverse of bern_expand_parametric, for exactness checks."""
    a, b = Fraction(a), Fraction(b)
    m = len(coeffs) - 1
    t = MPoly.var(main_var)
    left = MPoly.const(QuadExt(b)) - t
    right = t - MPoly.const(QuadExt(a))
    total = MPoly.const(0)
    for k, c in enumerate(coeffs):
        piece = c * comb(m, k) if basis == "binomial" else c
        total = total + piece * right ** k * left ** (m - k)
    if basis == "binomial":
        total = total * MPoly.const((QuadExt(b - a) ** m).inverse())
    return total
