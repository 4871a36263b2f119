"""Executable transcriptions of the two flatness criteria and their appendix.

Each proof step that reduces to a finite computation is run as a CheckRecord:
exact polynomial identities modulo the constraint locus, Bernstein positivity
certificates at their stated degrees, exact sign evaluations at algebraic
numbers, and root isolations.  Records carry enough detail (coefficients,
intervals, margins) to re-verify each claim independently.

A failed certificate or a mismatch against a stored reference value is
reported as a failed record with the offending coefficient; nothing is
silently repaired.
"""

from __future__ import annotations

import functools
import itertools
import json
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import curvforms, formulas, normalform, octalg
from .bernstein import (
    CertFailure,
    bern_certify,
    bern_expand,
    bern_expand_parametric,
)
from .exactnum import QuadExt
from .polycore import (
    AlgNum,
    MPoly,
    RatFunc,
    dense_coeffs,
    discriminant_univariate,
    parse_poly,
    quartic_discriminant,
    sign_at_algebraic,
    sturm_isolate,
    substitute_many,
)


@dataclass
class CheckRecord:
    id: str
    claim: str
    status: str  # verified | failed | assumed (assumption nodes are never checked)
    detail: str
    wall_time_ms: float

    @property
    def ok(self) -> bool:
        return self.status != "failed"


def _assumption(ident: str, claim: str) -> CheckRecord:
    return CheckRecord(ident, claim, "assumed", "assumption node: consumed as stated, not checked", 0.0)


def _run(ident: str, claim: str, fn) -> CheckRecord:
    started = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, never a silent skip
        ok, detail = False, f"exception: {exc!r}"
    ms = (time.perf_counter() - started) * 1000
    return CheckRecord(ident, claim, "verified" if ok else "failed", detail, ms)


def _from_identity(r: curvforms.IdentityResult) -> CheckRecord:
    return CheckRecord(r.id, r.detail or r.id, r.status, r.detail, r.wall_time_ms)


def records_to_json(records: list[CheckRecord], path: str | None = None) -> str:
    payload = json.dumps([asdict(r) for r in records], indent=1)
    if path:
        with open(path, "w") as fh:
            fh.write(payload)
    return payload


# -- named certificate corpus ---------------------------------------------------

ROOT2 = QuadExt(0, 1, 2)


def _quintic():
    return formulas.l1_top_quintic()


CORPUS = [
    # (id, polynomial factory, a, b, stated minimal degree, expected verdict)
    ("quadratic_example", lambda: parse_poly("5*t^2 - 3*t + 1"), QuadExt(0), QuadExt(1), 3, "positive"),
    ("quartic_example", lambda: formulas.BPOLY_EXAMPLE, QuadExt(-3), QuadExt(Fraction(1, 2)), 4, "positive"),
    ("inner_edge_s0", lambda: formulas.L1_POLY.subs_values({"s": 0}), QuadExt(0), QuadExt(Fraction(1, 2)), 6, "positive"),
    ("inner_top_quintic_right", _quintic, QuadExt(0), QuadExt(Fraction(1, 2)), 13, "positive"),
    ("inner_top_quintic_left", _quintic, -2 * ROOT2, QuadExt(0), 5, "positive"),
    ("outer_det3_combo", lambda: formulas.DET3_OUTER_COMBO, QuadExt(9), QuadExt(15), 4, "positive"),
    ("outer_l2_u0", lambda: formulas.l2_poly().subs_values({"u": 0}), QuadExt(Fraction(3, 2)), QuadExt(4), 8, "positive"),
    (
        "outer_l2_ubound",
        lambda: formulas.l2_poly().subs_polys({"u": parse_poly("(5*t-9)/2")}),
        QuadExt(1),
        QuadExt(4),
        8,
        "positive",
    ),
    ("outer_u2_wide", lambda: formulas.DET4_U2, QuadExt(1), QuadExt(5), 4, "positive"),
    ("tail_u2", lambda: formulas.DET4_U2, QuadExt(4), QuadExt(5), 4, "positive"),
    ("tail_u2_deriv", lambda: formulas.STEP5B_FAMILY[1][1], QuadExt(4), QuadExt(5), 3, "positive"),
    ("tail_u1", lambda: formulas.STEP5B_FAMILY[2][1], QuadExt(4), QuadExt(5), 6, "positive"),
    ("tail_u1_deriv", lambda: formulas.STEP5B_FAMILY[3][1], QuadExt(4), QuadExt(5), 5, "positive"),
    ("tail_u0_deriv", lambda: formulas.STEP5B_FAMILY[4][1], QuadExt(4), QuadExt(5), 7, "positive"),
    ("inner_diag_edge", formulas.l1_edge_factorization, QuadExt(0), 2 * ROOT2, 6, "nonnegative"),
]


def _cert_detail(cert) -> str:
    if isinstance(cert, CertFailure):
        return (
            f"no certificate up to degree {cert.last_degree}; coefficient"
            f" {cert.negative_index} = {cert.negative_coeff}"
        )
    coeffs = ", ".join(str(c) for c in cert.coeffs)
    return f"degree {cert.m}, [{cert.a}, {cert.b}], {cert.basis} coefficients ({coeffs})"


def run_certificates() -> list[CheckRecord]:
    """Every named certificate, each at exactly its stated minimal degree."""
    out = []
    for ident, factory, a, b, degree, verdict in CORPUS:
        def check(factory=factory, a=a, b=b, degree=degree, verdict=verdict):
            poly = factory()
            found = bern_certify(poly, a, b, max_m=max(degree + 8, 16))
            if isinstance(found, CertFailure):
                return False, _cert_detail(found)
            ok = found.m == degree and found.verdict == verdict
            return ok, _cert_detail(found)

        out.append(
            _run(
                f"cert_{ident}",
                f"minimal certifying degree on the stated interval is {degree} ({verdict})",
                check,
            )
        )
    return out


def corpus_report(path: str | None = None) -> list[dict]:
    """Certificate corpus in the JSON report schema."""
    rows = []
    for ident, factory, a, b, degree, verdict in CORPUS:
        found = bern_certify(factory(), a, b, max_m=max(degree + 8, 16))
        if isinstance(found, CertFailure):
            rows.append(
                {
                    "id": ident,
                    "degree_claimed": degree,
                    "degree_found": None,
                    "verdict": "failure",
                    "margin_min_coeff": str(found.negative_coeff),
                }
            )
        else:
            rows.append(
                {
                    "id": ident,
                    "degree_claimed": degree,
                    "degree_found": found.m,
                    "verdict": found.verdict,
                    "margin_min_coeff": str(found.min_coeff()),
                }
            )
    if path:
        with open(path, "w") as fh:
            json.dump(rows, fh, indent=1)
    return rows


# -- locus lemmas -----------------------------------------------------------------


def run_locus_lemmas(samples: int = 10000, seed: int = 20240) -> list[CheckRecord]:
    out = []
    l1, l2, l3 = MPoly.variables("l1", "l2", "l3")
    s1 = l1 + l2 + l3
    s2 = l1 * l2 + l2 * l3 + l3 * l1
    s3 = l1 * l2 * l3

    def inner_sigma2():
        lift = RatFunc(l1 + l2, l1 * l2 - 1)
        lhs = substitute_many(l1 * l2 + (l1 + l2) * l3, {"l3": lift})
        num = (
            l1 ** 2 * l2 ** 2
            + Fraction(1, 2) * l1 ** 2
            + Fraction(1, 2) * l2 ** 2
            + Fraction(1, 2) * (l1 + l2) ** 2
        )
        return lhs == RatFunc(num, l1 * l2 - 1), "numerator is a positive combination of squares"

    out.append(
        _run(
            "locus3_sigma2_numerator",
            "on the lifted inner component, sigma_2 * (l1*l2 - 1) equals an explicit sum of squares",
            inner_sigma2,
        )
    )

    def squares():
        ok1 = s1 ** 2 - 3 * s2 == Fraction(1, 2) * ((l1 - l2) ** 2 + (l2 - l3) ** 2 + (l3 - l1) ** 2)
        x, y, z = l1 * l2, l2 * l3, l3 * l1
        ok2 = s2 ** 2 - 3 * s1 * s3 == Fraction(1, 2) * ((x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2)
        return ok1 and ok2, "sigma1^2-3sigma2 and sigma2^2-3sigma1sigma3 as halved square sums"

    out.append(
        _run(
            "symmetric_square_completions",
            "both quadratic symmetric-function inequalities come from exact square completions",
            squares,
        )
    )

    def amgm_point():
        r3 = QuadExt(0, 1, 3)
        return (
            3 * r3 == r3 ** 3 and (3 * r3 * r3) == QuadExt(9)
        ), "sigma1 = 3*sqrt(3) = sigma3 and sigma2 = 9 at the equal-slope point"

    out.append(
        _run(
            "outer_equality_point",
            "the outer bound sigma_2 >= 9 is attained exactly at the equal-slope point sqrt(3)",
            amgm_point,
        )
    )

    def calibration_squares():
        l0 = MPoly.var("l0")
        prod3 = (1 + l1 ** 2) * (1 + l2 ** 2) * (1 + l3 ** 2)
        ok3 = prod3 - (1 - s2) ** 2 == (s1 - s3) ** 2
        q1 = l0 + s1
        q2 = l0 * s1 + s2
        q3 = s3 + l0 * s2
        q4 = l0 * s3
        ok4 = (1 + l0 ** 2) * prod3 - (1 + q4 - q2) ** 2 == (q1 - q3) ** 2
        return ok3 and ok4, "norm product minus squared calibration numerator = (sigma1-sigma3)^2"

    out.append(
        _run(
            "calibration_value_squares",
            "the graphical calibration value squares to 1 exactly on both loci",
            calibration_squares,
        )
    )

    def chains_4d():
        q1, q2, q3 = MPoly.variables("q1", "q2", "q3")
        w = RatFunc(q1 - q3, q2 - 1)
        ok1 = substitute_many(MPoly.var("w") + q1 - 4, {"w": w}) == RatFunc(
            -q3 + q1 * q2 - 4 * q2 + 4, q2 - 1
        )
        ok2 = substitute_many(MPoly.var("w") * q1 + q2, {"w": w}) == RatFunc(
            q1 * q1 - q2 + q2 * q2 - q1 * q3, q2 - 1
        )
        ok3 = substitute_many(MPoly.var("w") * q1 + q2 - 6, {"w": w}) == RatFunc(
            q1 * q1 - q1 * q3 + (q2 - 1) * (q2 - 6), q2 - 1
        )
        q = MPoly.var("q")
        ok4 = 3 * q - Fraction(1, 3) * q ** 2 + q ** 2 - 7 * q + 6 == Fraction(2, 3) * (q - 3) ** 2
        r3 = QuadExt(0, 1, 3)
        x = MPoly.var("x")
        inv = (3 * r3).inverse()
        ok5 = (
            -MPoly.const(inv) * x ** 3 + MPoly.const(r3) * x ** 3 - 4 * x ** 2 + 4
            == (MPoly.const(8 * inv) * x + MPoly.const(Fraction(4, 3))) * (x - MPoly.const(r3)) ** 2
        )
        return ok1 and ok2 and ok3 and ok4 and ok5, "sigma1-4, sigma2, sigma2-6 chains and both scalar factorizations"

    out.append(
        _run(
            "locus4_chains",
            "the four-slope component inequalities reduce to exact cleared-denominator identities",
            chains_4d,
        )
    )

    def frame_coeff():
        lhs = substitute_many(
            ((-1 + l2 * l3) ** 2 * (1 + l1 ** 2) - (1 + l2 ** 2) * (1 + l3 ** 2)),
            {"l3": RatFunc(l1 + l2, l1 * l2 - 1)},
        )
        return lhs.num.is_zero, "(l2*l3-1)^2 (1+l1^2) = (1+l2^2)(1+l3^2) modulo the locus"

    out.append(
        _run(
            "frame_pair_coefficient",
            "the adapted-frame cross-product coefficient identity holds exactly modulo the locus",
            frame_coeff,
        )
    )

    rng = random.Random(seed)

    def sampling_3d():
        worst_inner, worst_outer = 0.0, 1e18
        for _ in range(samples):
            vals = normalform.sample_cg0(rng, 3.0)
            sig2 = vals[0] * vals[1] + vals[1] * vals[2] + vals[2] * vals[0]
            worst_inner = max(worst_inner, sig2)
            vals = normalform.sample_cgplus(rng)
            sig2 = vals[0] * vals[1] + vals[1] * vals[2] + vals[2] * vals[0]
            worst_outer = min(worst_outer, sig2)
        ok = worst_inner <= 1e-9 and worst_outer >= 9 - 1e-9
        return ok, f"max inner sigma2 {worst_inner:.3g}, min outer sigma2 {worst_outer:.6f}"

    out.append(
        _run(
            "locus3_sigma2_sampling",
            f"sigma_2 <= 0 on {samples} inner samples and >= 9 on {samples} outer samples",
            sampling_3d,
        )
    )

    def sampling_4d():
        worst_inner, worst_outer, worst_s1 = 0.0, 1e18, 1e18
        for _ in range(samples):
            vals = normalform.sample_cs0(rng)
            sig2 = sum(vals[i] * vals[j] for i, j in itertools.combinations(range(4), 2))
            worst_inner = max(worst_inner, sig2)
            vals = normalform.sample_csplus(rng)
            sig2 = sum(vals[i] * vals[j] for i, j in itertools.combinations(range(4), 2))
            worst_outer = min(worst_outer, sig2)
            worst_s1 = min(worst_s1, sum(vals))
        ok = worst_inner <= 1e-9 and worst_outer >= 6 - 1e-9 and worst_s1 >= 4 - 1e-9
        return ok, (
            f"max inner sigma2 {worst_inner:.3g}, min outer sigma2 {worst_outer:.6f},"
            f" min outer sigma1 {worst_s1:.6f}"
        )

    out.append(
        _run(
            "locus4_sigma2_sampling",
            f"sigma_2 <= 0 on {samples} inner samples; sigma_2 >= 6 and sigma_1 >= 4 on {samples} outer samples",
            sampling_4d,
        )
    )

    def boundedness():
        count = 0
        for _ in range(100000):
            vals = normalform.sample_cg0(rng, 4.0)
            if sum(v * v for v in vals) <= 40.0 / 3 + 1e-6:
                continue
            if all(d > 0 for d in curvforms.quadform_values_at(vals)):
                count += 1
        return count == 0, f"{count} samples beyond the bound passed all four determinant checks"

    out.append(
        _run(
            "psd_region_bounded",
            "no inner sample with slope-square sum over 40/3 keeps all four quadratic forms positive",
            boundedness,
        )
    )

    return out


# -- the three-slope theorem -------------------------------------------------------


@functools.lru_cache(maxsize=8)
def tau_algebraic() -> AlgNum:
    intervals = sturm_isolate(formulas.TAU_SEXTIC)
    return AlgNum(formulas.TAU_SEXTIC, *intervals[-1])


def _certify_record(ident, claim, poly, a, b, degree, verdict="positive") -> CheckRecord:
    def check():
        found = bern_certify(poly, a, b, max_m=max(degree + 8, 16))
        if isinstance(found, CertFailure):
            return False, _cert_detail(found)
        return found.m == degree and found.verdict == verdict, _cert_detail(found)

    return _run(ident, claim, check)


def run_thm_coass(eps: Fraction = Fraction(1, 10)) -> list[CheckRecord]:
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 10):
        raise ValueError("eps must lie in (0, 1/10]")
    out = []
    out.extend(_from_identity(r) for r in curvforms.det_identity_suite("coass"))

    # step 2: 3x3 determinant on the inner component
    lo = QuadExt(0, -2, 2) + QuadExt(eps)

    def step2_const():
        cert = bern_certify(parse_poly("4*(8-t^2)*(4-t)"), lo, QuadExt(0))
        if isinstance(cert, CertFailure):
            return False, _cert_detail(cert)
        return cert.verdict == "positive", _cert_detail(cert)

    out.append(
        _run(
            "coass_step2_constant_term",
            f"4(8-x^2)(4-x) is positive for x in [-2*sqrt(2)+{eps}, 0]",
            step2_const,
        )
    )

    def step2_slope():
        cert = bern_certify(parse_poly("40 - (3-t)^2"), lo, QuadExt(0))
        if isinstance(cert, CertFailure):
            return False, _cert_detail(cert)
        return cert.verdict == "positive", _cert_detail(cert)

    out.append(
        _run(
            "coass_step2_sigma1_coefficient",
            "the sigma_1^2 coefficient 40-(3-x)^2 is positive on the same interval,"
            " so the determinant has a strictly positive lower bound there",
            step2_slope,
        )
    )

    def step2_degenerate():
        cert = bern_expand(parse_poly("4*(8-t^2)*(4-t)"), QuadExt(0, -2, 2), QuadExt(0), 3)
        return (
            cert.verdict == "nonnegative"
        ), f"at eps = 0 the endpoint coefficient vanishes: {_cert_detail(cert)}"

    out.append(
        _run(
            "coass_step2_eps0_degenerates",
            "with eps = 0 the lower bound degenerates to nonnegative at the left endpoint",
            step2_degenerate,
        )
    )

    # step 3: 4x4 determinant on the inner component
    l1, l2 = MPoly.variables("l1", "l2")
    t_rf = RatFunc.of(l1 * l2)
    s_rf = RatFunc(-(l1 * l2) * (l1 * l2 - 1) - (l1 + l2) ** 2, l1 * l2 - 1)

    def domain_identities():
        ok1 = s_rf + t_rf == RatFunc((l1 + l2) ** 2, 1 - l1 * l2)
        ok2 = (1 - t_rf) * s_rf - t_rf * (t_rf + 3) == RatFunc.of((l1 - l2) ** 2)
        return ok1 and ok2, "s+t = (l1+l2)^2/(1-t) and (1-t)s - t(t+3) = (l1-l2)^2"

    out.append(
        _run(
            "coass_step3_domain",
            "the working domain bounds s+t >= 0 and (1-t)s >= t(t+3) are exact square identities",
            domain_identities,
        )
    )

    def displayed_quartic():
        cert = bern_expand(formulas.BPOLY_EXAMPLE, QuadExt(-3), QuadExt(Fraction(1, 2)), 4)
        ok = cert.coeffs == formulas.BPOLY_EXAMPLE_COEFFS and cert.verdict == "positive"
        return ok, _cert_detail(cert)

    out.append(
        _run(
            "coass_step3_s2_coefficient",
            "the negated s^2-coefficient matches the stored degree-4 expansion bit-exactly,"
            " so the quadratic in s is concave on the whole t-range",
            displayed_quartic,
        )
    )

    out.append(
        _certify_record(
            "coass_step3_edge_s0",
            "the s = 0 edge polynomial is positive on [0, 1/2] at degree 6 exactly",
            formulas.L1_POLY.subs_values({"s": 0}),
            QuadExt(0),
            QuadExt(Fraction(1, 2)),
            6,
        )
    )

    def diag_edge():
        s = MPoly.var("s")
        sub = formulas.L1_POLY.subs_polys({"t": -s})
        ok_fact = sub == formulas.l1_edge_factorization()
        cert = bern_expand(sub, QuadExt(0), 2 * ROOT2, 6)
        ok_sign = cert.verdict == "nonnegative"
        detail = (
            "factors (1+s)(2+s)(2sqrt2+s)(2sqrt2-s)(s^2+9s+12); "
            + _cert_detail(cert)
        )
        return ok_fact and ok_sign, detail

    out.append(
        _run(
            "coass_step3_edge_diagonal",
            "on the s = -t edge the polynomial factors with every factor nonnegative on [0, 2*sqrt(2)]",
            diag_edge,
        )
    )

    def top_edge():
        s_val = 2 * ROOT2
        sub = formulas.L1_POLY.subs_values({"s": s_val})
        t = MPoly.var("t")
        quintic = formulas.l1_top_quintic()
        ok_fact = sub == (MPoly.const(s_val) + t) * quintic
        return ok_fact, "edge polynomial = (2*sqrt(2)+t) * quintic, exactly in Q(sqrt(2))"

    out.append(
        _run(
            "coass_step3_edge_top_factor",
            "on the s = 2*sqrt(2) edge the polynomial splits off the positive linear factor",
            top_edge,
        )
    )
    out.append(
        _certify_record(
            "coass_step3_edge_top_right",
            "the quintic factor is positive on [0, 1/2] at degree 13 exactly",
            _quintic(),
            QuadExt(0),
            QuadExt(Fraction(1, 2)),
            13,
        )
    )
    out.append(
        _certify_record(
            "coass_step3_edge_top_left",
            "the quintic factor is positive on [-2*sqrt(2), 0] at degree 5 exactly",
            _quintic(),
            -2 * ROOT2,
            QuadExt(0),
            5,
        )
    )

    # step 4: 3x3 determinant on the outer components
    def step4_combo_identity():
        x = MPoly.var("t")
        comb_poly = 4 * (8 - x ** 2) * (4 - x) + MPoly.const(Fraction(1, 3)) * x ** 2 * (
            40 - (3 - x) ** 2
        )
        return (
            comb_poly == formulas.DET3_OUTER_COMBO * Fraction(1, 3)
        ), "first term + (x^2/3)(sigma_1^2 coefficient) = combination/3 exactly"

    out.append(
        _run(
            "coass_step4_combination",
            "the quartic combination equals the determinant bound obtained from sigma1^2 <= sigma2^2/3",
            step4_combo_identity,
        )
    )
    out.append(
        _certify_record(
            "coass_step4_certificate",
            "the quartic combination is positive on [9, 15] at degree 4 exactly",
            formulas.DET3_OUTER_COMBO,
            QuadExt(9),
            QuadExt(15),
            4,
        )
    )

    def step4_split():
        r10 = QuadExt(0, 1, 10)
        vacuous = QuadExt(9) > 3 + r10
        inside = QuadExt(9) < 3 + 2 * r10 < QuadExt(15)
        # on [9, 3+2*sqrt(10)] the sigma1^2 coefficient 40-(3-x)^2 is >= 0 and
        # the first term is a product of (positive)(negative)(negative)
        sign_facts = (QuadExt(9) > 2 * ROOT2) and (QuadExt(9) > QuadExt(4))
        detail = (
            "9 > 3+sqrt(10) (stated split vacuous on [9,15]);"
            " sign flip of 40-(3-x)^2 happens at 3+2*sqrt(10), inside (9,15);"
            " below it the first factor product is positive by signs,"
            " above it the certified combination applies"
        )
        return vacuous and inside and sign_facts, detail

    out.append(
        _run(
            "coass_step4_case_split",
            "the case split covers [9, 15]: factor signs below 3+2*sqrt(10), the certificate above",
            step4_split,
        )
    )

    # step 5(a): 4x4 determinant on the outer components, slope product <= 4
    def max_identity():
        ok = ((l1 ** 2 - l2 ** 2) ** 2) == ((l1 - l2) ** 2) * ((l1 - l2) ** 2 + 4 * l1 * l2)
        return ok, "(l1^2-l2^2)^2 = u(u+4t): the 2*max bound squares exactly"

    out.append(
        _run(
            "coass_step5_max_bound",
            "the square-root elimination behind the u-domain bound is an exact identity",
            max_identity,
        )
    )

    tau = tau_algebraic()
    tau.refine(Fraction(1, 2 ** 20))

    def domain_a():
        hi = tau.hi - eps
        ok = Fraction(4) < tau.lo and tau.hi < Fraction(9, 2)
        detail = (
            f"largest root enclosure ({tau.lo}, {tau.hi}) sits in (4, 9/2),"
            f" so u < (5t-9)/2 and t > 9/5 follow, and [4, 5] covers the remaining"
            f" slope-product range up to {float(hi):.6f}"
        )
        return ok, detail

    out.append(
        _run(
            "coass_step5a_domain",
            "the relaxed domain bound u < (5t-9)/2 follows from the root bound tau < 9/2",
            domain_a,
        )
    )

    def l2_derivation():
        u, tv = MPoly.variables("u", "t")
        lhs = formulas.l2_poly()
        rhs = (
            -(u ** 2) * formulas.DET4_U2
            + u * formulas.DET4_U1
            + formulas.DET4_U0
            - MPoly.const(Fraction(1, 2)) * (5 * tv - 9) ** 2 * (5 * tv - 9)
        )
        return lhs == rhs, "lower bound = closed form with -4u^3 replaced by -(5t-9)^3/2"

    out.append(
        _run(
            "coass_step5a_l2_derivation",
            "the concave minorant comes from u^3 < (5t-9)^3 / 8 on the relaxed domain",
            l2_derivation,
        )
    )
    out.append(
        _certify_record(
            "coass_step5a_u2_on_1_5",
            "the u^2 coefficient is positive on [1, 5] at degree 4 exactly",
            formulas.DET4_U2,
            QuadExt(1),
            QuadExt(5),
            4,
        )
    )
    out.append(
        _certify_record(
            "coass_step5a_l2_at_0",
            "the u = 0 edge of the minorant is positive on [3/2, 4] at degree 8 exactly",
            formulas.l2_poly().subs_values({"u": 0}),
            QuadExt(Fraction(3, 2)),
            QuadExt(4),
            8,
        )
    )
    out.append(
        _certify_record(
            "coass_step5a_l2_at_ubound",
            "the u = (5t-9)/2 edge of the minorant is positive on [1, 4] at degree 8 exactly",
            formulas.l2_poly().subs_polys({"u": parse_poly("(5*t-9)/2")}),
            QuadExt(1),
            QuadExt(4),
            8,
        )
    )

    # step 5(b): slope product in (4, tau - eps]
    for ident, poly, degree in formulas.STEP5B_FAMILY:
        out.append(
            _certify_record(
                f"coass_step5b_{ident}",
                f"negated coefficient family member is positive on [4, 5] at degree {degree} exactly",
                poly,
                QuadExt(4),
                QuadExt(5),
                degree,
            )
        )

    def ubound_monotone():
        c, tv = MPoly.variables("c", "t")
        A = c * (tv - 1) - 2 * tv
        B = c * (tv - 1) - tv
        lhs = RatFunc(2 * A * (c - 2) * B - A * A * (c - 1), B * B)
        rhs = RatFunc(A * (c * (c - 3) * (tv - 1) + 2 * tv), B * B)
        ok_id = lhs == rhs
        # positivity on 4 <= t <= c <= 9/2: A >= 3c-8 > 0, B = A+t > 0, bracket > 0
        clo = Fraction(4) - eps  # c = tau - eps > 4 - eps
        ok_signs = 3 * clo - 8 > 0 and clo > 3
        return ok_id and ok_signs, "derivative = [A/B^2][c(c-3)(t-1)+2t] with every factor positive"

    out.append(
        _run(
            "coass_step5b_ubound_monotone",
            "the u-domain upper bound is increasing in t, so the minimum sits at the far corner",
            ubound_monotone,
        )
    )

    def final_value():
        c = MPoly.var("c")
        u_rf = RatFunc(c * (c - 3) ** 2, c - 2)
        expr = (
            -4 * MPoly.var("u") ** 3
            - MPoly.var("u") ** 2 * formulas.DET4_U2
            + MPoly.var("u") * formulas.DET4_U1
            + formulas.DET4_U0
        )
        val = substitute_many(expr, {"u": u_rf, "t": RatFunc.of(c)})
        sextic_c = formulas.TAU_SEXTIC.rename({"t": "c"})
        want = RatFunc(-8 * (c - 1) ** 5 * sextic_c, (c - 2) ** 3)
        return val == want, "corner value = -8(c-1)^5/(c-2)^3 * (defining sextic at c), exactly"

    out.append(
        _run(
            "coass_step5b_corner_value",
            "the determinant value at the extreme corner factors through the defining sextic",
            final_value,
        )
    )

    def final_sign():
        sgn = sign_at_algebraic(formulas.TAU_SEXTIC, tau, -eps)
        positive_prefactor = tau.lo - eps > 2  # c-1, c-2 > 0
        ok = sgn == -1 and positive_prefactor
        return ok, f"sextic sign at (largest root) - {eps} is {sgn}; prefactor negative, so value > 0"

    out.append(
        _run(
            "coass_step5b_final_sign",
            f"the sextic is strictly negative at the largest real root minus {eps},"
            " making the corner value strictly positive",
            final_sign,
        )
    )

    def root_isolation():
        ivs = sturm_isolate(formulas.TAU_SEXTIC)
        windows = [
            (Fraction(-3), Fraction(-5, 2)),
            (Fraction(3, 2), Fraction(2)),
            (Fraction(2), Fraction(5, 2)),
            (Fraction(4), Fraction(9, 2)),
        ]
        contained = len(ivs) == 4 and all(
            any(wlo <= lo and hi <= whi for wlo, whi in windows) for lo, hi in ivs
        )
        disc = discriminant_univariate(dense_coeffs(formulas.TAU_SEXTIC))
        detail = (
            f"4 real roots in {[(float(a), float(b)) for a, b in ivs]};"
            f" degree-6 discriminant sign under the resultant convention: {'-' if disc < 0 else '+'}"
            " (reported, not asserted)"
        )
        return contained, detail

    out.append(
        _run(
            "coass_tau_roots",
            "the defining sextic has exactly 4 real roots inside the stated windows",
            root_isolation,
        )
    )

    def counterexample_guard():
        tau_local = tau_algebraic()
        tau_local.refine(Fraction(1, 1024))
        ok = Fraction(5) > tau_local.hi
        return ok, (
            f"explicit cone slope product 5 > root enclosure ({tau_local.lo}, {tau_local.hi}):"
            " the cone sits outside the certified outer region"
        )

    out.append(
        _run(
            "coass_cone_excluded",
            "the classical non-flat graphical cone violates the outer slope-product bound",
            counterexample_guard,
        )
    )

    out.append(
        _assumption(
            "coass_analytic_endgame",
            "blow-down, regularity and dimension reduction turn the certified strict"
            " positivity into flatness of the complete graph; analytic input, no finite check",
        )
    )
    return out


# -- the four-slope theorem ----------------------------------------------------------


def run_thm_cayley(eps: Fraction = Fraction(1, 10)) -> list[CheckRecord]:
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 10):
        raise ValueError("eps must lie in (0, 1/10]")
    out = []

    def chain_identity():
        s1, s2, w = MPoly.variables("s1", "s2", "w")
        r6 = MPoly.const(QuadExt(0, 1, 6))
        s3 = s1 + w * (1 - s2)
        lhs = (s2 + w * s1 + r6) * (1 - s2)
        rhs = (r6 + s2) * (1 - s2) + s1 * (s3 - s1)
        return lhs == rhs, "(sigma2 + sqrt(6))(1-s2) rearrangement, exact in Q(sqrt(6))"

    out.append(
        _run(
            "cayley_step1_chain",
            "the boundedness chain's first equality holds exactly on the locus",
            chain_identity,
        )
    )

    def chain_sampling():
        rng = random.Random(99)
        count, worst_sum = 0, 0.0
        r6 = 6 ** 0.5
        eps_f = float(eps)
        for _ in range(100000):
            vals = normalform.sample_cs0(rng)
            w, ls = vals[0], vals[1:]
            s1 = sum(ls)
            s2 = ls[0] * ls[1] + ls[1] * ls[2] + ls[2] * ls[0]
            s3 = ls[0] * ls[1] * ls[2]
            sig2 = s2 + w * s1
            if not (-r6 + eps_f <= sig2 <= 0):
                continue
            count += 1
            first = (s2 + w * s1 + r6) * (1 - s2)
            middle = (r6 + s2) * (1 - s2) + s1 * (s3 - s1)
            last = (r6 + s2) * (1 - s2) + s2 * s2 / 3 - s1 * s1
            ok = first >= -1e-9 and abs(first - middle) <= 1e-9 * (1 + abs(first)) and middle <= last + 1e-9
            if not ok:
                return False, f"chain violated at {vals}"
            worst_sum = max(worst_sum, sum(v * v for v in vals))
        return count > 0, f"{count} in-region samples, max slope-square sum {worst_sum:.4f} (bounded)"

    out.append(
        _run(
            "cayley_step1_bounded",
            "on sampled in-region points the inequality chain holds and the slopes stay bounded",
            chain_sampling,
        )
    )

    out.extend(_from_identity(r) for r in curvforms.det_identity_suite("cayley"))

    def f_variant_note():
        diff = formulas.F_DET - formulas.F_DET_VARIANT
        return diff == parse_poly("w^5*s1*s2"), (
            "a printed variant of the closed form differs by exactly w^5*s1*s2;"
            " the determinant reduction and the quartic family confirm the 2w^5 reading"
        )

    out.append(
        _run(
            "cayley_f_variant_surfaced",
            "the single-term discrepancy against the printed closed form is surfaced, not hidden",
            f_variant_note,
        )
    )

    def sharpness():
        v = MPoly.var("v")
        val = formulas.F_DET.subs_polys({"s1": MPoly.const(0), "s2": -v, "w": MPoly.const(0)})
        return val == formulas.SHARPNESS, "F(0,-v,0) = 4(3+v)(6+v)(6-v^2): vanishes first at v = sqrt(6)"

    out.append(
        _run(
            "cayley_sharpness",
            "the determinant at the symmetric point factors so that sqrt(6) is a sharp bound",
            sharpness,
        )
    )

    out.extend(run_appendix_claim())
    out.append(
        _assumption(
            "cayley_analytic_endgame",
            "blow-down, regularity and dimension reduction turn the certified strict"
            " positivity into flatness of the complete graph; analytic input, no finite check",
        )
    )
    return out


# -- the appendix positivity cascade ---------------------------------------------------


@functools.lru_cache(maxsize=1)
def _combined_quartic_coeffs():
    s1, w, v = MPoly.variables("s1", "w", "v")
    sub = {"s2": -v - w * s1}
    comb_poly = 21 * formulas.F_DET.subs_polys(sub) - (6 * w ** 6 + 20 * w ** 4) * formulas.G_DISC.subs_polys(sub)
    return tuple(comb_poly.coeff_of("s1", k) for k in range(5))


@functools.lru_cache(maxsize=1)
def _discriminant():
    return quartic_discriminant(
        formulas.QUARTIC_A, formulas.QUARTIC_B, formulas.QUARTIC_C, formulas.QUARTIC_D, formulas.QUARTIC_E
    )


@functools.lru_cache(maxsize=1)
def _boost_coefficients():
    """r_j(x), x = w^2: the degree-12 Bernstein coefficients of the boosted
    discriminant, each divided by w^2."""
    disc = _discriminant()
    boost = disc - disc.subs_values({"w": 0})
    rs = bern_expand_parametric(boost, "v", 0, Fraction(5, 2), 12)
    out = []
    for cj in rs:
        ws = cj.coeffs_in("w")
        if (not ws[0].is_zero) or (len(ws) > 1 and not ws[1].is_zero):
            raise ArithmeticError("coefficient not divisible by w^2")
        if any(not ws[k].is_zero for k in range(1, len(ws), 2)):
            raise ArithmeticError("coefficient not even in w")
        out.append(
            MPoly.univariate(
                "x", [ws[k].constant() if k < len(ws) else QuadExt(0) for k in range(2, len(ws), 2)]
            )
        )
    return tuple(out)


def run_appendix_claim() -> list[CheckRecord]:
    out = []

    def stage1():
        coeffs = _combined_quartic_coeffs()
        want = (
            formulas.QUARTIC_E,
            formulas.QUARTIC_D,
            formulas.QUARTIC_C,
            formulas.QUARTIC_B,
            formulas.QUARTIC_A,
        )
        for k, (got, expect) in enumerate(zip(coeffs, want)):
            diff = got - expect
            if not diff.is_zero:
                exp, c = diff.leading()
                return False, f"coefficient of s1^{k} differs; first term {c} * {exp}"
        return True, "all five coefficient polynomials match term-by-term"

    out.append(
        _run(
            "appendix_combined_quartic",
            "21*F - (6w^6+20w^4)*G restricted to the slice matches the stored quartic family",
            stage1,
        )
    )

    def stage2():
        ok = all(c.sign() > 0 for c in formulas.QUARTIC_A.terms.values())
        even = all(exp[0] % 2 == 0 for exp in formulas.QUARTIC_A.terms)
        return ok and even, "even polynomial with positive coefficients"

    out.append(_run("appendix_a_positive", "the leading coefficient polynomial is positive everywhere", stage2))

    def stage3():
        P = 8 * formulas.QUARTIC_A * formulas.QUARTIC_C - 3 * formulas.QUARTIC_B ** 2
        cs = bern_expand_parametric(P, "v", 0, Fraction(5, 2), 2)
        for k, (got, want) in enumerate(zip(cs, formulas.Q_BERN)):
            if got != want:
                diff = got - want
                exp, c = diff.leading()
                return False, f"Bernstein coefficient {k} differs; first term {c} * {exp}"
        allpos = all(all(x.sign() > 0 for x in q.terms.values()) for q in cs)
        return allpos, "three stored coefficient polynomials, all with positive coefficients"

    out.append(
        _run(
            "appendix_8ac_3b2",
            "8AC - 3B^2 expands in the degree-2 Bernstein basis with everywhere-positive coefficients",
            stage3,
        )
    )

    def stage4():
        disc = _discriminant()
        d0 = disc.subs_values({"w": 0})
        ok = d0 == formulas.DISC_AT_W0
        return ok, (
            "factored: 2^7*3^6*7^7*(3+v)(6+v)(6-v^2)(quartic)^2; positive for v in [0, sqrt(6))"
        )

    out.append(
        _run(
            "appendix_disc_w0",
            "the discriminant at w = 0 matches the stored factorization exactly",
            stage4,
        )
    )

    def stage5():
        rs = _boost_coefficients()
        r0 = rs[0]
        want = MPoly.univariate("x", [Fraction(432 * c) for c in formulas.R0_OVER_432])
        if r0 != want:
            return False, "r_0 differs from 432 * stored coefficient list"
        for j in range(12):
            coeffs = list(rs[j].terms.values())
            const = rs[j].coeff_of("x", 0).constant()
            if const.sign() <= 0 or any(c.sign() < 0 for c in coeffs):
                return False, f"r_{j} violates the sign pattern"
        return True, "r_0 = 432 * stored list; r_0..r_11 have positive constants and nonnegative coefficients"

    out.append(
        _run(
            "appendix_boost_coefficients",
            "the boosted discriminant's first 12 Bernstein coefficients are positive for all w",
            stage5,
        )
    )

    def stage6():
        rs = _boost_coefficients()
        r12 = rs[12]
        te = formulas.tail_even_poly()
        to = formulas.tail_odd_poly()

        def to_x(p):
            ws = p.coeffs_in("w")
            return MPoly.univariate(
                "x", [ws[k].constant() if k < len(ws) else QuadExt(0) for k in range(0, len(ws), 2)]
            )

        tails = to_x(te) + to_x(to)
        s0 = MPoly.const(Fraction(2 ** 6)) * r12 - tails
        top_deg = r12.degree_in("x")
        top_cancel = all(s0.coeff_of("x", d).is_zero for d in range(17, top_deg + 1))
        nonneg = all(c.sign() >= 0 for c in s0.terms.values())
        scale14 = MPoly.const(Fraction(2 ** 14)) * r12 - tails
        printed_fails = any(not scale14.coeff_of("x", d).is_zero for d in range(17, top_deg + 1))
        detail = (
            "2^6 * r_12 = stored tails + remainder with nonnegative coefficients"
            f" (remainder degree {s0.degree_in('x')} in w^2);"
            " the printed scale 2^14 leaves every top term uncancelled (surfaced discrepancy)"
        )
        return top_cancel and nonneg and printed_fails, detail

    out.append(
        _run(
            "appendix_r12_tails",
            "the last Bernstein coefficient splits into the two stored tails plus a nonnegative remainder",
            stage6,
        )
    )

    def stage7():
        a, b, c, d, e = (Fraction(x) for x in reversed(formulas.TAIL_ODD_QUARTIC))
        disc = quartic_discriminant(a, b, c, d, e).constant().as_rational()
        p = 8 * a * c - 3 * b * b
        b1, c1, d1, e1 = b / a, c / a, d / a, e / a
        cond2 = (
            -3 * b1 ** 4
            - 9 * b1 ** 4
            + 16 * b1 ** 2 * c1
            + 48 * b1 ** 2 * c1
            - 64 * c1 ** 2
            - 64 * b1 * d1
            + 256 * e1
        )
        sturm_empty = sturm_isolate([Fraction(x) for x in formulas.TAIL_ODD_QUARTIC]) == []
        ok = a > 0 and disc > 0 and p < 0 and cond2 > 0 and sturm_empty
        return ok, (
            f"disc > 0, 8ac-3b^2 < 0, monic second condition = {float(cond2):.4g} > 0;"
            " cross-check: Sturm count of real roots is 0"
        )

    out.append(
        _run(
            "appendix_tail_odd_rootfree",
            "the odd-scaled tail quartic has no real roots by the no-real-root criterion (case ii)",
            stage7,
        )
    )

    def stage8():
        coeffs = [Fraction(x) for x in formulas.TAIL_EVEN_QUARTIC]
        ivs = sturm_isolate(coeffs)
        windows = [(Fraction(-210), Fraction(-200)), (Fraction(-20), Fraction(-10))]
        contained = len(ivs) == 2 and all(
            any(wlo <= lo and hi <= whi for wlo, whi in windows) for lo, hi in ivs
        )
        disc = discriminant_univariate(coeffs)
        no_nonneg = all(hi < 0 for _, hi in ivs)
        ok = contained and disc < 0 and no_nonneg and coeffs[0] > 0 and coeffs[-1] > 0
        return ok, (
            f"two real roots in {[(float(a), float(b)) for a, b in ivs]}, discriminant < 0,"
            " positive at 0 with positive leading coefficient, hence positive for u >= 0"
        )

    out.append(
        _run(
            "appendix_tail_even_roots",
            "the even-scaled tail quartic has exactly two real roots inside [-210,-200] and [-20,-10]",
            stage8,
        )
    )

    return out


# -- aggregation -------------------------------------------------------------------


def run_identities() -> list[CheckRecord]:
    out = [_from_identity(r) for r in curvforms.det_identity_suite("all")]

    def lap(kind):
        def check():
            return curvforms.laplacian_quadform_identity(kind), "exact over all free components and slopes"

        return check

    out.append(
        _run(
            "laplacian_blockform_coass",
            "the raw Laplacian specialization equals the grouped block form (R^7 case)",
            lap(curvforms.KIND_COASS),
        )
    )
    out.append(
        _run(
            "laplacian_blockform_cayley",
            "the raw Laplacian specialization equals the grouped block form (R^8 case)",
            lap(curvforms.KIND_CAYLEY),
        )
    )
    for ident in ("coass_x0", "coass_phase", "cayley_assoc", "cayley_phase"):
        out.append(
            _run(
                f"slag_{ident}",
                "contraction of the calibration equals the phase-rotated complex volume form",
                lambda ident=ident: (octalg.slag_reduction(ident), "exact form-table equality"),
            )
        )

    def kernel_dims():
        d1, _, _ = curvforms.sff_constraint_space(curvforms.KIND_COASS)
        d2, _, _ = curvforms.sff_constraint_space(curvforms.KIND_CAYLEY)
        d3, _, _ = curvforms.sff_constraint_space(curvforms.KIND_ASSOC)
        ok = (d1, d2, d3) == (15, 24, 12)
        return ok, f"kernel dimensions (15, 24, 12): got ({d1}, {d2}, {d3}); 16 relations have rank {30 - d1}"

    out.append(
        _run(
            "sff_kernel_dimensions",
            "the symmetry relations cut the expected numbers of degrees of freedom",
            kernel_dims,
        )
    )

    def wang_checks():
        rng = random.Random(4242)
        worst = 0.0
        for _ in range(100):
            lam = normalform.sample_cg0(rng)
            worst = max(worst, curvforms.wang_specialization_check("coass", lam, seed=rng.random()))
            lam4 = normalform.sample_cs0(rng)
            worst = max(worst, curvforms.wang_specialization_check("cayley", lam4, seed=rng.random()))
        return worst <= 1e-9, f"worst residual {worst:.3g} over 100 samples of each kind"

    out.append(
        _run(
            "ambient_master_formula",
            "the ambient Laplacian/gradient contraction matches the specialized expression numerically",
            wang_checks,
        )
    )
    return out


# records whose content depends on the runtime epsilon; the quantifier
# "for some small eps" is covered by running these at two sample values
_EPS_DEPENDENT = (
    "coass_step2_constant_term",
    "coass_step2_sigma1_coefficient",
    "coass_step5a_domain",
    "coass_step5b_ubound_monotone",
    "coass_step5b_final_sign",
)


def run_all(eps: Fraction = Fraction(1, 10)) -> list[CheckRecord]:
    out = []
    out.extend(run_certificates())
    out.extend(run_locus_lemmas())
    out.extend(run_identities())
    out.extend(run_thm_coass(eps))
    out.extend(run_thm_cayley(eps))
    second = Fraction(1, 100)
    if eps != second:
        for r in run_thm_coass(second):
            if r.id in _EPS_DEPENDENT:
                out.append(CheckRecord(f"{r.id}_eps_1_100", r.claim, r.status, r.detail, r.wall_time_ms))
    return out


SUITES = {
    "all": run_all,
    "coass": run_thm_coass,
    "cayley": run_thm_cayley,
    "appendix": lambda eps=None: run_appendix_claim(),
    "locus": lambda eps=None: run_locus_lemmas(),
    "identities": lambda eps=None: run_identities(),
    "certificates": lambda eps=None: run_certificates(),
}
