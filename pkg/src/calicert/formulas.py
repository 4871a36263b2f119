"""Reference closed forms for the determinant and positivity suites.

These are the expected values of the exact identity checks: the determinant
of the 6x6 quadratic form reduced to symmetric functions, the squared
root-difference product on the constraint locus, the combined quartic and its
coefficient family, the Bernstein coefficient polynomials of the boosted
discriminant, and the isolated tail quartics.  Everything is exact; variables
are

    s1, s2   first and second symmetric functions of the three slopes
    w        the distinguished fourth slope
    v        the nonnegative magnitude of the pair sum (sigma_2 = -v)
    t, s, u  interval variables of the one-dimensional certificates
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import QuadExt
from .polycore import MPoly, parse_poly

# -- 6x6 determinant reduced to (s1, s2, w): det = 4 * F_DET ------------------
#
# The s1*s2 coefficient is 2w^5 - 32w^3 - 62w.  A variant with w^5 instead of
# 2w^5 circulates in print; it fails the determinant reduction and the
# combined-quartic coefficient family by exactly that one term, so the factor
# 2 is the correct reading.  F_DET_VARIANT keeps the other reading so the
# suite can surface the discrepancy explicitly.

F_DET = parse_poly(
    "14*(w^2+1)*s1^4 + 4*(-5*w^3+2*w)*s1^3*s2 + (8*w^4-39*w^2+1)*s1^2*s2^2"
    " + 8*(2*w^3-3*w)*s1*s2^3 + 4*(w^2-1)*s2^4 + 4*(9*w^3+2*w)*s1^3"
    " + (-39*w^4+76*w^2-41)*s1^2*s2 + 2*(2*w^5-49*w^3+57*w)*s1*s2^2"
    " + 4*(w^6+6*w^4-14*w^2+9)*s2^3 + (-17*w^4+39*w^2+164)*s1^2"
    " + (2*w^5-32*w^3-62*w)*s1*s2 + 3*(3*w^4+19*w^2-16)*s2^2"
    " + 2*(-7*w^5+57*w^3-10*w)*s1 + (-3*w^6-8*w^4+207*w^2-216)*s2"
    " + (w^6+21*w^4+32*w^2+432)"
)

F_DET_VARIANT = F_DET - parse_poly("w^5*s1*s2")

# squared product of slope differences on the locus, in (s1, s2, w)
G_DISC = parse_poly(
    "-4*s1^4 + 4*w*s1^3*s2 + s1^2*s2^2 - 4*w*s1^3 + 18*s1^2*s2 - 18*w*s1*s2^2"
    " - 4*s2^3 - 27*s1^2 + 72*w*s1*s2 - 27*w^2*s2^2 - 54*w*s1 + 54*w^2*s2 - 27*w^2"
)

# -- combined quartic 21*F - (6w^6 + 20w^4)*G restricted to s2 = -v - w*s1 ----

QUARTIC_A = parse_poly("18*w^8 + 101*w^4 + 147*w^2 + 294")
QUARTIC_B = parse_poly(
    "4*(3*v-2)*w^7 + (-296*v+377)*w^5 - 42*(v-19)*w^3 - 21*(6*v-49)*w"
)
QUARTIC_C = parse_poly(
    "162*w^10 - 108*(v-9)*w^8 - 3*(2*v^2+252*v-583)*w^6"
    " + (-356*v^2+591*v+2052)*w^4 + 21*(9*v^2+44*v+53)*w^2 + 21*(v^2+41*v+164)"
)
QUARTIC_D = parse_poly(
    "324*(v+1)*w^9 - 9*(24*v^2-168*v-163)*w^7 - 6*(218*v^2-296*v-159)*w^5"
    " + 21*(70*v^2+146*v-93)*w^3 + 42*(4*v^3+3*v^2-17*v+98)*w"
)
QUARTIC_E = parse_poly(
    "162*(v+1)^2*w^8 - 3*(36*v^3-180*v^2-381*v-187)*w^6"
    " + (-584*v^3+189*v^2+168*v+441)*w^4 + 21*(4*v^4+56*v^3+57*v^2-207*v+32)*w^2"
    " + 84*(3+v)*(6+v)*(6-v^2)"
)

# sharp lower boundary value of the determinant at s1 = 0 = w
SHARPNESS = parse_poly("4*(3+v)*(6+v)*(6-v^2)")

# -- degree-2 Bernstein coefficients of 8*A*C - 3*B^2 in v on [0, 5/2] --------

Q_BERN = [
    parse_poly(
        "3*(2700096 + 1163799*w^2 + 1330364*w^4 + 1062698*w^6 + 1580412*w^8"
        " + 903159*w^10 + 429824*w^12 + 127520*w^14 + 46656*w^16 + 7776*w^18)"
    ),
    parse_poly(
        "3*(3543876 + 2815344*w^2 + 3011589*w^4 + 1886493*w^6 + 1951477*w^8"
        " + 905359*w^10 + 411694*w^12 + 82400*w^14 + 40176*w^16 + 7776*w^18)"
    ),
    parse_poly(
        "13471668 + 16035642*w^2 + 10141992*w^4 + 4948839*w^6 + 4735126*w^8"
        " + 1238577*w^10 + 993492*w^12 + 103740*w^14 + 101088*w^16 + 23328*w^18"
    ),
]

# -- discriminant of the combined quartic at w = 0, factored -------------------

DISC_AT_W0 = (
    MPoly.const(Fraction(2 ** 7 * 3 ** 6 * 7 ** 7))
    * parse_poly("(3+v)*(6+v)*(6-v^2)")
    * parse_poly("(2704 + 1352*v + 4697*v^2 + 2098*v^3 + 225*v^4)^2")
)

# -- first boosted-discriminant Bernstein coefficient, divided by 432 ----------

R0_OVER_432 = [
    1385917274395600128,
    17882051877103563072,
    34045174584434955312,
    37514728151471928924,
    45171938822844834756,
    56967180342756234327,
    64089597886958676060,
    62394851560231359960,
    57166154554106018456,
    50558926859757015672,
    41555918902612042992,
    31350500674098250736,
    21809242957716591384,
    14077181559906761562,
    8343090076003475816,
    4478601647575856184,
    2153781244629264384,
    917430601362808380,
    342862102135296960,
    111690528108904404,
    31346704386587268,
    7373775300428007,
    1388666535802524,
    196789706537040,
    19301707065096,
    1145559339252,
    30304891584,
]  # coefficients of w^0, w^2, ..., w^52

# -- the two tail pieces of the last Bernstein coefficient ---------------------
#
# 2^14 * r_12(w^2) = TAIL_EVEN(w) + TAIL_ODD(w) + remainder, where the
# remainder has nonnegative coefficients.  TAIL_EVEN carries the w^36..w^52
# terms (a quartic in w^4 after factoring 10368*w^36), TAIL_ODD the
# w^34..w^50 terms (a quartic in w^4 after factoring 1296*w^34).

TAIL_EVEN_SCALE = 10368
TAIL_EVEN_POWER = 36
TAIL_EVEN_QUARTIC = [
    11809499692540555,
    -1558904597746992,
    -108674110379376,
    16087971538656,
    80813044224,
]  # low-to-high in u = w^4

TAIL_ODD_SCALE = 1296
TAIL_ODD_POWER = 34
TAIL_ODD_QUARTIC = [
    724970964850265675,
    -26665451576093568,
    -3827466501483744,
    223883373358080,
    17336846866176,
]  # low-to-high in u = w^4


def tail_even_poly() -> MPoly:
    w = MPoly.var("w")
    inner = sum(
        (MPoly.const(Fraction(c)) * w ** (4 * k) for k, c in enumerate(TAIL_EVEN_QUARTIC)),
        MPoly.const(0),
    )
    return MPoly.const(Fraction(TAIL_EVEN_SCALE)) * w ** TAIL_EVEN_POWER * inner


def tail_odd_poly() -> MPoly:
    w = MPoly.var("w")
    inner = sum(
        (MPoly.const(Fraction(c)) * w ** (4 * k) for k, c in enumerate(TAIL_ODD_QUARTIC)),
        MPoly.const(0),
    )
    return MPoly.const(Fraction(TAIL_ODD_SCALE)) * w ** TAIL_ODD_POWER * inner


# -- objects of the three-slope determinant analysis ---------------------------

# sextic whose largest real root bounds the admissible slope products
TAU_SEXTIC = parse_poly("t^6 - 6*t^5 + 6*t^4 + 16*t^3 - 77*t^2 + 204*t - 192")

# det of the 3x3 form on the locus, in (s1, s2): rational since (2r2+x)(2r2-x)=8-x^2
DET3_REDUCED = parse_poly("4*(8-s2^2)*(4-s2) + s1^2*(40-(3-s2)^2)")

# the quartic combination bounding det3 on the outer components, times 3
DET3_OUTER_COMBO = parse_poly("384 - 96*t - 17*t^2 + 18*t^3 - t^4")

# quadratic-in-s remainder of the 4x4 determinant on the inner component:
# det(L)*(1-t)^2 = 4*(1-t)*s*(8-s^2) + L1(s, t)
L1_POLY = parse_poly(
    "s^2*(-t^4 + 2*t^3 + 12*t^2 + 16*t - 20)"
    " + 2*s*(2*t^5 - 7*t^4 - 24*t^3 + 68*t^2 - 42*t + 12)"
    " + (4*t^6 - 4*t^5 - 93*t^4 + 78*t^3 + 240*t^2 - 408*t + 192)"
)

# the same determinant on the outer components, in u = (difference)^2, t = product:
# det(L)*(1-t)^4 = -4u^3 - u^2*DET4_U2 + u*DET4_U1 + DET4_U0
DET4_U2 = parse_poly("t^4 - 2*t^3 + 20*t + 20")
DET4_U1 = parse_poly("-6*t^6 + 16*t^5 + 58*t^4 - 152*t^3 + 200*t^2 - 292*t + 56")
DET4_U0 = parse_poly(
    "-t^8 - 10*t^7 + 18*t^6 + 248*t^5 - 233*t^4 - 310*t^3 + 608*t^2 - 624*t + 192"
)


def l2_poly() -> MPoly:
    """Concave-in-u lower bound used on the outer components for t <= 4."""
    u = MPoly.var("u")
    tail = parse_poly(
        "-2*t^8 - 20*t^7 + 36*t^6 + 496*t^5 - 466*t^4 - 745*t^3 + 1891*t^2 - 2463*t + 1113"
    ) * Fraction(1, 2)
    return -(u ** 2) * DET4_U2 + u * DET4_U1 + tail


# factorization of L1 on the s = -t edge, over Q(sqrt(2))
def l1_edge_factorization() -> MPoly:
    s = MPoly.var("s")
    r2 = MPoly.const(QuadExt(0, 2, 2))
    return parse_poly("(1+s)*(2+s)*(s^2+9*s+12)") * (r2 + s) * (r2 - s)


# quintic factor of L1 at s = 2*sqrt(2), over Q(sqrt(2))
def l1_top_quintic() -> MPoly:
    t = MPoly.var("t")
    return (
        4 * t ** 5
        - 4 * t ** 4
        - MPoly.const(QuadExt(101, 20, 2)) * t ** 3
        + MPoly.const(QuadExt(174, 106, 2)) * t ** 2
        - MPoly.const(QuadExt(88, 76, 2)) * t
        + MPoly.const(QuadExt(24, 8, 2))
    )


# the displayed degree-4 certificate on [-3, 1/2] (scaled basis coefficients)
BPOLY_EXAMPLE = parse_poly("t^4 - 2*t^3 - 12*t^2 - 16*t + 20")
BPOLY_EXAMPLE_COEFFS = tuple(
    QuadExt(Fraction(n, 2401)) for n in (1520, 144, 3072, 2188, 141)
)

# derivative family certified on [4, 5] at degrees 4, 3, 6, 5, 7
STEP5B_FAMILY = [
    ("u2_coeff", DET4_U2, 4),
    ("u2_coeff_deriv", parse_poly("4*t^3 - 6*t^2 + 20"), 3),
    ("u1_coeff", -DET4_U1, 6),
    ("u1_coeff_deriv", parse_poly("36*t^5 - 80*t^4 - 232*t^3 + 456*t^2 - 400*t + 292"), 5),
    (
        "u0_coeff_deriv",
        parse_poly("8*t^7 + 70*t^6 - 108*t^5 - 1240*t^4 + 932*t^3 + 930*t^2 - 1216*t + 624"),
        7,
    ),
]
