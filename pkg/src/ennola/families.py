"""Constructors for the named polynomial families.

``P_d`` and the power-sum polynomials ``f_d``; the Laurent polynomials
``S, R, E, R_m`` in ``T``; the composite ``F_{a,b}``; the closed forms of
``G_{a,b}``; the perturbed ``G_{a,b,m}``; and the two cubic minimal
polynomials attached to the exceptional unit ``eps_l``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .core import BiPoly, LaurentPoly, TriPoly, binomial


class AdmissibilityError(ValueError):
    """Parameters fall outside every row of the (a, b) case table."""


class SignConvention(enum.Enum):
    """Sign of the middle term of ``R_{a,b}``.

    PLUS gives ``T^-a + (-1)^(a+b) T^-b + T^(a+b)``; MINUS flips the middle sign.
    """

    PLUS = "plus"
    MINUS = "minus"

    @property
    def middle_sign_factor(self) -> int:
        return 1 if self is SignConvention.PLUS else -1


class ParityCase(enum.Enum):
    CASE1 = 1  # a, b >= 1 both odd
    CASE2 = 2  # a >= 1 odd, b >= 1 even
    CASE3 = 3  # a >= 2 even, b >= 1 odd


def classify(a: int, b: int) -> ParityCase:
    if a < 1 or b < 1:
        raise AdmissibilityError(f"(a, b) = ({a}, {b}): need a >= 1 and b >= 1")
    if a % 2 and b % 2:
        case = ParityCase.CASE1
    elif a % 2:
        case = ParityCase.CASE2
    elif b % 2:
        case = ParityCase.CASE3
    else:
        raise AdmissibilityError(f"(a, b) = ({a}, {b}): a and b are both even")
    assert (a * a + a * b + b * b) % 2 == 1
    return case


# ---------------------------------------------------------------------------
# P_d and the power sums f_d
# ---------------------------------------------------------------------------


def parity_sign(n: int) -> int:
    """``(-1)**n`` as an int for any integer ``n``."""
    return -1 if n % 2 else 1


def p_poly_coefficient(d: int, k: int, l: int) -> Fraction:
    """Coefficient of ``X^k Y^(d-2k-3l)`` in ``P_d``, in binomial form."""
    n = d - k - 2 * l
    return Fraction(parity_sign(k - 1) * d * binomial(k + l, k) * binomial(n, k + l), n)


def p_poly(d: int) -> BiPoly:
    """The integer polynomial ``P_d(X, Y)``."""
    if d < 1:
        raise ValueError(f"P_d needs d >= 1, got {d}")
    terms = {}
    for l in range(d // 3 + 1):
        for k in range((d - 3 * l) // 2 + 1):
            c = p_poly_coefficient(d, k, l)
            if c.denominator != 1:
                raise ArithmeticError(f"P_{d} has non-integral coefficient {c} at k={k}, l={l}")
            terms[(k, d - 2 * k - 3 * l)] = c
    return BiPoly(terms)


class _InsertOnceCache:
    """Thread-safe memo table whose entries are written at most once."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: Dict[int, object] = {}

    def get(self, key):
        return self._data.get(key)

    def setdefault(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)


_F_GENERAL = _InsertOnceCache()
_F_SPEC = _InsertOnceCache()

_S1, _S2, _S3 = (TriPoly.var(i) for i in range(3))
_F_GENERAL_BASE = {
    1: _S1,
    2: _S1**2 - _S2.scale(2),
    3: _S1**3 - (_S1 * _S2).scale(3) + _S3.scale(3),
}


def newton_f_general(d: int) -> TriPoly:
    """``f_d(s1, s2, s3)``: the power sum ``x1^d + x2^d + x3^d`` in elementary symmetric terms."""
    if d < 1:
        raise ValueError(f"f_d needs d >= 1, got {d}")
    # fill upward so deep d never recurses
    for e in range(4, d + 1):
        if _F_GENERAL.get(e) is None:
            f1, f2, f3 = (_F_GENERAL.get(e - i) for i in (1, 2, 3))
            value = f1.mul_monomial((1, 0, 0)) - f2.mul_monomial((0, 1, 0)) + f3.mul_monomial((0, 0, 1))
            _F_GENERAL.setdefault(e, value)
    return _F_GENERAL.get(d)


_F_SPEC_BASE = {
    1: BiPoly({(0, 1): 1}),
    2: BiPoly({(0, 2): 1, (1, 0): -2}),
    3: BiPoly({(0, 3): 1, (1, 1): -3, (0, 0): 3}),
}
for _d in (1, 2, 3):
    _F_GENERAL.setdefault(_d, _F_GENERAL_BASE[_d])
    _F_SPEC.setdefault(_d, _F_SPEC_BASE[_d])


def newton_f_spec(d: int) -> BiPoly:
    """``f_d(Y, X, 1)`` by the three-term recurrence in ``X, Y`` directly."""
    if d < 1:
        raise ValueError(f"f_d needs d >= 1, got {d}")
    for e in range(4, d + 1):
        if _F_SPEC.get(e) is None:
            f1, f2, f3 = (_F_SPEC.get(e - i) for i in (1, 2, 3))
            _F_SPEC.setdefault(e, f1.mul_monomial((0, 1)) - f2.mul_monomial((1, 0)) + f3)
    return _F_SPEC.get(d)


# ---------------------------------------------------------------------------
# Laurent families in T
# ---------------------------------------------------------------------------


def _require_nonzero(a: int, b: int) -> None:
    if a == 0 or b == 0:
        raise ValueError(f"a and b must be nonzero, got ({a}, {b})")


def s_poly(a: int, b: int) -> LaurentPoly:
    """``T^-a + T^-b + T^(a+b)``."""
    _require_nonzero(a, b)
    return LaurentPoly.monomial(1, -a) + LaurentPoly.monomial(1, -b) + LaurentPoly.monomial(1, a + b)


def r_poly(a: int, b: int, conv: SignConvention = SignConvention.PLUS) -> LaurentPoly:
    _require_nonzero(a, b)
    mid = conv.middle_sign_factor * parity_sign(a + b)
    return LaurentPoly.monomial(1, -a) + LaurentPoly.monomial(mid, -b) + LaurentPoly.monomial(1, a + b)


def e_poly(a: int, b: int) -> LaurentPoly:
    """``(b-a) T^-a + (-1)^(a+b) (a-2b) T^-b + b T^(a+b)``."""
    _require_nonzero(a, b)
    sign = parity_sign(a + b)
    return (
        LaurentPoly.monomial(b - a, -a)
        + LaurentPoly.monomial(sign * (a - 2 * b), -b)
        + LaurentPoly.monomial(b, a + b)
    )


def r_m_poly(a: int, b: int, m: int, conv: SignConvention = SignConvention.PLUS) -> LaurentPoly:
    """``R_{a,b}(T) + E_{a,b}(T) / (m T^m)``."""
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    return r_poly(a, b, conv) + e_poly(a, b).shift(-m).scale(Fraction(1, m))


def f_poly(a: int, b: int) -> BiPoly:
    """``F_{a,b}(X, Y)`` assembled from ``P_a, P_b, P_c`` per parity case."""
    case = classify(a, b)
    c = a + b
    pa, pb, pc = p_poly(a), p_poly(b), p_poly(c)
    if case is ParityCase.CASE1:
        return -pa.swap_xy() - pb.swap_xy() + pc
    flipped = -pa.swap_xy().negate_args() - pb.swap_xy().negate_args()
    if case is ParityCase.CASE2:
        return flipped + pc.negate_args()
    return flipped - pc.negate_args()


def g_closed(a: int, b: int) -> LaurentPoly:
    """Closed form of ``F_{a,b}(R_{a,b}(T), R_{a,b}(1/T))`` for each parity case."""
    case = classify(a, b)
    c = a + b

    def t(coef, e):
        return LaurentPoly.monomial(coef, e)

    if case is ParityCase.CASE1:
        return t(1, -a * a) + t(1, -b * b) + t(-1, -c * c) + t(2, -a * b)
    if case is ParityCase.CASE2:
        return t(-1, -a * a) + t(1, -b * b) + t(1, -c * c) + t(2, -a * b)
    return t(1, -a * a) + t(1, -b * b) + t(-1, -c * c)


def g_composed(a: int, b: int, conv: SignConvention = SignConvention.PLUS) -> LaurentPoly:
    """``F_{a,b}(R_{a,b}(T), R_{a,b}(1/T))`` by direct composition."""
    r = r_poly(a, b, conv)
    return f_poly(a, b).eval_laurent(r, r.substitute_power(-1))


def g_m_poly(a: int, b: int, m: int, conv: SignConvention = SignConvention.PLUS) -> LaurentPoly:
    """``G_{a,b,m}(T) = F_{a,b}(R_{a,b,m}(T), R_{-a,-b,m}(T))``."""
    f = f_poly(a, b)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    g = f.eval_laurent(r_m_poly(a, b, m, conv), r_m_poly(-a, -b, m, conv))
    if not g.denominators_divide(m ** (a + b)):
        raise ArithmeticError(f"G_{{{a},{b},{m}}} has a denominator not dividing m^(a+b)")
    return g


# ---------------------------------------------------------------------------
# parameters of the degree claim
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjParams:
    a: int
    b: int
    c: int
    m: int
    M: int
    N_expected: int
    B: Fraction


def conj_params(a: int, b: int) -> ConjParams:
    if a == 0 and b == 0:
        raise ValueError("a and b are both zero")
    c = a + b
    m = a * a + a * b + b * b
    M = c * max(a, b)
    N = min(a, b) ** 2
    if a >= 1 and b >= 1:
        assert M + N == m, (a, b)
    return ConjParams(a=a, b=b, c=c, m=m, M=M, N_expected=N, B=Fraction(M + N + 1, 2))


# ---------------------------------------------------------------------------
# the cubic family X^3 + (l-1) X^2 - l X - 1
# ---------------------------------------------------------------------------


def ennola_min_poly(l: int) -> List[int]:
    """Descending coefficients of the minimal polynomial of ``eps_l``."""
    return [1, l - 1, -l, -1]


def taylor_shift(coeffs: List[int], h: int = 1) -> List[int]:
    """Descending coefficients of ``p(X + h)`` from those of ``p(X)`` (repeated synthetic division)."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(1, n - i):
            out[j] += h * out[j - 1]
    return out


def ennola_shifted_min_poly(l: int) -> List[int]:
    """Minimal polynomial of ``eps_l - 1``, i.e. the cubic above at ``X + 1``."""
    return taylor_shift(ennola_min_poly(l), 1)


def horner(coeffs: List[int], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def lc_expected(a: int, b: int, case: Optional[ParityCase] = None) -> Fraction:
    """Leading coefficient of ``G_{a,b,m}`` predicted by the case analysis (``m = a^2+ab+b^2``)."""
    case = case or classify(a, b)
    c, m = a + b, a * a + a * b + b * b
    if case is ParityCase.CASE1:
        return Fraction(2 * b * c, m) if a > b else Fraction(2 * a * a, m)
    if case is ParityCase.CASE2:
        return Fraction(2 * a * a, m) if a > b else Fraction(-2 * b * c, m)
    return Fraction(2 * b * c, m)
