"""Exact sparse polynomial arithmetic over the rationals.

Three containers share one canonical-form discipline (no stored zero
coefficient, equality is equality of term maps):

* :class:`LaurentPoly` -- univariate in ``T`` with exponents of either sign,
* :class:`BiPoly` -- ordinary polynomials in ``X, Y``,
* :class:`TriPoly` -- ordinary polynomials in the elementary symmetric
  functions ``s1, s2, s3``.

Coefficients are :class:`fractions.Fraction`.  Large Laurent products are
done on integer numerators by Kronecker substitution (one big-integer
multiply), which is what keeps the ``a, b <= 13`` sweeps tractable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

try:  # GMP multiplication is ~30x faster than CPython's Karatsuba at sweep sizes
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

Number = Union[int, Fraction]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# below this many pairwise term products the schoolbook loop wins
_KRONECKER_THRESHOLD = 4096


class DegreeError(ValueError):
    """Raised when a degree or leading coefficient of the zero polynomial is requested."""


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative ``n``, ``k``; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def _check_exponent(e: int) -> int:
    if not INT64_MIN <= e <= INT64_MAX:
        raise OverflowError(f"exponent {e} exceeds the 64-bit range")
    return e


def _as_fraction(c: Number) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def _lcm_of_denominators(coeffs: Iterable[Fraction]) -> int:
    return reduce(math.lcm, (c.denominator for c in coeffs), 1)


# ---------------------------------------------------------------------------
# integer kernel: dense (offset, [coeffs]) Laurent polynomials over Z
# ---------------------------------------------------------------------------


def _zmul_schoolbook(lo1: int, c1: List[int], lo2: int, c2: List[int]) -> Tuple[int, List[int]]:
    out = [0] * (len(c1) + len(c2) - 1)
    # iterate over the sparser operand on the outside
    if sum(1 for v in c1 if v) > sum(1 for v in c2 if v):
        c1, c2 = c2, c1
    nz2 = [(j, v) for j, v in enumerate(c2) if v]
    for i, u in enumerate(c1):
        if not u:
            continue
        for j, v in nz2:
            out[i + j] += u * v
    return lo1 + lo2, out


def _pack(coeffs: List[int], width: int):
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in coeffs)
    return _bigint(int.from_bytes(pos, "little")) - _bigint(int.from_bytes(neg, "little"))


def _zmul_kronecker(lo1: int, c1: List[int], lo2: int, c2: List[int]) -> Tuple[int, List[int]]:
    n_out = len(c1) + len(c2) - 1
    bound = max(map(abs, c1)) * max(map(abs, c2)) * min(len(c1), len(c2))
    # each output digit r must satisfy |r| < 2**(8*width - 1)
    width = (bound.bit_length() + 1 + 7) // 8 + 1
    prod = _pack(c1, width) * _pack(c2, width)
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n_out, "little")
    raw = int(prod + bias).to_bytes(width * n_out, "little")
    out = [
        int.from_bytes(raw[i : i + width], "little") - half
        for i in range(0, width * n_out, width)
    ]
    return lo1 + lo2, out


def zmul(lo1: int, c1: List[int], lo2: int, c2: List[int]) -> Tuple[int, List[int]]:
    """Multiply two dense integer Laurent polynomials given as (offset, coefficients)."""
    if not c1 or not c2:
        return 0, []
    nz1 = sum(1 for v in c1 if v)
    nz2 = sum(1 for v in c2 if v)
    if nz1 * nz2 <= _KRONECKER_THRESHOLD or min(nz1, nz2) <= 8:
        return _zmul_schoolbook(lo1, c1, lo2, c2)
    return _zmul_kronecker(lo1, c1, lo2, c2)


def zadd_into(acc: Dict[int, int], lo: int, coeffs: List[int], scale: int = 1) -> None:
    """acc += scale * (lo, coeffs), with ``acc`` a sparse exponent->int map."""
    if not scale:
        return
    for i, v in enumerate(coeffs):
        if v:
            acc[lo + i] = acc.get(lo + i, 0) + scale * v


def _dense(terms: Mapping[int, int]) -> Tuple[int, List[int]]:
    nz = {e: v for e, v in terms.items() if v}
    if not nz:
        return 0, []
    lo, hi = min(nz), max(nz)
    out = [0] * (hi - lo + 1)
    for e, v in nz.items():
        out[e - lo] = v
    return lo, out


# ---------------------------------------------------------------------------
# Laurent polynomials in T
# ---------------------------------------------------------------------------


class LaurentPoly:
    """An element of Q[T, 1/T] stored as a sparse exponent -> Fraction map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Number]] = None):
        clean: Dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[_check_exponent(int(e))] = c
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms: Dict[int, Fraction]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: Number, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: Number) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_integer_terms(cls, terms: Mapping[int, int], denominator: int = 1) -> "LaurentPoly":
        """Build ``sum(v * T**e) / denominator`` from integer numerators."""
        out = {}
        for e, v in terms.items():
            if v:
                out[_check_exponent(e)] = Fraction(v, denominator)
        return cls._from_clean(out)

    # -- container protocol ------------------------------------------------

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Terms in ascending exponent order."""
        for e in sorted(self._terms):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .textfmt import render_laurent

        return f"LaurentPoly({render_laurent(self)!r})"

    def __str__(self) -> str:
        from .textfmt import render_laurent

        return render_laurent(self)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def scale(self, s: Number) -> "LaurentPoly":
        s = _as_fraction(s)
        if not s:
            return LaurentPoly()
        return LaurentPoly._from_clean({e: c * s for e, c in self._terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly()
        d1, lo1, c1 = self.integer_form()
        d2, lo2, c2 = other.integer_form()
        lo, coeffs = zmul(lo1, c1, lo2, c2)
        den = d1 * d2
        return LaurentPoly.from_integer_terms(
            {lo + i: v for i, v in enumerate(coeffs) if v}, den
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def integer_form(self) -> Tuple[int, int, List[int]]:
        """Return ``(D, lo, coeffs)`` with ``self == T**lo * sum(coeffs[i] T**i) / D``."""
        den = _lcm_of_denominators(self._terms.values())
        lo, dense = _dense({e: (c.numerator * (den // c.denominator)) for e, c in self._terms.items()})
        return den, lo, dense

    # -- queries -------------------------------------------------------------

    def degree(self) -> int:
        if not self._terms:
            raise DegreeError("degree of zero")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise DegreeError("degree of zero")
        return min(self._terms)

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def lc(self) -> Fraction:
        return self._terms[self.degree()]

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``T**k``."""
        return LaurentPoly._from_clean({_check_exponent(e + k): c for e, c in self._terms.items()})

    def substitute_power(self, n: int) -> "LaurentPoly":
        """Image under ``T -> T**n`` (``n = -1`` is ``T -> 1/T``)."""
        if n == 0:
            raise ValueError("substitute_power needs a nonzero exponent")
        return LaurentPoly._from_clean({_check_exponent(e * n): c for e, c in self._terms.items()})

    def __call__(self, t: Number) -> Fraction:
        return self.eval(t)

    def eval(self, t: Number) -> Fraction:
        t = _as_fraction(t)
        if not t:
            raise ZeroDivisionError("Laurent polynomial evaluated at t = 0")
        return sum((c * t**e for e, c in self._terms.items()), Fraction(0))

    def denominators_divide(self, n: int) -> bool:
        return all(n % c.denominator == 0 for c in self._terms.values())


T = LaurentPoly.monomial(1, 1)


# ---------------------------------------------------------------------------
# ordinary multivariate polynomials (X, Y) and (s1, s2, s3)
# ---------------------------------------------------------------------------

Monomial = Tuple[int, ...]


class _MultiPoly:
    """Sparse polynomial in a fixed number of variables with nonnegative exponents."""

    __slots__ = ("_terms", "_hash")
    NVARS = 0
    VARS: Tuple[str, ...] = ()

    def __init__(self, terms: Optional[Mapping[Monomial, Number]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(int(x) for x in mono)
                if len(mono) != self.NVARS or min(mono) < 0:
                    raise ValueError(f"bad monomial {mono} for {type(self).__name__}")
                c = _as_fraction(c)
                if c:
                    clean[mono] = c
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, index: int):
        mono = tuple(1 if i == index else 0 for i in range(cls.NVARS))
        return cls({mono: 1})

    @classmethod
    def constant(cls, c: Number):
        return cls({(0,) * cls.NVARS: c})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in ascending graded-lexicographic order."""
        for mono in sorted(self._terms, key=lambda m: (sum(m), m)):
            yield mono, self._terms[mono]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == type(self).constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .textfmt import render_multi

        return f"{type(self).__name__}({render_multi(self)!r})"

    def __str__(self):
        from .textfmt import render_multi

        return render_multi(self)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            raise DegreeError("degree of zero")
        return max(sum(m) for m in self._terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s: Number):
        s = _as_fraction(s)
        if not s:
            return self._from_clean({})
        return self._from_clean({m: c * s for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return self._from_clean({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = type(self).constant(1)
        for _ in range(n):
            out = out * self
        return out

    def mul_monomial(self, mono: Monomial, c: Number = 1):
        """Multiply by ``c * x**mono`` without a general product."""
        c = _as_fraction(c)
        if not c:
            return self._from_clean({})
        return self._from_clean(
            {tuple(x + y for x, y in zip(m, mono)): v * c for m, v in self._terms.items()}
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())


class BiPoly(_MultiPoly):
    """Polynomial in ``X, Y``; monomial ``(i, j)`` is ``X**i * Y**j``."""

    __slots__ = ()
    NVARS = 2
    VARS = ("X", "Y")

    def swap_xy(self) -> "BiPoly":
        """``F(X, Y) -> F(Y, X)``."""
        return self._from_clean({(j, i): c for (i, j), c in self._terms.items()})

    def negate_args(self) -> "BiPoly":
        """``F(X, Y) -> F(-X, -Y)``."""
        return self._from_clean(
            {(i, j): (-c if (i + j) % 2 else c) for (i, j), c in self._terms.items()}
        )

    def __call__(self, x: Number, y: Number) -> Fraction:
        x, y = _as_fraction(x), _as_fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0))

    def eval_laurent(self, lx: LaurentPoly, ly: LaurentPoly) -> LaurentPoly:
        """Exact composition ``F(Lx, Ly)`` in Q[T, 1/T].

        Works on integer numerators throughout: with ``Lx = x/Dx`` and
        ``Ly = y/Dy``, it forms ``sum c_ij Dx**(I-i) Dy**(J-j) x**i y**j``
        by Horner in ``x`` over cached powers of ``y``, then divides once.
        """
        if not self._terms:
            return LaurentPoly()
        deg_x = max(i for i, _ in self._terms)
        deg_y = max(j for _, j in self._terms)
        dc = _lcm_of_denominators(self._terms.values())
        dx, xlo, xc = lx.integer_form()
        dy, ylo, yc = ly.integer_form()

        # y**0 .. y**deg_y, extended by repeated multiplication
        ypow: List[Tuple[int, List[int]]] = [(0, [1])]
        for _ in range(deg_y):
            ypow.append(zmul(*ypow[-1], ylo, yc))
        dxpow = [dx**k for k in range(deg_x + 1)]
        dypow = [dy**k for k in range(deg_y + 1)]

        rows: Dict[int, List[Tuple[int, int]]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(i, []).append((j, c.numerator * (dc // c.denominator)))

        acc_lo, acc = 0, []
        for i in range(deg_x, -1, -1):
            if acc:
                acc_lo, acc = zmul(acc_lo, acc, xlo, xc)
            if i in rows:
                inner: Dict[int, int] = {}
                for j, n in rows[i]:
                    zadd_into(inner, *ypow[j], n * dxpow[deg_x - i] * dypow[deg_y - j])
                if acc:
                    zadd_into(inner, acc_lo, acc)
                acc_lo, acc = _dense(inner)
        terms = {acc_lo + k: v for k, v in enumerate(acc) if v}
        return LaurentPoly.from_integer_terms(terms, dc * dxpow[deg_x] * dypow[deg_y])


class TriPoly(_MultiPoly):
    """Polynomial in ``s1, s2, s3`` (elementary symmetric functions of three variables)."""

    __slots__ = ()
    NVARS = 3
    VARS = ("s1", "s2", "s3")

    def specialize_unit_product(self) -> BiPoly:
        """Set ``s1 -> Y, s2 -> X, s3 -> 1``."""
        out: Dict[Monomial, Fraction] = {}
        for (i, j, _k), c in self._terms.items():
            out[(j, i)] = out.get((j, i), 0) + c
        return BiPoly._from_clean({m: c for m, c in out.items() if c})

    def __call__(self, s1: Number, s2: Number, s3: Number) -> Fraction:
        s1, s2, s3 = map(_as_fraction, (s1, s2, s3))
        return sum((c * s1**i * s2**j * s3**k for (i, j, k), c in self._terms.items()), Fraction(0))


X = BiPoly.var(0)
Y = BiPoly.var(1)


# functional spellings of the ring operations
def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def lp_scale(p: LaurentPoly, s: Number) -> LaurentPoly:
    return p.scale(s)


def lp_degree(p: LaurentPoly) -> int:
    return p.degree()


def lp_low_degree(p: LaurentPoly) -> int:
    return p.low_degree()


def lp_coeff(p: LaurentPoly, e: int) -> Fraction:
    return p.coeff(e)


def lp_lc(p: LaurentPoly) -> Fraction:
    return p.lc()


def lp_substitute_power(p: LaurentPoly, n: int) -> LaurentPoly:
    return p.substitute_power(n)


def lp_eval(p: LaurentPoly, t: Number) -> Fraction:
    return p.eval(t)


def bp_swap_xy(f: BiPoly) -> BiPoly:
    return f.swap_xy()


def bp_negate_args(f: BiPoly) -> BiPoly:
    return f.negate_args()


def bp_eval_laurent(f: BiPoly, lx: LaurentPoly, ly: LaurentPoly) -> LaurentPoly:
    return f.eval_laurent(lx, ly)
