"""Canonical text form for polynomials, and a strict parser for it.

Laurent polynomials print in ascending exponent order, every term as
``c*T^e``; the sign of a non-leading term goes into the joiner::

    -1*T^-2 + 3*T^0 - 1/2*T^5

Polynomials in several variables print in ascending graded-lex order with
exponent 1 and zero-exponent factors omitted::

    -3 + 3*X*Y - 1*Y^3

The parser accepts exactly what the renderers emit, so
``parse(render(p)) == p`` holds and anything else is rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Type

from .core import BiPoly, LaurentPoly, TriPoly, _MultiPoly


class ParseError(ValueError):
    pass


def render_rational(c: Fraction) -> str:
    return str(c)


def _join(parts) -> str:
    if not parts:
        return "0"
    out = []
    for n, (c, body) in enumerate(parts):
        if n == 0:
            out.append(f"{c}{body}")
        elif c < 0:
            out.append(f" - {-c}{body}")
        else:
            out.append(f" + {c}{body}")
    return "".join(out)


def render_laurent(p: LaurentPoly) -> str:
    return _join([(c, f"*T^{e}") for e, c in p.items()])


def render_multi(p: _MultiPoly) -> str:
    parts = []
    for mono, c in p.items():
        body = "".join(
            f"*{name}" if k == 1 else f"*{name}^{k}"
            for name, k in zip(p.VARS, mono)
            if k
        )
        parts.append((c, body))
    return _join(parts)


_COEF = r"(\d+)(?:/(\d+))?"
_JOIN = r"(^-?|\s[+-]\s)"


def _coef(sign: str, num: str, den: str | None, text: str) -> Fraction:
    n, d = int(num), int(den) if den else 1
    if d == 0 or n == 0:
        raise ParseError(f"zero coefficient or denominator in {text!r}")
    value = Fraction(n, d)
    if den and (value.numerator != n or value.denominator != d or d == 1):
        raise ParseError(f"rational {num}/{den} is not in reduced form")
    return -value if "-" in sign else value


def _scan(pattern: re.Pattern, text: str):
    pos = 0
    for m in pattern.finditer(text):
        if m.start() != pos:
            break
        pos = m.end()
        yield m
    if pos != len(text):
        raise ParseError(f"unparseable text at offset {pos}: {text!r}")


_LAURENT_TERM = re.compile(_JOIN + _COEF + r"\*T\^(-?\d+)")


def parse_laurent(text: str) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    terms = {}
    last = None
    for m in _scan(_LAURENT_TERM, text):
        sign, num, den, exp = m.groups()
        e = int(exp)
        if last is not None and e <= last:
            raise ParseError(f"exponents must be strictly ascending in {text!r}")
        last = e
        terms[e] = _coef(sign, num, den, text)
    if not terms:
        raise ParseError(f"empty polynomial text {text!r}")
    return LaurentPoly(terms)


def _parse_multi(text: str, cls: Type[_MultiPoly]):
    text = text.strip()
    if text == "0":
        return cls()
    var_alt = "|".join(re.escape(v) for v in cls.VARS)
    pattern = re.compile(_JOIN + _COEF + rf"((?:\*(?:{var_alt})(?:\^\d+)?)*)")
    factor = re.compile(rf"\*({var_alt})(?:\^(\d+))?")
    terms = {}
    last = None
    for m in _scan(pattern, text):
        sign, num, den, factors = m.groups()
        mono = [0] * cls.NVARS
        prev_idx = -1
        for fm in factor.finditer(factors):
            idx = cls.VARS.index(fm.group(1))
            k = int(fm.group(2)) if fm.group(2) else 1
            if idx <= prev_idx or k == 0 or fm.group(2) == "1":
                raise ParseError(f"non-canonical monomial {factors!r} in {text!r}")
            prev_idx = idx
            mono[idx] = k
        key = (sum(mono), tuple(mono))
        if last is not None and key <= last:
            raise ParseError(f"terms must be strictly ascending in graded-lex order in {text!r}")
        last = key
        terms[tuple(mono)] = _coef(sign, num, den, text)
    if not terms:
        raise ParseError(f"empty polynomial text {text!r}")
    return cls(terms)


def parse_bipoly(text: str) -> BiPoly:
    return _parse_multi(text, BiPoly)


def parse_tripoly(text: str) -> TriPoly:
    return _parse_multi(text, TriPoly)


def render(p) -> str:
    if isinstance(p, LaurentPoly):
        return render_laurent(p)
    return render_multi(p)
