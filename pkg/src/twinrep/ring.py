"""Exact arithmetic in Z[t, t^-1] and its fraction field Q(t).

Values are immutable.  ``LaurentPoly`` keeps a map exponent -> nonzero int;
``RatFunc`` keeps a normalized pair of Laurent polynomials (see
``RatFunc.__init__`` for the convention).  Specialization points are
``fractions.Fraction`` instances.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from .errors import (
    DivisionByZero,
    NonUnitNegativePower,
    ParseError,
    PoleAtPoint,
    ZeroSpecialization,
)

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "T",
    "ONE",
    "ZERO",
    "as_laurent",
    "as_ratfunc",
    "eval_at",
    "parse",
    "parse_laurent",
    "parse_ratfunc",
    "parse_rational",
    "format_rational",
]


class LaurentPoly:
    """Element of Z[t, t^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, int], Iterable[Tuple[int, int]], None] = None):
        merged: Dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient must be int, got {type(c).__name__}")
                merged[int(e)] = merged.get(int(e), 0) + c
        self._terms = {e: c for e, c in sorted(merged.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # trusted constructor: terms already nonzero
        obj = object.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c} if c else {})

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self) -> bool:
        """True for +-t^k, the units of Z[t, t^-1]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def leading_coeff(self) -> int:
        return self._terms[self.max_exp] if self._terms else 0

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
        return g

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise NonUnitNegativePower(f"({self})^{k}: only units +-t^e may be inverted")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        return RatFunc(other, self)

    # -- comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- evaluation / formatting ---------------------------------------------
    def eval(self, t0) -> Fraction:
        t0 = _check_point(t0)
        return sum((c * t0 ** e for e, c in self._terms.items()), Fraction(0))

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
T = LaurentPoly._raw({1: 1})


def _coerce_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly.const(x)
    return NotImplemented


def as_laurent(x) -> LaurentPoly:
    if isinstance(x, str):
        return parse_laurent(x)
    if isinstance(x, RatFunc):
        if not x.is_laurent():
            raise ValueError(f"{x} is not a Laurent polynomial")
        return x.num
    out = _coerce_laurent(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return out


# ---------------------------------------------------------------------------
# polynomial gcd over Q (dense, ascending coefficient lists)

def _dense(p: LaurentPoly) -> List[Fraction]:
    # p must have min_exp 0
    out = [Fraction(0)] * (p.max_exp + 1)
    for e, c in p.items():
        out[e] = Fraction(c)
    return out


def _trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_dense(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for j, bj in enumerate(b):
            a[k + j] -= f * bj
        _trim(a)
    return _trim(q), a


def _gcd_dense(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]



class RatFunc:
    """Element of Q(t) stored as a normalized quotient num/den.

    Normal form: den has lowest exponent 0 and positive leading
    coefficient, num and den are coprime over Q[t], and the integer
    coefficients of num and den jointly have content 1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = as_laurent(num) if not isinstance(num, LaurentPoly) else num
        den = as_laurent(den) if not isinstance(den, LaurentPoly) else den
        if den.is_zero():
            raise DivisionByZero(f"zero denominator in ({num})/({den})")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    def is_laurent(self) -> bool:
        return self.den == ONE

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == ONE:
                return RatFunc._raw(self.num + other.num, ONE)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RAT_ZERO
        if self.den == ONE and other.den == ONE:
            return RatFunc._raw(self.num * other.num, ONE)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        if base.den == ONE:
            return RatFunc._raw(base.num ** k, ONE)
        # num and den stay coprime under powers
        return RatFunc._raw(base.num ** k, base.den ** k)

    # -- comparison ------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if self.den != ONE else hash(self.num)
        return self._hash

    def eval(self, t0) -> Fraction:
        t0 = _check_point(t0)
        d = self.den.eval(t0)
        if d == 0:
            raise PoleAtPoint(f"denominator {self.den} vanishes at t = {t0}")
        return self.num.eval(t0) / d

    def __str__(self):
        if self.den == ONE:
            return format_laurent(self.num)
        return f"({format_laurent(self.num)})/({format_laurent(self.den)})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _coerce_rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, ONE)
    if isinstance(x, int) and not isinstance(x, bool):
        return RatFunc._raw(LaurentPoly.const(x), ONE)
    return NotImplemented


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, str):
        return parse_ratfunc(x)
    out = _coerce_rat(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a rational function")
    return out


def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    k = den.min_exp
    num, den = num.shift(-k), den.shift(-k)
    if den.max_exp > 0:
        a = num.min_exp
        n_dense = _dense(num.shift(-a))
        d_dense = _dense(den)
        g = _gcd_dense(n_dense, d_dense)
        if len(g) > 1:
            n_dense, _ = _divmod_dense(n_dense, g)
            d_dense, _ = _divmod_dense(d_dense, g)
            scale = 1
            for c in n_dense + d_dense:
                scale = scale * c.denominator // math.gcd(scale, c.denominator)
            num = LaurentPoly._raw({i + a: int(c * scale) for i, c in enumerate(n_dense) if c})
            den = LaurentPoly._raw({i: int(c * scale) for i, c in enumerate(d_dense) if c})
    g = math.gcd(num.content(), den.content())
    if den.leading_coeff() < 0:
        g = -g
    if g != 1:
        num = LaurentPoly._raw({e: c // g for e, c in num.items()})
        den = LaurentPoly._raw({e: c // g for e, c in den.items()})
    return num, den


RAT_ZERO = RatFunc._raw(ZERO, ONE)
RAT_ONE = RatFunc._raw(ONE, ONE)


# ---------------------------------------------------------------------------
# evaluation

def _check_point(t0) -> Fraction:
    if isinstance(t0, str):
        t0 = parse_rational(t0)
    t0 = Fraction(t0)
    if t0 == 0:
        raise ZeroSpecialization("t cannot be specialized to 0 in Z[t, t^-1]")
    return t0


def eval_at(x, t0) -> Fraction:
    """Exact value of a Laurent polynomial or rational function at t = t0."""
    if isinstance(x, (int, LaurentPoly)):
        return as_laurent(x).eval(t0)
    return as_ratfunc(x).eval(t0)


# ---------------------------------------------------------------------------
# canonical strings

def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for idx, (e, c) in enumerate(p.items()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|(\*)|(\+)|(-)|(\()|(\))|(/))")
_KINDS = ("int", "t", "^", "*", "+", "-", "(", ")", "/")


def _tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            start = pos + len(s[pos:]) - len(s[pos:].lstrip())
            raise ParseError(f"unexpected character {s[start]!r}", s, start)
        for kind, val in zip(_KINDS, m.groups()):
            if val is not None:
                out.append((kind, val, m.start(m.lastindex)))
                break
        pos = m.end()
    out.append(("end", "", len(s)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        if self.peek()[0] == "(":
            self.take("(")
            num = self.poly()
            self.take(")")
            if self.peek()[0] == "/":
                self.take("/")
                self.take("(")
                den = self.poly()
                self.take(")")
                return num, den
            return num, None
        num = self.poly()
        if self.peek()[0] == "/":
            # bare "p/q" integers or "poly/(den)"
            self.take("/")
            if self.peek()[0] == "(":
                self.take("(")
                den = self.poly()
                self.take(")")
            else:
                den = self.poly()
            return num, den
        return num, None

    def poly(self):
        terms: Dict[int, int] = {}
        sign = 1
        kind = self.peek()[0]
        if kind in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            e, c = self.term()
            terms[e] = terms.get(e, 0) + sign * c
            kind = self.peek()[0]
            if kind not in ("+", "-"):
                break
            sign = -1 if self.take()[0] == "-" else 1
        return LaurentPoly(terms)

    def term(self):
        tok = self.peek()
        if tok[0] == "int":
            c = int(self.take()[1])
            if self.peek()[0] == "*":
                self.take("*")
                return self.tpow(), c
            if self.peek()[0] == "t":
                return self.tpow(), c
            return 0, c
        if tok[0] == "t":
            return self.tpow(), 1
        raise ParseError(f"expected a term, found {tok[1] or 'end of input'!r}", self.text, tok[2])

    def tpow(self):
        self.take("t")
        if self.peek()[0] != "^":
            return 1
        self.take("^")
        paren = self.peek()[0] == "("
        if paren:
            self.take("(")
        neg = False
        if self.peek()[0] in ("-", "+"):
            neg = self.take()[0] == "-"
        e = int(self.take("int")[1])
        if paren:
            self.take(")")
        return -e if neg else e

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", self.text, tok[2])


def parse(s: str) -> Union[LaurentPoly, RatFunc]:
    """Parse a canonical string; returns a RatFunc only for true quotients."""
    p = _Parser(s)
    num, den = p.expr()
    p.finish()
    if den is None:
        return num
    if den.is_zero():
        raise ParseError("zero denominator", s, len(s))
    r = RatFunc(num, den)
    return r.num if r.is_laurent() else r


def parse_laurent(s: str) -> LaurentPoly:
    v = parse(s)
    if isinstance(v, RatFunc):
        raise ParseError("expected a Laurent polynomial, got a proper quotient", s, 0)
    return v


def parse_ratfunc(s: str) -> RatFunc:
    return as_ratfunc(parse(s))


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a rational 'p/q'", str(s), 0) from None
