"""Exact arithmetic over Q and over the rational-function field Q(t).

Scalars are `fractions.Fraction` (aliased ``BigRational``).  Univariate
polynomials over Q are dense coefficient tuples in ascending degree
(``UniPoly``).  ``RationalFunction`` is a fully reduced quotient of two
UniPolys with a monic denominator, so equal field elements always compare
equal and hash alike.  Everything is immutable; all operations are pure.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import DivisionByZero, NotLaurent, PoleAtEvaluationPoint

BigRational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse a rational given strictly as "a" or "a/b" (b a positive integer)."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if sep and d <= 0:
        raise ValueError(f"denominator must be a positive integer: {text!r}")
    return Fraction(n, d)


def format_rational(q: Fraction) -> str:
    """Render a rational as "num/den", or just "num" when den = 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Univariate polynomial over Q; coefficient tuple in ascending degree.

    The zero polynomial is the empty tuple; otherwise the last coefficient
    is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, UniPoly):
            self.coeffs = coeffs.coeffs
            return
        self.coeffs = _trim([c if isinstance(c, Fraction) else Fraction(c) for c in coeffs])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(value) -> "UniPoly":
        return UniPoly((Fraction(value),))

    @staticmethod
    def monomial(degree: int, coeff=_F1) -> "UniPoly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return UniPoly((_F0,) * degree + (Fraction(coeff),))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return _F0
        return self.coeffs[-1]

    def trailing_order(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def is_monomial(self) -> bool:
        """True iff exactly one coefficient is nonzero."""
        return bool(self.coeffs) and not any(self.coeffs[:-1])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t**k (k >= 0)."""
        if self.is_zero() or k == 0:
            return self
        return UniPoly._raw((_F0,) * k + self.coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(_trim(out))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        out = list(self.coeffs)
        b = other.coeffs
        if len(out) < len(b):
            out.extend([_F0] * (len(b) - len(out)))
        for i, c in enumerate(b):
            out[i] = out[i] - c
        return UniPoly._raw(_trim(out))

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P0
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [_F0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return UniPoly._raw(_trim(out))

    def scale(self, q: Fraction) -> "UniPoly":
        if not q:
            return _P0
        if q == 1:
            return self
        return UniPoly._raw(tuple(c * q for c in self.coeffs))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < d:
            return _P0, self
        quot = [_F0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lead
            quot[i - d] = q
            rem[i] = _F0
            for j in range(d):
                rem[i - d + j] -= q * other.coeffs[j]
        return UniPoly._raw(_trim(quot)), UniPoly._raw(_trim(rem))

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return UniPoly._raw(tuple(c * inv for c in self.coeffs))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor (Euclid with monic remainders)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).monic()
        return a.monic()

    def evaluate(self, t0: Fraction) -> Fraction:
        acc = _F0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def reversed_coeffs(self) -> "UniPoly":
        """The reciprocal polynomial t**deg * p(1/t)."""
        return UniPoly._raw(_trim(list(reversed(self.coeffs))))

    # -- comparisons / rendering --------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                term = format_rational(abs(c))
            else:
                t = "t" if d == 1 else f"t^{d}"
                term = t if abs(c) == 1 else f"{format_rational(abs(c))}*{t}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


_P0 = UniPoly._raw(())
_P1 = UniPoly._raw((_F1,))


class RationalFunction:
    """An element of Q(t) in canonical form.

    Invariants: den != 0, gcd(num, den) = 1, den monic.  Construction
    normalizes, so two representations of the same field element are equal
    as Python objects (`==` and `hash` agree).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P1):
        if not isinstance(num, UniPoly):
            num = UniPoly.constant(num) if not isinstance(num, (list, tuple)) else UniPoly(num)
        if not isinstance(den, UniPoly):
            den = UniPoly.constant(den) if not isinstance(den, (list, tuple)) else UniPoly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator in Q(t)")
        if num.is_zero():
            self.num, self.den = _P0, _P1
            return
        # strip the common power of t first: it is the frequent case here
        k = min(num.trailing_order(), den.trailing_order())
        if k:
            num = UniPoly._raw(num.coeffs[k:])
            den = UniPoly._raw(den.coeffs[k:])
        if den.degree == 0:
            inv = 1 / den.coeffs[0]
            self.num, self.den = num.scale(inv), _P1
            return
        if not den.is_monomial():
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.leading()
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num, self.den = num, den

    # -- constructors --------------------------------------------------------

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RationalFunction":
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def from_int(n: int) -> "RationalFunction":
        if n == 0:
            return RF_ZERO
        return RationalFunction._raw(UniPoly._raw((Fraction(n),)), _P1)

    @staticmethod
    def from_fraction(q: Fraction) -> "RationalFunction":
        if not q:
            return RF_ZERO
        return RationalFunction._raw(UniPoly._raw((q,)), _P1)

    @staticmethod
    def t_power(k: int) -> "RationalFunction":
        """t**k for any integer k (negative powers give 1/t**|k|)."""
        if k >= 0:
            return RationalFunction._raw(UniPoly.monomial(k), _P1)
        return RationalFunction._raw(_P1, UniPoly.monomial(-k))

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den == _P1 and self.num.degree <= 0

    def constant(self) -> Fraction:
        """The value of a constant element as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"not a constant rational function: {self}")
        return self.num.coeffs[0] if self.num.coeffs else _F0

    def is_laurent(self) -> bool:
        """True iff the denominator is a power of t."""
        return self.den.is_monomial()

    # -- field operations --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other)
        if isinstance(other, Fraction):
            return RationalFunction.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        if self.is_zero():
            return self
        return RationalFunction._raw(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        if other is RF_ONE:
            return self
        if self is RF_ONE:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero in Q(t)")
        if self.is_zero():
            return self
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k == 0:
            return RF_ONE
        base = self if k > 0 else RF_ONE / self
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    # -- specialization and Laurent queries ------------------------------------

    def evaluate(self, t0: Fraction) -> Fraction:
        """Exact value at t = t0; raises PoleAtEvaluationPoint on a pole."""
        t0 = Fraction(t0)
        d = self.den.evaluate(t0)
        if not d:
            # gcd(num, den) = 1, so a root of den is a genuine pole
            raise PoleAtEvaluationPoint(f"pole of {self} at t = {format_rational(t0)}")
        return self.num.evaluate(t0) / d

    def extreme_terms(self):
        """Lowest and highest Laurent terms ((deg, coeff), (deg, coeff)).

        Requires the element to be a nonzero Laurent polynomial.
        """
        if self.is_zero():
            raise ValueError("the zero element has no extreme terms")
        if not self.den.is_monomial():
            raise NotLaurent(f"denominator {self.den} is not c*t^m")
        m = self.den.degree
        lo = self.num.trailing_order()
        return ((lo - m, self.num.coeffs[lo]),
                (self.num.degree - m, self.num.leading()))

    def invert_t(self) -> "RationalFunction":
        """Substitute t -> 1/t."""
        dn, dd = self.num.degree, self.den.degree
        num = self.num.reversed_coeffs()
        den = self.den.reversed_coeffs()
        if dd >= dn:
            return RationalFunction(num.shift(dd - dn), den)
        return RationalFunction(num, den.shift(dn - dd))

    # -- comparisons / rendering -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self) -> str:
        ns = str(self.num)
        if self.den == _P1:
            return ns
        if len([c for c in self.num.coeffs if c]) > 1:
            ns = f"({ns})"
        ds = str(self.den)
        if len([c for c in self.den.coeffs if c]) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def to_json_obj(self) -> dict:
        return {"num": [format_rational(c) for c in self.num.coeffs],
                "den": [format_rational(c) for c in self.den.coeffs]}


RF_ZERO = RationalFunction._raw(_P0, _P1)
RF_ONE = RationalFunction._raw(_P1, _P1)
RF_T = RationalFunction._raw(UniPoly._raw((_F0, _F1)), _P1)


def linear(a, b) -> RationalFunction:
    """The polynomial a + b*t as a rational function."""
    return RationalFunction(UniPoly((Fraction(a), Fraction(b))))


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Field arithmetic dispatcher: op in {"add", "sub", "mul", "div"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def evaluate_at(f: RationalFunction, t0: Fraction) -> Fraction:
    """Exact specialization f(t0); raises PoleAtEvaluationPoint on a pole."""
    return f.evaluate(t0)


def extreme_terms(f: RationalFunction):
    """Lowest/highest Laurent terms of a nonzero Laurent polynomial."""
    return f.extreme_terms()
