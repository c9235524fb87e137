"""Verma modules over the Virasoro algebra.

The Virasoro algebra has basis {z, e_i : i in Z} with z central and

    [e_i, e_j] = (j - i) e_{i+j} + (j^3 - j)/12 * delta_{i+j,0} * z.

V(h, c) is the free module over the positive part generated by a vector v
with e_0 v = h v, z v = c v and e_i v = 0 for i < 0.  Its basis consists of
the ordered monomials e_{i_1} ... e_{i_s} v with i_1 >= ... >= i_s >= 1,
stored here as weakly decreasing index tuples; the empty tuple is v itself.
Applying any generator re-expresses the result in this basis by repeated
two-term rewriting  e_x e_y -> e_y e_x + (y - x) e_{x+y}  (x < y).

Coefficients live in Q(t) so that everything stays exact for symbolic
weights h(t), c(t).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import Inhomogeneous
from .rational import RF_ONE, RF_ZERO, RationalFunction

#: Marker accepted by :func:`apply_generator` for the central element.
CENTER = "z"

Monomial = tuple  # weakly decreasing tuple of positive ints; () is v


@dataclass(frozen=True)
class ModuleParams:
    """Highest weight h and central charge c, as elements of Q(t)."""

    h: RationalFunction
    c: RationalFunction

    @staticmethod
    def constants(h, c) -> "ModuleParams":
        return ModuleParams(RationalFunction.from_fraction(Fraction(h)),
                            RationalFunction.from_fraction(Fraction(c)))


def level(mono: Monomial) -> int:
    return sum(mono)


def monomial_str(mono: Monomial) -> str:
    if not mono:
        return "v"
    return ".".join(f"e{i}" for i in mono) + ".v"


def monomial_sort_key(mono: Monomial):
    """Deterministic graded order: by level, then by index tuple."""
    return (sum(mono), mono)


@functools.lru_cache(maxsize=None)
def _insert_pos(k: int, mono: Monomial) -> tuple:
    """e_k applied to an ordered monomial, k >= 1.

    Returns ((monomial, integer coefficient), ...).  Only Witt brackets
    between positive indices occur, so the coefficients are integers and
    independent of (h, c).
    """
    if not mono or k >= mono[0]:
        return (((k,) + mono, 1),)
    head, rest = mono[0], mono[1:]
    out: dict = {}
    # e_k e_head R = e_head (e_k R) + (head - k) e_{head+k} R
    for m, c in _insert_pos(k, rest):
        for m2, c2 in _insert_pos(head, m):
            out[m2] = out.get(m2, 0) + c * c2
    factor = head - k
    for m, c in _insert_pos(head + k, rest):
        out[m] = out.get(m, 0) + factor * c
    return tuple((m, c) for m, c in out.items() if c)


def _acc(out: dict, mono: Monomial, val: RationalFunction) -> None:
    cur = out.get(mono)
    out[mono] = val if cur is None else cur + val


def _lower(k: int, mono: Monomial, params: ModuleParams) -> dict:
    """e_k applied to an ordered monomial for k <= -1; may hit e_0 and z."""
    if not mono:
        return {}
    head, rest = mono[0], mono[1:]
    out: dict = {}
    # e_k e_head R = e_head (e_k R) + [e_k, e_head] R
    for m, c in _lower(k, rest, params).items():
        for m2, c2 in _insert_pos(head, m):
            _acc(out, m2, c * c2)
    j = head + k
    factor = head - k
    if j > 0:
        for m2, c2 in _insert_pos(j, rest):
            _acc(out, m2, RationalFunction.from_int(factor * c2))
    elif j == 0:
        _acc(out, rest, (params.h + level(rest)) * factor)
        central = Fraction(head**3 - head, 12)
        if central:
            _acc(out, rest, params.c * central)
    else:
        for m2, c2 in _lower(j, rest, params).items():
            _acc(out, m2, c2 * factor)
    return out


class VermaElement:
    """A finite Q(t)-linear combination of ordered monomials applied to v."""

    __slots__ = ("params", "terms")

    def __init__(self, params: ModuleParams, terms: dict | None = None):
        self.params = params
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def highest_weight(cls, params: ModuleParams) -> "VermaElement":
        return cls(params, {(): RF_ONE})

    @classmethod
    def zero(cls, params: ModuleParams) -> "VermaElement":
        return cls(params, {})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> RationalFunction:
        return self.terms.get(tuple(mono), RF_ZERO)

    def scale(self, coeff) -> "VermaElement":
        if isinstance(coeff, (int, Fraction)):
            coeff = RationalFunction._coerce(coeff)
        if coeff.is_zero():
            return VermaElement.zero(self.params)
        return VermaElement(self.params, {m: c * coeff for m, c in self.terms.items()})

    def __add__(self, other: "VermaElement") -> "VermaElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return VermaElement(self.params, out)

    def __sub__(self, other: "VermaElement") -> "VermaElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, -c)
        return VermaElement(self.params, out)

    def __neg__(self) -> "VermaElement":
        return VermaElement(self.params, {m: -c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, VermaElement)
                and self.params == other.params
                and self.terms == other.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: monomial_sort_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {monomial_str(m)}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"VermaElement({self})"

    def to_json_obj(self) -> list:
        return [{"monomial": list(m), "coeff": c.to_json_obj()}
                for m, c in self.sorted_terms()]


def apply_generator(k, v: VermaElement) -> VermaElement:
    """Left action of e_k (k any integer) or of z (k = CENTER), PBW-reduced."""
    params = v.params
    if k == CENTER:
        return v.scale(params.c)
    out: dict = {}
    if k == 0:
        h = params.h
        for mono, coeff in v.terms.items():
            out[mono] = coeff * (h + level(mono))
    elif k >= 1:
        for mono, coeff in v.terms.items():
            for m2, c2 in _insert_pos(k, mono):
                _acc(out, m2, coeff * c2)
    else:
        for mono, coeff in v.terms.items():
            for m2, c2 in _lower(k, mono, params).items():
                _acc(out, m2, coeff * c2)
    return VermaElement(params, out)


def word_to_element(word, params: ModuleParams) -> VermaElement:
    """PBW normal form of e_{i_1} ... e_{i_s} v, applied right to left."""
    if any(i < 1 for i in word):
        raise ValueError(f"word entries must be positive integers: {word}")
    x = VermaElement.highest_weight(params)
    for i in reversed(tuple(word)):
        x = apply_generator(i, x)
    return x


def grade(v: VermaElement):
    """Common level of a homogeneous element; None for zero.

    Raises Inhomogeneous when monomials of different levels are mixed.
    """
    levels = {sum(m) for m in v.terms}
    if not levels:
        return None
    if len(levels) > 1:
        raise Inhomogeneous(f"mixed levels {sorted(levels)}")
    return levels.pop()


def first_difference(a: VermaElement, b: VermaElement):
    """The first monomial (graded order) whose coefficients differ, or None."""
    for m in sorted(set(a.terms) | set(b.terms), key=monomial_sort_key):
        if a.coefficient(m) != b.coefficient(m):
            return monomial_str(m)
    return None
