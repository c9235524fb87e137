"""Closed-form singular vectors of Verma modules over the Virasoro algebra.

Two families are constructed explicitly, both expanded over *all* ordered
compositions (i_1, ..., i_s) of the level, without monotonicity
restrictions:

* the level-p family attached to the label (p, 1),

      sum  c_p(i_1..i_s) t^(p-s) e_{i_1} ... e_{i_s},
      c_p(i_1..i_s) = (p-1)!^2 / prod_{l<s} S_l (p - S_l),

  with S_l the prefix sums;

* the level-2p family attached to (2, p), whose coefficients are the
  rational functions

              (2p-1)!^2 (2t)^(s-2p) prod_{r=1}^{2p-1} (p-t-r)
                  prod_{m<=s} ( i_m (2t+1) + 2(p - t - S_m) )
      f_p =  --------------------------------------------------
              prod_{l=0}^{2p-1} (2p-1-2l)
                  prod_{l<s} S_l (2p - S_l) (p - t - S_l)

  (all empty products equal 1; the first denominator product runs over
  both positive and negative odd integers, so its sign matters).

The remaining labels with min(p, q) <= 2 follow from the involution
t -> 1/t, which exchanges the labels (p, q) and (q, p).  A second,
independent route to the (2, p) vector is an order-by-order recursion
with a closed-form normalization; agreement of the two routes is part of
the test suite.

Singularity itself is decidable by applying e_{-1} and e_{-2} only, since
these two generate the whole lowering subalgebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import NormalizationFailure, NotLaurent, PoleAtEvaluationPoint, SizeCapExceeded
from .rational import RF_ONE, RationalFunction, UniPoly, format_rational
from .verma import ModuleParams, VermaElement, apply_generator, grade

#: Refuse composition enumerations with totals beyond this, unless overridden.
DEFAULT_CAP = 20


class KacLabel(NamedTuple):
    p: int
    q: int


def _resolve_cap(cap) -> int:
    return DEFAULT_CAP if cap is None else int(cap)


def _check_cap(total: int, cap) -> None:
    limit = _resolve_cap(cap)
    if total > limit:
        raise SizeCapExceeded(
            f"total {total} implies 2^{total - 1} compositions, beyond the cap {limit}")


def compositions(n: int, cap=None) -> list:
    """All 2^(n-1) ordered compositions of n, in a fixed deterministic order.

    The order lists first parts increasingly and recurses on the remainder:
    compositions(3) = [(1,1,1), (1,2), (2,1), (3)].
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_cap(n, cap)
    out = []
    for mask in range(2 ** (n - 1) - 1, -1, -1):
        parts = []
        run = 1
        for pos in range(n - 1):
            if mask >> (n - 2 - pos) & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


class CompositionSum:
    """A formal sum of composition words with coefficients in Q(t).

    Every word sums to ``total``.  Equality is syntactic (same term map);
    two different expansions of the same operator compare equal only after
    normal ordering, i.e. through :func:`apply_sum`.
    """

    __slots__ = ("total", "terms")

    def __init__(self, total: int, terms: dict):
        self.total = total
        clean = {}
        for word, coeff in terms.items():
            word = tuple(word)
            if sum(word) != total or any(i < 1 for i in word):
                raise ValueError(f"word {word} is not a composition of {total}")
            if not coeff.is_zero():
                clean[word] = coeff
        self.terms = clean

    def coefficient(self, word) -> RationalFunction:
        return self.terms.get(tuple(word), RationalFunction.from_int(0))

    def map_coefficients(self, fn) -> "CompositionSum":
        return CompositionSum(self.total, {w: fn(c) for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, CompositionSum)
                and self.total == other.total and self.terms == other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {'.'.join(f'e{i}' for i in w)}"
                          for w, c in self.terms.items())

    def __repr__(self) -> str:
        return f"CompositionSum(total={self.total}, {len(self.terms)} terms)"

    def to_json_obj(self) -> dict:
        return {"total": self.total,
                "terms": [{"word": list(w), "coeff": c.to_json_obj()}
                          for w, c in self.terms.items()]}


def kac_params(p: int, q: int) -> ModuleParams:
    """The weight curve (h_{p,q}(t), c(t)) carrying a level-pq singular vector:

    c(t) = 13 + 6t + 6/t,
    h_{p,q}(t) = (1-p^2)/4 t + (1-pq)/2 + (1-q^2)/4 / t.
    """
    t_poly = UniPoly((0, 1))
    c = RationalFunction(UniPoly((6, 13, 6)), t_poly)
    h = RationalFunction(
        UniPoly((Fraction(1 - q * q, 4), Fraction(1 - p * q, 2), Fraction(1 - p * p, 4))),
        t_poly)
    return ModuleParams(h, c)


def sp1_coefficient(p: int, comp) -> Fraction:
    """Rational coefficient c_p of a composition in the (p, 1) family."""
    comp = tuple(comp)
    if sum(comp) != p:
        raise ValueError(f"{comp} is not a composition of {p}")
    den = 1
    prefix = 0
    for part in comp[:-1]:
        prefix += part
        den *= prefix * (p - prefix)
    return Fraction(math.factorial(p - 1) ** 2, den)


def build_sp1(p: int, cap=None) -> CompositionSum:
    """The (p, 1) singular operator: sum of c_p(comp) t^(p-s) over compositions of p."""
    terms = {}
    for comp in compositions(p, cap):
        coeff = sp1_coefficient(p, comp)
        terms[comp] = RationalFunction(UniPoly.monomial(p - len(comp), coeff))
    return CompositionSum(p, terms)


def swap_t(s: CompositionSum) -> CompositionSum:
    """Substitute t -> 1/t in every coefficient (each must be Laurent).

    Realizes the symmetry exchanging the labels (p, q) and (q, p).
    """
    terms = {}
    for word, coeff in s.terms.items():
        if not coeff.is_laurent():
            raise NotLaurent(f"coefficient of {word} is not a Laurent polynomial: {coeff}")
        terms[word] = coeff.invert_t()
    return CompositionSum(s.total, terms)


def s2p_coefficient(p: int, comp) -> RationalFunction:
    """The rational-function coefficient f_p of a composition of 2p."""
    n = 2 * p
    comp = tuple(comp)
    if sum(comp) != n:
        raise ValueError(f"{comp} is not a composition of {n}")
    s = len(comp)
    num = UniPoly.constant(math.factorial(n - 1) ** 2)
    for r in range(1, n):
        num = num * UniPoly((p - r, -1))
    prefix = 0
    for part in comp:
        prefix += part
        # i_m (2t+1) + 2(p - t - S_m), in ascending powers of t
        num = num * UniPoly((part + 2 * (p - prefix), 2 * part - 2))
    odd = 1
    for l in range(n):
        odd *= n - 1 - 2 * l
    den = UniPoly.monomial(n - s, Fraction(odd * 2 ** (n - s)))
    prefix = 0
    for part in comp[:-1]:
        prefix += part
        den = den.scale(Fraction(prefix * (n - prefix)))
        den = den * UniPoly((p - prefix, -1))
    return RationalFunction(num, den)


def build_s2p(p: int, cap=None) -> CompositionSum:
    """The (2, p) singular operator: sum of f_p(comp) over compositions of 2p."""
    terms = {}
    for comp in compositions(2 * p, cap):
        terms[comp] = s2p_coefficient(p, comp)
    return CompositionSum(2 * p, terms)


def all_twos_coefficient(p: int) -> RationalFunction:
    """Closed form for f_p on the all-twos composition:

        prod_{q=1}^{p} (t^2 - (p+1-2q)^2) / t^p.
    """
    num = UniPoly.constant(1)
    for q in range(1, p + 1):
        num = num * UniPoly((-((p + 1 - 2 * q) ** 2), 0, 1))
    return RationalFunction(num, UniPoly.monomial(p))


def _ladder_coeff(j: int, shift: int) -> RationalFunction:
    """(j-1)(2t-1) + shift, as an element of Q(t)."""
    return RationalFunction(UniPoly((shift - (j - 1), 2 * (j - 1))))


def recursion_vectors(p: int, cap=None) -> list:
    """The auxiliary sequence v^(0), ..., v^(2p-1) in V(h_{2,p}(t), c(t)).

    v^(0) = v and, for 1 <= k <= 2p-1,

        v^(k) = 2t sum_{j=1}^{k} ((j-1)(2t-1) + 2k-2p-1) e_j v^(k-j)
                / ( k (2p-k) (k-p-t) ).
    """
    n = 2 * p
    _check_cap(n, cap)
    params = kac_params(2, p)
    two_t = RationalFunction(UniPoly((0, 2)))
    vs = [VermaElement.highest_weight(params)]
    for k in range(1, n):
        acc = VermaElement.zero(params)
        for j in range(1, k + 1):
            term = apply_generator(j, vs[k - j])
            acc = acc + term.scale(_ladder_coeff(j, 2 * k - n - 1))
        denom = RationalFunction(UniPoly((k - p, -1))) * (k * (n - k))
        vs.append(acc.scale(two_t / denom))
    return vs


def recursion_w(p: int, cap=None) -> VermaElement:
    """The level-2p vector built from the recursion sequence:

        w = 2t sum_{j=1}^{2p} ((j-1)(2t-1) + 2p-1) e_j v^(2p-j).

    A scalar multiple of the (2, p) singular vector.
    """
    n = 2 * p
    vs = recursion_vectors(p, cap)
    params = vs[0].params
    two_t = RationalFunction(UniPoly((0, 2)))
    acc = VermaElement.zero(params)
    for j in range(1, n + 1):
        term = apply_generator(j, vs[n - j])
        acc = acc + term.scale(_ladder_coeff(j, n - 1))
    return acc.scale(two_t)


def normalize_w(w: VermaElement, p: int) -> VermaElement:
    """Rescale so the coefficient of e_1^(2p) v equals one."""
    lead = w.coefficient((1,) * (2 * p))
    if lead.is_zero():
        raise NormalizationFailure(f"e_1^{2 * p} coefficient is zero")
    return w.scale(RF_ONE / lead)


def apply_sum(s: CompositionSum, x: VermaElement) -> VermaElement:
    """Evaluate a composition sum on a module element, word by word.

    Words act right to left; results for shared word suffixes are reused,
    which keeps the straightening cost near one generator application per
    distinct suffix.
    """
    cache = {(): x}

    def suffix(word):
        cur = cache.get(word)
        if cur is None:
            cur = apply_generator(word[0], suffix(word[1:]))
            cache[word] = cur
        return cur

    out: dict = {}
    for comp, coeff in s.terms.items():
        for mono, c in suffix(comp).terms.items():
            prev = out.get(mono)
            add = coeff * c
            out[mono] = add if prev is None else prev + add
    return VermaElement(x.params, out)


def is_singular(x: VermaElement) -> bool:
    """True iff e_{-1} and e_{-2} both annihilate x (symbolically exact).

    Requires x homogeneous; raises Inhomogeneous otherwise.
    """
    grade(x)
    return apply_generator(-1, x).is_zero() and apply_generator(-2, x).is_zero()


def annihilated_to_depth(x: VermaElement, depth: int) -> bool:
    """Check e_{-k} x = 0 for every 1 <= k <= depth (independent of is_singular)."""
    grade(x)
    return all(apply_generator(-k, x).is_zero() for k in range(1, depth + 1))


def specialize(s: CompositionSum, t0) -> CompositionSum:
    """Evaluate every coefficient at t = t0; the result has constant coefficients.

    Raises PoleAtEvaluationPoint naming the offending composition.
    """
    t0 = Fraction(t0)
    terms = {}
    for word, coeff in s.terms.items():
        try:
            val = coeff.evaluate(t0)
        except PoleAtEvaluationPoint:
            raise PoleAtEvaluationPoint(
                f"coefficient of composition {word} has a pole at t = {format_rational(t0)}"
            ) from None
        if val:
            terms[word] = RationalFunction.from_fraction(val)
    return CompositionSum(s.total, terms)
