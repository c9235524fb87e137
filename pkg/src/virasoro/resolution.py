"""Resolution differentials at t = -3/2 and cohomology of graded modules.

The trivial one-dimensional module over the positive Witt algebra L_1 has a
free resolution by pairs of Verma modules generated at the pentagonal
levels (3k^2 -+ k)/2; the differentials are 2x2 matrices of singular-vector
operators S_{p,q}(-3/2), all with min(p, q) <= 2 and therefore available in
closed form.  Fixing t = -3/2 forces c = 0, so these are modules over the
Witt algebra itself.

For a graded module V with one-dimensional components V_j = <f_j> given by
structure scalars  e_i f_j = a(i, j) f_{i+j},  each operator acts by a
scalar sigma_{p,q}(j) on f_j, and the cohomology H^*_s(L_1, V) is computed
from small numerical matrices D_k over Q.  The sigma argument of each D_k
entry is the internal degree of the component the entry consumes, i.e.
s + (3k^2-k)/2 for the first column and s + (3k^2+k)/2 for the second; the
chain property D_{k+1} D_k = 0 holds exactly and is checked, not assumed.

All linear algebra is exact over Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import PoleAtEvaluationPoint, UnsupportedLabel, VirasoroError
from .rational import RationalFunction, format_rational
from .singular import (
    KacLabel,
    apply_sum,
    build_s2p,
    build_sp1,
    compositions,
    is_singular,
    s2p_coefficient,
    sp1_coefficient,
    specialize,
    swap_t,
    CompositionSum,
)
from .verma import ModuleParams, VermaElement, first_difference, grade

#: The resolution lives at this parameter value (central charge zero).
T_RESOLUTION = Fraction(-3, 2)

_SIGNS = {"+": 1, "-": -1, 1: 1, -1: -1}


def pentagonal(k: int, sign) -> int:
    """The generalized pentagonal number (3k^2 +- k) / 2."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return (3 * k * k + _SIGNS[sign] * k) // 2


def delta_entries(k: int):
    """Labels and signs of the k-th resolution differential.

    delta_1 is the single row (S_{1,1}, S_{1,2}); for k >= 2, with m = k-1,

        delta_k = [[ S_{1,3m+1},  S_{2m+1,2}],
                   [-S_{2m+1,1}, -S_{1,3m+2}]].

    Every label has min(p, q) <= 2, so every entry is constructible.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return [[(KacLabel(1, 1), 1), (KacLabel(1, 2), 1)]]
    m = k - 1
    return [[(KacLabel(1, 3 * m + 1), 1), (KacLabel(2 * m + 1, 2), 1)],
            [(KacLabel(2 * m + 1, 1), -1), (KacLabel(1, 3 * m + 2), -1)]]


def delta_level_bookkeeping(k_max: int = 4) -> bool:
    """Each delta entry's level pq must bridge the pentagonal source/target gap."""
    for k in range(1, k_max + 1):
        rows = delta_entries(k)
        sources = (pentagonal(k, -1), pentagonal(k, +1))
        targets = (pentagonal(k - 1, -1),) if k == 1 else (
            pentagonal(k - 1, -1), pentagonal(k - 1, +1))
        for i, row in enumerate(rows):
            for j, (label, _sign) in enumerate(row):
                if label.p * label.q != sources[j] - targets[i]:
                    return False
    return True


class GradedAction:
    """A graded module with one-dimensional components f_j.

    ``scalar(i, j)`` is the structure constant in e_i f_j = a(i, j) f_{i+j};
    ``support`` is None for all of Z or an inclusive interval (m, n).
    Components outside the support act as zero in both directions.
    """

    def __init__(self, scalar: Callable[[int, int], Fraction],
                 support: Optional[tuple] = None, name: str = "graded-action"):
        self._scalar = scalar
        self.support = support
        self.name = name

    def in_support(self, j: int) -> bool:
        return self.support is None or self.support[0] <= j <= self.support[1]

    def a(self, i: int, j: int) -> Fraction:
        if not (self.in_support(j) and self.in_support(i + j)):
            return Fraction(0)
        return Fraction(self._scalar(i, j))

    def describe(self) -> str:
        return self.name


class TensorDensityAction(GradedAction):
    """The tensor-density module: e_i f_j = (j + mu - lambda (i+1)) f_{i+j}."""

    def __init__(self, lam, mu):
        self.lam = Fraction(lam)
        self.mu = Fraction(mu)
        super().__init__(
            lambda i, j: j + self.mu - self.lam * (i + 1),
            support=None,
            name=f"tensor-density(lambda={format_rational(self.lam)}, "
                 f"mu={format_rational(self.mu)})")


def trivial_action() -> GradedAction:
    """The trivial one-dimensional module, concentrated in degree zero."""
    return GradedAction(lambda i, j: Fraction(0), support=(0, 0), name="trivial")


def check_action_consistency(action: GradedAction, i_max: int = 5, window: int = 10) -> bool:
    """Module axiom on a finite window:

    a(i, j+n) a(j, n) - a(j, i+n) a(i, n) = (j - i) a(i+j, n).
    """
    for i in range(1, i_max + 1):
        for j in range(1, i_max + 1):
            for n in range(-window, window + 1):
                lhs = action.a(i, j + n) * action.a(j, n) - action.a(j, i + n) * action.a(i, n)
                if lhs != (j - i) * action.a(i + j, n):
                    return False
    return True


# -- singular operators specialized at a rational t ---------------------------

_SPQ_CACHE: dict = {}


def _sp1_value_at(p: int, comp: tuple, t0: Fraction) -> Fraction:
    return sp1_coefficient(p, comp) * t0 ** (p - len(comp))


def _s2p_value_at(p: int, comp: tuple, t0: Fraction):
    """f_p(comp) evaluated at t0 factor by factor.

    Returns None when a denominator factor vanishes (the caller then falls
    back to the reduced rational function, where such factors cancel).
    """
    n = 2 * p
    s = len(comp)
    den = Fraction((2 * t0) ** (n - s))
    for l in range(n):
        den *= n - 1 - 2 * l
    prefix = 0
    for part in comp[:-1]:
        prefix += part
        den *= prefix * (n - prefix) * (p - prefix - t0)
    if not den:
        return None
    num = Fraction(math.factorial(n - 1) ** 2)
    for r in range(1, n):
        num *= p - r - t0
    prefix = 0
    for part in comp:
        prefix += part
        num *= part * (2 * t0 + 1) + 2 * (p - t0 - prefix)
        if not num:
            return num
    return num / den


def build_spq_at(label, t0, cap=None) -> CompositionSum:
    """S_{p,q} specialized at a rational t0, as a constant-coefficient sum.

    Dispatch: (p,1) directly; (1,q) via t -> 1/t from (q,1); (2,p) directly;
    (p,2) via t -> 1/t from (2,p).  Requires min(p, q) <= 2.
    """
    p, q = label
    t0 = Fraction(t0)
    key = (p, q, t0)
    cached = _SPQ_CACHE.get(key)
    if cached is not None:
        return cached
    if p < 1 or q < 1:
        raise ValueError(f"label entries must be positive: {(p, q)}")
    if min(p, q) > 2:
        raise UnsupportedLabel(f"no closed form for label {(p, q)}: needs min(p, q) <= 2")

    if q == 1:
        family, m, swapped = "p1", p, False
    elif p == 1:
        family, m, swapped = "p1", q, True
    elif p == 2:
        family, m, swapped = "2p", q, False
    else:
        family, m, swapped = "2p", p, True

    if swapped and t0 == 0:
        # poles at the origin must surface with the usual diagnostics
        base = build_sp1(m, cap) if family == "p1" else build_s2p(m, cap)
        result = specialize(swap_t(base), t0)
        _SPQ_CACHE[key] = result
        return result

    u0 = 1 / t0 if swapped else t0
    total = m if family == "p1" else 2 * m
    terms = {}
    for comp in compositions(total, cap):
        if family == "p1":
            val = _sp1_value_at(m, comp, u0)
        else:
            val = _s2p_value_at(m, comp, u0)
            if val is None:
                try:
                    val = s2p_coefficient(m, comp).evaluate(u0)
                except PoleAtEvaluationPoint:
                    raise PoleAtEvaluationPoint(
                        f"coefficient of composition {comp} has a pole at "
                        f"t = {format_rational(t0)}") from None
        if val:
            terms[comp] = RationalFunction.from_fraction(val)
    result = CompositionSum(total, terms)
    _SPQ_CACHE[key] = result
    return result


def sigma(label, j: int, action: GradedAction, t0=T_RESOLUTION) -> Fraction:
    """The scalar by which S_{p,q}(t0) maps f_j to f_{j+pq}.

    Words act right to left: each composition contributes
    coeff * a(i_s, j) a(i_{s-1}, j + i_s) ... a(i_1, j + i_2 + ... + i_s).
    """
    p, q = label
    if min(p, q) > 2:
        raise UnsupportedLabel(f"no closed form for label {(p, q)}: needs min(p, q) <= 2")
    n = p * q
    if not (action.in_support(j) and action.in_support(j + n)):
        return Fraction(0)
    terms = build_spq_at(KacLabel(p, q), t0).terms
    total = Fraction(0)
    for word, coeff in terms.items():
        prod = coeff.constant()
        deg = j
        for part in reversed(word):
            prod *= action.a(part, deg)
            if not prod:
                break
            deg += part
        total += prod
    return total


# -- the numerical complex ------------------------------------------------------

def d_matrix(k: int, s: int, action: GradedAction):
    """The k-th differential of the per-degree-s complex, over Q at t = -3/2.

    D_0 is the 2x1 column (sigma_{1,1}(s); sigma_{1,2}(s)); for k >= 1 the
    first column consumes the component at s + (3k^2-k)/2 and the second the
    one at s + (3k^2+k)/2:

        D_k = [[ sigma_{1,3k+1}(s+e-),  -sigma_{2k+1,1}(s+e+)],
               [ sigma_{2k+1,2}(s+e-),  -sigma_{1,3k+2}(s+e+)]].
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return [[sigma(KacLabel(1, 1), s, action)],
                [sigma(KacLabel(1, 2), s, action)]]
    lo = s + pentagonal(k, -1)
    hi = s + pentagonal(k, +1)
    return [[sigma(KacLabel(1, 3 * k + 1), lo, action),
             -sigma(KacLabel(2 * k + 1, 1), hi, action)],
            [sigma(KacLabel(2 * k + 1, 2), lo, action),
             -sigma(KacLabel(1, 3 * k + 2), hi, action)]]


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _is_zero_matrix(m) -> bool:
    return all(not v for row in m for v in row)


def exact_rank(matrix) -> int:
    """Rank over Q by Gaussian elimination; no tolerances anywhere."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / pv
                for c in range(col, ncols):
                    rows[r][c] -= f * rows[rank][c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _differentials(action: GradedAction, s: int, k_max: int):
    return [d_matrix(k, s, action) for k in range(k_max + 1)]


def verify_cochain(action: GradedAction, s: int, k_max: int = 3) -> bool:
    """True iff D_1 D_0 = 0 and D_{k+1} D_k = 0 for 1 <= k < k_max, exactly."""
    ds = _differentials(action, s, k_max)
    if not _is_zero_matrix(_matmul(ds[1], ds[0])):
        return False
    for k in range(1, k_max):
        if not _is_zero_matrix(_matmul(ds[k + 1], ds[k])):
            return False
    return True


@dataclass(frozen=True)
class CohomologyRow:
    k: int
    dim: int
    gradings: tuple

    def to_json_obj(self) -> dict:
        return {"k": self.k, "dim": self.dim, "gradings": list(self.gradings)}


@dataclass
class CohomologyTable:
    """Per-degree cohomology dimensions of one internal-degree-s complex.

    ``gradings`` lists the internal degrees of the surviving classes when
    the whole slot space survives (always the case for the trivial module);
    it is empty when classes mix the two slots.
    """

    module: str
    s: int
    rows: list

    def to_json_obj(self) -> dict:
        return {"module": self.module, "s": self.s,
                "dims": [r.to_json_obj() for r in self.rows]}


def cohomology_dims(action: GradedAction, s: int, k_max: int = 3) -> CohomologyTable:
    """Dimensions dim H^k for 0 <= k < k_max from exact ranks over Q.

    dim H^0 = 1 - rank D_0 and dim H^k = 2 - rank D_k - rank D_{k-1}.
    The cochain property is verified first and failure is an error.
    """
    ds = _differentials(action, s, k_max)
    if not _is_zero_matrix(_matmul(ds[1], ds[0])):
        raise VirasoroError("cochain property D_1 D_0 = 0 fails")
    for k in range(1, k_max):
        if not _is_zero_matrix(_matmul(ds[k + 1], ds[k])):
            raise VirasoroError(f"cochain property D_{k + 1} D_{k} = 0 fails")
    ranks = [exact_rank(d) for d in ds]
    rows = []
    dim0 = 1 - ranks[0]
    rows.append(CohomologyRow(0, dim0, (s,) if dim0 == 1 else ()))
    for k in range(1, k_max):
        dim = 2 - ranks[k] - ranks[k - 1]
        gradings = (s + pentagonal(k, -1), s + pentagonal(k, +1)) if dim == 2 else ()
        rows.append(CohomologyRow(k, dim, gradings))
    return CohomologyTable(action.describe(), s, rows)


# -- the singular-vector coincidences in V(0,0) ---------------------------------

@dataclass(frozen=True)
class IdentityResult:
    name: str
    level: int
    holds: bool
    singular: bool
    first_difference: Optional[str]

    def to_json_obj(self) -> dict:
        return {"name": self.name, "level": self.level, "holds": self.holds,
                "singular": self.singular, "first_difference": self.first_difference}


@dataclass
class ResolutionReport:
    identities: list
    generators_singular: dict
    level_bookkeeping: bool

    @property
    def all_pass(self) -> bool:
        return (self.level_bookkeeping
                and all(r.holds and r.singular for r in self.identities)
                and all(self.generators_singular.values()))

    def to_json_obj(self) -> dict:
        return {"identities": [r.to_json_obj() for r in self.identities],
                "generators_singular": dict(self.generators_singular),
                "level_bookkeeping": self.level_bookkeeping,
                "all_pass": self.all_pass}


#: The four coincidences: name -> (level, (label, base), (label, base)).
IDENTITIES = {
    "w5": (5, (KacLabel(1, 4), "w1"), (KacLabel(3, 1), "w2")),
    "w7": (7, (KacLabel(3, 2), "w1"), (KacLabel(1, 5), "w2")),
    "w12": (12, (KacLabel(1, 7), "w5"), (KacLabel(5, 1), "w7")),
    "w15": (15, (KacLabel(5, 2), "w5"), (KacLabel(1, 8), "w7")),
}


def _normalize_leading(x: VermaElement) -> VermaElement:
    lead = x.coefficient((1,) * grade(x))
    if lead.is_zero():
        raise VirasoroError("vanishing pure-e1 coefficient")
    return x.scale(1 / lead.constant())


def verify_resolution_identities(names=None, t0=T_RESOLUTION) -> ResolutionReport:
    """Check the singular-vector coincidences in V(0, 0).

    w1 = e_1 v and w2 = (e_1^2 - 2/3 e_2) v generate the level-1 and level-2
    submodules; applying further singular operators from both sides must
    give the *same* vector at levels 5, 7, 12 and 15 (after scaling the
    pure-e1 coefficient to one).  Each vector is also checked to be
    singular.  Failures are reported, not raised.
    """
    if names is None:
        names = list(IDENTITIES)
    unknown = [n for n in names if n not in IDENTITIES]
    if unknown:
        raise ValueError(f"unknown identities {unknown}; choose from {list(IDENTITIES)}")

    params = ModuleParams.constants(0, 0)
    hw = VermaElement.highest_weight(params)
    vectors = {
        "w1": apply_sum(build_spq_at(KacLabel(1, 1), t0), hw),
        "w2": apply_sum(build_spq_at(KacLabel(1, 2), t0), hw),
    }
    generators_singular = {n: is_singular(v) for n, v in vectors.items()}

    # w5/w7 feed the level-12/15 identities, so build what is needed
    needed = set(names)
    if needed & {"w12", "w15"}:
        needed |= {"w5", "w7"}
    results = []
    for name in ("w5", "w7", "w12", "w15"):
        if name not in needed:
            continue
        lvl, (label_a, base_a), (label_b, base_b) = IDENTITIES[name]
        lhs = _normalize_leading(apply_sum(build_spq_at(label_a, t0), vectors[base_a]))
        rhs = _normalize_leading(apply_sum(build_spq_at(label_b, t0), vectors[base_b]))
        vectors[name] = lhs
        holds = lhs == rhs
        singular = is_singular(lhs)
        diff = None if holds else first_difference(lhs, rhs)
        if name in names:
            results.append(IdentityResult(name, lvl, holds, singular, diff))
    return ResolutionReport(results, generators_singular, delta_level_bookkeeping())
