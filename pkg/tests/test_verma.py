"""Generator action and PBW straightening on Verma modules."""

import random
from fractions import Fraction

import pytest

from virasoro.errors import Inhomogeneous
from virasoro.rational import RF_ONE, RationalFunction, UniPoly
from virasoro.verma import (
    CENTER,
    ModuleParams,
    VermaElement,
    apply_generator,
    first_difference,
    grade,
    monomial_str,
    word_to_element,
)


def symbolic_params() -> ModuleParams:
    t = UniPoly((0, 1))
    return ModuleParams(RationalFunction(UniPoly((0, 1, 2))),       # h = t + 2t^2
                        RationalFunction(UniPoly((6, 13, 6)), t))   # c = 13 + 6t + 6/t


def monomials_up_to(level_max):
    """All ordered monomials of level <= level_max (partitions as tuples)."""
    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest
    out = []
    for n in range(level_max + 1):
        out.extend(partitions(n, n if n else 1))
    return out


class TestGeneratorFixtures:
    def test_lowering_on_level_one(self):
        pm = symbolic_params()
        e1v = word_to_element((1,), pm)
        assert apply_generator(-1, e1v) == VermaElement.highest_weight(pm).scale(2 * pm.h)
        assert apply_generator(-2, e1v).is_zero()

    def test_single_commutator(self):
        pm = symbolic_params()
        e2v = word_to_element((2,), pm)
        got = apply_generator(1, e2v)
        assert got.terms == {(2, 1): RF_ONE, (3,): RF_ONE}

    def test_level_two_base_case(self):
        # e_{-2} e_2 v = (4h + c/2) v
        pm = symbolic_params()
        e2v = word_to_element((2,), pm)
        got = apply_generator(-2, e2v)
        expected = VermaElement.highest_weight(pm).scale(4 * pm.h + pm.c * Fraction(1, 2))
        assert got == expected

    def test_e0_eigenvalue(self):
        pm = symbolic_params()
        x = word_to_element((3, 2, 1), pm)
        assert apply_generator(0, x) == x.scale(pm.h + 6)

    def test_center_acts_by_c(self):
        pm = symbolic_params()
        x = word_to_element((2, 1), pm)
        assert apply_generator(CENTER, x) == x.scale(pm.c)


class TestWordToElement:
    def test_fixtures(self):
        pm = symbolic_params()
        assert word_to_element((1, 2), pm).terms == {(2, 1): RF_ONE, (3,): RF_ONE}
        assert word_to_element((2, 1), pm).terms == {(2, 1): RF_ONE}
        assert word_to_element((1, 1, 1), pm).terms == {(1, 1, 1): RF_ONE}

    def test_rejects_nonpositive_entries(self):
        with pytest.raises(ValueError):
            word_to_element((1, 0), symbolic_params())

    def test_rewrite_invariance(self):
        # e_a e_b = e_b e_a + (b - a) e_{a+b}, applied at a random position
        pm = symbolic_params()
        rng = random.Random(411)
        for _ in range(40):
            word = tuple(rng.randint(1, 4) for _ in range(rng.randint(2, 5)))
            i = rng.randrange(len(word) - 1)
            a, b = word[i], word[i + 1]
            swapped = word[:i] + (b, a) + word[i + 2:]
            merged = word[:i] + (a + b,) + word[i + 2:]
            lhs = word_to_element(word, pm)
            rhs = word_to_element(swapped, pm) + word_to_element(merged, pm).scale(b - a)
            assert lhs == rhs, (word, i)


class TestBracketConsistency:
    def test_positive_pairs_on_all_low_monomials(self):
        rng = random.Random(1905)
        params = [ModuleParams.constants(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                                         Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
                  for _ in range(2)]
        basis = monomials_up_to(6)
        for pm in params:
            for j in range(1, 7):
                for k in range(1, 7):
                    for mono in basis:
                        x = VermaElement(pm, {mono: RF_ONE})
                        lhs = apply_generator(k, apply_generator(j, x)) \
                            - apply_generator(j, apply_generator(k, x))
                        rhs = apply_generator(j + k, x).scale(j - k)
                        assert lhs == rhs, (j, k, mono)

    def test_central_term_pairs(self):
        # [e_{-j}, e_j] = 2j e_0 + (j^3 - j)/12 z
        pm = symbolic_params()
        for j in range(1, 5):
            for mono in monomials_up_to(4):
                x = VermaElement(pm, {mono: RF_ONE})
                lhs = apply_generator(-j, apply_generator(j, x)) \
                    - apply_generator(j, apply_generator(-j, x))
                rhs = (apply_generator(0, x).scale(2 * j)
                       + x.scale(pm.c * Fraction(j**3 - j, 12)))
                assert lhs == rhs, (j, mono)

    def test_level_bookkeeping(self):
        pm = symbolic_params()
        for k in (-2, -1, 1, 3):
            for mono in monomials_up_to(5):
                x = VermaElement(pm, {mono: RF_ONE})
                y = apply_generator(k, x)
                if not y.is_zero():
                    assert grade(y) == grade(x) + k


class TestGrade:
    def test_fixtures(self):
        pm = symbolic_params()
        assert grade(word_to_element((1, 2), pm)) == 3
        assert grade(VermaElement.highest_weight(pm)) == 0
        assert grade(VermaElement.zero(pm)) is None

    def test_inhomogeneous(self):
        pm = symbolic_params()
        mixed = word_to_element((1,), pm) + word_to_element((2,), pm)
        with pytest.raises(Inhomogeneous):
            grade(mixed)


class TestElementBasics:
    def test_addition_cancels(self):
        pm = symbolic_params()
        x = word_to_element((2, 1), pm)
        assert (x - x).is_zero()
        assert (x + (-x)).is_zero()

    def test_equality_requires_same_params(self):
        a = VermaElement.highest_weight(ModuleParams.constants(0, 0))
        b = VermaElement.highest_weight(ModuleParams.constants(1, 0))
        assert a != b

    def test_first_difference(self):
        pm = symbolic_params()
        a = word_to_element((2, 1), pm)
        b = word_to_element((2, 1), pm).scale(2)
        assert first_difference(a, b) == "e2.e1.v"
        assert first_difference(a, a) is None

    def test_rendering(self):
        pm = symbolic_params()
        assert monomial_str(()) == "v"
        assert monomial_str((5, 3, 1)) == "e5.e3.e1.v"
        x = word_to_element((1, 2), pm)
        assert [d["monomial"] for d in x.to_json_obj()] == [[2, 1], [3]]
