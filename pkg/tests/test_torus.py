"""Torus quotient: characters, twists, subgroup triviality, enumeration."""

import cmath
import math
from fractions import Fraction

import pytest

from heckext.presets import sl2, u11, u21
from heckext.torus import (
    Character,
    EnumerationBoundError,
    TorusDatum,
    TorusError,
    c_value,
    character,
    enumerate_characters,
    is_trivial_on_subgroup,
    pair,
    s_lambda,
    trivial_character,
    twist,
)


def chi(datum, *phases):
    return character(datum, phases)


def test_pair_trivial_character():
    torus = sl2(5).torus
    assert pair(trivial_character(torus), (3,)) == 0


def test_pair_generator_evaluation():
    torus = sl2(5).torus
    assert pair(chi(torus, "1/4"), (1,)) == Fraction(1, 4)
    assert pair(chi(torus, "2/4"), (3,)) == Fraction(1, 2)


def test_pair_rejects_wrong_length():
    torus = sl2(5).torus
    with pytest.raises(TorusError):
        pair(chi(torus, "1/4"), (1, 2))


def test_twist_inverts_sl2_characters():
    torus = sl2(5).torus
    assert twist(torus, chi(torus, "1/4"), "s0") == chi(torus, "3/4")
    assert twist(torus, trivial_character(torus), "s1") == trivial_character(torus)


def test_twist_u11_action():
    # e -> -q*e with q = 3: phase e/8 goes to 5e/8
    torus = u11(3).torus
    for e in range(8):
        expected = chi(torus, Fraction(5 * e, 8))
        assert twist(torus, chi(torus, Fraction(e, 8)), "s1") == expected


def test_twist_is_involutive_everywhere():
    for preset in (sl2(5), u11(3), u21(2)):
        torus = preset.torus
        for ch in enumerate_characters(torus):
            for s in preset.coxeter.labels:
                assert twist(torus, twist(torus, ch, s), s) == ch


def test_subgroup_triviality():
    torus = sl2(5).torus
    assert is_trivial_on_subgroup(torus, trivial_character(torus), "s0")
    # rank-one subgroup at s0 is the whole cyclic group
    assert not is_trivial_on_subgroup(torus, chi(torus, "1/4"), "s0")


def test_subgroup_triviality_u21_hybrid():
    torus = u21(2).torus
    hybrid = chi(torus, "1/3", 0)
    assert is_trivial_on_subgroup(torus, hybrid, "s2")
    assert not is_trivial_on_subgroup(torus, hybrid, "s1")


def _subgroup_elements(torus, s):
    """All elements generated by the subgroup's exponent vectors."""
    gens = torus.subgroup(s)
    seen = {tuple([0] * torus.rank)}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple((a + b) % d for a, b, d in zip(x, g, torus.orders))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def test_c_value_matches_root_of_unity_average():
    # independent oracle: numerically average the character over the subgroup
    for preset in (sl2(5), u11(3), u21(2)):
        torus = preset.torus
        for ch in enumerate_characters(torus):
            for s in preset.coxeter.labels:
                elements = _subgroup_elements(torus, s)
                total = sum(
                    cmath.exp(2j * math.pi * pair(ch, x)) for x in elements
                )
                average = abs(total) / len(elements)
                assert abs(average - c_value(torus, ch, s)) < 1e-9


def test_c_value_examples():
    torus = sl2(5).torus
    assert c_value(torus, trivial_character(torus), "s0") == 1
    assert c_value(torus, chi(torus, "2/4"), "s1") == 0
    hybrid = character(u21(2).torus, ("1/3", 0))
    assert c_value(u21(2).torus, hybrid, "s2") == 1


def test_s_lambda_examples():
    sl = sl2(5)
    assert s_lambda(sl.torus, sl.coxeter.labels, trivial_character(sl.torus)) == {
        "s0",
        "s1",
    }
    assert s_lambda(sl.torus, sl.coxeter.labels, chi(sl.torus, "1/4")) == frozenset()
    u = u21(2)
    assert s_lambda(u.torus, u.coxeter.labels, trivial_character(u.torus)) == {
        "s1",
        "s2",
    }


def test_enumeration_counts():
    assert len(enumerate_characters(sl2(5).torus)) == 4
    assert len(enumerate_characters(u21(2).torus)) == 9
    assert len(enumerate_characters(u11(3).torus)) == 8


def test_enumeration_is_deterministic_and_lexicographic():
    chars = enumerate_characters(sl2(5).torus)
    phases = [c.phases[0] for c in chars]
    assert phases == sorted(phases)


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        enumerate_characters(sl2(5).torus, bound=3)


def test_character_constructor_validation():
    torus = sl2(5).torus
    with pytest.raises(TorusError):
        character(torus, ["1/3"])  # denominator does not divide 4
    with pytest.raises(TorusError):
        character(torus, ["1/4", "1/4"])  # wrong rank
    assert character(torus, ["5/4"]) == chi(torus, "1/4")  # reduced mod 1


def test_datum_validation():
    with pytest.raises(TorusError):
        TorusDatum(4, (3,), {"s": ((1,),)}, {"s": ((1,),)})  # p not prime
    with pytest.raises(TorusError):
        TorusDatum(5, (10,), {"s": ((1,),)}, {"s": ((1,),)})  # gcd(d, p) > 1
    with pytest.raises(TorusError):
        TorusDatum(5, (4,), {"s": ((2,),)}, {"s": ((1,),)})  # not involutive
    with pytest.raises(TorusError):
        TorusDatum(5, (4, 2), {"s": ((0, 1), (0, 1))}, {"s": ((0, 0),)})
    with pytest.raises(TorusError):
        # subgroups must cover the same reflections as actions
        TorusDatum(5, (4,), {"s": ((1,),)}, {})


def test_character_equality_is_phase_equality():
    torus = sl2(5).torus
    assert Character((Fraction(1, 4),)) == chi(torus, "1/4")
    assert chi(torus, "1/4") != chi(torus, "3/4")
