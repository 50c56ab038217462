from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egyptfrac.digitvec import DigitVec2, DigitVec3
from egyptfrac.errors import DomainError, NotFinitelyRepresentableError, ParseError
from egyptfrac.numeral import (
    Expansion,
    NumeralString,
    balanced_ternary_to_int,
    dual_representations,
    format_numeral,
    frac_value,
    int_to_balanced_ternary,
    parse_numeral,
    value_to_digits,
)


def test_balanced_ternary_examples():
    assert int_to_balanced_ternary(8) == (-1, 0, 1)
    assert int_to_balanced_ternary(0) == ()
    assert int_to_balanced_ternary(2) == (-1, 1)
    assert balanced_ternary_to_int((-1, 0, 1)) == 8
    assert balanced_ternary_to_int(()) == 0
    assert balanced_ternary_to_int((1, 1)) == 4
    with pytest.raises(ParseError):
        balanced_ternary_to_int((1, 2))


def test_balanced_ternary_round_trip_exhaustive():
    for n in range(-(3**10), 3**10 + 1):
        ds = int_to_balanced_ternary(n)
        assert not ds or ds[-1] != 0
        assert balanced_ternary_to_int(ds) == n


def test_balanced_ternary_against_sum_of_powers():
    for n in range(-500, 501):
        ds = int_to_balanced_ternary(n)
        assert set(ds) <= {-1, 0, 1}
        assert sum(d * 3**i for i, d in enumerate(ds)) == n


def test_frac_value_examples():
    assert frac_value(DigitVec2((1,))) == F(1, 2)
    assert frac_value(DigitVec2((0, 1, 1))) == F(3, 8)
    assert frac_value(DigitVec3((1, -1))) == F(2, 9)
    with pytest.raises(DomainError):
        frac_value((1, 0))


def test_value_to_digits_examples():
    assert value_to_digits(F(1, 2), 2) == DigitVec2((1,))
    assert value_to_digits(0, 2) == DigitVec2()
    assert value_to_digits(0, 3) == DigitVec3()
    for n in (1, 5, 50, 200):
        with pytest.raises(NotFinitelyRepresentableError):
            value_to_digits(F(1, 6), 3, n)
    with pytest.raises(NotFinitelyRepresentableError):
        value_to_digits(F(1, 3), 2, 30)
    with pytest.raises(DomainError):
        value_to_digits(F(1), 2)
    with pytest.raises(DomainError):
        value_to_digits(F(2, 3), 3)


@pytest.mark.parametrize("base,alphabet", [(2, (0, 1)), (3, (-1, 0, 1))])
def test_finite_expansions_unique_exhaustive(base, alphabet):
    # every length-8 string (trailing zeros are padding) hits a distinct value
    seen = {}
    for ds in product(alphabet, repeat=8):
        v = frac_value(ds, base)
        key = ds
        while key and key[-1] == 0:
            key = key[:-1]
        assert seen.setdefault(v, key) == key
        assert value_to_digits(v, base).digits == key
    assert len(seen) == len(alphabet) ** 8


digits2 = st.lists(st.integers(0, 1), max_size=20)
digits3 = st.lists(st.integers(-1, 1), max_size=14)


@given(digits2, st.integers(0, 10))
def test_shift_law_base2(ds, k):
    assert frac_value([0] * k + ds, 2) == frac_value(ds, 2) / 2**k


@given(digits3, st.integers(0, 10))
def test_shift_law_base3(ds, k):
    assert frac_value([0] * k + ds, 3) == frac_value(ds, 3) / 3**k


def test_dual_examples():
    assert [str(e) for e in dual_representations(DigitVec2((1,)))] == ["[0.1]_2", "[0.0(1)]_2"]
    sixth = dual_representations(F(1, 6), 3)
    assert [(e.prefix, e.tail) for e in sixth] == [((0,), 1), ((1,), -1)]
    assert dual_representations(DigitVec2()) == [Expansion(2, ())]
    assert dual_representations(DigitVec3()) == [Expansion(3, ())]
    # one is the all-ones tail only
    assert dual_representations(F(1), 2) == [Expansion(2, (), 1)]
    # a triadic value has no second balanced expansion
    assert dual_representations(F(1, 3), 3) == [Expansion(3, (1,))]
    assert dual_representations(F(1, 5), 2) == []


@pytest.mark.parametrize("base,alphabet,n", [(2, (0, 1), 8), (3, (-1, 0, 1), 6)])
def test_duals_evaluate_to_the_same_value(base, alphabet, n):
    cls = DigitVec2 if base == 2 else DigitVec3
    for ds in product(alphabet, repeat=n):
        v = cls(ds)
        x = frac_value(v)
        duals = dual_representations(v)
        assert duals[0] == Expansion(base, v.digits)
        for e in duals:
            assert e.value() == x
            assert e.tail in alphabet


def test_denominator_two_times_power_of_three_has_two_tails():
    for k in range(0, 5):
        for num in range(-(3**k), 3**k + 1):
            x = F(2 * num + 1, 2 * 3**k)
            if abs(x) > F(1, 2) or x.denominator != 2 * 3**k:
                continue
            duals = dual_representations(x, 3)
            assert len(duals) == (2 if abs(x) < F(1, 2) else 1)
            assert all(e.value() == x and not e.finite for e in duals)


def test_expansion_digits():
    e = Expansion(2, (0,), 1)
    assert e.digits(4) == (0, 1, 1, 1)
    assert e.value() == F(1, 2)
    assert str(Expansion(3, (1,), -1)) == "[0.1(T)]_3"


class TestNumeralText:
    def test_examples(self):
        assert parse_numeral("[10T]_3").value() == 8
        assert parse_numeral("[0.101]_2").value() == F(5, 8)
        assert format_numeral(NumeralString(3, (-1, 0, 1))) == "[10T]_3"
        assert format_numeral(NumeralString.from_value(8, 3)) == "[10T]_3"

    @pytest.mark.parametrize(
        "text,pos",
        [("[0._2", 5), ("10]_2", 0), ("[12]_2", 2), ("[1.0.1]_2", 4), ("[101]_4", 5), ("[1T]_2", 2)],
    )
    def test_errors(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_numeral(text)
        assert exc.value.position == pos

    @given(st.integers(-(3**9), 3**9), digits3)
    def test_round_trip_base3(self, n, frac):
        num = NumeralString(3, int_to_balanced_ternary(n), tuple(frac))
        assert parse_numeral(format_numeral(num)) == num

    @given(st.integers(0, 2**20), digits2)
    def test_round_trip_base2(self, n, frac):
        num = NumeralString.from_value(n + frac_value(frac, 2), 2)
        assert num.value() == n + frac_value(frac, 2)
        assert parse_numeral(format_numeral(num)) == num

    def test_from_value_base3_centres_the_fraction(self):
        x = F(7, 3) + F(1, 9)
        num = NumeralString.from_value(x, 3)
        assert num.value() == x
        assert balanced_ternary_to_int(num.int_digits) == 2
