from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egyptfrac.digitvec import DigitVec2, DigitVec3, agreement, vec_add2
from egyptfrac.egyptian import (
    EgyptianFraction,
    add_disjoint,
    add_general,
    check_linear_z2,
    check_linear_z3,
    disjointify,
    fib_split,
    from_digits,
    greedy_expand,
    is_equivalent,
    sigma,
    sub_disjoint,
    sub_general,
    to_digits,
)
from egyptfrac.errors import DomainError, ParseError, PreconditionError, ResourceLimitError

E = EgyptianFraction.parse
V2, V3 = DigitVec2, DigitVec3


def naive_greedy(x):
    """Independent greedy: scan n = 2, 3, ... for the first 1/n <= remainder."""
    out = []
    while x:
        n = 2
        while F(1, n) > x:
            n += 1
        out.append(n)
        x -= F(1, n)
    return out


def dens(e):
    return sorted(e.denominators())


def test_from_digits_examples():
    assert from_digits(V2((1, 1))) == E("1/2+1/3")
    assert from_digits(V2()) == EgyptianFraction()
    assert from_digits(V3((0, 1, 0, -1))) == E("1/3-1/5")


def test_sigma_examples():
    assert sigma(E("1/2+1/3+1/12+1/18+1/36")) == 1
    assert sigma(E("1/5+1/10+1/20")) == F(7, 20)
    assert sigma(EgyptianFraction()) == 0


def test_fib_split_examples():
    assert fib_split(2) == E("1/3+1/15")
    assert fib_split(1) == E("1/2+1/6")
    k = 10
    assert dens(fib_split(k)) == [k + 1, (k + 1) * (2 * k + 1)] == [11, 231]
    with pytest.raises(DomainError):
        fib_split(0)


@pytest.mark.parametrize("k", range(1, 60))
def test_fib_split_sums(k):
    assert sigma(fib_split(k)) == F(2, 2 * k + 1)


@pytest.mark.parametrize("x", [F(2, 5), F(1, 7), F(3, 7), F(4, 13), F(7, 15), F(5, 6)])
def test_greedy_matches_naive_oracle(x):
    assert dens(greedy_expand(x)) == naive_greedy(x)


def test_greedy_examples():
    assert dens(greedy_expand(F(2, 5))) == [3, 15]
    assert dens(greedy_expand(F(1, 7))) == [7]
    assert dens(greedy_expand(F(3, 7))) == [3, 11, 231]
    for bad in (F(0), F(1), F(3, 2), F(-1, 3)):
        with pytest.raises(DomainError):
            greedy_expand(bad)


def test_greedy_big_denominators():
    e = greedy_expand(F(5, 121))
    assert max(e.denominators()) > 10**24
    assert sigma(e) == F(5, 121)


@given(st.integers(2, 400).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))))
def test_greedy_invariants(pq):
    x = F(*pq)
    e = greedy_expand(x)
    assert sigma(e) == x
    assert len(e) <= x.numerator
    remainder, prev = x, None
    for n in sorted(e.denominators()):
        remainder -= F(1, n)
        assert remainder >= 0
        if prev is not None:
            assert remainder < prev
        prev = remainder


def test_disjoint_ops():
    assert add_disjoint(E("1/2"), E("1/3")) == E("1/2+1/3")
    x = E("1/5+1/7")
    assert add_disjoint(x, EgyptianFraction()) == x
    assert sub_disjoint(E("1/3"), E("1/4")) == E("1/3-1/4")
    assert sub_disjoint(x, EgyptianFraction()) == EgyptianFraction(x.terms, True)
    assert sub_disjoint(E("1/2"), E("1/5")) == E("1/2-1/5")
    with pytest.raises(PreconditionError):
        add_disjoint(E("1/2+1/3"), E("1/3"))
    with pytest.raises(PreconditionError):
        sub_disjoint(E("1/3"), E("1/3"))


def test_add_general_examples():
    assert add_general(E("1/3"), E("1/3")) == E("1/2+1/6")
    assert add_general(E("1/4"), E("1/4")) == E("1/2")
    assert add_general(E("1/2+1/3"), E("1/4")) == E("1/2+1/3+1/4")
    with pytest.raises(DomainError):
        add_general(E("1/3-1/4"), E("1/2"))


def test_add_general_half_plus_half():
    # 2/2 is not a unit fraction; the result must still be distinct terms
    e = add_general(E("1/2"), E("1/2"))
    assert sigma(e) == 1
    assert all(n >= 2 for n in e.denominators())


def test_add_general_exhaustive_small():
    vecs = [V2(d) for d in product((0, 1), repeat=5)]
    for x, y in product(vecs, repeat=2):
        ex, ey = from_digits(x), from_digits(y)
        s = add_general(ex, ey)
        assert sigma(s) == sigma(ex) + sigma(ey)
        assert not s.has_negative()


def test_sub_general_examples():
    got = sub_general(E("1/5+1/10+1/20"), E("1/10+1/30"))
    assert got == E("1/5+1/20-1/30")
    assert str(got) == "1/5 + 1/20 - 1/30"
    x = E("1/2+1/7")
    assert sub_general(x, x) == EgyptianFraction((), True)
    assert sub_general(EgyptianFraction(), E("1/3")) == E("-1/3")


def test_sub_general_opposite_signs_double_up():
    got = sub_general(E("1/3"), E("-1/3"))
    assert sigma(got) == F(2, 3)


def test_is_equivalent_examples():
    assert is_equivalent(E("1/3+1/15"), E("1/4+1/12+1/15"))
    assert is_equivalent(E("1/7"), E("1/7"))
    assert not is_equivalent(E("1/2"), E("1/3"))


def test_disjointify_examples():
    x, y = E("1/2"), E("1/3")
    assert disjointify(x, y) == (x, y)
    assert disjointify(E("1/3"), E("1/3")) == (E("1/3"), E("1/4+1/12"))
    x2, y2 = disjointify(E("1/2"), E("1/2+1/3"))
    assert x2 == E("1/2")
    assert 3 in y2.denominators() and 2 not in y2.denominators()
    assert sigma(y2) == F(5, 6)
    assert set(x2.denominators()).isdisjoint(y2.denominators())


def test_disjointify_exhaustive_small():
    vecs = [V2(d) for d in product((0, 1), repeat=4)]
    for a, b in product(vecs, repeat=2):
        x, y = from_digits(a), from_digits(b)
        x2, y2 = disjointify(x, y)
        assert set(x2.denominators()).isdisjoint(y2.denominators())
        assert sigma(x2) == sigma(x) and sigma(y2) == sigma(y)


def test_disjointify_cap_reports_partial():
    with pytest.raises(ResourceLimitError) as exc:
        disjointify(E("1/2+1/3+1/6"), E("1/2+1/3+1/6"), max_steps=1)
    assert exc.value.partial is not None


def test_h_is_a_bijection_exhaustive():
    for n, cls, alphabet in ((8, V2, (0, 1)), (8, V3, (-1, 0, 1))):
        seen = set()
        for ds in product(alphabet, repeat=n):
            v = cls(ds)
            e = from_digits(v)
            assert to_digits(e, cls.BASE) == v
            seen.add(e)
        assert len(seen) == len(alphabet) ** n


def test_sigma_additive_on_disjoint_pairs_exhaustive():
    vecs = [V2(d) for d in product((0, 1), repeat=10)]
    masks = [sum(b << j for j, b in enumerate(v.digits)) for v in vecs]
    sig = {v: sigma(from_digits(v)) for v in vecs}
    count = 0
    for x, mx in zip(vecs, masks):
        for y, my in zip(vecs, masks):
            if mx & my:
                continue
            count += 1
            assert sig[vec_add2(x, y)] == sig[x] + sig[y]
    assert count == 3**10
    for x, y in [(vecs[5], vecs[512]), (vecs[1], vecs[2]), (vecs[0], vecs[1023])]:
        e = add_disjoint(from_digits(x), from_digits(y))
        assert sigma(e) == sig[x] + sig[y]


def test_check_linear_z2_examples():
    r = check_linear_z2(V2((1,)), V2((0, 1)))
    assert r.linear and r.z == V2()
    r = check_linear_z2(V2((1,)), V2((1,)))
    assert (r.lhs, r.rhs, r.linear, r.z) == (1, 0, False, V2((1,)))
    r = check_linear_z2(V2((1, 1)), V2((1, 0, 1)))
    # lhs = (1/2 + 1/3) + (1/2 + 1/4), rhs = sigma(h(0,1,1)) = 1/3 + 1/4
    assert r.lhs == F(5, 6) + F(3, 4) and r.rhs == F(7, 12)
    assert not r.linear and r.z == V2((1,))


def test_check_linear_z3_examples():
    r = check_linear_z3(V3((1,)), V3((-1,)))
    assert r.linear and r.z == V3()
    r = check_linear_z3(V3((1, 0, 1)), V3((0, -1, 0, 1)))
    assert r.linear and r.z == V3()
    r = check_linear_z3(V3((1,)), V3((1,)))
    assert (r.lhs, r.rhs, r.sigma_z, r.linear) == (1, F(-1, 2), F(1, 2), False)


def test_linearity_report_lines():
    assert check_linear_z2(V2((1,)), V2((1,))).lines() == ["lhs=1", "rhs=0", "z=(1)", "linear=no"]


def test_prop_sum2_small_exhaustive_via_reports():
    vecs = [V2(d) for d in product((0, 1), repeat=4)]
    for x, y in product(vecs, repeat=2):
        r = check_linear_z2(x, y)
        assert r.linear == r.z.is_zero()
        # the defect is exactly twice sigma(h(z))
        assert r.lhs - r.rhs == 2 * sigma(from_digits(agreement(x, y)))


def test_prop_sum3_small_exhaustive_via_reports():
    vecs = [V3(d) for d in product((-1, 0, 1), repeat=3)]
    for x, y in product(vecs, repeat=2):
        r = check_linear_z3(x, y)
        if r.z.is_zero():
            assert r.linear
        if r.linear:
            assert r.sigma_z == 0


class TestTextForm:
    def test_parse_and_format(self):
        e = E("1/5 + 1/20 - 1/30")
        assert e.denominators() == {5: 1, 20: 1, 30: -1}
        assert e.signed
        assert str(e) == "1/5 + 1/20 - 1/30"
        assert E(str(e)) == e
        assert str(E("-1/3")) == "-1/3"
        assert E("0") == EgyptianFraction()

    @pytest.mark.parametrize("text", ["1/1", "1/2+1/2", "2/5", "1/3 1/4", "", "1/3+"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            E(text)

    def test_standard_rejects_negative(self):
        with pytest.raises(DomainError):
            EgyptianFraction(((1, -1),), signed=False)


def test_add_general_totals_above_one():
    ones = from_digits(V2((1,) * 8))
    e = add_general(ones, ones)
    assert sigma(e) == 2 * sigma(ones) > 3
    assert len(e.denominators()) == len(e)


def test_sub_general_negative_duplicates():
    x = E("-1/3-1/4")
    got = sub_general(x, E("1/3+1/4"))
    assert sigma(got) == -2 * (F(1, 3) + F(1, 4))
    assert all(c in (-1, 1) for c in got.denominators().values())
