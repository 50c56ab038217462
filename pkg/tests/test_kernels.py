from fractions import Fraction as F
from itertools import product

import numpy as np
import pytest

from egyptfrac import _kernels as K
from egyptfrac import tables
from egyptfrac.digitvec import DigitVec2, DigitVec3
from egyptfrac.egyptian import check_linear_z2, check_linear_z3, from_digits, sigma
from egyptfrac.fractal import Point, sierpinski_member, snowflake_member
from egyptfrac.numeral import frac_value


def test_backend_flag(backend):
    assert K.numba_enabled() == (backend == "numba")


def test_tables_match_digit_vectors():
    for base, cls, n in ((2, DigitVec2, 4), (3, DigitVec3, 3)):
        rows = [tables.row_vector(base, n, i) for i in range(base**n)]
        assert rows == list(cls.enumerate(n))
        L, _ = tables.sigma_weights(n)
        S = tables.scaled_sigmas(base, n)
        vals = tables.scaled_values(base, n)
        for i, v in enumerate(rows):
            assert F(int(S[i]), L) == sigma(from_digits(v))
            assert F(int(vals[i]), base**n) == frac_value(v)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_sum2_sweep_against_reports(backend, n):
    vecs = list(DigitVec2.enumerate(n))
    expect = sum(check_linear_z2(x, y).linear for x, y in product(vecs, repeat=2))
    linear, nviol, viol = K.sum2_sweep(tables.scaled_sigmas(2, n), 0, 2**n)
    assert (linear, nviol, len(viol)) == (expect, 0, 0)
    assert expect == 3**n


def test_sum2_sweep_reports_planted_violations(backend):
    # with all sums zero every pair looks linear; the overlapping ones are violations
    n = 4
    m = 2**n
    S = np.zeros(m, dtype=np.int64)
    linear, nviol, viol = K.sum2_sweep(S, 0, m, cap=5)
    expect = [(i, k) for i in range(m) for k in range(m) if i & k]
    assert linear == m * m
    assert nviol == len(expect)
    assert [tuple(r) for r in viol.tolist()] == expect[:5]


def test_sum2_sweep_split_ranges_add_up(backend):
    S = tables.scaled_sigmas(2, 6)
    whole = K.sum2_sweep(S, 0, 64)[0]
    assert sum(K.sum2_sweep(S, lo, lo + 16)[0] for lo in range(0, 64, 16)) == whole


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sum3_sweep_against_reports(backend, n):
    vecs = list(DigitVec3.enumerate(n))
    linear = zempty = probe = zero_nonempty = 0
    for x, y in product(vecs, repeat=2):
        r = check_linear_z3(x, y)
        linear += r.linear
        zempty += r.z.is_zero()
        if r.sigma_z == 0 and not r.z.is_zero():
            zero_nonempty += 1
            probe += not r.linear
    D = tables.digit_table(3, n)
    _, W = tables.sigma_weights(n)
    stats, viol = K.sum3_sweep(D, tables.scaled_sigmas(3, n), W, 0, 3**n)
    assert stats == [9**n, linear, zempty, 0, 0, probe, zero_nonempty]
    assert len(viol) == 0 and zempty == 7**n


def test_sum3_sweep_reports_planted_violations(backend):
    # zeroed row sums break the linearity test for most pairs
    n = 2
    vecs = list(DigitVec3.enumerate(n))
    D = tables.digit_table(3, n)
    L, W = tables.sigma_weights(n)
    S = np.zeros(3**n, dtype=np.int64)
    expect = []
    for i, x in enumerate(vecs):
        for k, y in enumerate(vecs):
            r = check_linear_z3(x, y)
            lin = r.rhs == 0
            if r.z.is_zero() and not lin:
                expect.append((i, k, 1))
            elif lin and r.sigma_z != 0:
                expect.append((i, k, 2))
    stats, viol = K.sum3_sweep(D, S, W, 0, 3**n, cap=100)
    assert stats[3] + stats[4] == len(expect) > 0
    assert [tuple(r) for r in viol.tolist()] == expect


def test_linear_pairs2(backend):
    n = 4
    vecs = list(DigitVec2.enumerate(n))
    expect = [(i, k) for i, x in enumerate(vecs) for k, y in enumerate(vecs)
              if check_linear_z2(x, y).linear]
    got = K.linear_pairs2(tables.scaled_sigmas(2, n))
    assert [tuple(r) for r in got.tolist()] == expect


def test_zempty_pairs3(backend):
    n = 2
    vecs = list(DigitVec3.enumerate(n))
    expect = [(i, k) for i, x in enumerate(vecs) for k, y in enumerate(vecs)
              if check_linear_z3(x, y).z.is_zero()]
    D = tables.digit_table(3, n)
    _, W = tables.sigma_weights(n)
    got = K.zempty_pairs3(D, tables.scaled_sigmas(3, n), W)
    assert [tuple(r) for r in got.tolist()] == expect


@pytest.mark.parametrize("depth", [0, 1, 3, 5])
def test_member_grid_sierpinski(backend, depth):
    d = 40
    coords = np.arange(-4, d + 5, dtype=np.int64)
    X, Y = (a.ravel() for a in np.meshgrid(coords, coords, indexing="ij"))
    got = K.member_grid(X, Y, d, depth, K.SIERPINSKI)
    expect = [sierpinski_member(Point(F(int(x), d), F(int(y), d)), depth).member for x, y in zip(X, Y)]
    assert got.tolist() == expect


@pytest.mark.parametrize("depth", [0, 1, 2, 3])
def test_member_grid_snowflake(backend, depth):
    d = 54
    coords = np.arange(-d // 2 - 3, d // 2 + 4, dtype=np.int64)
    X, Y = (a.ravel() for a in np.meshgrid(coords, coords, indexing="ij"))
    got = K.member_grid(X, Y, d, depth, K.SNOWFLAKE)
    expect = []
    for x, y in zip(X, Y):
        if 2 * abs(x) > d or 2 * abs(y) > d:
            expect.append(False)
        else:
            expect.append(snowflake_member(Point(F(int(x), d), F(int(y), d)), depth).member)
    assert got.tolist() == expect


def test_backends_agree_directly():
    S2 = tables.scaled_sigmas(2, 7)
    a = K._sum2_sweep_nb(S2, 0, 128, 64)
    b = K._sum2_sweep_np(S2, 0, 128, 64)
    assert a[0] == b[0] and a[1] == b[1]
    D = tables.digit_table(3, 4)
    _, W = tables.sigma_weights(4)
    S3 = tables.scaled_sigmas(3, 4)
    assert list(K._sum3_sweep_nb(D, S3, W, 0, 81, 64)[0]) == list(K._sum3_sweep_np(D, S3, W, 0, 81, 64)[0])
    assert np.array_equal(K._linear_pairs2_nb(S2), K._linear_pairs2_np(S2))
    assert np.array_equal(K._zempty_pairs3_nb(D, S3, W), K._zempty_pairs3_np(D, S3, W))
    rng = np.random.default_rng(7)
    X, Y = rng.integers(-300, 300, 2000), rng.integers(-300, 300, 2000)
    for kind in (K.SIERPINSKI, K.SNOWFLAKE):
        nb = K._member_grid_nb(X, Y, 486, 4, kind)
        npy = K._member_grid_np(X, Y, 486, 4, kind)
        assert np.array_equal(nb, npy)
