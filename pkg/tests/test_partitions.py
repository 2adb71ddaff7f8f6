import pytest
from hypothesis import given, settings, strategies as st

from podlab import pseries as ps
from podlab.numthy import sigma
from podlab.partitions import (
    distinct_odd_partitions, pod_dp, pod_dp_table, pod_enum, pod_series, pod_values, t4, t4_table,
)

from oracles import naive_pow, pod1_bruteforce


def test_pod1_against_bruteforce():
    expected = [pod1_bruteforce(n) for n in range(25)]
    assert expected[:6] == [1, 1, 1, 2, 3, 4]
    assert list(pod_series(1, 25).coeffs) == expected


def test_pod4_small_values():
    pod1 = [pod1_bruteforce(n) for n in range(16)]
    expected = naive_pow(pod1, 4)
    assert expected[:6] == [1, 4, 10, 24, 55, 116]
    assert list(pod_series(4, 16).coeffs) == expected


def test_golden_sum_126():
    p = pod_values(4, 5)
    assert p[5] + p[2] == 126


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_series_methods_agree(k):
    assert pod_series(k, 120, "theta") == pod_series(k, 120, "product")


def test_pod_series_rejects():
    with pytest.raises(ValueError):
        pod_series(0, 10)
    with pytest.raises(ValueError):
        pod_series(1, 10, "magic")


def test_pod_series_is_power_of_pod1():
    for k in range(1, 6):
        assert pod_series(k, 80) == ps.power(pod_series(1, 80), k)


def test_pod_dp():
    assert pod_dp(4, 2) == 10
    assert pod_dp(1, 0) == 1
    assert pod_dp(4, 14) == 20736 - 116


def test_pod_enum():
    assert pod_enum(1, 5) == 4
    assert pod_enum(2, 0) == 1
    assert pod_enum(4, 8) + pod_series(4, 24).coeffs[23] == 1039851
    with pytest.raises(ValueError):
        pod_enum(1, 41)


def test_distinct_odd_partitions_listing():
    assert sorted(distinct_odd_partitions(5)) == sorted([(5,), (4, 1), (3, 2), (2, 2, 1)])


def test_triple_agreement():
    for k in (1, 2, 3, 4):
        series = pod_series(k, 31).coeffs
        dp = pod_dp_table(k, 30)
        for n in range(31):
            assert pod_enum(k, n) == dp[n] == series[n]


def test_values_positive_and_start_at_one():
    for k in (1, 4, 7):
        vals = pod_values(k, 60)
        assert vals[0] == 1
        assert all(v > 0 for v in vals)


def test_t4_examples():
    assert t4(0) == 1
    assert t4(1) == 4 == sigma(3)
    assert t4(5) == 12 == sigma(11)


def test_t4_matches_psi_fourth_power():
    from podlab.qproducts import psi
    assert t4_table(200) == ps.power(psi(201), 4).coeffs


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 400))
def test_t4_is_sigma(n):
    assert t4(n) == sigma(2 * n + 1)
