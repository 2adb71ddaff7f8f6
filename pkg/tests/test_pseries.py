import pytest
from hypothesis import given, settings, strategies as st

from podlab import pseries as ps
from podlab.pseries import ModulusError
from podlab.qproducts import euler, psi

from oracles import naive_mul, triangular_indicator, naive_pow


def c(*xs):
    return ps.make(xs)


# -- construction ----------------------------------------------------------

def test_make_exact():
    s = ps.make([1, 1, 0, 1])
    assert s.coeffs == (1, 1, 0, 1)
    assert s.precision == 4
    assert s.modulus is None


def test_make_reduces():
    assert ps.make([5, -1], 3).coeffs == (2, 2)
    assert ps.make([7], 7).coeffs == (0,)


@pytest.mark.parametrize("coeffs, m", [([], None), ([1], 1), ([1], 0), ([1], -3)])
def test_make_rejects(coeffs, m):
    with pytest.raises(ValueError):
        ps.make(coeffs, m)


# -- ring operations -------------------------------------------------------

def test_add_examples():
    assert ps.add(c(1, 1), c(1, -1)).coeffs == (2, 0)
    assert ps.add(c(1, 1, 1), ps.zero(3)).coeffs == (1, 1, 1)
    assert ps.add(ps.make([5, 8], 9), ps.make([4, 1], 9)).coeffs == (0, 0)


def test_add_truncates_to_min_precision():
    assert ps.add(c(1, 2, 3), c(1, 1)).precision == 2


def test_mixed_ring_uses_modulus():
    s = ps.add(c(10, 3), ps.make([1, 1], 9))
    assert s.modulus == 9
    assert s.coeffs == (2, 4)


def test_different_moduli_refused():
    with pytest.raises(ModulusError):
        ps.add(ps.make([1], 3), ps.make([1], 9))
    with pytest.raises(ModulusError):
        ps.mul(ps.make([1], 3), ps.make([1], 9))


def test_mul_examples():
    assert ps.mul(c(1, 1, 0), c(1, -1, 0)).coeffs == (1, 0, -1)
    assert ps.mul(c(1, 1, 0), c(1, 1, 0)).coeffs == (1, 2, 1)


def test_euler_times_inverse_is_one():
    e = euler(50)
    assert ps.mul(e, ps.invert(e)) == ps.one(50)


def test_power_examples():
    assert ps.power(c(1, 1, 0, 0), 3).coeffs == (1, 3, 3, 1)
    assert ps.power(c(3, 7, 1), 0) == ps.one(3)


def test_psi_fourth_power_against_convolution():
    expected = naive_pow(triangular_indicator(10), 4)
    assert expected == [1, 4, 6, 8, 13, 12, 14, 24, 18, 20]
    assert list(ps.power(psi(10), 4).coeffs) == expected


def test_power_negative_refused():
    with pytest.raises(ValueError):
        ps.power(c(1, 1), -1)


def test_invert_examples():
    assert ps.invert(ps.make([1, -1, 0, 0, 0])).coeffs == (1, 1, 1, 1, 1)
    assert ps.invert(c(1)).coeffs == (1,)
    # pod_{-4}(0..5), frozen from the brute-force oracle in test_partitions
    assert ps.invert(ps.power(ps.negate_q(psi(6)), 4)).coeffs == (1, 4, 10, 24, 55, 116)


def test_invert_non_unit():
    with pytest.raises(ValueError):
        ps.invert(c(2, 1))
    with pytest.raises(ValueError):
        ps.invert(ps.make([3, 1], 9))
    assert ps.invert(ps.make([2, 1], 9)).coeffs == (5, 2)


def test_miller_power_matches_repeated_products():
    a = ps.make([1, 2, -1, 0, 3, 1, 0, -2])
    for e in range(0, 6):
        assert ps.miller_power(a, e) == ps.power(a, e)
    for e in range(1, 5):
        assert ps.miller_power(a, -e) == ps.power(ps.invert(a), e)
    b = ps.make([2, 1, 1, 0, 5])
    assert ps.miller_power(b, 3) == ps.power(b, 3)


def test_miller_power_modular_fallback():
    a = ps.make([1, 4, 2, 7], 9)
    assert ps.miller_power(a, -2) == ps.power(ps.invert(a), 2)


def test_operators():
    a, b = c(1, 2, 3), c(0, 1, 1)
    assert a + b == ps.add(a, b)
    assert a - b == ps.sub(a, b)
    assert a * b == ps.mul(a, b)
    assert 3 * a == ps.scale(a, 3)
    assert a ** 2 == ps.mul(a, a)
    assert (a + 1).coeffs == (2, 2, 3)
    assert (1 - a).coeffs == (0, -2, -3)


# -- reindexing ------------------------------------------------------------

def test_subst_qk():
    assert ps.subst_qk(c(1, 2, 3, 0, 0, 0), 2).coeffs == (1, 0, 2, 0, 3, 0)
    a = c(4, 5, 6)
    assert ps.subst_qk(a, 1) == a
    assert ps.subst_qk(psi(20), 9).support() == [0, 9]
    assert ps.subst_qk(psi(30), 9).support() == [0, 9, 27]


def test_unsubst_roundtrip():
    a = c(1, 2, 3, 4)
    assert ps.unsubst_qk(ps.subst_qk(a, 3), 3).coeffs == (1, 2)
    with pytest.raises(ValueError):
        ps.unsubst_qk(c(1, 1), 2)


def test_negate_q():
    assert ps.negate_q(c(1, 1, 0, 1)).coeffs == (1, -1, 0, -1)
    a = c(3, -2, 5, 7)
    assert ps.negate_q(ps.negate_q(a)) == a
    pod4 = ps.invert(ps.power(ps.negate_q(psi(6)), 4))
    assert ps.negate_q(pod4).coeffs == (1, -4, 10, -24, 55, -116)


def test_extract():
    assert ps.extract(c(1, 2, 3, 4, 5, 6), 2, 3).coeffs == (3, 6)
    a = c(1, 2, 3)
    assert ps.extract(a, 0, 1) == a
    with pytest.raises(ValueError):
        ps.extract(a, 3, 3)
    with pytest.raises(ValueError):
        ps.extract(a, -1, 3)


def test_extract_signed_pod4_section():
    inv = ps.invert(ps.power(psi(60), 4))
    sec = ps.extract(inv, 2, 3)
    assert sec.precision == 20
    # (-1)^(3n+2) pod4(3n+2) from the convolution oracle
    assert sec.coeffs[:5] == (10, -116, 819, -4480, 20620)


def test_section_keeps_residue_class_in_place():
    assert ps.section(c(1, 2, 3, 4, 5), 1, 3).coeffs == (0, 2, 0, 0, 5)


def test_reduce():
    a = c(10, -36, 27)
    assert ps.reduce(a, 9).coeffs == (1, 0, 0)
    assert ps.reduce(a, 81).coeffs == (10, 45, 27)
    assert ps.reduce(ps.reduce(a, 81), 81) == ps.reduce(a, 81)
    assert ps.reduce(ps.reduce(a, 81), 9) == ps.reduce(a, 9)
    with pytest.raises(ValueError):
        ps.reduce(a, 1)


def test_eq_upto():
    assert ps.eq_upto(c(1, 9), c(1, 0), 2, 9)
    v = ps.eq_upto(c(1, 1), c(1, 0), 2)
    assert not v
    assert (v.exponent, v.lhs, v.rhs) == (1, 1, 0)
    with pytest.raises(ValueError):
        ps.eq_upto(c(1, 1), c(1, 0), 3)


def test_dump_roundtrip():
    for a in (c(1, 0, -3, 7), ps.make([4, 5, 0], 6)):
        text = ps.dumps(a)
        assert text.splitlines()[0] == f"# precision={a.precision} modulus={a.modulus or 'none'}"
        assert ps.loads(text) == a
    assert ps.dumps(c(1, 0)) == "# precision=2 modulus=none\n0\t1\n1\t0\n"


def test_kronecker_known_product():
    a = c(123456789, -987654321, 0, 5, -1)
    b = c(-3, 0, 77, 1, 999999999999)
    expected = naive_mul(list(a), list(b))
    assert list(ps.mul(a, b, method="kronecker").coeffs) == expected
    assert ps.mul(a, b, method="kronecker") == ps.mul(a, b)


def test_unknown_mul_method():
    with pytest.raises(ValueError):
        ps.mul(c(1), c(1), method="fft")


# -- small randomized properties (the 10^3-case runs live in ring_laws.py) ----

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=12)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_negate_q_is_a_homomorphism(x, y):
    a, b = ps.make(x), ps.make(y)
    assert ps.negate_q(a * b) == ps.negate_q(a) * ps.negate_q(b)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_schoolbook_matches_naive(x, y):
    assert list(ps.mul(ps.make(x), ps.make(y)).coeffs) == naive_mul(x, y)


@settings(max_examples=100, deadline=None)
@given(coeff_lists, st.integers(2, 100))
def test_reduce_commutes_with_mul(x, m):
    a = ps.make(x)
    assert ps.reduce(a * a, m) == ps.reduce(a, m) * ps.reduce(a, m)
