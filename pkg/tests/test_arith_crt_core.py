import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

import nttkern.arith.crt_core as crt
import nttkern.common.contracts as contracts

odd_moduli = st.integers(min_value=1, max_value=2 ** 20).map(
    lambda k: 2 * k + 1)
powers_of_two = st.integers(min_value=1, max_value=40).map(lambda e: 2 ** e)


@pytest.mark.parametrize("p,R", [(1, 8), (4, 8), (-3, 8), (7, 1), (7, 12)])
def test_modulus_pair_rejects(p, R):
    with pytest.raises(crt.InvalidModulusError):
        crt.ModulusPair(p, R)


def test_modulus_pair_errors_are_value_errors():
    assert issubclass(crt.InvalidModulusError, contracts.ContractError)
    assert issubclass(crt.NotCoprimeError, ValueError)


@given(odd_moduli, powers_of_two)
def test_mod_inverse_power_of_two(a, m):
    x = crt.mod_inverse(a, m)
    assert 1 <= x < m or m == 2
    assert (a * x) % m == 1 % m
    assert x == sympy.mod_inverse(a, m) % m


@given(st.integers(min_value=1, max_value=10 ** 6))
def test_mod_inverse_prime(a):
    p = 12289
    if a % p == 0:
        return
    x = crt.mod_inverse(a, p)
    assert (a * x) % p == 1
    assert 1 <= x < p


@pytest.mark.parametrize("a,m", [(6, 8), (4, 12), (13, 13)])
def test_mod_inverse_not_coprime(a, m):
    with pytest.raises(crt.NotCoprimeError):
        crt.mod_inverse(a, m)


def test_mod_inverse_bad_modulus():
    with pytest.raises(crt.InvalidModulusError):
        crt.mod_inverse(3, 1)


def test_qin_identity_small():
    p, R = 17, 32
    witness = crt.qin_identity(p, R)
    assert witness == crt.QinWitness(17, 8)
    assert (witness.p_inv * p) % R == 1
    assert (witness.R_inv * R) % p == 1
    assert witness.p_inv * p + witness.R_inv * R == 1 + p * R


@given(odd_moduli, powers_of_two)
def test_qin_identity_holds(p, R):
    witness = crt.qin_identity(p, R)
    assert 0 < witness.p_inv < R
    assert 0 < witness.R_inv < p
    assert witness.p_inv * p + witness.R_inv * R == 1 + p * R


@given(st.integers(min_value=0, max_value=17 * 64 - 1))
def test_crt_recombine_inverts_residues(x):
    pair = crt.ModulusPair(17, 64)
    assert crt.crt_recombine(x % 17, x % 64, pair) == x


def test_crt_recombine_range():
    pair = crt.ModulusPair(13, 16)
    with pytest.raises(crt.ResidueRangeError):
        crt.crt_recombine(13, 0, pair)
    with pytest.raises(crt.ResidueRangeError):
        crt.crt_recombine(0, -1, pair)


@pytest.mark.parametrize("x,m,expected", [
    (5, 16, 5), (8, 16, -8), (15, 16, -1), (-9, 16, 7), (-8, 16, -8),
    (1, 2, -1), (0, 2, 0)])
def test_centered_mod(x, m, expected):
    assert crt.centered_mod(x, m) == expected


def test_centered_mod_odd_modulus():
    with pytest.raises(crt.InvalidModulusError):
        crt.centered_mod(3, 7)


@pytest.mark.parametrize("a,m,expected", [
    (13, 65536, 20165), (17, 32, 17), (1, 64, 1), (1, 7, 1)])
def test_mod_inverse_known(a, m, expected):
    assert crt.mod_inverse(a, m) == expected


@pytest.mark.parametrize("p,R,p_inv,R_inv", [
    (31, 4096, 3039, 8), (3, 4, 3, 1), (3, 2, 1, 2)])
def test_qin_identity_known(p, R, p_inv, R_inv):
    assert crt.qin_identity(p, R) == crt.QinWitness(p_inv, R_inv)


def test_crt_recombine_known():
    assert crt.crt_recombine(2, 1, crt.ModulusPair(3, 4)) == 5
    assert crt.crt_recombine(0, 0, crt.ModulusPair(31, 64)) == 0


def test_crt_recombine_exhaustive():
    pair = crt.ModulusPair(31, 64)
    for t in range(31 * 64):
        assert crt.crt_recombine(t % 31, t % 64, pair) == t


@pytest.mark.parametrize("x,m,expected", [
    (612, 64, -28), (-1057, 4096, -1057), (0, 4096, 0)])
def test_centered_mod_known(x, m, expected):
    assert crt.centered_mod(x, m) == expected


def _scan_inverse(a, m):
    b = np.arange(1, m, dtype=np.int64)
    hits = np.flatnonzero((a * b) % m == 1)
    return int(b[hits[0]]) if hits.size else None


@pytest.mark.parametrize("low,high", [(2, 1024), (1024, 2049), (2049, 4097)])
def test_mod_inverse_matches_scan(low, high):
    rng = np.random.RandomState(low)
    for m in range(low, high):
        if m <= 128:
            candidates = range(1, m)
        else:
            candidates = {1, m - 1} | set(int(a) for a in
                                          rng.randint(1, m, size=3))
        for a in candidates:
            expected = _scan_inverse(a, m)
            if expected is None:
                with pytest.raises(crt.NotCoprimeError):
                    crt.mod_inverse(a, m)
            else:
                assert crt.mod_inverse(a, m) == expected


def test_qin_identity_sweep():
    for p in range(3, 256, 2):
        for k in range(2, 17):
            R = 1 << k
            w = crt.qin_identity(p, R)
            assert w.p_inv * p + w.R_inv * R == 1 + p * R
            assert 1 <= w.p_inv < R
            assert 1 <= w.R_inv < p


@given(st.integers(min_value=-2 ** 70, max_value=2 ** 70),
       st.integers(min_value=1, max_value=2 ** 40).map(lambda k: 2 * k))
def test_centered_mod_offset(x, m):
    r = crt.centered_mod(x, m)
    assert r - (x % m) in (0, -m)
    assert -(m // 2) <= r < m // 2
