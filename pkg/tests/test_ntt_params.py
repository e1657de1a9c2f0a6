import pytest

import nttkern.arith.butterflies as B
import nttkern.arith.reductions as R
import nttkern.ntt.params as P


@pytest.mark.parametrize("i,bits,expected", [
    (0, 0, 0), (1, 3, 4), (6, 3, 3), (5, 4, 10), (255, 8, 255)])
def test_bit_reverse(i, bits, expected):
    assert P.bit_reverse(i, bits) == expected


@pytest.mark.parametrize("p,N,expected", [
    (17, 4, 4), (13, 4, 5), (17, 1, 1), (17, 2, 16)])
def test_find_primitive_root(p, N, expected):
    assert P.find_primitive_root(p, N) == expected


@pytest.mark.parametrize("p,N", [(7681, 256), (12289, 1024)])
def test_find_primitive_root_order(p, N):
    w = P.find_primitive_root(p, N)
    assert pow(w, N, p) == 1
    assert pow(w, N // 2, p) != 1


def test_find_primitive_root_rejects():
    with pytest.raises(P.ParameterError):
        P.find_primitive_root(17, 3)


def test_toy13(toy13):
    assert (toy13.p, toy13.N, toy13.n, toy13.ell) == (13, 4, 8, 2)
    assert toy13.omega == 5
    assert toy13.omega_inv == 8
    assert (toy13.n_inv * 4) % 13 == 1
    assert toy13.one_hat == R.to_plantard_domain(1, toy13.ctx)
    assert toy13.scott.L == 1
    assert toy13.name == "toy13"


def test_twiddle_tables_decode(toy13):
    forward, inverse = toy13.twiddles('harvey').decode()
    assert forward == [1, 5, 1]
    assert inverse == [1, 8, 1]
    forward, inverse = toy13.twiddles('improved').decode()
    assert forward == [1, 1, 5]
    assert inverse == [1, 8, 1]
    table = toy13.twiddles('ntl')
    assert table.forward[1] == (5, 5 * 256 // 13)
    assert table.schedule == P.DIF
    assert toy13.twiddles('improved').schedule == P.DIT


def test_twiddle_layers_toy13(toy13):
    for kind in B.TRANSFORM_KINDS:
        forward, inverse = toy13.twiddles(kind).layers()
        assert forward == ((1,), (1, 5))
        assert inverse == ((1,), (1, 8))


@pytest.mark.parametrize("name", P.available_presets())
def test_twiddle_layers_agree_across_kinds(name):
    params = P.preset(name)
    expected = params.twiddles('ntl').layers()
    for kind in B.TRANSFORM_KINDS:
        assert params.twiddles(kind).layers() == expected
    forward, inverse = expected
    assert len(forward) == params.ell
    for layer in forward:
        stride = params.N // (2 * len(layer))
        assert layer == tuple(sorted(pow(params.omega, k * stride, params.p)
                                     for k in range(len(layer))))
    for layer in inverse:
        stride = params.N // (2 * len(layer))
        assert layer == tuple(sorted(
            pow(params.omega_inv, k * stride, params.p)
            for k in range(len(layer))))


def test_twiddle_bind(toy13):
    table = toy13.twiddles('harvey')
    assert table.bind('scott') is table
    with pytest.raises(B.TwiddleEncodingError):
        table.bind('improved')


def test_twiddles_for_unbuilt_kind():
    params = P.build_params(13, 4, 8, kinds=['ntl'])
    with pytest.raises(P.ParameterError):
        params.twiddles('scott')


def test_build_params_lists_every_violation():
    with pytest.raises(P.ParameterError) as err:
        P.build_params(15, 3, 12)
    assert len(err.value.violations) == 3


@pytest.mark.parametrize("p,N,n,kinds", [
    (13, 8, 8, ['ntl']),
    (2 ** 31 - 1, 2, 32, ['ntl']),
    (7681, 256, 16, ['improved']),
    (13, 4, 8, ['barrett']),
    (4, 2, 8, ['ntl']),
])
def test_build_params_rejects(p, N, n, kinds):
    with pytest.raises(P.ParameterError):
        P.build_params(p, N, n, kinds=kinds)


def test_build_params_lazy_scott():
    params = P.build_params(17, 16, 8, kinds=['ntl', 'harvey', 'scott'])
    assert params.scott.L == 8
    assert params.kinds == ('ntl', 'harvey', 'scott')


def test_build_params_single_kind_string():
    assert P.build_params(13, 4, 8, kinds='improved').kinds == ('improved',)


def test_presets():
    names = P.available_presets()
    for name in ('kyber256', 'falcon512', 'falcon1024', 'toy13'):
        assert name in names
    entry = P.preset_entry('falcon1024')
    assert (entry['p'], entry['N']) == (12289, 1024)
    with pytest.raises(P.UnknownPresetError):
        P.preset('kyber512x')


def test_preset_word_size_override():
    params = P.preset('kyber256', n=16, kinds=['ntl', 'harvey'])
    assert params.n == 16
    with pytest.raises(P.ParameterError):
        P.preset('kyber256', n=16)


def test_kyber(kyber):
    assert (kyber.p, kyber.N, kyber.n) == (7681, 256, 32)
    assert set(kyber.kinds) == set(B.TRANSFORM_KINDS)
    assert kyber.scott.L == 1
    assert len(kyber.twiddles('improved').forward) == 255
    assert len(kyber.twiddles('ntl').forward) == 255
