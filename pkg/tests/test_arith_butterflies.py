import pytest
from hypothesis import given, strategies as st

import nttkern.arith.butterflies as B
import nttkern.arith.reductions as R
import nttkern.common.contracts as contracts

KYBER_P = 7681
KYBER_MU = 57857


def test_known_butterflies(toy_ctx):
    assert B.ntl_butterfly(5, 9, 3, 59, 13, 256)[:2] == (1, 1)
    out = B.harvey_butterfly(100, 4000, 4583, KYBER_MU, KYBER_P, 2 ** 16)
    assert out[:2] == (4100, 3662)
    assert out.bound_x == (0, 2 * KYBER_P)
    cfg = B.ScottConfig(4, 1)
    assert B.scott_butterfly(5, 9, 3, 59, 13, 256, cfg)[:2] == (14, 3)
    ct = B.improved_ct_butterfly(3, 20, 5, toy_ctx)
    assert ct == B.ButterflyOut(13, 6, (0, 16), (1, 17))
    gs = B.improved_gs_butterfly(5, 9, 5, toy_ctx, layer=1)
    assert gs[:2] == (14, 11)


def test_harvey_mu_matches_context():
    assert R.ReductionContext(KYBER_P, 16).mu_beta == KYBER_MU


def test_harvey_branch_forms_agree():
    for X, Y in [(0, 0), (15361, 15361), (7681, 1), (1, 7681)]:
        a = B.harvey_butterfly(X, Y, 4583, KYBER_MU, KYBER_P, 2 ** 16)
        b = B.harvey_butterfly(X, Y, 4583, KYBER_MU, KYBER_P, 2 ** 16,
                               branchless=False)
        assert a == b


@given(st.integers(min_value=0, max_value=2 * KYBER_P - 1),
       st.integers(min_value=0, max_value=2 * KYBER_P - 1),
       st.integers(min_value=1, max_value=KYBER_P - 1))
def test_harvey_congruence(X, Y, w):
    ctx = R.ReductionContext(KYBER_P, 16)
    W_prime = R.to_montgomery_domain(w, ctx)
    out = B.harvey_butterfly(X, Y, W_prime, ctx.mu_beta, KYBER_P, ctx.beta)
    assert (out.x_out - X - Y) % KYBER_P == 0
    assert (out.y_out - w * (X - Y)) % KYBER_P == 0
    assert 0 <= out.y_out < 2 * KYBER_P


@given(st.integers(min_value=0, max_value=KYBER_P - 1),
       st.integers(min_value=0, max_value=KYBER_P - 1),
       st.integers(min_value=1, max_value=KYBER_P - 1))
def test_ntl_canonical(X, Y, w):
    beta = 2 ** 16
    out = B.ntl_butterfly(X, Y, w, w * beta // KYBER_P, KYBER_P, beta)
    assert out.x_out == (X + Y) % KYBER_P
    assert out.y_out == (w * (X - Y)) % KYBER_P


@given(st.integers(min_value=0, max_value=4 * 13 - 1),
       st.integers(min_value=0, max_value=4 * 13 - 1),
       st.integers(min_value=1, max_value=12))
def test_scott_congruence(X, Y, w):
    ctx = R.ReductionContext(13, 8)
    cfg = B.ScottConfig(4, 1)
    W_mont = R.to_montgomery_domain(w, ctx)
    out = B.scott_butterfly(X, Y, W_mont, ctx.mu_beta_neg, 13, 256, cfg)
    assert out.x_out == X + Y
    assert (out.y_out - w * (X - Y)) % 13 == 0
    assert 0 <= out.y_out < 26


def test_scott_guard_reduces_inputs():
    cfg = B.ScottConfig(4, 1)
    with pytest.raises(contracts.PreconditionError):
        B.scott_butterfly(60, 1, 3, 59, 13, 256, cfg)
    out = B.scott_butterfly(60, 1, 3, 59, 13, 256, cfg, apply_guard=True)
    assert out.x_out == 9


@given(st.integers(min_value=0, max_value=25),
       st.integers(min_value=0, max_value=25),
       st.integers(min_value=0, max_value=12))
def test_improved_ct_congruence(X, Y, w):
    ctx = R.ReductionContext(13, 8, ell=2)
    out = B.improved_ct_butterfly(X, Y, R.to_plantard_domain(w, ctx), ctx)
    assert (out.x_out - X - w * Y) % 13 == 0
    assert (out.y_out - X + w * Y) % 13 == 0
    assert out.bound_x[0] <= out.x_out < out.bound_x[1]
    assert out.bound_y[0] <= out.y_out < out.bound_y[1]


@pytest.mark.parametrize("layer", [1, 2])
def test_improved_gs_congruence(toy_ctx, layer):
    offset = 13 << (layer - 1)
    for w in (1, 5, 12):
        w_hat = R.to_plantard_domain(w, toy_ctx)
        for X in range(offset):
            for Y in range(offset):
                out = B.improved_gs_butterfly(X, Y, w_hat, toy_ctx, layer)
                assert out.x_out == X + Y
                assert out.y_out == (w * (X - Y)) % 13


def test_improved_gs_rejects(toy_ctx):
    with pytest.raises(contracts.PreconditionError):
        B.improved_gs_butterfly(13, 0, 1, toy_ctx, layer=1)
    with pytest.raises(contracts.PreconditionError):
        B.improved_gs_butterfly(0, 0, 1, toy_ctx, layer=3)


def test_ntl_rejects():
    with pytest.raises(contracts.PreconditionError):
        B.ntl_butterfly(13, 0, 3, 59, 13, 256)
    with pytest.raises(contracts.PreconditionError):
        B.ntl_butterfly(1, 0, 3, 58, 13, 256)


def test_butterfly_kind():
    kind = B.ButterflyKind('improved-ct')
    assert kind.kind == 'improved_ct'
    assert kind.encoding == B.PLANTARD
    assert B.ButterflyKind('scott').encoding == B.MONTGOMERY
    with pytest.raises(ValueError):
        B.ButterflyKind('barrett')


def test_check_encoding():
    B.check_encoding('harvey', B.MONTGOMERY)
    B.check_encoding('ntl', B.PLAIN_QUOTIENT)
    with pytest.raises(B.TwiddleEncodingError):
        B.check_encoding('harvey', B.PLANTARD)


def test_scott_config_for_params():
    cfg = B.ScottConfig.for_params(17, 16, 256)
    assert (cfg.L, cfg.period, cfg.lazy_limit) == (8, 1, 2)
    assert B.ScottConfig.for_params(13, 4, 256).L == 1
    with pytest.raises(contracts.PreconditionError):
        B.ScottConfig.for_params(127, 4, 256)


def test_scott_config_rejects():
    with pytest.raises(ValueError):
        B.ScottConfig(16, 32)
    with pytest.raises(ValueError):
        B.ScottConfig(12, 1)


def test_scott_guard_schedule():
    cfg = B.ScottConfig(16, 4)
    assert cfg.period == 2
    assert [cfg.guard(s) for s in range(4)] == [False, False, True, False]
    assert [cfg.guard(s, inverse=True) for s in range(4)] == \
        [True, False, True, False]
    custom = B.ScottConfig(16, 4, guard=lambda step, inverse: step == 3)
    assert [custom.guard(s) for s in range(4)] == [False, False, False, True]
