"""Butterfly kernels for the iterative transforms.

Cooley-Tukey form computes (X + wY, X - wY); Gentleman-Sande form computes
(X + Y, w(X - Y)). The kinds below differ in how w is encoded and how far
their outputs are allowed to drift above p:

    kind         form  twiddle encoding       output range
    ----         ----  ----------------       ------------
    ntl          GS    plain + floor quotient [0, p) x [0, p)
    harvey       GS    montgomery (w beta)    [0, 2p) x [0, 2p)
    scott        GS    montgomery (w beta)    X + Y  x [0, 2p)
    improved_ct  CT    plantard (-w 2^2n)     [0, X + p) x [0, X + p]
    improved_gs  GS    plantard (-w 2^2n)     X + Y  x [0, p)

Every kernel returns a ButterflyOut carrying the documented bounds, so a
caller can audit growth without knowing which kind it runs.
"""
import collections
import logging

import nttkern.common.contracts as contracts
import nttkern.common.utils as utils
import nttkern.arith.reductions as reductions

logger = logging.getLogger(__name__)

KINDS = ('ntl', 'harvey', 'scott', 'improved_ct', 'improved_gs')
TRANSFORM_KINDS = ('ntl', 'harvey', 'scott', 'improved')

PLAIN_QUOTIENT = 'plain+quotient'
MONTGOMERY = 'montgomery'
PLANTARD = 'plantard'

ENCODINGS = {
    'ntl': PLAIN_QUOTIENT,
    'harvey': MONTGOMERY,
    'scott': MONTGOMERY,
    'improved_ct': PLANTARD,
    'improved_gs': PLANTARD,
    'improved': PLANTARD,
}


class TwiddleEncodingError(contracts.ContractError):
    pass


class ButterflyKind(collections.namedtuple('ButterflyKind', ['kind'])):
    __slots__ = ()

    def __new__(cls, kind):
        kind = kind.replace('-', '_')
        if kind not in KINDS + TRANSFORM_KINDS:
            raise ValueError("Unknown butterfly kind '{}'; expected one of {}"
                             .format(kind, KINDS + TRANSFORM_KINDS))
        return super(ButterflyKind, cls).__new__(cls, kind)

    @property
    def encoding(self):
        return ENCODINGS[self.kind]


# Bounds are half-open (low, high) pairs.
ButterflyOut = collections.namedtuple(
    'ButterflyOut', ['x_out', 'y_out', 'bound_x', 'bound_y'])


def check_encoding(kind, encoding):
    """Raise TwiddleEncodingError unless `encoding` is the one `kind` reads."""
    expected = ButterflyKind(kind).encoding
    if encoding != expected:
        raise TwiddleEncodingError(
            "{} butterflies read '{}' twiddles, got a '{}' table".format(
                kind, expected, encoding))


class ScottConfig(object):
    """Transform-level settings for the Scott butterfly.

    Parameters
    ----------
    N : int
        Transform size.

    L : int
        Power of two; lazy inputs may grow up to (N/L) p before a
        reduction mod p is forced.

    guard : callable or None
        guard(step, inverse) -> bool, asked once per layer by the driver.
        `step` counts processed layers from 0. Defaults to the periodic
        guard implied by L.
    """
    def __init__(self, N, L=1, guard=None):
        if not utils.is_power_of_two(N) or not utils.is_power_of_two(L):
            raise ValueError("N={} and L={} must be powers of two"
                             .format(N, L))
        if L > N:
            raise ValueError("L={} exceeds N={}".format(L, N))
        self.N = N
        self.L = L
        self.period = max(1, utils.ilog2(N // L))
        self._guard = guard

    @classmethod
    def for_params(cls, p, N, beta):
        """Smallest power-of-two L with (2N/L) p < beta/2."""
        L = 1
        while 4 * N * p >= beta * L:
            if L >= N:
                raise contracts.PreconditionError(
                    "scott requires p < beta/4 even with L = N "
                    "(p={}, beta={})".format(p, beta))
            L *= 2
        return cls(N, L)

    @property
    def lazy_limit(self):
        """Exclusive bound on butterfly inputs: (N/L) p is this times p."""
        return self.N // self.L

    def guard(self, step, inverse=False):
        if self._guard is not None:
            return bool(self._guard(step, inverse))
        if inverse:
            return step % self.period == 0
        return step > 0 and step % self.period == 0

    def __repr__(self):
        return "ScottConfig(N={}, L={}, period={})".format(
            self.N, self.L, self.period)


def ntl_butterfly(X, Y, W, W_prime, p, beta):
    """GS butterfly with Shoup's precomputed quotient W' = floor(W beta/p).

    Inputs and outputs are canonical.
    """
    if contracts.CHECK:
        contracts.require(2 * p < beta,
                          "ntl: requires p < beta/2 (p={}, beta={})", p, beta)
        contracts.require(0 < W < p, "ntl: W={} outside (0, p)", W)
        contracts.require(W_prime == (W * beta) // p,
                          "ntl: W'={} != floor(W beta / p)", W_prime)
        contracts.require(0 <= X < p and 0 <= Y < p,
                          "ntl: X={}, Y={} outside [0, p)", X, Y)
    x_out = X + Y
    if x_out >= p:
        x_out -= p
    T = X - Y
    if T < 0:
        T += p
    Q = (W_prime * T) // beta
    y_out = (W * T - Q * p) % beta
    if y_out >= p:
        y_out -= p
    if contracts.CHECK:
        contracts.ensure(0 <= y_out < p, "ntl: Y'={} outside [0, p)", y_out)
    return ButterflyOut(x_out, y_out, (0, p), (0, p))


def harvey_butterfly(X, Y, W_prime, mu, p, beta, branchless=True):
    """GS butterfly on lazy inputs in [0, 2p) with Montgomery twiddle
    W' = W beta mod p and mu = p^-1 mod beta.

    Only X' is corrected. `branchless` selects the subtract-by-mask form;
    the reference form uses an if and gives identical results.
    """
    two_p = 2 * p
    if contracts.CHECK:
        contracts.require(4 * p < beta,
                          "harvey: requires p < beta/4 (p={}, beta={})",
                          p, beta)
        contracts.require(0 < W_prime < p,
                          "harvey: W'={} outside (0, p)", W_prime)
        contracts.require(0 <= X < two_p and 0 <= Y < two_p,
                          "harvey: X={}, Y={} outside [0, 2p)", X, Y)
    mask = beta - 1
    n = beta.bit_length() - 1
    x_out = X + Y
    if branchless:
        x_out -= two_p * (x_out >= two_p)
    elif x_out >= two_p:
        x_out -= two_p
    T = X - Y + two_p
    prod = W_prime * T
    r1 = prod >> n
    r0 = prod & mask
    Q = (mu * r0) & mask
    H = (Q * p) >> n
    y_out = r1 - H + p
    if contracts.CHECK:
        contracts.ensure(0 <= x_out < two_p,
                         "harvey: X'={} outside [0, 2p)", x_out)
        contracts.ensure(0 <= y_out < two_p,
                         "harvey: Y'={} outside [0, 2p)", y_out)
    return ButterflyOut(x_out, y_out, (0, two_p), (0, two_p))


def scott_butterfly(X, Y, W_mont, mu_neg, p, beta, cfg, apply_guard=False):
    """GS butterfly that adds (N/L) p instead of correcting.

    X' = X + Y is left unreduced; Y' = (W T + Q p) / beta is an exact
    division with Q = mu_neg (W T mod beta) mod beta. With apply_guard the
    inputs are reduced mod p before anything else.
    """
    limit = cfg.lazy_limit * p
    if apply_guard:
        X %= p
        Y %= p
    if contracts.CHECK:
        contracts.require(4 * cfg.N * p < beta * cfg.L,
                          "scott: requires p < beta L / (4N) (p={}, {})",
                          p, cfg)
        contracts.require(0 < W_mont < p,
                          "scott: W={} outside (0, p)", W_mont)
        contracts.require(0 <= X < limit and 0 <= Y < limit,
                          "scott: X={}, Y={} outside [0, (N/L) p = {})",
                          X, Y, limit)
    mask = beta - 1
    n = beta.bit_length() - 1
    x_out = X + Y
    T = X - Y + limit
    WT = W_mont * T
    Q = (mu_neg * (WT & mask)) & mask
    num = WT + Q * p
    y_out = num >> n
    if contracts.CHECK:
        contracts.ensure(num & mask == 0,
                         "scott: W T + Q p = {} not divisible by beta", num)
        contracts.ensure(0 <= y_out < 2 * p,
                         "scott: Y'={} outside [0, 2p)", y_out)
    return ButterflyOut(x_out, y_out, (0, 2 * limit), (0, 2 * p))


def improved_ct_butterfly(X, Y, W_hat, ctx):
    """CT butterfly on top of modified_plantard_mul; no data-dependent
    branches.

    X' = X + r and Y' = X - r + p with r = W_hat * Y reduced into [0, p).
    """
    p = ctx.p
    half_box = (p << ctx.ell) >> 1
    if contracts.CHECK:
        contracts.require(0 <= X < half_box and 0 <= Y < half_box,
                          "improved_ct: X={}, Y={} outside [0, 2^ell p/2)",
                          X, Y)
    r = reductions.modified_plantard_mul(W_hat, Y, ctx)
    x_out = X + r
    y_out = X - r + p
    return ButterflyOut(x_out, y_out, (0, X + p), (1, X + p + 1))


def improved_gs_butterfly(X, Y, W_hat, ctx, layer):
    """GS butterfly for inverse layer `layer` (1-based).

    Inputs are below 2^(layer-1) p. T = X - Y + 2^(layer-1) p is
    non-negative, so Y' = modified_plantard_mul(W_hat, T) needs no
    correction either.
    """
    p = ctx.p
    offset = p << (layer - 1)
    if contracts.CHECK:
        contracts.require(1 <= layer <= ctx.ell,
                          "improved_gs: layer={} outside [1, ell={}]",
                          layer, ctx.ell)
        contracts.require(0 <= X < offset and 0 <= Y < offset,
                          "improved_gs: X={}, Y={} outside [0, 2^(layer-1) "
                          "p = {})", X, Y, offset)
    x_out = X + Y
    T = X - Y + offset
    y_out = reductions.modified_plantard_mul(W_hat, T, ctx)
    if contracts.CHECK:
        contracts.ensure(x_out < 2 * offset,
                         "improved_gs: X'={} >= 2^layer p", x_out)
    return ButterflyOut(x_out, y_out, (0, 2 * offset), (0, p))
