"""Forward and inverse number theoretic transforms.

Two recursive references evaluate in natural order:

* fft1_recursive  even/odd split of the coefficients.
* fft2_recursive  first-half/second-half split, f_p = a_j + a_{j+N/2} and
                  f_m = (a_j - a_{j+N/2}) w^j; its interleaved return
                  already lands in natural order.

The iterative drivers work in place and never permute explicitly:

* improved kind, forward: Cooley-Tukey, natural in, bit-reversed out.
  Level s, block i uses w^brv(i) (brv over ell-1 bits).
* ntl / harvey / scott, forward: Gentleman-Sande decimation in frequency,
  natural in, bit-reversed out. Level s, butterfly j uses w^(j 2^s).
* every kind, inverse: Gentleman-Sande, bit-reversed in, natural out,
  levels in reverse with w^-brv(i), then a separate N^-1 scaling pass.
"""
import collections
import logging

import nttkern.arith.butterflies as butterflies
import nttkern.arith.reductions as reductions
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils
import nttkern.ntt.params as P

logger = logging.getLogger(__name__)

NATURAL = 'natural'
BIT_REVERSED = 'bit-reversed'


class TransformError(contracts.ContractError):
    pass


Spectrum = collections.namedtuple('Spectrum', ['values', 'order'])


def bit_reverse(i, bits):
    return P.bit_reverse(i, bits)


def bit_reverse_permutation(N):
    """perm[i] = brv(i) over log2(N) bits."""
    bits = utils.ilog2(N)
    return [P.bit_reverse(i, bits) for i in range(N)]


def to_natural(spectrum):
    """Natural-order copy of a spectrum."""
    if spectrum.order == NATURAL:
        return Spectrum(list(spectrum.values), NATURAL)
    perm = bit_reverse_permutation(len(spectrum.values))
    values = [None] * len(perm)
    for i, j in enumerate(perm):
        values[j] = spectrum.values[i]
    return Spectrum(values, NATURAL)


def canonical_reduce(values, p):
    return [v % p for v in values]


def _check_root(omega, N, p):
    if not utils.is_power_of_two(N):
        raise TransformError("N={} is not a power of two".format(N))
    if pow(omega, N, p) != 1 or (N > 1 and pow(omega, N // 2, p) == 1):
        raise TransformError("omega={} does not have order {} mod {}"
                             .format(omega, N, p))


def _check_length(f, N):
    if len(f) != N:
        raise TransformError("expected {} coefficients, got {}"
                             .format(N, len(f)))


def _fft1(f, omega, p):
    N = len(f)
    if N == 1:
        return [f[0] % p]
    w2 = omega * omega % p
    even = _fft1(f[0::2], w2, p)
    odd = _fft1(f[1::2], w2, p)
    half = N // 2
    out = [0] * N
    wj = 1
    for j in range(half):
        t = wj * odd[j]
        out[j] = (even[j] + t) % p
        out[j + half] = (even[j] - t) % p
        wj = wj * omega % p
    return out


def fft1_recursive(f, omega, N, p):
    """Evaluate f at 1, w, ..., w^(N-1) by the even/odd recursion."""
    _check_root(omega, N, p)
    _check_length(f, N)
    return Spectrum(_fft1(list(f), omega, p), NATURAL)


def _fft2(f, omega, p):
    N = len(f)
    if N == 1:
        return [f[0] % p]
    half = N // 2
    f_plus = [(f[j] + f[j + half]) % p for j in range(half)]
    f_minus = []
    wj = 1
    for j in range(half):
        f_minus.append((f[j] - f[j + half]) * wj % p)
        wj = wj * omega % p
    w2 = omega * omega % p
    plus = _fft2(f_plus, w2, p)
    minus = _fft2(f_minus, w2, p)
    out = []
    for a, b in zip(plus, minus):
        out.extend((a, b))
    return out


def fft2_recursive(f, omega, N, p):
    """Evaluate f by the half-split recursion.

    Index i of the result holds f(w^perm[i]) with
    perm = fft2_output_permutation(N).
    """
    _check_root(omega, N, p)
    _check_length(f, N)
    return Spectrum(_fft2(list(f), omega, p), NATURAL)


def fft2_output_permutation(N):
    """Exponent of w evaluated at each output index of fft2_recursive.

    Traced through the recursion: f_plus gives the even exponents and
    f_minus the odd ones, and the interleaved return puts them back at
    even and odd indices. The result is the identity.
    """
    if N == 1:
        return [0]
    sub = fft2_output_permutation(N // 2)
    out = []
    for k in sub:
        out.extend((2 * k, 2 * k + 1))
    return out


class LayerAudit(object):
    """Per-layer maxima of a transform run, checked against growth laws.

    Layers are counted from 1 in processing order.

        improved forward   < (k + 1) p
        improved inverse   < 2^k p
        harvey             < 2p
        ntl                < p
        scott              < 2^k p
    """
    def __init__(self, kind, p, inverse=False):
        self.kind = kind
        self.p = p
        self.inverse = inverse
        self.maxima = []

    def bound(self, k):
        p = self.p
        if self.kind == 'improved':
            return (1 << k) * p if self.inverse else (k + 1) * p
        elif self.kind == 'harvey':
            return 2 * p
        elif self.kind == 'ntl':
            return p
        return (1 << k) * p

    def record(self, values):
        self.maxima.append(max(values))

    def violations(self):
        return [(k, m, self.bound(k))
                for k, m in enumerate(self.maxima, start=1)
                if not m < self.bound(k)]

    @property
    def ok(self):
        return not self.violations()


def _resolve(params, kind):
    if kind not in butterflies.TRANSFORM_KINDS:
        raise TransformError("Unknown transform kind '{}'".format(kind))
    if kind not in params.kinds:
        raise TransformError("{} was not built for kind '{}'".format(
            params, kind))
    try:
        return params.twiddles(kind).bind(kind)
    except butterflies.TwiddleEncodingError as err:
        raise TransformError(str(err))


def _gs_kernel(kind, params, step=0, inverse=False):
    """(X, Y, w) -> ButterflyOut for one GS layer."""
    p, beta, ctx = params.p, params.beta, params.ctx
    if kind == 'ntl':
        return lambda X, Y, w: butterflies.ntl_butterfly(
            X, Y, w[0], w[1], p, beta)
    elif kind == 'harvey':
        mu = ctx.mu_beta
        return lambda X, Y, w: butterflies.harvey_butterfly(
            X, Y, w, mu, p, beta)
    elif kind == 'scott':
        cfg = params.scott
        mu_neg = ctx.mu_beta_neg
        guard = cfg.guard(step, inverse=inverse)
        if guard:
            logger.debug("scott guard at step {} (inverse={})".format(
                step, inverse))
        return lambda X, Y, w: butterflies.scott_butterfly(
            X, Y, w, mu_neg, p, beta, cfg, apply_guard=guard)
    layer = step + 1
    return lambda X, Y, w: butterflies.improved_gs_butterfly(
        X, Y, w, ctx, layer)


def ntt_forward(f, params, kind='improved', audit=None):
    """Forward transform of a canonical polynomial.

    Parameters
    ----------
    f : sequence of int
        N coefficients in [0, p).

    params : NttParams

    kind : str
        One of ntl, harvey, scott, improved.

    audit : LayerAudit or None
        Receives the maxima after every layer.

    Returns
    -------
    spectrum : Spectrum
        Bit-reversed; values are congruent to f(w^brv(i)) but may be
        lazy (above p) depending on the kind.
    """
    table = _resolve(params, kind)
    N, ell, p = params.N, params.ell, params.p
    _check_length(f, N)
    if contracts.CHECK:
        contracts.require(all(0 <= x < p for x in f),
                          "ntt_forward: input is not canonical mod {}", p)
    a = list(f)
    tw = table.forward
    idx = 0
    if kind == 'improved':
        ctx = params.ctx
        for s in range(ell):
            half = N >> (s + 1)
            for i in range(1 << s):
                w = tw[idx]
                idx += 1
                start = 2 * i * half
                for j in range(start, start + half):
                    out = butterflies.improved_ct_butterfly(
                        a[j], a[j + half], w, ctx)
                    a[j], a[j + half] = out.x_out, out.y_out
            if audit is not None:
                audit.record(a)
    else:
        for s in range(ell):
            half = N >> (s + 1)
            level = tw[idx:idx + half]
            idx += half
            kernel = _gs_kernel(kind, params, step=s)
            for start in range(0, N, 2 * half):
                for j in range(half):
                    x, y = start + j, start + j + half
                    out = kernel(a[x], a[y], level[j])
                    a[x], a[y] = out.x_out, out.y_out
            if audit is not None:
                audit.record(a)
    return Spectrum(a, BIT_REVERSED)


def intt_inverse(spectrum, params, kind='improved', audit=None):
    """Inverse transform back to a canonical polynomial.

    Accepts a Spectrum in bit-reversed order or a plain sequence assumed
    to be bit-reversed. The improved kind canonicalises its input with one
    modified Plantard multiplication by the encoding of 1 and fuses N^-1
    into the final multiplication; the other kinds scale with a plain
    modular product.
    """
    table = _resolve(params, kind)
    if isinstance(spectrum, Spectrum):
        if spectrum.order != BIT_REVERSED:
            raise TransformError("intt_inverse expects a bit-reversed "
                                 "spectrum, got {}".format(spectrum.order))
        values = spectrum.values
    else:
        values = spectrum
    N, ell, p = params.N, params.ell, params.p
    _check_length(values, N)

    ctx = params.ctx
    if kind == 'improved':
        a = [reductions.modified_plantard_mul(params.one_hat, x, ctx)
             for x in values]
    else:
        a = list(values)

    tw = table.inverse
    idx = 0
    for step, s in enumerate(reversed(range(ell))):
        half = N >> (s + 1)
        kernel = _gs_kernel(kind, params, step=step, inverse=True)
        for i in range(1 << s):
            w = tw[idx]
            idx += 1
            start = 2 * i * half
            for j in range(start, start + half):
                out = kernel(a[j], a[j + half], w)
                a[j], a[j + half] = out.x_out, out.y_out
        if audit is not None:
            audit.record(a)

    if kind == 'improved':
        return [reductions.modified_plantard_mul(params.n_inv_hat, x, ctx)
                for x in a]
    n_inv = params.n_inv
    return [x * n_inv % p for x in a]


def pointwise_product(A, B, params):
    """A_i * B_i mod p for two spectra.

    Uses modified_plantard_mul with A_i moved into the Plantard domain
    when the word size allows it, and a plain product otherwise.
    """
    ctx, p = params.ctx, params.p
    if ctx.supports('modified-plantard'):
        # Forward outputs of every kind stay below 2^ell p.
        return [reductions.modified_plantard_mul(
                    reductions.to_plantard_domain(x % p, ctx), y, ctx)
                for x, y in zip(A, B)]
    return [x * y % p for x, y in zip(A, B)]


def cyclic_convolution_via_ntt(a, b, params, kind='improved'):
    """a * b mod (x^N - 1, p) through the transform."""
    if len(a) != len(b):
        raise TransformError("length mismatch: {} != {}".format(
            len(a), len(b)))
    A = ntt_forward(a, params, kind)
    B = ntt_forward(b, params, kind)
    C = pointwise_product(A.values, B.values, params)
    return intt_inverse(Spectrum(C, BIT_REVERSED), params, kind)
