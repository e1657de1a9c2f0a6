"""Montgomery-type reductions and modular multiplications.

Five algorithms share one precomputed context:

* mont_redc              Montgomery's REDC, R = 2^n > p.
* signed_mont_redc       signed Montgomery, centered quotient, 2p < 2^n.
* plantard_redc          Plantard's word-size multiplication, R = 2^{2n}.
* signed_plantard_redc   the uncorrected signed Plantard variant. It is NOT
                         correct; it is kept verbatim so the analysis module
                         can exhibit its failures. Never use it to compute.
* modified_plantard_mul  Plantard with the lazy input range T < 2^ell p and
                         an output already in [0, p) (no correction branch).

Products W*T*mu are taken modulo 2^{2n} by masking, and the high-half
extraction is a right shift, which is what the word-level cost model
counts.
"""
import collections
import logging

import nttkern.common.contracts as contracts
import nttkern.arith.crt_core as crt_core

logger = logging.getLogger(__name__)

ALGORITHMS = ('montgomery', 'signed-montgomery', 'plantard',
              'signed-plantard', 'modified-plantard')


class ShiftSemantics(collections.namedtuple('ShiftSemantics', ['mode'])):
    """How `x >> e` is read for negative x.

    signed-floor      sgn(x) * floor(|x| / 2^e)   (rounds toward zero)
    arithmetic-floor  floor(x / 2^e)              (rounds toward -inf, the
                                                    two's complement shift)
    """
    __slots__ = ()
    MODES = ('signed-floor', 'arithmetic-floor')
    ALIASES = {'signed': 'signed-floor', 'signed-floor': 'signed-floor',
               'arith': 'arithmetic-floor', 'arithmetic': 'arithmetic-floor',
               'arithmetic-floor': 'arithmetic-floor'}

    def __new__(cls, mode):
        if mode not in cls.MODES:
            raise ValueError("Unknown shift semantics '{}'; expected one "
                             "of {}".format(mode, cls.MODES))
        return super(ShiftSemantics, cls).__new__(cls, mode)

    @classmethod
    def parse(cls, name):
        try:
            return cls(cls.ALIASES[name.lower()])
        except KeyError:
            raise ValueError("Unknown shift semantics '{}'".format(name))

    @property
    def short_name(self):
        return 'signed' if self.mode == 'signed-floor' else 'arith'


SIGNED_FLOOR = ShiftSemantics('signed-floor')
ARITHMETIC_FLOOR = ShiftSemantics('arithmetic-floor')
BOTH_SEMANTICS = (SIGNED_FLOOR, ARITHMETIC_FLOOR)


def shift_right(x, e, sem):
    """x / 2^e rounded per the given ShiftSemantics."""
    if sem.mode == 'arithmetic-floor' or x >= 0:
        return x >> e
    return -((-x) >> e)


class ReductionContext(object):
    """Precomputed constants for one odd modulus and word size.

    Parameters
    ----------
    p : int
        Odd modulus > 1.

    n : int
        Word size in bits; beta = 2^n.

    alpha : int, default=0
        Slack exponent of the signed Plantard variant.

    ell : int, default=0
        log2 of the transform size, bounding the modified Plantard
        input T < 2^ell p.

    Attributes
    ----------
    k : int
        R - p^-1 mod R with R = beta (Montgomery's negated inverse).
    mu_beta : int
        p^-1 mod beta (signed Montgomery, Harvey).
    mu_beta_neg : int
        -p^-1 mod beta (Scott).
    mu_unsigned : int
        p^-1 mod 2^{2n} (Plantard, modified Plantard).
    mu_centered : int
        p^-1 mod +-2^{2n} (signed Plantard).
    """
    def __init__(self, p, n, alpha=0, ell=0):
        if p <= 1 or p % 2 == 0:
            raise crt_core.InvalidModulusError(
                "p must be odd and > 1, got {}".format(p))
        if n < 2:
            raise crt_core.InvalidModulusError(
                "word size must be >= 2 bits, got {}".format(n))
        if alpha < 0 or ell < 0:
            raise contracts.PreconditionError(
                "alpha and ell must be >= 0 (alpha={}, ell={})".format(
                    alpha, ell))
        self.p = p
        self.n = n
        self.alpha = alpha
        self.ell = ell

        self.beta = 1 << n
        self.beta_mask = self.beta - 1
        self.R2 = 1 << (2 * n)
        self.R2_mask = self.R2 - 1

        self.mu_beta = crt_core.mod_inverse(p, self.beta)
        self.mu_beta_neg = (-self.mu_beta) % self.beta
        self.k = (self.beta - self.mu_beta) % self.beta
        self.mu_unsigned = crt_core.mod_inverse(p, self.R2)
        self.mu_centered = crt_core.centered_mod(self.mu_unsigned, self.R2)

        self.beta_mod_p = self.beta % p
        self.R2_mod_p = self.R2 % p

    @classmethod
    def for_montgomery(cls, p):
        """Context whose R = 2^n is the least power of two above p."""
        return cls(p, max(2, p.bit_length()))

    def __repr__(self):
        return "ReductionContext(p={}, n={}, alpha={}, ell={})".format(
            self.p, self.n, self.alpha, self.ell)

    def violations(self, algorithm):
        """Every violated precondition of `algorithm` for this context.

        Returns
        -------
        violations : list of str
            Empty when the algorithm may run on this context.
        """
        p, n = self.p, self.n
        found = []
        if algorithm == 'montgomery':
            if not self.beta > p:
                found.append("montgomery requires R = 2^{} > p = {}"
                             .format(n, p))
        elif algorithm == 'signed-montgomery':
            if not 2 * p < self.beta:
                found.append("signed-montgomery requires 2p < 2^{} "
                             "(2p = {})".format(n, 2 * p))
        elif algorithm == 'plantard':
            # p < 2^n / phi  <=>  p * sqrt(5) < 2^{n+1} - p
            rhs = (1 << (n + 1)) - p
            if not (rhs > 0 and 5 * p * p < rhs * rhs):
                found.append("plantard requires p < 2^{}/phi (p = {})"
                             .format(n, p))
        elif algorithm == 'signed-plantard':
            if not p < (1 << max(n - self.alpha - 1, 0)):
                found.append("signed-plantard requires p < 2^(n-alpha-1) "
                             "= 2^{} (p = {})".format(n - self.alpha - 1, p))
        elif algorithm == 'modified-plantard':
            if not (n - self.ell - 2 >= 0 and p < (1 << (n - self.ell - 2))):
                found.append("modified-plantard requires p < 2^(n-ell-2) "
                             "= 2^{} (p = {})".format(n - self.ell - 2, p))
        else:
            raise ValueError("Unknown algorithm '{}'; expected one of {}"
                             .format(algorithm, ALGORITHMS))
        return found

    def supports(self, algorithm):
        return not self.violations(algorithm)

    def require(self, algorithm):
        problems = self.violations(algorithm)
        if problems:
            raise contracts.PreconditionError("; ".join(problems))


def mont_redc(T, ctx):
    """Montgomery reduction: T * R^-1 mod p in [0, p), with R = 2^n.

    Requires 0 <= T < p^2 and R > p.
    """
    p, n = ctx.p, ctx.n
    if contracts.CHECK:
        ctx.require('montgomery')
        contracts.require(0 <= T < p * p,
                          "mont_redc: T={} outside [0, p^2={})", T, p * p)
    m = ((T & ctx.beta_mask) * ctx.k) & ctx.beta_mask
    u = T + m * p
    t = u >> n
    if contracts.CHECK:
        contracts.ensure(u & ctx.beta_mask == 0,
                         "mont_redc: T + mp = {} not divisible by R", u)
        contracts.ensure(t < 2 * p, "mont_redc: t={} >= 2p", t)
    if t >= p:
        t -= p
    return t


def signed_mont_redc(A, ctx):
    """Signed Montgomery reduction: A * beta^-1 mod p in (-p, p).

    A = a1*beta + a0 with 0 <= a0 < beta (floor decomposition),
    m = a0 * p^-1 mod +-beta, result a1 - floor(m p / beta).
    """
    p, n = ctx.p, ctx.n
    half = (p << n) // 2
    if contracts.CHECK:
        ctx.require('signed-montgomery')
        contracts.require(-half < A < half,
                          "signed_mont_redc: A={} outside (-p*beta/2, "
                          "p*beta/2)", A)
    a1 = A >> n
    a0 = A & ctx.beta_mask
    m = (a0 * ctx.mu_beta) & ctx.beta_mask
    if m >= ctx.beta >> 1:
        m -= ctx.beta
    r = a1 - ((m * p) >> n)
    if contracts.CHECK:
        contracts.ensure((a0 + a1 * ctx.beta - m * p) & ctx.beta_mask == 0,
                         "signed_mont_redc: A - mp not divisible by beta")
        contracts.ensure(-p < r < p,
                         "signed_mont_redc: r={} outside (-p, p)", r)
    return r


def plantard_redc(W, T, ctx):
    """Plantard reduction: W*T*(-2^{-2n}) mod p in [0, p).

    Requires p < 2^n/phi and 0 <= W, T <= p. Keeps the textbook
    `r = p -> 0` correction.
    """
    p, n = ctx.p, ctx.n
    if contracts.CHECK:
        ctx.require('plantard')
        contracts.require(0 <= W <= p and 0 <= T <= p,
                          "plantard_redc: W={}, T={} outside [0, p]", W, T)
    h = (W * T * ctx.mu_unsigned) & ctx.R2_mask
    r = (((h >> n) + 1) * p) >> n
    if r == p:
        logger.warning("plantard_redc correction branch fired for "
                       "W={}, T={}, p={}, n={}".format(W, T, p, n))
        return 0
    return r


def signed_plantard_redc(W, T, ctx, sem):
    """The uncorrected signed Plantard formula, evaluated as written.

        r = ((((W T mu) mod +-2^{2n}) >>_sem n) + 2^alpha) p >>_sem n

    There is no congruence guarantee: compare against
    analysis.crt_predicted_value.
    """
    p, n = ctx.p, ctx.n
    bound = p << ctx.alpha
    if contracts.CHECK:
        ctx.require('signed-plantard')
        contracts.require(-bound <= W <= bound and -bound <= T <= bound,
                          "signed_plantard_redc: W={}, T={} outside "
                          "[-p 2^alpha, p 2^alpha]", W, T)
    h = crt_core.centered_mod(W * T * ctx.mu_centered, ctx.R2)
    q = shift_right(h, n, sem)
    return shift_right((q + (1 << ctx.alpha)) * p, n, sem)


def modified_plantard_mul(W, T, ctx):
    """Modified Plantard multiplication: W*T*(-2^{-2n}) mod p in [0, p).

    Requires p < 2^(n-ell-2), 0 <= W < p and 0 <= T < 2^ell p. Under
    those bounds the result is (h p - W T) / 2^{2n} exactly, with
    h = W T mu mod 2^{2n}, so no correction step is needed.
    """
    p, n = ctx.p, ctx.n
    if contracts.CHECK:
        ctx.require('modified-plantard')
        contracts.require(0 <= W < p,
                          "modified_plantard_mul: W={} outside [0, p)", W)
        contracts.require(0 <= T < (p << ctx.ell),
                          "modified_plantard_mul: T={} outside "
                          "[0, 2^ell p)", T)
    h = (W * T * ctx.mu_unsigned) & ctx.R2_mask
    r = (((h >> n) + 1) * p) >> n
    if contracts.CHECK:
        num = h * p - W * T
        contracts.ensure(num & ctx.R2_mask == 0 and num >> (2 * n) == r,
                         "modified_plantard_mul: (hp - A)/R != r for "
                         "W={}, T={}", W, T)
        contracts.ensure(0 <= r < p,
                         "modified_plantard_mul: r={} outside [0, p)", r)
    return r


def to_plantard_domain(w, ctx):
    """w * (-2^{2n}) mod p, so modified_plantard_mul(w_hat, T) == w T."""
    if contracts.CHECK:
        contracts.require(0 <= w < ctx.p,
                          "to_plantard_domain: w={} outside [0, p)", w)
    return (-w * ctx.R2_mod_p) % ctx.p


def to_montgomery_domain(w, ctx):
    """w * 2^n mod p, the Montgomery representation with R = beta."""
    if contracts.CHECK:
        contracts.require(0 <= w < ctx.p,
                          "to_montgomery_domain: w={} outside [0, p)", w)
    return (w * ctx.beta_mod_p) % ctx.p
