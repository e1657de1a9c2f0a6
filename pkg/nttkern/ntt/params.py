"""Validated transform parameters and their precomputed twiddle tables."""
import logging
import os

import sympy

import nttkern.arith.butterflies as butterflies
import nttkern.arith.crt_core as crt_core
import nttkern.arith.reductions as reductions
import nttkern.common.config as C
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils

logger = logging.getLogger(__name__)

PRESETS_PATH = os.path.join(C.DATA_DIR, "presets.yaml")

WORD_SIZES = (8, 16, 32)
MAX_MODULUS_BITS = 30

DIF = 'dif'
DIT = 'dit'


class ParameterError(contracts.ContractError):
    """Raised with every violated precondition, not just the first."""
    def __init__(self, violations):
        self.violations = list(violations)
        super(ParameterError, self).__init__(
            "Invalid NTT parameters: " + "; ".join(self.violations))


class UnknownPresetError(contracts.ContractError):
    pass


def bit_reverse(i, bits):
    """Reverse the lowest `bits` bits of i."""
    out = 0
    for _ in range(bits):
        out = (out << 1) | (i & 1)
        i >>= 1
    return out


def find_primitive_root(p, N):
    """Smallest w in [1, p) whose multiplicative order mod p is exactly N.

    Raises
    ------
    ParameterError
        If N does not divide p - 1.
    """
    if N < 1 or (p - 1) % N:
        raise ParameterError(["N={} does not divide p - 1 = {}"
                              .format(N, p - 1)])
    if N == 1:
        return 1
    cofactors = [N // q for q in sympy.primefactors(N)]
    for w in range(2, p):
        if pow(w, N, p) == 1 and all(pow(w, c, p) != 1 for c in cofactors):
            return w
    raise ParameterError(["no element of order {} modulo {}".format(N, p)])


class TwiddleTable(object):
    """Twiddle factors for one butterfly kind, in driver access order.

    Attributes
    ----------
    kind : str
    encoding : str
        One of butterflies.PLAIN_QUOTIENT, MONTGOMERY, PLANTARD.
    schedule : str
        'dif' (forward indexed by level and butterfly) or 'dit' (forward
        indexed by level and block).
    forward, inverse : list
        Encoded twiddles. Plain+quotient entries are (w, floor(w beta/p))
        pairs.
    """
    def __init__(self, kind, encoding, schedule, forward, inverse, ctx):
        self.kind = kind
        self.encoding = encoding
        self.schedule = schedule
        self.forward = tuple(forward)
        self.inverse = tuple(inverse)
        self._ctx = ctx

    def __repr__(self):
        return "TwiddleTable(kind={}, encoding={}, schedule={}, len={})"\
            .format(self.kind, self.encoding, self.schedule,
                    len(self.forward))

    def _decode_one(self, value):
        p = self._ctx.p
        if self.encoding == butterflies.PLAIN_QUOTIENT:
            return value[0]
        elif self.encoding == butterflies.MONTGOMERY:
            return value * crt_core.mod_inverse(self._ctx.beta, p) % p
        return value * crt_core.mod_inverse(-self._ctx.R2, p) % p

    def decode(self):
        """Plain residues of (forward, inverse)."""
        return ([self._decode_one(v) for v in self.forward],
                [self._decode_one(v) for v in self.inverse])

    def layers(self):
        """Decoded (forward, inverse) twiddles grouped by layer.

        Each layer is the sorted tuple of its plain residues and layers are
        ordered by size, so tables of every kind built over the same
        parameters compare equal whatever their schedule.
        """
        forward, inverse = self.decode()
        ell = self._ctx.ell
        if self.schedule == DIF:
            forward_sizes = [1 << (ell - 1 - s) for s in range(ell)]
        else:
            forward_sizes = [1 << s for s in range(ell)]
        inverse_sizes = [1 << s for s in reversed(range(ell))]
        return (_group_layers(forward, forward_sizes),
                _group_layers(inverse, inverse_sizes))

    def bind(self, kind):
        """The table itself, if `kind` reads this encoding."""
        butterflies.check_encoding(kind, self.encoding)
        return self


def _group_layers(values, sizes):
    groups, start = [], 0
    for size in sizes:
        groups.append(tuple(sorted(values[start:start + size])))
        start += size
    return tuple(sorted(groups, key=len))


def _forward_powers(omega, p, ell, schedule):
    N = 1 << ell
    powers = []
    for s in range(ell):
        if schedule == DIF:
            step = 1 << s
            powers.extend(pow(omega, j * step, p)
                          for j in range(N >> (s + 1)))
        else:
            powers.extend(pow(omega, bit_reverse(i, ell - 1), p)
                          for i in range(1 << s))
    return powers


def _inverse_powers(omega_inv, p, ell):
    powers = []
    for s in reversed(range(ell)):
        powers.extend(pow(omega_inv, bit_reverse(i, ell - 1), p)
                      for i in range(1 << s))
    return powers


def _encode(kind, values, ctx):
    encoding = butterflies.ENCODINGS[kind]
    if encoding == butterflies.PLAIN_QUOTIENT:
        return [(w, (w * ctx.beta) // ctx.p) for w in values]
    elif encoding == butterflies.MONTGOMERY:
        return [reductions.to_montgomery_domain(w, ctx) for w in values]
    return [reductions.to_plantard_domain(w, ctx) for w in values]


def build_twiddles(kind, omega, omega_inv, ctx):
    schedule = DIT if kind == 'improved' else DIF
    forward = _forward_powers(omega, ctx.p, ctx.ell, schedule)
    inverse = _inverse_powers(omega_inv, ctx.p, ctx.ell)
    return TwiddleTable(kind, butterflies.ENCODINGS[kind], schedule,
                        _encode(kind, forward, ctx),
                        _encode(kind, inverse, ctx), ctx)


def kind_violations(kind, p, N, ctx):
    """Violated bounds for running `kind` transforms with ctx."""
    beta = ctx.beta
    if kind == 'ntl':
        return [] if 2 * p < beta else [
            "ntl requires p < beta/2 = {} (p = {})".format(beta // 2, p)]
    elif kind == 'harvey':
        return [] if 4 * p < beta else [
            "harvey requires p < beta/4 = {} (p = {})".format(beta // 4, p)]
    elif kind == 'scott':
        return [] if 4 * p < beta else [
            "scott requires p < beta L/(4N) for some L <= N, i.e. "
            "p < beta/4 = {} (p = {})".format(beta // 4, p)]
    elif kind == 'improved':
        return ctx.violations('modified-plantard')
    raise ValueError("Unknown transform kind '{}'; expected one of {}"
                     .format(kind, butterflies.TRANSFORM_KINDS))


class NttParams(object):
    """A validated (p, N, n) triple with every precomputed constant.

    Build through `build_params` or `preset`; the instance is not meant
    to be modified afterwards.
    """
    def __init__(self, p, N, n, omega, kinds, name=None):
        self.name = name
        self.p = p
        self.N = N
        self.ell = utils.ilog2(N)
        self.n = n
        self.beta = 1 << n
        self.omega = omega
        self.omega_inv = crt_core.mod_inverse(omega, p)
        self.n_inv = crt_core.mod_inverse(N, p)
        self.ctx = reductions.ReductionContext(p, n, ell=self.ell)
        self.kinds = tuple(kinds)

        self.one_hat = reductions.to_plantard_domain(1, self.ctx)
        self.n_inv_hat = reductions.to_plantard_domain(self.n_inv, self.ctx)
        self.scott = (butterflies.ScottConfig.for_params(p, N, self.beta)
                      if 'scott' in self.kinds else None)
        self._tables = {k: build_twiddles(k, self.omega, self.omega_inv,
                                          self.ctx)
                        for k in self.kinds}

    def __repr__(self):
        return "NttParams(name={}, p={}, N={}, n={}, omega={}, kinds={})"\
            .format(self.name, self.p, self.N, self.n, self.omega,
                    list(self.kinds))

    def twiddles(self, kind):
        if kind not in self._tables:
            raise ParameterError(["kind '{}' was not built for these "
                                  "parameters (built: {})".format(
                                      kind, list(self.kinds))])
        return self._tables[kind]


def build_params(p, N, n, kinds=butterflies.TRANSFORM_KINDS, name=None):
    """Validate (p, N, n) for the requested kinds and precompute.

    Parameters
    ----------
    p : int
        Odd prime modulus below 2^30.

    N : int
        Transform size, a power of two >= 2 dividing p - 1.

    n : int
        Word size, one of 8, 16, 32.

    kinds : iterable of str
        Transform kinds the result must support.

    Returns
    -------
    params : NttParams

    Raises
    ------
    ParameterError
        Listing every violated precondition.
    """
    if isinstance(kinds, str):
        kinds = [kinds]
    kinds = list(kinds)
    violations = []
    if p < 3 or p % 2 == 0:
        violations.append("p = {} must be an odd prime".format(p))
    elif not sympy.isprime(p):
        violations.append("p = {} is composite".format(p))
    if p >= 1 << MAX_MODULUS_BITS:
        violations.append("p = {} must be < 2^{}".format(
            p, MAX_MODULUS_BITS))
    if N < 2 or not utils.is_power_of_two(N):
        violations.append("N = {} must be a power of two >= 2".format(N))
    elif (p - 1) % N:
        violations.append("N = {} does not divide p - 1 = {}".format(
            N, p - 1))
    if n not in WORD_SIZES:
        violations.append("n = {} must be one of {}".format(n, WORD_SIZES))

    for kind in kinds:
        if kind not in butterflies.TRANSFORM_KINDS:
            violations.append("unknown kind '{}'".format(kind))

    if not violations:
        ctx = reductions.ReductionContext(p, n, ell=utils.ilog2(N))
        for kind in kinds:
            violations.extend(kind_violations(kind, p, N, ctx))

    if violations:
        logger.error("build_params(p={}, N={}, n={}, kinds={}): {}".format(
            p, N, n, kinds, "; ".join(violations)))
        raise ParameterError(violations)

    omega = find_primitive_root(p, N)
    logger.debug("omega={} for p={}, N={}".format(omega, p, N))
    return NttParams(p, N, n, omega, kinds, name=name)


def available_presets(path=PRESETS_PATH):
    return sorted(C.Config.load(path)["presets"].keys())


def preset_entry(name, path=PRESETS_PATH):
    entry = C.Config.load(path).get("presets/{}".format(name))
    if entry is None:
        raise UnknownPresetError(
            "Unknown preset '{}'; expected one of {}".format(
                name, available_presets(path)))
    return entry


def preset(name, n=None, kinds=butterflies.TRANSFORM_KINDS,
           path=PRESETS_PATH):
    """Build the named preset, optionally at another word size."""
    entry = preset_entry(name, path)
    return build_params(entry["p"], entry["N"],
                        entry["n"] if n is None else n,
                        kinds=kinds, name=name)
