"""Two-modulus CRT identities and the modular primitives built on them.

Everything here works on Python integers, so the products that appear in
the Qin identity (up to p*R) never wrap. These functions are the test
oracles for the reduction algorithms; speed is not a concern.
"""
import collections
import logging

import nttkern.common.contracts as contracts
import nttkern.common.utils as utils

logger = logging.getLogger(__name__)


class InvalidModulusError(contracts.ContractError):
    pass


class NotCoprimeError(contracts.ContractError):
    pass


class ResidueRangeError(contracts.ContractError):
    pass


class ModulusPair(collections.namedtuple('ModulusPair', ['p', 'R'])):
    """An odd modulus p > 1 with a power-of-two modulus R > 1."""
    __slots__ = ()

    def __new__(cls, p, R):
        p, R = int(p), int(R)
        if p <= 1 or p % 2 == 0:
            raise InvalidModulusError(
                "p must be odd and > 1, got {}".format(p))
        if R <= 1 or not utils.is_power_of_two(R):
            raise InvalidModulusError(
                "R must be a power of two > 1, got {}".format(R))
        return super(ModulusPair, cls).__new__(cls, p, R)

    @property
    def product(self):
        return self.p * self.R


QinWitness = collections.namedtuple('QinWitness', ['p_inv', 'R_inv'])


def _egcd_inverse(a, m):
    old_r, r = a, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotCoprimeError(
            "{} has no inverse modulo {} (gcd = {})".format(a, m, old_r))
    return old_s % m


def _hensel_inverse(a, m):
    # a*a == 1 (mod 8) for odd a; each step doubles the valid bits.
    x, bits = a, 3
    mask = m - 1
    while bits < m.bit_length() - 1:
        x = (x * (2 - a * x)) & mask
        bits *= 2
    return x & mask


def mod_inverse(a, m):
    """Inverse of a modulo m as the canonical representative in [1, m).

    Parameters
    ----------
    a : int
    m : int, > 1
        A power of two (solved by Hensel lifting) or any other modulus
        (solved by the extended Euclidean algorithm).

    Returns
    -------
    x : int
        a * x == 1 (mod m), 1 <= x < m.

    Raises
    ------
    NotCoprimeError
        If gcd(a, m) != 1.
    """
    if m <= 1:
        raise InvalidModulusError("modulus must be > 1, got {}".format(m))
    a = a % m
    if utils.is_power_of_two(m):
        if a % 2 == 0:
            raise NotCoprimeError(
                "{} has no inverse modulo {} (even)".format(a, m))
        return _hensel_inverse(a, m)
    return _egcd_inverse(a, m)


def qin_identity(p, R):
    """Positive inverses p^-1 mod R and R^-1 mod p.

    They satisfy the exact integer identity
        p_inv * p + R_inv * R == 1 + p * R.

    Returns
    -------
    witness : QinWitness
    """
    pair = ModulusPair(p, R)
    witness = QinWitness(mod_inverse(pair.p, pair.R),
                         mod_inverse(pair.R, pair.p))
    lhs = witness.p_inv * pair.p + witness.R_inv * pair.R
    if lhs != 1 + pair.product:
        # Only reachable if mod_inverse is broken.
        raise ArithmeticError(
            "Qin identity failed for p={}, R={}: {} != {}".format(
                pair.p, pair.R, lhs, 1 + pair.product))
    return witness


def crt_recombine(r_p, r_R, pair):
    """The unique x in [0, pR) with x == r_p (mod p) and x == r_R (mod R).

    Uses the recombination r_R * p_inv * p + r_p * R_inv * R (mod pR).
    """
    if not 0 <= r_p < pair.p:
        raise ResidueRangeError(
            "r_p={} outside [0, {})".format(r_p, pair.p))
    if not 0 <= r_R < pair.R:
        raise ResidueRangeError(
            "r_R={} outside [0, {})".format(r_R, pair.R))
    witness = qin_identity(pair.p, pair.R)
    return (r_R * witness.p_inv * pair.p +
            r_p * witness.R_inv * pair.R) % pair.product


def centered_mod(x, m):
    """x mod +-m: the representative of x in [-m/2, m/2) for even m."""
    if m < 2 or m % 2:
        raise InvalidModulusError(
            "centered_mod needs an even modulus >= 2, got {}".format(m))
    r = x % m
    if r >= m // 2:
        r -= m
    return r
