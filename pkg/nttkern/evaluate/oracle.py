"""Slow, obviously correct ground truth.

Nothing here shifts or masks: residues come from Python's `%` and `pow`,
transforms from direct polynomial evaluation.
"""
import logging

import numpy as np

import nttkern.ntt.transform as transform

logger = logging.getLogger(__name__)

UNSIGNED = 'unsigned'
CENTERED = 'centered'
SIGN_MODES = (UNSIGNED, CENTERED)

FACTORS = ('one', 'inv', 'neg_inv')


def reference_residue(A, p, R, sign_mode=UNSIGNED, factor='inv'):
    """A * factor mod p, with factor one of 1, R^-1 or -R^-1.

    Parameters
    ----------
    A : int
    p : int
        Odd modulus.
    R : int
        Power-of-two radix.
    sign_mode : str
        'unsigned' gives [0, p); 'centered' gives [-p/2, p/2).
    factor : str
        'one', 'inv' or 'neg_inv'.

    Returns
    -------
    r : int
    """
    if sign_mode not in SIGN_MODES:
        raise ValueError("sign_mode must be one of {}".format(SIGN_MODES))
    if factor == 'one':
        f = 1
    elif factor == 'inv':
        f = pow(R, -1, p)
    elif factor == 'neg_inv':
        f = -pow(R, -1, p)
    else:
        raise ValueError("factor must be one of {}".format(FACTORS))
    r = A * f % p
    if sign_mode == CENTERED and r > p // 2:
        r -= p
    return r


def _dtype_for(p):
    return np.int64 if p < 2 ** 31 else object


def naive_dft(f, omega, p):
    """f(1), f(w), ..., f(w^(N-1)) by Horner's rule at every point."""
    N = len(f)
    dtype = _dtype_for(p)
    points = np.array([pow(omega, i, p) for i in range(N)], dtype=dtype)
    acc = np.zeros(N, dtype=dtype)
    for c in reversed(list(f)):
        acc = (acc * points + c % p) % p
    return transform.Spectrum([int(x) for x in acc], transform.NATURAL)


def schoolbook_cyclic_convolution(a, b, p):
    """c_k = sum over i + j == k (mod N) of a_i b_j, mod p."""
    if len(a) != len(b):
        raise ValueError("length mismatch: {} != {}".format(len(a), len(b)))
    dtype = _dtype_for(p)
    b = np.array([x % p for x in b], dtype=dtype)
    c = np.zeros(len(a), dtype=dtype)
    for i, ai in enumerate(a):
        c = (c + (ai % p) * np.roll(b, i)) % p
    return [int(x) for x in c]


def schoolbook_ct(X, Y, w, p):
    return (X + w * Y) % p, (X - w * Y) % p


def schoolbook_gs(X, Y, w, p):
    return (X + Y) % p, w * (X - Y) % p
