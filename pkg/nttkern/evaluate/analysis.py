"""Counterexamples for the uncorrected signed Plantard reduction.

For A = W T the exact value the reduction should return is

    K = (h p - A) / 2^{2n},   h = A mu mod +-2^{2n},

an exact division with -p/2 < K < p/2 and K == A (-2^{-2n}) (mod p).
`signed_plantard_redc` is compared against K case by case, under either
reading of the right shift.
"""
import collections
import json
import logging

import joblib
import pandas as pd

import nttkern.arith.crt_core as crt_core
import nttkern.arith.reductions as reductions
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils

logger = logging.getLogger(__name__)

MATCH = 'match'
MISMATCH = 'mismatch'

# The known worked example.
KNOWN_CASE = {
    "p": 31, "n": 6, "alpha": 0, "W": 19, "T": -5, "K": -15,
    "outputs": {"signed-floor": -14, "arithmetic-floor": -16},
}


class BudgetExceededError(contracts.ContractError):
    pass


class CaseReport(collections.namedtuple(
        'CaseReport',
        ['W', 'T', 'A', 'h', 'K', 'alg_output', 'semantics', 'verdict'])):
    __slots__ = ()

    @property
    def is_mismatch(self):
        return self.verdict == MISMATCH

    def to_dict(self):
        d = self._asdict()
        d['semantics'] = self.semantics.mode
        return dict(d)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def input_bound(ctx):
    """|W|, |T| <= p 2^alpha."""
    return ctx.p << ctx.alpha


def _check_inputs(W, T, ctx):
    if contracts.CHECK:
        ctx.require('signed-plantard')
        bound = input_bound(ctx)
        contracts.require(-bound <= W <= bound and -bound <= T <= bound,
                          "W={}, T={} outside [-{}, {}]", W, T, bound, bound)


def crt_residue(A, ctx):
    """h = A mu mod +-2^{2n}."""
    return crt_core.centered_mod(A * ctx.mu_centered, ctx.R2)


def crt_predicted_value(W, T, ctx):
    """The true signed Plantard value K = (h p - A) / 2^{2n}."""
    _check_inputs(W, T, ctx)
    A = W * T
    h = crt_residue(A, ctx)
    num = h * ctx.p - A
    if contracts.CHECK:
        contracts.ensure(num % ctx.R2 == 0,
                         "h p - A = {} not divisible by 2^{}", num, 2 * ctx.n)
    K = num // ctx.R2
    if contracts.CHECK:
        contracts.ensure(-ctx.p < 2 * K < ctx.p,
                         "K={} outside (-p/2, p/2)", K)
    return K


def verify_signed_plantard_case(W, T, ctx, sem):
    """Evaluate the uncorrected formula at (W, T) and compare with K."""
    _check_inputs(W, T, ctx)
    A = W * T
    K = crt_predicted_value(W, T, ctx)
    out = reductions.signed_plantard_redc(W, T, ctx, sem)
    return CaseReport(W, T, A, crt_residue(A, ctx), K, out, sem,
                      MATCH if out == K else MISMATCH)


class SearchSpace(object):
    """Which (W, T) pairs a counterexample search visits."""
    EXHAUSTIVE = 'exhaustive'
    RANDOM = 'random'
    EXPLICIT = 'explicit'

    def __init__(self, mode, count=None, seed=None, pairs=None):
        self.mode = mode
        self.count = count
        self.seed = seed
        self.pairs = pairs

    @classmethod
    def exhaustive(cls):
        return cls(cls.EXHAUSTIVE)

    @classmethod
    def random(cls, count, seed):
        return cls(cls.RANDOM, count=int(count), seed=int(seed))

    @classmethod
    def explicit(cls, pairs):
        return cls(cls.EXPLICIT, pairs=[(int(w), int(t)) for w, t in pairs])

    @classmethod
    def default(cls, ctx, config):
        """Exhaustive for small words, seeded sampling otherwise."""
        if ctx.n <= config.get("counterexample/exhaustive_max_n", 8):
            return cls.exhaustive()
        return cls.random(config.get("counterexample/samples", 100000),
                          config.resolve_seed())

    def size(self, ctx):
        if self.mode == self.EXHAUSTIVE:
            return (2 * input_bound(ctx) + 1) ** 2
        elif self.mode == self.RANDOM:
            return self.count
        return len(self.pairs)

    def distinct_size(self, ctx):
        """Number of different (W, T) pairs the search visits."""
        if self.mode == self.EXHAUSTIVE:
            return self.size(ctx)
        return len(set(_pairs_for(self, ctx)))

    def __repr__(self):
        return "SearchSpace(mode={}, count={}, seed={})".format(
            self.mode, self.count, self.seed)


def _scan_rows(ctx, sem, w_values, bound):
    found = []
    for W in w_values:
        for T in range(-bound, bound + 1):
            report = verify_signed_plantard_case(W, T, ctx, sem)
            if report.is_mismatch:
                found.append(report)
    return found


def _scan_pairs(ctx, sem, pairs):
    reports = (verify_signed_plantard_case(W, T, ctx, sem) for W, T in pairs)
    return [r for r in reports if r.is_mismatch]


def _chunks(values, n_chunks):
    if not values:
        return []
    n_chunks = max(1, min(n_chunks, len(values)))
    size = -(-len(values) // n_chunks)
    return [values[i:i + size] for i in range(0, len(values), size)]


def _pairs_for(space, ctx):
    if space.mode == SearchSpace.EXPLICIT:
        return space.pairs
    bound = input_bound(ctx)
    rng = utils.random_state(space.seed)
    Ws = utils.random_residues(rng, -bound, bound + 1, space.count)
    Ts = utils.random_residues(rng, -bound, bound + 1, space.count)
    return list(zip(Ws, Ts))


def search_counterexamples(ctx, sem, space=None, budget=None, n_jobs=1):
    """Every mismatch of the uncorrected formula within `space`.

    Parameters
    ----------
    ctx : ReductionContext
    sem : ShiftSemantics
    space : SearchSpace or None
        Defaults to exhaustive.
    budget : int or None
        Refuse to start if the space holds more cases than this.
    n_jobs : int
        joblib workers; the result does not depend on it.

    Returns
    -------
    reports : list of CaseReport
        Mismatches only, sorted by (W, T) without duplicates.

    Raises
    ------
    BudgetExceededError
    """
    space = space or SearchSpace.exhaustive()
    n_chunks = joblib.cpu_count() if n_jobs < 0 else max(1, n_jobs)
    size = space.size(ctx)
    if budget is not None and size > budget:
        logger.error("Search over {} cases exceeds the budget of {}".format(
            size, budget))
        raise BudgetExceededError(
            "{} holds {} cases; budget is {}".format(space, size, budget))
    logger.info("Searching {} cases for p={}, n={}, alpha={}, {}".format(
        size, ctx.p, ctx.n, ctx.alpha, sem.mode))

    if space.mode == SearchSpace.EXHAUSTIVE:
        bound = input_bound(ctx)
        tasks = [joblib.delayed(_scan_rows)(ctx, sem, chunk, bound)
                 for chunk in _chunks(list(range(-bound, bound + 1)),
                                      n_chunks)]
    else:
        tasks = [joblib.delayed(_scan_pairs)(ctx, sem, chunk)
                 for chunk in _chunks(_pairs_for(space, ctx), n_chunks)]

    if n_jobs == 1:
        parts = [fn(*args, **kwargs) for fn, args, kwargs in tasks]
    else:
        parts = joblib.Parallel(n_jobs=n_jobs)(tasks)

    unique = {}
    for part in parts:
        for report in part:
            unique[(report.W, report.T)] = report
    return [unique[key] for key in sorted(unique)]


def mismatch_census(ctx, space=None, n_jobs=1, budget=None):
    """Mismatch counts under both shift readings.

    Returns
    -------
    census : pd.DataFrame
        One row per semantics: cases, mismatches, fraction and the first
        mismatching (W, T).
    """
    space = space or SearchSpace.exhaustive()
    rows = []
    for sem in reductions.BOTH_SEMANTICS:
        found = search_counterexamples(ctx, sem, space, budget=budget,
                                       n_jobs=n_jobs)
        cases = space.distinct_size(ctx)
        rows.append({
            "semantics": sem.mode,
            "cases": cases,
            "mismatches": len(found),
            "fraction": len(found) / float(cases) if cases else 0.0,
            "first": (found[0].W, found[0].T) if found else None,
        })
    return pd.DataFrame(rows).set_index("semantics")


def reports_to_frame(reports):
    columns = list(CaseReport._fields)
    if not reports:
        return pd.DataFrame(columns=columns)
    return pd.DataFrame([r.to_dict() for r in reports], columns=columns)


def has_known_case(reports_by_semantics):
    """True if the worked example appears with its recorded outputs
    under every semantics present.

    Parameters
    ----------
    reports_by_semantics : dict
        semantics mode -> list of CaseReport
    """
    modes = [m for m in reports_by_semantics if m in KNOWN_CASE["outputs"]]
    if not modes:
        return False
    for mode in modes:
        expected = KNOWN_CASE["outputs"][mode]
        match = [r for r in reports_by_semantics[mode]
                 if (r.W, r.T) == (KNOWN_CASE["W"], KNOWN_CASE["T"])]
        if not match:
            return False
        report = match[0]
        if report.alg_output != expected or report.K != KNOWN_CASE["K"]:
            return False
    return True
