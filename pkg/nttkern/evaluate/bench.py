"""Timing harness comparing the transform kinds.

Every kind transforms the same seeded inputs; generating an input is not
timed, warmup iterations are discarded and contract checking is off
inside the timed region. The report only describes what was measured;
no ordering between kinds is asserted.
"""
import itertools
import json
import logging
import os

import jsonschema
import numpy as np
import pandas as pd
import progressbar

import nttkern.arith.butterflies as B
import nttkern.arith.reductions as R
import nttkern.common.config as C
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils
import nttkern.ntt.transform as X

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SCHEMA_PATH = os.path.join(C.DATA_DIR, "bench_schema.json")
CSV_COLUMNS = ["preset", "kind", "iters", "mean_us", "std_us"]

TRANSFORM = 'transform'
MICRO = 'micro'


def _load_schema():
    with open(SCHEMA_PATH) as fh:
        return json.load(fh)


def speedup(mean_kind, mean_baseline):
    """Percent of the baseline's time saved by `kind`."""
    return (mean_baseline - mean_kind) / mean_baseline * 100.0


class BenchReport(object):
    """Timing summary of one preset across kinds.

    Parameters
    ----------
    preset : str
    rows : list of dict
        {kind, mean_us, std_us} per kind, in run order.
    iterations, warmup, seed : int
    machine : str
    build_options : dict
    word_size : int
    mode : str
        'transform' for whole forward transforms, 'micro' for single
        butterflies.
    """
    def __init__(self, preset, rows, iterations, warmup, seed, machine,
                 build_options, word_size, mode=TRANSFORM):
        self.preset = preset
        self.rows = [dict(r) for r in rows]
        self.iterations = iterations
        self.warmup = warmup
        self.seed = seed
        self.machine = machine
        self.build_options = dict(build_options)
        self.word_size = word_size
        self.mode = mode

    @property
    def kinds(self):
        return [r["kind"] for r in self.rows]

    def mean(self, kind):
        for r in self.rows:
            if r["kind"] == kind:
                return r["mean_us"]
        raise KeyError(kind)

    def speedup(self, kind, baseline):
        return speedup(self.mean(kind), self.mean(baseline))

    @property
    def pairwise(self):
        """One entry per unordered pair of kinds."""
        return [{"kind": k, "baseline": b,
                 "speedup_pct": self.speedup(k, b)}
                for b, k in itertools.combinations(self.kinds, 2)]

    def speedup_frame(self):
        kinds = self.kinds
        return pd.DataFrame([[self.speedup(k, b) for b in kinds]
                             for k in kinds], index=kinds, columns=kinds)

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "preset": self.preset,
            "mode": self.mode,
            "iterations": self.iterations,
            "warmup": self.warmup,
            "seed": self.seed,
            "machine": self.machine,
            "build_options": self.build_options,
            "word_size": self.word_size,
            "rows": self.rows,
            "pairwise": self.pairwise,
        }

    def to_json(self):
        data = self.to_dict()
        jsonschema.validate(data, _load_schema())
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        jsonschema.validate(data, _load_schema())
        return cls(data["preset"], data["rows"], data["iterations"],
                   data["warmup"], data["seed"], data["machine"],
                   data["build_options"], data["word_size"], data["mode"])

    def to_frame(self):
        df = pd.DataFrame(self.rows, columns=["kind", "mean_us", "std_us"])
        df.insert(0, "preset", self.preset)
        df.insert(2, "iters", self.iterations)
        return df[CSV_COLUMNS]

    def to_text(self):
        lines = ["{} ({} mode, {} iterations, seed {}, n={})".format(
                     self.preset, self.mode, self.iterations, self.seed,
                     self.word_size),
                 "machine: {}".format(self.machine),
                 self.to_frame().to_string(index=False),
                 "speedup % (row kind vs column baseline):",
                 self.speedup_frame().round(2).to_string()]
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, BenchReport) and \
            self.to_dict() == other.to_dict()


def _kernel_runner(kind, params, rng):
    """A zero-argument call of one butterfly of `kind` on fresh inputs."""
    p, beta, ctx = params.p, params.beta, params.ctx
    w = utils.random_residues(rng, 1, p, 1)[0]
    if kind == 'ntl':
        x, y = utils.random_residues(rng, 0, p, 2)
        wq = w * beta // p
        return lambda: B.ntl_butterfly(x, y, w, wq, p, beta)
    elif kind == 'harvey':
        x, y = utils.random_residues(rng, 0, 2 * p, 2)
        wm = R.to_montgomery_domain(w, ctx)
        return lambda: B.harvey_butterfly(x, y, wm, ctx.mu_beta, p, beta)
    elif kind == 'scott':
        cfg = params.scott
        x, y = utils.random_residues(rng, 0, cfg.lazy_limit * p, 2)
        wm = R.to_montgomery_domain(w, ctx)
        return lambda: B.scott_butterfly(x, y, wm, ctx.mu_beta_neg, p,
                                         beta, cfg)
    x, y = utils.random_residues(rng, 0, (p << params.ell) >> 1, 2)
    wh = R.to_plantard_domain(w, ctx)
    return lambda: B.improved_ct_butterfly(x, y, wh, ctx)


def _transform_runner(kind, params, rng):
    f = utils.random_residues(rng, 0, params.p, params.N)
    return lambda: X.ntt_forward(f, params, kind)


def time_kind(kind, params, iterations, warmup, seed, mode=TRANSFORM,
              show_progress=False, timer=None):
    """Per-iteration durations (microseconds) of one kind.

    Returns
    -------
    durations : np.ndarray, shape=(iterations,)
    """
    make = _transform_runner if mode == TRANSFORM else _kernel_runner
    rng = utils.random_state(seed)
    timer = timer if timer is not None else utils.TimerHolder()
    durations = np.zeros(iterations)
    progress = (progressbar.ProgressBar(max_value=iterations)
                if show_progress else None)
    with contracts.disabled():
        for i in range(warmup):
            make(kind, params, rng)()
        rng = utils.random_state(seed)
        for i in range(iterations):
            run = make(kind, params, rng)
            timer.start(kind)
            run()
            durations[i] = timer.end(kind)
            if progress is not None:
                progress.update(i + 1)
    if progress is not None:
        progress.finish()
    return durations


def run_bench(params, kinds, iterations, warmup=0, seed=0, mode=TRANSFORM,
              show_progress=False):
    """Time every kind on identical inputs and build a BenchReport."""
    for kind in kinds:
        if kind not in B.TRANSFORM_KINDS:
            raise ValueError("Unknown kind '{}'".format(kind))
    rows = []
    for kind in kinds:
        logger.info("Timing {} {} x{} ({} warmup)".format(
            params.name, kind, iterations, warmup))
        durations = time_kind(kind, params, iterations, warmup, seed,
                              mode=mode, show_progress=show_progress)
        rows.append({"kind": kind,
                     "mean_us": float(np.mean(durations)),
                     "std_us": float(np.std(durations))})
    return BenchReport(params.name or "p{}_N{}".format(params.p, params.N),
                       rows, iterations, warmup, seed,
                       utils.machine_descriptor(), utils.build_options(),
                       params.n, mode=mode)
