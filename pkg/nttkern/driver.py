"""Top-level routines behind the command line:

* cmd_verify
* cmd_counterexample
* cmd_ntt
* cmd_bench

Each takes a validated RunConfig and returns (exit_status, result), with
exit status 0 when every check passed, 1 when a property was violated and
2 for configuration or budget errors.
"""
import itertools
import json
import logging
import sys

import pandas as pd
import progressbar

import nttkern.common.config as C
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils
import nttkern.arith.butterflies as B
import nttkern.arith.reductions as R
import nttkern.evaluate.analysis as analysis
import nttkern.evaluate.bench as bench
import nttkern.evaluate.verify as verify
import nttkern.ntt.params as P

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

SUBCOMMANDS = ('verify', 'counterexample', 'ntt', 'bench')
FORMATS = ('json', 'csv', 'text')

# Defaults of the signed Plantard analysis context.
ANALYSIS_P, ANALYSIS_N, ANALYSIS_ALPHA = 31, 6, 0


class UsageError(contracts.ContractError):
    pass


def _as_int(value, name):
    if value is None:
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UsageError("{} must be an integer, got '{}'".format(
            name, value))


def _or_config(value, config, key, default=None):
    return value if value is not None else config.get(key, default)


class RunConfig(object):
    """Everything one subcommand needs, validated up front.

    Build with `from_arguments` (docopt dictionary + Config). Invalid
    combinations raise UsageError before any work starts.
    """
    def __init__(self, subcommand, config, preset=None, p=None, N=None,
                 n=None, alpha=None, kinds=None, alg='all', iterations=None,
                 warmup=None, trials=None, samples=None, seed=None,
                 output_format=None, semantics=None, limit=None,
                 expect_known_case=False, exhaustive=False,
                 exhaustive_max_p=None, micro=False, n_jobs=None,
                 show_progress=False):
        self.subcommand = subcommand
        self.config = config
        self.preset = preset
        self.p = p
        self.N = N
        self.n = n
        self.alpha = alpha
        self.kinds = list(kinds) if kinds else list(B.TRANSFORM_KINDS)
        self.alg = alg
        self.iterations = _or_config(iterations, config, "bench/iterations")
        self.warmup = _or_config(warmup, config, "bench/warmup", 0)
        self.trials = _or_config(trials, config, "ntt/trials")
        self.samples = _or_config(samples, config, "verify/samples")
        self.seed = seed if seed is not None else config.resolve_seed()
        self.format = _or_config(output_format, config, "run/format", "text")
        self.semantics = semantics
        self.limit = limit
        self.expect_known_case = expect_known_case
        self.exhaustive = exhaustive
        self.exhaustive_max_p = _or_config(exhaustive_max_p, config,
                                           "verify/exhaustive_max_p", 63)
        self.micro = micro
        self.n_jobs = _or_config(n_jobs, config, "run/num_cpus", 1)
        self.show_progress = show_progress
        self.validate()

    @classmethod
    def from_arguments(cls, arguments, config):
        """Fold docopt arguments into a RunConfig."""
        subcommand = next((s for s in SUBCOMMANDS if arguments.get(s)), None)
        overrides = {
            "run/format": arguments.get('--format'),
            "run/seed": _as_int(arguments.get('--seed'), '--seed'),
            "run/num_cpus": _as_int(arguments.get('--jobs'), '--jobs'),
            "bench/iterations": _as_int(arguments.get('--iters'), '--iters'),
            "bench/warmup": _as_int(arguments.get('--warmup'), '--warmup'),
            "ntt/trials": _as_int(arguments.get('--trials'), '--trials'),
            "verify/samples": _as_int(arguments.get('--samples'),
                                      '--samples'),
            "verify/exhaustive_max_p": _as_int(
                arguments.get('--exhaustive-max-p'), '--exhaustive-max-p'),
        }
        config = config.with_overrides(overrides)
        kind = arguments.get('--kind') or 'all'
        kinds = (list(B.TRANSFORM_KINDS) if kind == 'all'
                 else [k.strip() for k in kind.split(',')])
        semantics = arguments.get('--semantics') or 'both'
        return cls(
            subcommand, config,
            preset=arguments.get('--preset'),
            p=_as_int(arguments.get('--p'), '--p'),
            N=_as_int(arguments.get('--N'), '--N'),
            n=_as_int(arguments.get('--n') or arguments.get('--n-bits'),
                      '--n'),
            alpha=_as_int(arguments.get('--alpha'), '--alpha'),
            kinds=kinds,
            alg=arguments.get('--alg') or 'all',
            semantics=semantics,
            limit=_as_int(arguments.get('--limit'), '--limit'),
            expect_known_case=bool(arguments.get('--expect-paper-case') or
                                   arguments.get('--expect-known-case')),
            exhaustive=bool(arguments.get('--exhaustive')),
            micro=bool(arguments.get('--micro')),
            show_progress=bool(arguments.get('--progress')))

    def validate(self):
        problems = []
        if self.subcommand not in SUBCOMMANDS:
            problems.append("unknown subcommand '{}'".format(
                self.subcommand))
        if self.format not in FORMATS:
            problems.append("format must be one of {}, got '{}'".format(
                FORMATS, self.format))
        for kind in self.kinds or []:
            if kind not in B.TRANSFORM_KINDS:
                problems.append("unknown kind '{}'; expected one of {}"
                                .format(kind, B.TRANSFORM_KINDS))
        if self.semantics not in ('both', None):
            try:
                R.ShiftSemantics.parse(self.semantics)
            except ValueError as err:
                problems.append(str(err))
        if self.subcommand == 'verify':
            if self.alg != 'all' and self.alg not in verify.SUITES:
                problems.append("unknown algorithm '{}'; expected 'all' or "
                                "one of {}".format(self.alg,
                                                   list(verify.SUITES)))
        if self.subcommand in ('ntt', 'bench'):
            if self.preset is None and self.subcommand == 'ntt' and \
                    (self.p is None or self.N is None):
                problems.append("ntt needs --preset or both --p and --N")
            if self.subcommand == 'bench' and (self.iterations or 0) < 1:
                problems.append("--iters must be >= 1")
            if self.subcommand == 'ntt' and (self.trials or 0) < 1 and \
                    not self.exhaustive:
                problems.append("--trials must be >= 1")
        if self.limit is not None and self.limit < 0:
            problems.append("--limit must be >= 0")
        if self.alpha is not None and self.alpha < 0:
            problems.append("--alpha must be >= 0")
        if problems:
            raise UsageError("; ".join(problems))

    @property
    def shift_semantics(self):
        if self.semantics in ('both', None):
            return list(R.BOTH_SEMANTICS)
        return [R.ShiftSemantics.parse(self.semantics)]

    def params(self):
        """NttParams for --preset, or for explicit --p/--N/--n."""
        if self.preset is not None:
            return _preset_params(self.preset, self.n, self.kinds)
        try:
            return P.build_params(self.p, self.N,
                                  self.n or self.config.get("ntt/word_size",
                                                            32),
                                  kinds=self.kinds)
        except P.ParameterError as err:
            raise UsageError(str(err))


def _preset_params(name, n, kinds):
    try:
        return P.preset(name, n=n, kinds=kinds)
    except (P.ParameterError, P.UnknownPresetError) as err:
        raise UsageError(str(err))


def _emit(out, text):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _status_of(ok):
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_verify(cfg, out=None):
    """Run the verification suites named by cfg.alg.

    Returns
    -------
    status : int
    report : pd.DataFrame
    """
    out = out or sys.stdout
    params = None
    if cfg.preset is not None or (cfg.p is not None and cfg.N is not None):
        params = cfg.params()
    opts = verify.VerifyOptions(
        params=params,
        p=cfg.p if cfg.p is not None else ANALYSIS_P,
        n=cfg.n if cfg.n is not None else ANALYSIS_N,
        alpha=cfg.alpha if cfg.alpha is not None else ANALYSIS_ALPHA,
        exhaustive_max_p=cfg.exhaustive_max_p,
        samples=cfg.samples,
        trials=cfg.trials,
        seed=cfg.seed,
        n_jobs=cfg.n_jobs)
    report = verify.run_suites(cfg.alg, opts)
    status = _status_of(report["failures"].sum() == 0)

    if cfg.format == 'json':
        suites = [{"suite": row.suite, "cases": int(row.cases),
                   "failures": int(row.failures), "status": row.status,
                   "examples": list(row.examples)}
                  for row in report.itertuples()]
        _emit(out, json.dumps({"status": status, "suites": suites},
                              sort_keys=True))
    elif cfg.format == 'csv':
        _emit(out, report.drop(columns=["examples"]).to_csv(index=False))
    else:
        for row in report.itertuples():
            _emit(out, "{:<18} cases={:<9} failures={:<6} {}".format(
                row.suite, row.cases, row.failures,
                utils.result_colored(row.failures == 0)))
            for example in row.examples:
                _emit(out, "    " + utils.colored(example, "red"))
    return status, report


def cmd_counterexample(cfg, out=None):
    """Search the signed Plantard input box for mismatches.

    Prints one JSON object per mismatching case (or a table for text/csv).
    With expect_known_case the status is 0 only if the known worked
    example appears with its recorded outputs.

    Returns
    -------
    status : int
    reports : dict
        semantics mode -> list of CaseReport
    """
    out = out or sys.stdout
    p = cfg.p if cfg.p is not None else ANALYSIS_P
    n = cfg.n if cfg.n is not None else ANALYSIS_N
    alpha = cfg.alpha if cfg.alpha is not None else ANALYSIS_ALPHA
    ctx = R.ReductionContext(p, n, alpha=alpha)
    problems = ctx.violations('signed-plantard')
    if problems:
        raise UsageError("; ".join(problems))

    budget = (cfg.limit if cfg.limit is not None
              else cfg.config.get("counterexample/budget"))
    space = analysis.SearchSpace.default(ctx, cfg.config)
    found = search_all_semantics(cfg.shift_semantics, ctx, space, budget,
                                 cfg.n_jobs)

    for mode, reports in found.items():
        if cfg.format == 'json':
            for report in reports:
                _emit(out, report.to_json())
        elif cfg.format == 'csv':
            _emit(out, analysis.reports_to_frame(reports).to_csv(
                index=False))
        else:
            _emit(out, utils.colored("{}: {} mismatches".format(
                mode, len(reports)), "cyan"))
            if reports:
                _emit(out, analysis.reports_to_frame(reports).drop(
                    columns=["semantics"]).to_string(index=False))

    if cfg.expect_known_case:
        ok = (p, n, alpha) == (ANALYSIS_P, ANALYSIS_N, ANALYSIS_ALPHA) and \
            analysis.has_known_case(found)
        logger.info("Worked example reproduced: {}".format(ok))
        return _status_of(ok), found
    return EXIT_OK, found


def search_all_semantics(semantics, ctx, space, budget, n_jobs):
    """Run the search once per shift semantics, checking the budget
    before any search starts."""
    size = space.size(ctx) * len(semantics)
    if budget is not None and size > budget:
        logger.error("Search over {} cases exceeds the budget of {}".format(
            size, budget))
        raise analysis.BudgetExceededError(
            "{} cases requested; budget is {}".format(size, budget))
    return {sem.mode: analysis.search_counterexamples(ctx, sem, space,
                                                      n_jobs=n_jobs)
            for sem in semantics}


def _polynomials(params, cfg):
    if cfg.exhaustive:
        return ([int(c) for c in f]
                for f in itertools.product(range(params.p), repeat=params.N))
    rng = utils.random_state(cfg.seed)
    return (utils.random_residues(rng, 0, params.p, params.N)
            for _ in range(cfg.trials))


def cmd_ntt(cfg, out=None):
    """Round trip, naive-DFT and convolution checks for one preset.

    Returns
    -------
    status : int
    result : verify.SuiteResult
    """
    out = out or sys.stdout
    params = cfg.params()
    rng = utils.random_state(cfg.seed + 1)
    polys = _polynomials(params, cfg)
    if cfg.show_progress:
        total = params.p ** params.N if cfg.exhaustive else cfg.trials
        polys = progressbar.ProgressBar(max_value=total)(polys)
    with contracts.enforced():
        tally = verify.check_polynomials(params, polys, rng, kinds=cfg.kinds)
    result = tally.result('ntt')
    status = _status_of(result.failures == 0)
    summary = {"preset": params.name, "p": params.p, "N": params.N,
               "n": params.n, "kinds": list(cfg.kinds),
               "cases": result.cases, "failures": result.failures,
               "examples": result.examples, "status": status}
    if cfg.format == 'json':
        _emit(out, json.dumps(summary, sort_keys=True))
    elif cfg.format == 'csv':
        _emit(out, pd.DataFrame([summary]).drop(
            columns=["examples"]).to_csv(index=False))
    else:
        _emit(out, "{} kinds={} cases={} failures={} {}".format(
            params, ",".join(cfg.kinds), result.cases, result.failures,
            utils.result_colored(result.failures == 0)))
        for example in result.examples:
            _emit(out, "    " + utils.colored(example, "red"))
    return status, result


def cmd_bench(cfg, out=None):
    """Time the requested kinds and print a report per preset.

    Returns
    -------
    status : int
    reports : list of bench.BenchReport
    """
    out = out or sys.stdout
    if cfg.preset is not None:
        names = [cfg.preset]
    else:
        names = C.Config.load(P.PRESETS_PATH)["bench_points"]
    reports = []
    for name in names:
        params = _preset_params(name, cfg.n, cfg.kinds)
        reports.append(bench.run_bench(
            params, cfg.kinds, cfg.iterations, warmup=cfg.warmup or 0,
            seed=cfg.seed, mode=bench.MICRO if cfg.micro else bench.TRANSFORM,
            show_progress=cfg.show_progress))

    if cfg.format == 'json':
        for report in reports:
            _emit(out, report.to_json())
    elif cfg.format == 'csv':
        frame = pd.concat([r.to_frame() for r in reports])
        _emit(out, frame.to_csv(index=False))
    else:
        for report in reports:
            _emit(out, report.to_text())
    return EXIT_OK, reports


COMMANDS = {
    'verify': cmd_verify,
    'counterexample': cmd_counterexample,
    'ntt': cmd_ntt,
    'bench': cmd_bench,
}


def run(cfg, out=None):
    """Dispatch cfg.subcommand, mapping errors onto exit statuses."""
    try:
        return COMMANDS[cfg.subcommand](cfg, out=out)
    except (ValueError, KeyError) as err:
        logger.error("{} failed: {}".format(cfg.subcommand, err))
        return EXIT_USAGE, None
