"""Master script for the NTT kernel library.

Usage:
 manage.py [options] verify
 manage.py [options] counterexample
 manage.py [options] ntt
 manage.py [options] bench
 manage.py [options] test

Arguments:
 verify          Run the verification suites (--alg names one, or 'all').
                 Exhaustive checks for toy moduli, seeded random samples for
                 real parameter sets.
 counterexample  Search the signed Plantard input box for inputs where the
                 uncorrected formula disagrees with the true value; prints one
                 JSON object per mismatch.
 ntt             Round trip, naive-DFT and convolution checks of the
                 transforms for a preset (or --p/--N) and --kind.
 bench           Time whole forward transforms (or single butterflies with
                 --micro) for each kind and report pairwise speedups.
 test            Run the unit tests.

Options:
 -v --verbose              Increase verbosity.
 --config=<path>           Config file (defaults to data/master_config.yaml).
 --format=<fmt>            Output format: json, csv or text.
 --seed=<seed>             Random seed; NTT_KERNEL_SEED overrides it.
 --jobs=<k>                Worker processes for searches and suites.
 --progress                Show progress bars on long loops.
 --alg=<name>              verify: algorithm suite or 'all'.
 --preset=<name>           Named parameter set (kyber256, falcon1024, toy13..).
 --p=<p>                   Modulus.
 --N=<N>                   Transform size.
 --n=<n>                   Word size in bits.
 --n-bits=<n>              Same as --n.
 --alpha=<a>               Signed Plantard slack exponent.
 --kind=<kind>             ntl, harvey, scott, improved, a comma list or 'all'.
 --semantics=<s>           Shift semantics: signed, arith or both.
 --limit=<k>               counterexample: budget of cases to evaluate.
 --expect-paper-case       counterexample: exit 0 only if the known worked
                           example (W=19, T=-5) is reproduced.
 --expect-known-case       Same as --expect-paper-case.
 --exhaustive              ntt: enumerate every polynomial (toy presets only).
 --exhaustive-max-p=<p>    verify: largest odd modulus for exhaustive sweeps.
 --samples=<k>             verify: random samples per randomised suite.
 --trials=<k>              ntt / verify: random polynomials per preset.
 --iters=<k>               bench: timed iterations per kind.
 --warmup=<k>              bench: untimed iterations per kind.
 --micro                   bench: time single butterflies instead.
"""

from docopt import docopt
import logging
import os
import pytest
import sys

import nttkern.common.config as C
import nttkern.common.contracts as contracts
import nttkern.common.utils as utils
import nttkern.driver
import nttkern.logger

CONFIG_PATH = C.MASTER_CONFIG
TESTS_PATH = os.path.join(os.path.dirname(__file__), "tests")

logger = logging.getLogger(__name__)


def run_unit_tests():
    return 0 == pytest.main([TESTS_PATH])


def handle_arguments(arguments):
    config = C.Config.load(arguments['--config'] or CONFIG_PATH)
    contracts.configure(config)
    logger.debug(arguments)

    if arguments['test']:
        logger.info('Running unit tests')
        result = run_unit_tests()
        print("Tests {}".format(utils.result_colored(result)),
              file=sys.stderr)
        return nttkern.driver.EXIT_OK if result \
            else nttkern.driver.EXIT_VIOLATION

    try:
        cfg = nttkern.driver.RunConfig.from_arguments(arguments, config)
    except nttkern.driver.UsageError as err:
        print(utils.colored("Usage error: {}".format(err), "red"),
              file=sys.stderr)
        return nttkern.driver.EXIT_USAGE

    logger.info("Running {} (seed={}, format={})".format(
        cfg.subcommand, cfg.seed, cfg.format))
    status, _ = nttkern.driver.run(cfg)
    logger.info("{} finished with status {} {}".format(
        cfg.subcommand, status,
        utils.result_colored(status == nttkern.driver.EXIT_OK)))
    return status


if __name__ == "__main__":
    arguments = docopt(__doc__)
    nttkern.logger.init('DEBUG' if arguments['--verbose'] else 'INFO')
    sys.exit(handle_arguments(arguments))
