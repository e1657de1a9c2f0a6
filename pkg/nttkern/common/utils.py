import logging
import numpy as np
import platform
import sys
import time

import colorama

COLOR_MAP = {
    "yellow": colorama.Fore.YELLOW,
    "red": colorama.Fore.RED,
    "green": colorama.Fore.GREEN,
    "blue": colorama.Fore.BLUE,
    "magenta": colorama.Fore.MAGENTA,
    "cyan": colorama.Fore.CYAN,
    "white": colorama.Fore.WHITE
}

logger = logging.getLogger(__name__)


def is_power_of_two(value):
    return value >= 1 and (value & (value - 1)) == 0


def ilog2(value):
    """Exact base-2 logarithm of a power of two."""
    if not is_power_of_two(value):
        raise ValueError("{} is not a power of two".format(value))
    return value.bit_length() - 1


def random_state(seed):
    """Seeded numpy RandomState; every random input in the package
    comes from one of these."""
    return np.random.RandomState(seed % (2 ** 32))


def random_residues(rng, low, high, size):
    """Draw `size` integers uniformly from [low, high) as Python ints.

    Bounds may exceed the int64 range of numpy's generator, in which
    case the draw is assembled from 30-bit limbs.
    """
    span = high - low
    if span <= 0:
        raise ValueError("Empty range [{}, {})".format(low, high))
    if span < 2 ** 62:
        return [low + int(x) for x in
                rng.randint(0, span, size=size, dtype=np.int64)]

    limbs = (span.bit_length() + 29) // 30 + 1
    values = []
    for _ in range(size):
        acc = 0
        for limb in rng.randint(0, 2 ** 30, size=limbs, dtype=np.int64):
            acc = (acc << 30) | int(limb)
        values.append(low + acc % span)
    return values


def colored(text, color="yellow"):
    """Color terminal text

    Parameters
    ----------
    text : str
        Text to color.
    color : string
        Name of color to print

    Returns
    ------
    colored_text : str
        String of colored text.
    """
    return "{0}{1}{2}".format(
            COLOR_MAP[color], text,
            colorama.Style.RESET_ALL)


def result_colored(result):
    "Returns green Success if result, else returns red Failed"
    if result:
        return colored("Success", "green")
    else:
        return colored("Failed", "red")


def machine_descriptor():
    """One line describing the host, recorded with every timing."""
    return "{} | {} | {} {} | {}".format(
        platform.platform(), platform.processor() or platform.machine(),
        platform.python_implementation(), platform.python_version(),
        platform.python_compiler())


def build_options():
    """Interpreter build flags; benchmark reports record these in place
    of compiler flags."""
    return {
        "implementation": platform.python_implementation(),
        "version": sys.version.split()[0],
        "compiler": platform.python_compiler(),
        "build": " ".join(platform.python_build()),
        "numpy": np.__version__,
    }


class TimerHolder(object):
    """Named monotonic timers.

    Durations are reported in microseconds from time.perf_counter_ns.
    """
    def __init__(self):
        self.timers = {}

    def start(self, key):
        """
        Note: tuples can be keys.

        Parameters
        ----------
        key : str or tuple
        """
        self.timers[key] = [time.perf_counter_ns(), None]

    def end(self, key):
        """Stop a timer and return its duration in microseconds."""
        self.timers[key][1] = time.perf_counter_ns()
        return self.get(key)

    def get(self, key):
        if key not in self.timers:
            return None
        start, end = self.timers[key]
        if end is None:
            return None
        return (end - start) / 1000.0
