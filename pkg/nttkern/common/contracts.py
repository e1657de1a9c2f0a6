"""Require / Ensure checking for the arithmetic kernels.

Every kernel states its input ranges and output ranges. When checking is
on (the default, and always under the test-suite) a violated Require clause
raises PreconditionError and a violated Ensure clause raises
PostconditionError. Timed benchmark loops switch checking off with
`disabled()` so the kernels run bare.

Kernels test the module attribute directly:

    if contracts.CHECK:
        contracts.require(0 <= T < p * p, "T={} outside [0, p^2)", T)
"""
import contextlib
import logging

logger = logging.getLogger(__name__)

CHECK = True


class ContractError(ValueError):
    pass


class PreconditionError(ContractError):
    pass


class PostconditionError(ContractError):
    pass


def set_enabled(flag):
    global CHECK
    CHECK = bool(flag)
    return CHECK


def configure(config):
    """Apply the `contracts/enabled` switch from a Config."""
    return set_enabled(config.get("contracts/enabled", True))


@contextlib.contextmanager
def disabled():
    previous = CHECK
    set_enabled(False)
    try:
        yield
    finally:
        set_enabled(previous)


@contextlib.contextmanager
def enforced():
    previous = CHECK
    set_enabled(True)
    try:
        yield
    finally:
        set_enabled(previous)


def require(condition, message, *args):
    if not condition:
        raise PreconditionError(message.format(*args))


def ensure(condition, message, *args):
    if not condition:
        raise PostconditionError(message.format(*args))
