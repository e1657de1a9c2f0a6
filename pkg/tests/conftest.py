import os
import pytest

import nttkern.arith.reductions as R
import nttkern.common.config as C
import nttkern.common.contracts as contracts
import nttkern.ntt.params as P


@pytest.fixture(scope="session", autouse=True)
def checked_contracts():
    with contracts.enforced():
        yield


@pytest.fixture(scope="session", autouse=True)
def no_seed_env():
    saved = os.environ.pop(C.SEED_ENV_VAR, None)
    yield
    if saved is not None:
        os.environ[C.SEED_ENV_VAR] = saved


@pytest.fixture(scope="module")
def integration_config():
    return C.Config.load(C.INTEGRATION_CONFIG)


@pytest.fixture(scope="module")
def toy_ctx():
    """p=13 at n=8 with ell=2, the smallest improved-butterfly setting."""
    return R.ReductionContext(13, 8, ell=2)


@pytest.fixture(scope="module")
def analysis_ctx():
    return R.ReductionContext(31, 6, alpha=0)


@pytest.fixture(scope="module")
def toy13():
    return P.preset("toy13")


@pytest.fixture(scope="module")
def kyber():
    return P.preset("kyber256")
