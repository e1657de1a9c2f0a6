import docopt
import importlib.util
import os
import pytest

import nttkern.common.config as C
import nttkern.driver as driver

MANAGE_PATH = os.path.join(os.path.dirname(__file__), os.pardir, "manage.py")

KNOWN_CASE_ARGV = ['counterexample', '--p', '31', '--n', '6', '--alpha', '0',
                   '--semantics', 'arith']


@pytest.fixture(scope="module")
def manage():
    spec = importlib.util.spec_from_file_location("manage", MANAGE_PATH)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_expect_paper_case_command_line(manage, capsys):
    arguments = docopt.docopt(manage.__doc__,
                              argv=KNOWN_CASE_ARGV + ['--expect-paper-case'])
    assert arguments['counterexample']
    assert arguments['--expect-paper-case']
    assert manage.handle_arguments(arguments) == driver.EXIT_OK
    assert "arithmetic-floor" in capsys.readouterr().out


@pytest.mark.parametrize("flag", ['--expect-paper-case',
                                  '--expect-known-case'])
def test_expect_flags_set_known_case(manage, flag):
    arguments = docopt.docopt(manage.__doc__, argv=KNOWN_CASE_ARGV + [flag])
    cfg = driver.RunConfig.from_arguments(
        arguments, C.Config.load(C.INTEGRATION_CONFIG))
    assert cfg.expect_known_case


def test_known_case_off_by_default(manage):
    arguments = docopt.docopt(manage.__doc__, argv=KNOWN_CASE_ARGV)
    cfg = driver.RunConfig.from_arguments(
        arguments, C.Config.load(C.INTEGRATION_CONFIG))
    assert not cfg.expect_known_case


def test_known_case_other_context_fails(manage, capsys):
    argv = ['counterexample', '--p', '29', '--n', '6', '--alpha', '0',
            '--expect-paper-case', '--config', C.INTEGRATION_CONFIG]
    arguments = docopt.docopt(manage.__doc__, argv=argv)
    assert manage.handle_arguments(arguments) == driver.EXIT_VIOLATION
    capsys.readouterr()


def test_unknown_option_is_rejected(manage):
    with pytest.raises(docopt.DocoptExit):
        docopt.docopt(manage.__doc__, argv=KNOWN_CASE_ARGV + ['--bogus'])
