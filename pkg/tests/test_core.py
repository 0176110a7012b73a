"""
Tests for settings, logging, errors and orderings.
"""

import json

import pytest
import structlog

from fungraph.config import Settings
from fungraph.core import CodeParseError
from fungraph.core import FungraphError
from fungraph.core import InvalidCodeError
from fungraph.core import OracleGuardError
from fungraph.core import Ordering
from fungraph.core import compare
from fungraph.core import setup_logging


def test_settings_defaults():
    defaults = Settings()
    assert defaults.DEBUG is False
    assert defaults.ORACLE_MAX_N == 8
    assert defaults.BENCH_SLOPE_BOUND == 3.5


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("FDG_DEBUG", "true")
    monkeypatch.setenv("FDG_ORACLE_WORKERS", "4")
    configured = Settings()
    assert configured.DEBUG is True
    assert configured.ORACLE_WORKERS == 4


def test_compare():
    assert compare(1, 2) is Ordering.LT
    assert compare((2, 1), (2, 1)) is Ordering.EQ
    assert compare((3,), (2, 1)) is Ordering.GT
    assert compare((1,), (1, 1)) is Ordering.LT


def test_error_hierarchy():
    assert issubclass(OracleGuardError, InvalidCodeError)
    assert issubclass(CodeParseError, FungraphError)
    assert issubclass(InvalidCodeError, ValueError)


def test_code_parse_error_line():
    assert str(CodeParseError("bad", line=3)) == "line 3: bad"
    assert CodeParseError("bad").line is None


def test_logs_go_to_stderr(capsys):
    setup_logging("INFO")
    structlog.get_logger("fungraph.test").info("Timed size", n=4)
    captured = capsys.readouterr()
    assert captured.out == ""
    record = json.loads(captured.err.strip().splitlines()[-1])
    assert record["event"] == "Timed size"
    assert record["n"] == 4
    assert record["level"] == "info"


@pytest.mark.parametrize("level", ["WARNING", "bogus"])
def test_info_is_filtered_above_info(capsys, level):
    setup_logging(level)
    structlog.get_logger("fungraph.test").info("Timed size", n=4)
    assert capsys.readouterr().err == ""
