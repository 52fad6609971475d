import logging

from bcktop_env import corpus_dir, max_carrier, max_hom_source, runner_steps, setup_logging, suite_workers


def test_limits_have_defaults(monkeypatch):
    for name in ("BCKTOP_MAX_CARRIER", "BCKTOP_MAX_HOM_SOURCE", "BCKTOP_SUITE_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    assert max_carrier() == 16
    assert max_hom_source() == 8
    assert suite_workers() == 1


def test_limits_are_clamped(monkeypatch):
    monkeypatch.setenv("BCKTOP_MAX_CARRIER", "100")
    assert max_carrier() == 24
    monkeypatch.setenv("BCKTOP_MAX_CARRIER", "0")
    assert max_carrier() == 1
    monkeypatch.setenv("BCKTOP_MAX_CARRIER", "lots")
    assert max_carrier() == 16


def test_corpus_dir_override(monkeypatch, tmp_path):
    monkeypatch.setenv("BCKTOP_CORPUS_DIR", str(tmp_path))
    assert corpus_dir() == tmp_path.resolve()
    monkeypatch.delenv("BCKTOP_CORPUS_DIR")
    assert corpus_dir().name == "corpus"


def test_runner_steps(monkeypatch):
    monkeypatch.delenv("BCKTOP_RUNNER_STEPS", raising=False)
    assert runner_steps() == "verify,suite"
    monkeypatch.setenv("BCKTOP_RUNNER_STEPS", "default")
    assert runner_steps() == "default"


def test_setup_logging_accepts_unknown_level(monkeypatch):
    monkeypatch.setenv("BCKTOP_LOG_LEVEL", "chatty")
    setup_logging()
    assert logging.getLogger("bcktop").getEffectiveLevel() <= logging.WARNING
