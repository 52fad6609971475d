import os
import subprocess
import sys
from pathlib import Path

import pytest

from algebra_core.algebra import chain_algebra
from baig_topology.dss import make_dss
from module_core.groups import cyclic_group, klein_group, trivial_group
from module_core.modules import scalar_module_over_C2, self_module

ROOT_DIR = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT_DIR / "corpus"


# =====================
# modules over the 2-chain
# =====================
@pytest.fixture(scope="session")
def c2():
    return chain_algebra(2)


@pytest.fixture(scope="session")
def m1():
    return scalar_module_over_C2(trivial_group())


@pytest.fixture(scope="session")
def m2():
    return scalar_module_over_C2(cyclic_group(2))


@pytest.fixture(scope="session")
def m4():
    return scalar_module_over_C2(cyclic_group(4))


@pytest.fixture(scope="session")
def k4():
    return scalar_module_over_C2(klein_group())


@pytest.fixture(scope="session")
def s2():
    return self_module(chain_algebra(2))


@pytest.fixture(scope="session")
def m4_split(m4):
    """[M4, {0,2}]"""
    return make_dss(m4, [range(4), [0, 2]])


@pytest.fixture(scope="session")
def m4_whole(m4):
    return make_dss(m4, [range(4)])


@pytest.fixture(scope="session")
def m4_discrete(m4):
    return make_dss(m4, [range(4), [0, 2], [0]])


@pytest.fixture(scope="session")
def m2_split(m2):
    """[M2, {0}]"""
    return make_dss(m2, [range(2), [0]])


# =====================
# CLI as a subprocess
# =====================
@pytest.fixture(scope="session")
def cli_env():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(ROOT_DIR / "src")
    env["BCKTOP_LOG_LEVEL"] = "WARNING"
    env["PYTHONIOENCODING"] = "utf-8"
    return env


@pytest.fixture
def run_cli(cli_env):
    def _run(args, cwd=None, env=None):
        return subprocess.run(
            [sys.executable, "-m", "bcktop_cli", *[str(a) for a in args]],
            cwd=str(cwd or ROOT_DIR),
            env=env or cli_env,
            capture_output=True,
            text=True,
            encoding="utf-8",
            check=False,
            timeout=600,
        )

    return _run


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS_DIR
