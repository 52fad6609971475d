# file: src/bcktop_env.py
import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

ROOT_DIR = Path(__file__).resolve().parent.parent

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


# =====================
# env helpers
# =====================
def _env(name: str, default: str = "") -> str:
    v = os.getenv(name)
    return str(v).strip() if v is not None else default


def _env_int(name: str, default: int, lo: Optional[int] = None, hi: Optional[int] = None) -> int:
    try:
        v = int(os.getenv(name, str(default)))
    except Exception:
        v = default
    if lo is not None:
        v = max(lo, v)
    if hi is not None:
        v = min(hi, v)
    return v


# =====================
# limits (read at call time, tests monkeypatch env)
# =====================
def max_carrier() -> int:
    # 2^16 подмножеств - ещё терпимо на ноутбуке
    return _env_int("BCKTOP_MAX_CARRIER", 16, 1, 24)


def max_product() -> int:
    return _env_int("BCKTOP_MAX_PRODUCT", 64, 1, 4096)


def max_hom_source() -> int:
    return _env_int("BCKTOP_MAX_HOM_SOURCE", 8, 1, 12)


def suite_workers() -> int:
    return _env_int("BCKTOP_SUITE_WORKERS", 1, 1, 16)


def corpus_dir() -> Path:
    raw = _env("BCKTOP_CORPUS_DIR")
    if raw:
        return Path(raw).expanduser().resolve()
    return ROOT_DIR / "corpus"


def runner_steps() -> str:
    return _env("BCKTOP_RUNNER_STEPS", "verify,suite") or "verify,suite"


def setup_logging() -> None:
    level = (_env("BCKTOP_LOG_LEVEL", "INFO") or "INFO").upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format=LOG_FORMAT)
