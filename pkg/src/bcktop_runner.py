import argparse
import logging
import os
import subprocess
import sys
from pathlib import Path
from typing import List

from bcktop_env import ROOT_DIR, corpus_dir, runner_steps, setup_logging

log = logging.getLogger("bcktop.runner")

STEPS = ("verify", "suite", "default")


def run_step(description: str, cmd: List[str]) -> int:
    log.info("=== [%s] start ===", description)
    result = subprocess.run(cmd, cwd=str(ROOT_DIR), env=_child_env(), check=False)
    if result.returncode == 0:
        log.info("=== [%s] done, returncode=%s ===", description, result.returncode)
    else:
        log.error("Step '%s' failed with returncode=%s", description, result.returncode)
    return result.returncode


def _child_env() -> dict:
    env = dict(os.environ)
    src = str(ROOT_DIR / "src")
    env["PYTHONPATH"] = src + (os.pathsep + env["PYTHONPATH"] if env.get("PYTHONPATH") else "")
    return env


def corpus_files(directory: Path) -> List[Path]:
    return sorted(directory.glob("*.bck"))


def main() -> int:
    setup_logging()

    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--steps",
        default=runner_steps(),
        help="Comma-separated steps: verify,suite,default (default = suite по встроенному корпусу)",
    )
    parser.add_argument("--corpus", default=None, help="Directory with *.bck files (BCKTOP_CORPUS_DIR)")
    args = parser.parse_args()

    steps = [s.strip().lower() for s in str(args.steps).split(",") if s.strip()]
    unknown = [s for s in steps if s not in STEPS]
    if unknown:
        parser.error(f"unknown steps: {', '.join(unknown)}; available: {', '.join(STEPS)}")

    directory = Path(args.corpus).expanduser().resolve() if args.corpus else corpus_dir()
    files = corpus_files(directory)
    if not files and ("verify" in steps or "suite" in steps):
        log.warning("no *.bck files in %s", directory)

    python_bin = sys.executable
    failures = 0

    # ---- structural validation + [check] blocks ----
    if "verify" in steps:
        for f in files:
            failures += run_step(f"verify {f.name}", [python_bin, "-m", "bcktop_cli", "verify", str(f)]) != 0

    # ---- all claims on every file ----
    if "suite" in steps:
        for f in files:
            failures += run_step(f"suite {f.name}", [python_bin, "-m", "bcktop_cli", "suite", str(f)]) != 0

    # ---- built-in corpus M1/M2/M4/K4/S2 ----
    if "default" in steps:
        failures += run_step("suite default corpus", [python_bin, "-m", "bcktop_cli", "suite"]) != 0

    log.info("runner finished: %d step(s) failed", failures)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
