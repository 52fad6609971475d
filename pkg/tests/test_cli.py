import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from bcktop_cli.loader import load_instance
from bcktop_cli.main import corpus_names, reachable_instances
from bcktop_errors import format_set

ROOT_DIR = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT_DIR / "corpus"


def _lines(result):
    return result.stdout.splitlines()


# =====================
# verify
# =====================
def test_verify_m4(run_cli):
    r = run_cli(["verify", CORPUS_DIR / "m4.bck"])
    assert r.returncode == 0, r.stderr
    out = _lines(r)
    assert out[0] == "algebra: size=2 bounded=true commutative=true implicative=true"
    assert out[1] == "module: size=4"
    assert "submodule H: {0,2}" in out
    assert "dss A: [{0,1,2,3}|{0,2}]" in out
    assert "hom p: m4 -> m2 (0,1,0,1)" in out
    assert "check p-strict: strict expect=true ok" in out
    assert out[-1] == "valid"


@pytest.mark.parametrize("name", ["m1", "m2", "m4", "k4", "s2", "z3"])
def test_verify_every_corpus_file(run_cli, name):
    r = run_cli(["verify", CORPUS_DIR / f"{name}.bck"])
    assert r.returncode == 0, r.stdout + r.stderr
    assert _lines(r)[-1] == "valid"


def test_verify_reports_failed_check(run_cli, tmp_path):
    text = (CORPUS_DIR / "m2.bck").read_text(encoding="utf-8").replace(
        "claim = strict\nhom = g\nsource_dss = A\ntarget_dss = W\nexpect = false",
        "claim = strict\nhom = g\nsource_dss = A\ntarget_dss = W\nexpect = true",
    )
    shutil.copy(CORPUS_DIR / "m4.bck", tmp_path / "m4.bck")
    (tmp_path / "m2.bck").write_text(text, encoding="utf-8")
    r = run_cli(["verify", tmp_path / "m2.bck"])
    assert r.returncode == 1
    assert "check g-strict: strict expect=true FAILED witness=n=2 f(M_2)={0} f(M)∩M'_2={0,2}" in _lines(r)
    assert _lines(r)[-1] == "valid, 1 check(s) failed"


def test_verify_parse_error_exits_2(run_cli, tmp_path):
    bad = tmp_path / "bad.bck"
    bad.write_text("[algebra]\nsize = 2\nstar =\n0 0\n1 2\n", encoding="utf-8")
    r = run_cli(["verify", bad])
    assert r.returncode == 2
    assert "error: line 5, column 3: value 2 is out of range 0..1" in r.stderr
    assert r.stdout == ""


def test_missing_file_exits_2(run_cli):
    r = run_cli(["verify", "no-such-file.bck"])
    assert r.returncode == 2
    assert "instance file not found" in r.stderr


def test_invalid_utf8_is_a_parse_error(run_cli, tmp_path):
    bad = tmp_path / "latin.bck"
    bad.write_bytes(b"[algebra]\nchain = 2\n# \xff\xfe bad\n")
    r = run_cli(["verify", bad])
    assert r.returncode == 2
    assert "error: line 3, column 3: invalid UTF-8 byte 0xff" in r.stderr
    assert "Traceback" not in r.stderr


# =====================
# topology
# =====================
def test_topology_list_opens(run_cli):
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "A", "--list-opens"])
    assert r.returncode == 0
    assert r.stdout == "{}\n{0,2}\n{1,3}\n{0,1,2,3}\n"


def test_topology_default_mode_is_list_opens(run_cli):
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "W"])
    assert r.stdout == "{}\n{0,1,2,3}\n"


def test_topology_base_and_connected(run_cli):
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "A", "--base"])
    assert r.stdout == "{0,2}\n{1,3}\n{0,1,2,3}\n"
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "A", "--connected"])
    assert r.stdout == "connected=false\n"


def test_topology_unknown_dss(run_cli):
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "Z"])
    assert r.returncode == 2
    assert "unknown dss 'Z'; available: A, W" in r.stderr


def test_topology_carrier_cap(run_cli, cli_env):
    env = dict(cli_env, BCKTOP_MAX_CARRIER="2")
    r = run_cli(["topology", CORPUS_DIR / "m4.bck", "--dss", "A"], env=env)
    assert r.returncode == 2
    assert "limit is 2" in r.stderr


def _nums(xs) -> str:
    return " ".join(str(x) for x in xs)


def _z32_file(tmp_path):
    path = tmp_path / "z32.bck"
    path.write_text(
        "[algebra]\nchain = 2\n\n[group]\ncyclic 32\n\n"
        f"[action]\n{_nums([0] * 32)}\n{_nums(range(32))}\n\n"
        f"[submodule E]\nelements = {_nums(range(0, 32, 2))}\n\n"
        "[dss D]\nchain = M E\n\n"
        f"[hom double]\nmap = {_nums(2 * m % 32 for m in range(32))}\n",
        encoding="utf-8",
    )
    return path


def test_base_queries_above_the_carrier_cap(run_cli, tmp_path):
    z32 = _z32_file(tmp_path)
    r = run_cli(["topology", z32, "--dss", "D", "--base"])
    assert r.returncode == 0, r.stderr
    assert _lines(r) == [format_set(range(0, 32, 2)), format_set(range(1, 32, 2)), format_set(range(32))]

    r = run_cli(["check-map", z32, "--hom", "double", "--source-dss", "D", "--target-dss", "D"])
    assert r.returncode == 1
    assert _lines(r) == [
        "compatible=true",
        f"strict=false witness=n=2 f(M_2)={format_set(range(0, 32, 4))} f(M)∩M'_2={format_set(range(0, 32, 2))}",
    ]

    r = run_cli(["topology", z32, "--dss", "D", "--list-opens"])
    assert r.returncode == 2
    assert "limit is 16" in r.stderr


# =====================
# check-map
# =====================
def test_check_map_embedding_not_strict(run_cli):
    r = run_cli(
        ["check-map", CORPUS_DIR / "m2.bck", "--hom", "g", "--source-dss", "A", "--target-dss", "W", "--props", "strict"]
    )
    assert r.returncode == 1
    assert r.stdout == "strict=false witness=n=2 f(M_2)={0} f(M)∩M'_2={0,2}\n"


def test_check_map_default_props(run_cli):
    r = run_cli(["check-map", CORPUS_DIR / "m4.bck", "--hom", "p", "--source-dss", "A", "--target-dss", "A"])
    assert r.returncode == 0
    assert r.stdout == "compatible=true\nstrict=true\n"


def test_check_map_all_props(run_cli):
    r = run_cli(
        [
            "check-map", CORPUS_DIR / "k4.bck", "--hom", "swap", "--source-dss", "A", "--target-dss", "A",
            "--props", "compatible,continuous,homeo",
        ]
    )
    assert r.returncode == 1
    assert _lines(r) == [
        "compatible=false witness=n=2 f(M_2)={0,2} M'_2={0,1}",
        "continuous=false witness=f^-1({0,1})={0,2} is not open",
        "homeo=false witness=f^-1({0,1})={0,2} is not open",
    ]


def test_check_map_unknown_prop(run_cli):
    r = run_cli(["check-map", CORPUS_DIR / "m4.bck", "--hom", "p", "--source-dss", "A", "--target-dss", "A", "--props", "shiny"])
    assert r.returncode == 2
    assert "unknown property shiny" in r.stderr


# =====================
# suite
# =====================
def test_suite_on_file(run_cli):
    r = run_cli(["suite", CORPUS_DIR / "m4.bck"])
    assert r.returncode == 0, r.stdout
    out = _lines(r)
    assert out[0].split() == ["claim", "instances", "held", "vacuous", "failed"]
    assert any(line.startswith("check:strict ") for line in out)
    assert out[-1].endswith(", 0 failed")


def test_suite_failure_lists_witness(run_cli, tmp_path):
    text = (CORPUS_DIR / "s2.bck").read_text(encoding="utf-8").replace("expect = false", "expect = true")
    (tmp_path / "s2.bck").write_text(text, encoding="utf-8")
    r = run_cli(["suite", tmp_path / "s2.bck"])
    assert r.returncode == 1
    assert "FAIL check:connected [s2:A-connected]: a proper chain entry is clopen" in _lines(r)


def test_suite_default_corpus(run_cli):
    r = run_cli(["suite", "--max-length", "2"])
    assert r.returncode == 0, r.stdout[-2000:]
    assert "strict-not-open" in r.stdout


@pytest.mark.parametrize("command", [["suite"], ["enumerate", CORPUS_DIR / "m2.bck", "--what", "dss"]])
def test_max_length_below_one_is_rejected(run_cli, command):
    r = run_cli([*command, "--max-length", "0"])
    assert r.returncode == 2
    assert "chain length must be at least 1" in r.stderr


def test_suite_keeps_same_named_files_apart(run_cli, tmp_path):
    for sub, order in (("a", 2), ("b", 4)):
        (tmp_path / sub).mkdir()
        (tmp_path / sub / "m.bck").write_text(
            f"[algebra]\nchain = 2\n\n[group]\ncyclic {order}\n\n[action]\n{' '.join(['0'] * order)}\n"
            f"{' '.join(str(m) for m in range(order))}\n",
            encoding="utf-8",
        )
    top = tmp_path / "top.bck"
    top.write_text(
        "[algebra]\nchain = 2\n\n[group]\ncyclic 4\n\n[action]\n0 0 0 0\n0 1 2 3\n\n"
        "[hom f]\ntarget = a/m.bck\nmap = 0 1 0 1\n\n"
        "[hom g]\ntarget = b/m.bck\nmap = 0 1 2 3\n",
        encoding="utf-8",
    )
    instances = reachable_instances(load_instance(top))
    names = corpus_names(instances)
    assert sorted(names.values()) == sorted(
        [str((tmp_path / "a" / "m.bck").resolve()), str((tmp_path / "b" / "m.bck").resolve()), "top"]
    )
    assert sorted(i.module.size for i in instances) == [2, 4, 4]

    r = run_cli(["suite", top, "--max-length", "2"])
    assert r.returncode == 0, r.stdout
    assert _lines(r)[-1].endswith(", 0 failed")


# =====================
# enumerate
# =====================
def test_enumerate_submodules(run_cli):
    r = run_cli(["enumerate", CORPUS_DIR / "m4.bck", "--what", "submodules"])
    assert r.stdout == "{0}\n{0,2}\n{0,1,2,3}\n"


def test_enumerate_homs_to_other_file(run_cli):
    r = run_cli(["enumerate", CORPUS_DIR / "m4.bck", "--what", "homs", "--target", CORPUS_DIR / "m2.bck"])
    assert r.stdout == "0 0 0 0\n0 1 0 1\n"


def test_enumerate_dss(run_cli):
    r = run_cli(["enumerate", CORPUS_DIR / "m2.bck", "--what", "dss"])
    assert r.stdout == "[{0,1}]\n[{0,1}|{0}]\n[{0}]\n"


def test_output_is_deterministic(run_cli):
    args = ["enumerate", CORPUS_DIR / "k4.bck", "--what", "homs"]
    assert run_cli(args).stdout == run_cli(args).stdout


# =====================
# runner
# =====================
def test_runner_verifies_a_corpus(tmp_path, cli_env):
    shutil.copy(CORPUS_DIR / "z3.bck", tmp_path / "z3.bck")
    r = subprocess.run(
        [sys.executable, "-m", "bcktop_runner", "--steps", "verify,suite", "--corpus", str(tmp_path)],
        cwd=str(ROOT_DIR),
        env=cli_env,
        capture_output=True,
        text=True,
        encoding="utf-8",
        check=False,
        timeout=600,
    )
    assert r.returncode == 0, r.stderr
