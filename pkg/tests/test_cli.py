import json
import os
import shutil
import subprocess
import sys

import pytest


@pytest.fixture(scope="module")
def cache_dir(tmp_path_factory):
    return str(tmp_path_factory.mktemp("cache"))


def run_cli(args, cache_dir, **kwargs):
    env = dict(os.environ, SYMCOVER_CACHE_DIR=cache_dir)
    return subprocess.run(
        [sys.executable, "-m", "symcover", *args],
        capture_output=True,
        text=True,
        env=env,
        **kwargs,
    )


def test_table_csv_s3(cache_dir):
    out = run_cli(["table", "--n", "3", "--format", "csv"], cache_dir)
    assert out.returncode == 0
    assert out.stdout.splitlines() == [
        'partition,3,"2,1","1,1,1"',
        "3,1,1,1",
        '"2,1",-1,0,2',
        '"1,1,1",1,-1,1',
    ]


def test_table_n1(cache_dir):
    out = run_cli(["table", "--n", "1"], cache_dir)
    assert out.returncode == 0
    assert "1" in out.stdout


def test_usage_errors(cache_dir):
    assert run_cli(["table", "--n", "0"], cache_dir).returncode == 2
    assert run_cli(["table", "--n", "21"], cache_dir).returncode == 2
    assert run_cli(["table"], cache_dir).returncode == 2
    assert run_cli(["power", "--n", "5", "--lambda", "3,3", "--k", "1"], cache_dir).returncode == 2
    assert run_cli(["power", "--n", "5", "--lambda", "2,3", "--k", "1"], cache_dir).returncode == 2
    assert run_cli(["cover", "--n", "5", "--bogus"], cache_dir).returncode == 2
    assert run_cli(["frobnicate"], cache_dir).returncode == 2
    assert run_cli(["verify", "theta-move"], cache_dir).returncode == 2  # missing --n


def test_power_json(cache_dir):
    out = run_cli(
        ["power", "--n", "10", "--lambda", "6,2,2", "--k", "2", "--format", "json"],
        cache_dir,
    )
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["n"] == 10
    assert data["mult"]["8,2"] == "3"
    assert data["mult"]["5,3,1,1"] == "10"


def test_power_support_only(cache_dir):
    out = run_cli(
        ["power", "--n", "5", "--lambda", "4,1", "--k", "3", "--support-only"], cache_dir
    )
    lines = out.stdout.splitlines()
    assert "1,1,1,1,1" not in lines
    assert "4,1" in lines
    out = run_cli(
        ["power", "--n", "5", "--lambda", "5", "--k", "7", "--support-only"], cache_dir
    )
    assert out.stdout.splitlines() == ["5"]


def test_kron_agrees_with_power(cache_dir):
    a = run_cli(
        ["kron", "--n", "6", "--lambda", "4,2", "--mu", "4,2", "--format", "json"],
        cache_dir,
    )
    b = run_cli(
        ["power", "--n", "6", "--lambda", "4,2", "--k", "2", "--format", "json"],
        cache_dir,
    )
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_cover_deterministic_across_threads(cache_dir):
    runs = [
        run_cli(["cover", "--n", "6", "--format", "json", "--threads", t], cache_dir)
        for t in ("1", "auto", "3")
    ]
    assert all(r.returncode == 0 for r in runs)
    assert len({r.stdout for r in runs}) == 1
    data = json.loads(runs[0].stdout)
    assert data["e_max"] == 5 and data["d_max"] == 5


def test_cover_single_character(cache_dir):
    out = run_cli(["cover", "--n", "4", "--lambda", "2,2", "--format", "json"], cache_dir)
    rec = json.loads(out.stdout)["characters"][0]
    assert rec["e"] == "none" and rec["d"] == "none"
    assert rec["faithful"] is False


def test_verify_pass_and_output(cache_dir):
    out = run_cli(["verify", "theorem1", "--n", "5"], cache_dir)
    assert out.returncode == 0
    assert out.stdout.startswith("PASS theorem1 n=5")
    out = run_cli(["verify", "table1", "--format", "json"], cache_dir)
    assert out.returncode == 0
    assert json.loads(out.stdout)["passed"] is True


def test_verify_rejects_bad_range(cache_dir):
    assert run_cli(["verify", "theorem1", "--n", "4"], cache_dir).returncode == 2
    assert run_cli(["verify", "theorem1", "--n", "8..5"], cache_dir).returncode == 2
    assert run_cli(["verify", "rectangle", "--n", "6"], cache_dir).returncode == 2


def test_generic_dihedral(cache_dir):
    out = run_cli(["generic", "--dihedral", "7"], cache_dir)
    assert out.returncode == 0
    assert "e_max = 6" in out.stdout
    assert "d_max = 3" in out.stdout
    assert run_cli(["generic", "--dihedral", "4"], cache_dir).returncode == 2


def test_generic_from_file(cache_dir, tmp_path):
    from symcover.generic import dihedral_table

    path = tmp_path / "d14.json"
    path.write_text(json.dumps(dihedral_table(7).to_json_dict()))
    out = run_cli(["generic", "--table", str(path), "--format", "json"], cache_dir)
    assert out.returncode == 0
    assert json.loads(out.stdout)["e_max"] == 6

    path.write_text("{not json")
    assert run_cli(["generic", "--table", str(path)], cache_dir).returncode == 2
    assert run_cli(["generic", "--table", str(tmp_path / "nope.json")], cache_dir).returncode == 2


def test_generic_certification_failure_exits_1(cache_dir, tmp_path):
    from symcover.generic import dihedral_table

    data = dihedral_table(3).to_json_dict()
    data["irreducibles"][2]["values"][1] = [1.25, 0]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    out = run_cli(["generic", "--table", str(path)], cache_dir)
    assert out.returncode == 1
    assert "orthonormal" in out.stderr


def test_cache_lifecycle(tmp_path):
    cache = str(tmp_path / "c")
    first = run_cli(["table", "--n", "6"], cache)
    assert first.returncode == 0
    path = os.path.join(cache, "sn", "6.tbl")
    assert os.path.exists(path)

    second = run_cli(["table", "--n", "6"], cache)
    assert second.stdout == first.stdout
    assert second.stderr == ""

    # corrupt the file: the CLI must warn, recompute and repair
    with open(path) as fh:
        content = fh.read()
    with open(path, "w") as fh:
        fh.write(content[:-10] + "0123456789")
    third = run_cli(["table", "--n", "6"], cache)
    assert third.returncode == 0
    assert third.stdout == first.stdout
    assert "recomputing" in third.stderr
    fourth = run_cli(["table", "--n", "6"], cache)
    assert fourth.stderr == ""


def test_unwritable_cache_is_environment_error(tmp_path):
    blocker = tmp_path / "blocked"
    blocker.write_text("")
    out = run_cli(["table", "--n", "4"], str(blocker))
    assert out.returncode == 3


def test_console_script_installed(cache_dir):
    exe = shutil.which("symcover")
    assert exe, "console script should be on PATH after install"
    env = dict(os.environ, SYMCOVER_CACHE_DIR=cache_dir)
    out = subprocess.run(
        [exe, "cover", "--n", "5", "--lambda", "4,1", "--format", "csv"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.returncode == 0
    assert out.stdout.splitlines()[1].startswith('"4,1",4,4,4')
