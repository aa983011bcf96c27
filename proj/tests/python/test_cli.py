import json
import os
import subprocess

import pytest

CLI = os.environ.get("BMKIT_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="BMKIT_CLI not set")


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged)


def test_table_tsv_is_byte_exact():
    result = run("table", "--m", "2", "--kind", "d", "--format", "tsv")
    assert result.returncode == 0
    assert result.stdout == "0\t21/8\n1\t15/4\n2\t3/2\n"

    trivial = run("table", "--m", "0", "--kind", "d")
    assert trivial.returncode == 0
    assert trivial.stdout == "0\t1\n"


def test_table_json_is_byte_exact():
    result = run("table", "--m", "1", "--kind", "D", "--format", "json")
    assert result.returncode == 0
    assert result.stdout == '{"m":1,"kind":"D","values":["3","2"]}\n'


def test_table_range_blocks():
    result = run("table", "--m", "1..2", "--kind", "d")
    assert result.returncode == 0
    assert result.stdout == (
        "# m=1 kind=d\n0\t3/2\n1\t1\n"
        "# m=2 kind=d\n0\t21/8\n1\t15/4\n2\t3/2\n"
    )

    as_json = run("table", "--m", "1..2", "--kind", "d", "--format", "json")
    parsed = json.loads(as_json.stdout)
    assert [t["m"] for t in parsed] == [1, 2]
    assert parsed[1]["values"] == ["21/8", "15/4", "3/2"]


def test_verify_sweeps_pass():
    sweep = run("verify", "--m", "2..30", "--checks",
                "recurrence,logconcavity,unimodality")
    assert sweep.returncode == 0

    a1 = run("verify", "--m", "0..60", "--checks", "a1")
    assert a1.returncode == 0

    ineq = run("verify", "--m", "2..2", "--checks", "section4")
    assert ineq.returncode == 0
    assert "12096" in ineq.stdout
    assert "21600" in ineq.stdout


def test_verify_json_round_trips():
    result = run("verify", "--m", "2..2", "--format", "json")
    assert result.returncode == 0
    rows = json.loads(result.stdout)
    assert all(row["pass"] for row in rows)
    margins = [row for row in rows if row["check"] == "logconcavity"]
    assert margins and margins[0]["observed"] == "81/8"


def test_verify_rejects_unknown_check():
    result = run("verify", "--m", "2", "--checks", "nonsense")
    assert result.returncode == 2
    assert "nonsense" in result.stderr


def test_oracle_reports_family_weights():
    result = run("oracle", "--m", "1")
    assert result.returncode == 0
    rows = [line.split("\t") for line in result.stdout.splitlines()]
    d_weights = [row for row in rows if row[0] == "D-weight"]
    assert ["D-weight", "1", "0", "3", "3", "pass"] in d_weights
    assert ["D-weight", "1", "1", "2", "2", "pass"] in d_weights


def test_oracle_enforces_the_enumeration_bound():
    result = run("oracle", "--m", "9")
    assert result.returncode == 2
    assert "bound" in result.stderr

    raised = run("oracle", "--m", "3", env={"BMKIT_ORACLE_MAX_M": "3"})
    assert raised.returncode == 0


def test_integral_anchors():
    result = run("integral", "--m", "0", "--a", "1", "--tol", "1e-8")
    assert result.returncode == 0
    assert "0.785398163" in result.stdout

    second = run("integral", "--m", "1", "--a", "1", "--tol", "1e-8")
    assert second.returncode == 0
    assert "0.490873852" in second.stdout


def test_integral_domain_guard():
    result = run("integral", "--m", "0", "--a", "-1.5")
    assert result.returncode == 2
    assert result.stdout == ""


def test_missing_arguments_exit_2():
    assert run("table").returncode == 2
    assert run("nonsense").returncode == 2
    assert run().returncode == 2


def test_identical_invocations_are_byte_identical():
    first = run("verify", "--m", "2..10", "--format", "json")
    second = run("verify", "--m", "2..10", "--format", "json")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0
