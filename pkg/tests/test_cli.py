from __future__ import annotations

import json
import subprocess
import sys

import pytest

from briggs.bounds import BoundPair
from briggs.cli import main
from briggs.inequalities import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_partition_range(capsys):
    code, out, _ = run(capsys, "verify", "--kind", "p", "--ineq", "strong-briggs", "--lo", "114", "--hi", "1520")
    assert code == 0
    rep = VerificationReport.from_json(json.loads(out))
    assert rep.ok and rep.lo == 114 and rep.hi == 1520


def test_verify_overpartition_range(capsys):
    code, _, _ = run(capsys, "verify", "--kind", "op", "--ineq", "strong-briggs", "--lo", "18", "--hi", "821")
    assert code == 0


def test_verify_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "--kind", "p", "--ineq", "strong-briggs", "--lo", "1", "--hi", "113")
    assert code == 1
    failures = json.loads(out)["failures"]
    assert failures and failures[-1] == "113"


@pytest.mark.parametrize("argv", [
    ["verify", "--kind", "q", "--lo", "1", "--hi", "5"],
    ["verify", "--kind", "p", "--lo", "9", "--hi", "5"],
    ["verify", "--kind", "p1", "--lo", "1", "--hi", "5"],
    ["conjecture", "--k-hi", "101"],
    ["conjecture", "--hi", "1001"],
    ["bounds", "--kind", "p", "--n", "100"],
    ["compute", "--kind", "p", "--hi", "10", "--precision", "4"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--kind", "p"])
    assert exc.value.code == 2


def test_conjecture_single_point(capsys):
    code, out, _ = run(capsys, "conjecture", "--k-lo", "2", "--k-hi", "2", "--p-lo", "220", "--op-lo", "220",
                       "--hi", "220")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert [r["failures"] for r in data["rows"]] == [[], []]


def test_conjecture_finds_counterexamples_below_range(capsys):
    code, out, _ = run(capsys, "conjecture", "--k-lo", "3", "--k-hi", "3", "--p-lo", "200", "--hi", "300")
    assert code == 1
    rows = json.loads(out)["rows"]
    assert rows[0]["failures"][-1] == "219"


def test_compute_csv(capsys, tmp_path):
    target = tmp_path / "p.csv"
    code, _, _ = run(capsys, "compute", "--kind", "op", "--hi", "5", "--format", "csv", "--out", str(target))
    assert code == 0
    assert target.read_text().splitlines() == ["n,value", "0,1", "1,2", "2,4", "3,8", "4,14", "5,24"]


def test_bounds_rows(capsys):
    code, out, _ = run(capsys, "bounds", "--kind", "p6", "--n", "677", "--n", "777")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == ["677", "777"]
    assert all(r["inside"] is True and r["source"] == "chern" for r in rows)
    assert set(rows[0]) == {"kind", "k", "n", "lower", "upper", "exact", "inside", "source"}
    assert BoundPair.from_row(rows[0]).n == 677


def test_bounds_random_samples_are_seeded(capsys):
    _, a, _ = run(capsys, "bounds", "--kind", "op", "--random", "3", "--seed", "5")
    _, b, _ = run(capsys, "bounds", "--kind", "op", "--random", "3", "--seed", "5")
    assert [r["n"] for r in json.loads(a)] == [r["n"] for r in json.loads(b)]


def test_bounds_prefactor_variants(capsys):
    code_table, _, _ = run(capsys, "bounds", "--kind", "op6", "--n", "2055")
    code_derived, out, _ = run(capsys, "bounds", "--kind", "op6", "--n", "2055", "--prefactor", "derived")
    assert code_derived == 0 and json.loads(out)[0]["inside"] is True
    assert code_table == 1


def test_bounds_table_export(capsys):
    code, out, _ = run(capsys, "bounds", "--table", "2")
    assert code == 0 and out.startswith("k,")


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--target", "Jtilde")
    data = json.loads(out)
    assert code == 0 and data["status"] == "proven" and data["target"] == "Jtilde"
    assert data["pi_precision"] == "256" and data["ray_start"] == "5"


def test_certify_undecided_exit_code(capsys):
    code, out, _ = run(capsys, "certify", "--target", "Jtilde", "--ray", "1", "--precision", "64")
    assert code == 3
    assert json.loads(out)["status"] == "undecided"


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--hi", "300")
    data = json.loads(out)
    assert code == 0
    rows = {r["sequence"]: r for r in data["thresholds"]}
    assert rows["p"]["strong_briggs_from"] == "114"
    assert rows["op6"]["strong_briggs_from"] == "10"
    assert data["desk"]["admissible_up_to"] == "24"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "briggs.cli", "verify", "--kind", "p6", "--lo", "60", "--hi", "678"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
