"""CLI behavior: subcommands, exit codes, JSON/CSV shapes, determinism."""

import csv
import io
import json

from permarith.cli import main
from permarith.rings import Rat


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_single_check(capsys):
    code, out = run_cli(capsys, "verify", "thjk.cong", "--p", "13")
    assert code == 0
    assert "[PASS] thjk.cong p=13" in out


def test_verify_unknown_id(capsys):
    code = main(["verify", "nosuch.id"])
    assert code == 2


def test_usage_errors_exit_2(capsys):
    assert main(["seq", "t"]) == 2          # missing --range
    assert main(["nosuchcmd"]) == 2
    assert main(["seq", "zzz", "--range", "3..5"]) == 2
    assert main(["seq", "t", "--range", "9..3"]) == 2


def test_verify_json_round_trip(capsys):
    code, out = run_cli(capsys, "verify", "thq.qfloor", "--tier", "fast",
                        "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "permarith/1"
    assert doc["command"].startswith("permarith verify")
    assert all(r["status"] == "PASS" for r in doc["results"])
    re_dumped = json.dumps(doc, sort_keys=True)
    assert json.loads(re_dumped) == doc
    assert not any("ms" in r for r in doc["results"])


def test_seq_csv_columns_and_values(capsys):
    code, out = run_cli(capsys, "seq", "t", "--range", "3..9", "--odd",
                        "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "index", "value", "is_integer", "ms"]
    got = {int(r[1]): r[2] for r in rows[1:]}
    assert got == {3: "1", 5: "4", 7: "-34", 9: "90"}
    assert all(r[3] == "True" for r in rows[1:])


def test_seq_half_integer_value(capsys):
    code, out = run_cli(capsys, "seq", "cprime", "--range", "21..21")
    assert code == 0
    assert "1830087/2" in out


def test_seq_skip_row(capsys):
    code, out = run_cli(capsys, "seq", "sprime", "--range", "9..9", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][2] == "SKIP"
    code, out = run_cli(capsys, "seq", "sprime", "--range", "9..9", "--json")
    doc = json.loads(out)
    assert doc["results"][0]["status"] == "SKIP"


def test_seq_json_values_are_exact_strings(capsys):
    code, out = run_cli(capsys, "seq", "cprime", "--range", "3..9", "--odd",
                        "--json")
    doc = json.loads(out)
    values = {r["index"]: r["value"] for r in doc["results"]}
    assert values == {3: "-1", 5: "3", 7: "-8", 9: "75/2"}
    assert Rat(values[9]) == Rat(75, 2)


def test_explore_summary_and_exit(capsys):
    code, out = run_cli(capsys, "explore", "conj.absjk", "--pmax", "13")
    assert code == 0
    assert "consistent" in out
    code, out = run_cli(capsys, "explore", "conj.qdet", "--a", "-2..2",
                        "--nmax", "5")
    assert code == 0
    code = main(["explore", "thq.floor"])
    assert code == 2  # not a conjecture id
    code = main(["explore", "nosuch.conj"])
    assert code == 2


def test_threads_byte_identical(capsys):
    _, out1 = run_cli(capsys, "verify", "lem.gauss", "--tier", "fast",
                      "--json", "--threads", "1")
    _, out8 = run_cli(capsys, "verify", "lem.gauss", "--tier", "fast",
                      "--json", "--threads", "8")
    r1 = json.dumps(json.loads(out1)["results"])
    r8 = json.dumps(json.loads(out8)["results"])
    assert r1 == r8


def test_verify_all_fast_smoke(capsys):
    code, out = run_cli(capsys, "verify", "all", "--tier", "fast",
                        "--threads", "2")
    assert code == 0
    assert "summary:" in out and " 0 fail" in out


def test_selftest(capsys):
    code, out = run_cli(capsys, "selftest")
    assert code == 0
    assert "selftest: all ok" in out


def test_verify_csv(capsys):
    code, out = run_cli(capsys, "verify", "thq.det", "--n", "4", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["id", "params", "status"]
    assert rows[1][0] == "thq.det" and rows[1][2] == "PASS"


def test_strict_flag_gates_conjecture_failures():
    from permarith.cli import _exit_code
    from permarith.verifier import Report
    reports = [Report("conj.fake", {}, "FAIL", kind="conjecture"),
               Report("thq.fake", {}, "PASS", kind="theorem")]
    assert _exit_code(reports, strict=False) == 0
    assert _exit_code(reports, strict=True) == 1
    reports.append(Report("thq.bad", {}, "FAIL", kind="theorem"))
    assert _exit_code(reports, strict=False) == 1


def test_seq_threads_byte_identical(capsys):
    _, out1 = run_cli(capsys, "seq", "s", "--range", "3..13", "--odd",
                      "--json", "--threads", "1")
    _, out4 = run_cli(capsys, "seq", "s", "--range", "3..13", "--odd",
                      "--json", "--threads", "4")
    assert json.loads(out1)["results"] == json.loads(out4)["results"]


def test_verify_explicit_rational_param(capsys):
    code, out = run_cli(capsys, "verify", "thnew.cauchyroot", "--n", "5",
                        "--x", "1/2")
    assert code == 0 and "[PASS]" in out


def test_verify_out_of_domain_param_skips(capsys):
    code, out = run_cli(capsys, "verify", "thq.floor", "--n", "0")
    assert code == 0
    assert "[SKIP]" in out and "out of domain" in out


def test_explore_never_gates_without_strict(capsys, monkeypatch):
    import permarith.verifier as verifier

    real = verifier.bernoulli
    monkeypatch.setattr(verifier, "bernoulli", lambda k: real(k) + 1)
    code, out = run_cli(capsys, "explore", "conj.bernoulli", "--nmax", "4")
    assert code == 0 and "[FAIL]" in out
    code, _ = run_cli(capsys, "explore", "conj.bernoulli", "--nmax", "4",
                      "--strict")
    assert code == 1
