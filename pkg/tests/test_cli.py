import json
import math

import pytest

from logentropy.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from logentropy.errors import DataError
from logentropy.ingest import ingest

BAND = 0.5 * math.log(2 * math.pi * math.e) - 1.0


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, (json.loads(out) if out.strip() else None), err


# --- ingestion ------------------------------------------------------------


def test_ingest_csv_named(tmp_path):
    f = tmp_path / "d.csv"
    f.write_text("x\n1.0\n2.5\n")
    assert ingest(f, "x") == [1.0, 2.5]


def test_ingest_csv_index_and_headerless(tmp_path):
    f = tmp_path / "d.csv"
    f.write_text("1,10\n2,20\n")
    assert ingest(f) == [1.0, 2.0]
    assert ingest(f, "1") == [10.0, 20.0]
    g = tmp_path / "h.csv"
    g.write_text("a,b\n1,10\n2,20\n")
    assert ingest(g, "b") == [10.0, 20.0]
    assert ingest(g, "1") == [10.0, 20.0]
    with pytest.raises(DataError):
        ingest(g, "c")


def test_ingest_jsonl(tmp_path):
    f = tmp_path / "d.jsonl"
    f.write_text('{"v":3}\n{"v":4}\n')
    assert ingest(f, "v") == [3.0, 4.0]
    g = tmp_path / "n.jsonl"
    g.write_text("1.5\n\n2\n")
    assert ingest(g) == [1.5, 2.0]
    with pytest.raises(DataError):
        ingest(f)


def test_ingest_errors(tmp_path):
    empty = tmp_path / "e.csv"
    empty.write_text("")
    with pytest.raises(DataError, match="no data"):
        ingest(empty)
    with pytest.raises(DataError):
        ingest(tmp_path / "missing.csv")
    bad = tmp_path / "b.csv"
    bad.write_text("x\n1\nfoo\n3\nnan\n")
    with pytest.raises(DataError, match="line"):
        ingest(bad, "x")
    assert ingest(bad, "x", lenient=True) == [1.0, 3.0]


def test_ingest_strict_reports_line_numbers(tmp_path):
    bad = tmp_path / "b.jsonl"
    bad.write_text('{"v":1}\n{"v":"q"}\n{"w":2}\n')
    with pytest.raises(DataError, match="2, 3"):
        ingest(bad, "v")


# --- estimate -------------------------------------------------------------


def test_estimate_exp_fixture(capsys, data_dir):
    path = str(data_dir / "exp1.csv")
    code, rep, _ = run_json(capsys, "estimate", "--input", path, "--nu", "1")
    assert code == EXIT_OK
    assert rep["n"] == 100_000
    assert abs(rep["entropy_nats"] - 1.0) < 0.02
    assert rep["entropy_bits"] == pytest.approx(rep["entropy_nats"] / math.log(2))
    code, rep, _ = run_json(capsys, "estimate", "--input", path)
    assert rep["k_used"] == 1.2 and rep["k_policy"] == "default"
    assert abs(rep["entropy_nats"] - 1.0) < 0.15
    code, rep, _ = run_json(capsys, "estimate", "--input", path, "--band")
    assert rep["band_high"] - rep["band_low"] == pytest.approx(BAND, abs=1e-12)
    assert rep["band_low"] < 1.0 < rep["band_high"]
    code, rep, _ = run_json(capsys, "estimate", "--input", path, "--k", "1.5")
    assert rep["k_used"] == 1.5


def test_estimate_reports_shift(capsys, tmp_path):
    f = tmp_path / "neg.csv"
    f.write_text("-2\n1\n4\n")
    code, _, err = run(capsys, "estimate", "--input", str(f))
    assert code == EXIT_DATA and "error" in err
    code, rep, _ = run_json(capsys, "estimate", "--input", str(f), "--policy", "shift_min_exclude")
    assert code == EXIT_OK
    assert rep["shift"] == 2.0 and rep["n_excluded"] == 1 and rep["n"] == 2
    code, out, _ = run(capsys, "estimate", "--input", str(f), "--policy", "shift_min_exclude")
    assert "shift: 2.0" in out


def test_estimate_text_and_json_agree(capsys, data_dir):
    path = str(data_dir / "gg_2_2_3.csv")
    _, rep, _ = run_json(capsys, "estimate", "--input", path, "--nu", "3")
    _, out, _ = run(capsys, "estimate", "--input", path, "--nu", "3")
    parsed = dict(line.split(": ", 1) for line in out.splitlines() if not line.startswith("note"))
    for key, val in rep.items():
        if isinstance(val, float):
            assert float(parsed[key]) == val
        else:
            assert parsed[key] == str(val)


def test_estimate_usage_errors(capsys):
    assert run(capsys, "estimate")[0] == EXIT_USAGE
    assert run(capsys, "estimate", "--input", "x.csv", "--k", "1", "--band")[0] == EXIT_USAGE
    assert run(capsys, "estimate", "--input", "x.csv", "--nu", "-1")[0] == EXIT_USAGE
    assert run(capsys, "estimate", "--input", "x.csv", "--k", "inf")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "estimate", "--input", "does-not-exist.csv")[0] == EXIT_DATA


# --- table1 / gg / hv / rank ---------------------------------------------


def test_table1(capsys):
    code, rep, _ = run_json(capsys, "table1")
    assert code == EXIT_OK
    rows = {r["nu"]: r for r in rep["rows"]}
    assert abs(rows[2.0]["K"] - 1.37375) < 2e-3
    assert abs(rows[0.001]["K"] - 1.00105) < 1e-4
    assert abs(rows[30.0]["K"] - 1.41704) < 2e-3
    assert all("plus_nu" in r for r in rep["rows"])
    code, out, _ = run(capsys, "table1")
    assert len(out.splitlines()) == 7
    assert "plus_nu=2.0" in out


def test_gg(capsys):
    code, rep, _ = run_json(capsys, "gg", "--a", "1.4142135623730951", "--b", "2", "--nu", "0.5")
    assert code == EXIT_OK
    assert rep["entropy_nats"] == pytest.approx(0.5 * math.log(math.pi * math.e / 2), abs=1e-12)
    assert rep["K"] == pytest.approx(1.25596, abs=1e-5)
    assert run(capsys, "gg", "--a", "-1")[0] == EXIT_DATA


def test_hv(capsys):
    code, rep, _ = run_json(capsys, "hv", "--base", "exponential", "--b", "2", "--a", "3")
    assert rep["hv_transformed"] == pytest.approx(3 + math.pi**2 / 6, abs=1e-12)
    assert "mc_value" not in rep
    code, rep, _ = run_json(capsys, "hv", "--base", "uniform", "--b", "2", "--n", "100000", "--seed", "3")
    assert rep["hv_transformed"] == pytest.approx(1.0)
    assert abs(rep["mc_value"] - 1.0) < 4 * rep["std_error"]


def test_rank(capsys):
    code, rep, _ = run_json(capsys, "rank", "--probs", "0.4,0.2,0.1,0.3", "--split", "4")
    assert code == EXIT_OK
    assert rep["delta_entropy"] == pytest.approx(math.log(4), abs=1e-12)
    assert abs(rep["delta_hv"]) < 1e-12
    assert rep["ranks_of_input"] == [1, 3, 4, 2]
    code, rep, _ = run_json(capsys, "rank", "--probs", "0.5,0.5", "--split", "2")
    assert rep["probs_after"] == [0.25] * 4
    code, _, err = run(capsys, "rank", "--probs", "0.6,0.5")
    assert code == EXIT_DATA and "sum" in err
    assert run(capsys, "rank")[0] == EXIT_USAGE


def test_rank_from_file(capsys, tmp_path):
    f = tmp_path / "p.csv"
    f.write_text("p\n0.7\n0.3\n")
    code, rep, _ = run_json(capsys, "rank", "--input", str(f), "--split", "3")
    assert code == EXIT_OK and rep["size_after"] == 6


def test_json_precision(capsys):
    _, out, _ = run(capsys, "gg", "--nu", "2", "--format", "json")
    rep = json.loads(out)
    # floats are emitted with round-trip (17 significant digit) precision
    assert f'"K": {rep["K"]!r}' in out
    assert len(repr(rep["K"]).replace(".", "").lstrip("0")) >= 15


# --- verify ---------------------------------------------------------------


def test_verify_small(capsys):
    code, rep, _ = run_json(capsys, "verify", "--n", "20000", "--seed", "1")
    targets = [it["target"] for it in rep["items"]]
    assert any("printed" in t for t in targets)
    for it in rep["items"]:
        assert set(it) >= {"target", "closed_form", "mc_value", "std_error", "n", "seed", "pass"}
    assert code in (EXIT_OK, EXIT_VERIFY)
    assert (code == EXIT_VERIFY) == (rep["n_failed"] > 0)


def test_verify_failure_exit_code(capsys, monkeypatch):
    import logentropy.cli as cli

    monkeypatch.setattr(cli, "run_verification", lambda n, seed, partitions: [{"target": "t", "pass": False}])
    assert run(capsys, "verify", "--n", "1000")[0] == EXIT_VERIFY


@pytest.mark.slow
def test_verify_full_default(capsys):
    code, rep, _ = run_json(capsys, "verify")
    assert rep["n"] == 1_000_000 and rep["seed"] == 0
    failed = [it["target"] for it in rep["items"] if not it["pass"]]
    assert failed == [] and code == EXIT_OK
    flagged = [it for it in rep["items"] if it.get("expect") == "reject"]
    assert len(flagged) == 1 and "0.735775" in flagged[0]["note"]
