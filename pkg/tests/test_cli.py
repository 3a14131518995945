import io
import json

import pytest

from ssrkit.cli import main
from ssrkit.core import InstanceError, normalize_instance
from ssrkit.generate import generate_instance
from ssrkit.parsing import parse_instance, parse_values


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_instance():
    assert parse_instance("30 10 20\n").values == (10, 20, 30)
    assert parse_instance("3\n\n  1\t2").values == (1, 2, 3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("10 -3", "non-positive"),
        ("7", "at least 2"),
        ("", "empty input"),
        ("1 2\n3 x4", "line 2, column 3"),
        ("1 1099511627777", "value bound"),
    ],
)
def test_parse_instance_errors(text, fragment):
    with pytest.raises(InstanceError, match=fragment):
        parse_instance(text)


def test_solve_exact_json(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text("7 5 6 4\n")
    code, out, _ = run(["solve", "--input", str(path), "--mode", "exact"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert (rep["ratio"]["numerator"], rep["ratio"]["denominator"]) == (1, 1)
    assert rep["s1"]["sum"] == rep["s2"]["sum"]
    # original positions refer back to the input order
    raw = [7, 5, 6, 4]
    for side in ("s1", "s2"):
        assert [raw[k] for k in rep[side]["positions"]] == rep[side]["values"]


def test_solve_fptas_stdin(capsys, monkeypatch):
    code, out, _ = run(["solve", "--epsilon", "0.5"], capsys, "10 20 30", monkeypatch)
    rep = json.loads(out)
    assert code == 0
    assert rep["ratio"] == {"numerator": 1, "denominator": 1, "decimal": "1"}
    assert rep["p_star"] == 2
    assert rep["epsilon"] == "1/2"


def test_report_field_order_stable(capsys, monkeypatch):
    keys = None
    for argv in (["--mode", "exact"], ["--mode", "brute"], ["--epsilon", "0.2"], ["--mode", "exact", "--p", "2"]):
        code, out, _ = run(["solve", *argv], capsys, "9 4 11 7 3", monkeypatch)
        assert code == 0
        got = list(json.loads(out).keys())
        keys = keys or got
        assert got == keys


def test_solve_semi_restricted(capsys, monkeypatch):
    code, out, _ = run(["solve", "--mode", "exact", "--p", "2"], capsys, "2 3 4 20", monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["p"] == 2
    assert (rep["ratio"]["numerator"], rep["ratio"]["denominator"]) == (5, 4)


def test_solve_text(capsys, monkeypatch):
    code, out, _ = run(["solve", "--mode", "brute", "--format", "text"], capsys, "1 2 4 9", monkeypatch)
    assert code == 0 and "9/7" in out


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["solve", "--mode", "fptas"], "1 2 3"),
        (["solve", "--mode", "exact", "--p", "3"], "1 2 3"),
        (["solve", "--mode", "brute"], " ".join(str(k) for k in range(1, 21))),
        (["solve", "--mode", "exact"], "1 0 2"),
    ],
)
def test_usage_errors(argv, stdin, capsys, monkeypatch):
    code, _, err = run(argv, capsys, stdin, monkeypatch)
    assert code == 2 and "error" in err


def test_bad_epsilon_is_usage_error():
    # argparse exits 2 itself
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--epsilon", "1.2"])
    assert exc.value.code == 2


def test_solve_cell_limit(capsys, monkeypatch):
    monkeypatch.setenv("SSR_MAX_CELLS", "100")
    code, _, err = run(["solve", "--mode", "exact"], capsys, "1000 2000 3000 4000", monkeypatch)
    assert code == 1 and "exceeds" in err


def test_gen_deterministic_and_round_trip(capsys, tmp_path):
    code, first, _ = run(["gen", "--n", "5", "--max-value", "100", "--seed", "42"], capsys)
    _, second, _ = run(["gen", "--n", "5", "--max-value", "100", "--seed", "42"], capsys)
    assert code == 0 and first == second
    values = parse_values(first)
    assert values == generate_instance(5, 100, 42)
    assert len(set(values)) == 5 and all(1 <= v <= 100 for v in values)
    assert parse_instance(first) == normalize_instance(values)

    path = tmp_path / "g.txt"
    run(["gen", "--n", "30", "--max-value", "10000", "--seed", "1", "--output", str(path)], capsys)
    assert parse_values(path.read_text()) == generate_instance(30, 10000, 1)


def test_gen_distinct_pigeonhole(capsys):
    code, _, err = run(["gen", "--n", "101", "--max-value", "100", "--seed", "1"], capsys)
    assert code == 2 and "distinct" in err


def test_gen_non_distinct_duplicates_short_circuit(capsys, monkeypatch):
    # a tiny range forces repeats
    _, text, _ = run(["gen", "--n", "3", "--max-value", "2", "--seed", "5", "--distinct", "false"], capsys)
    assert len(set(parse_values(text))) < 3
    code, out, _ = run(["solve", "--mode", "exact"], capsys, text, monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["ratio"]["decimal"] == "1" and rep["p_star"] is None


def test_verify_passes(capsys):
    code, out, _ = run(
        ["verify", "--trials", "30", "--n-min", "3", "--n-max", "9", "--epsilons", "0.5,0.1", "--seed", "3"],
        capsys,
    )
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == 0
    assert rep["exact"]["worst_quotient"]["decimal"] == "1"
    for col in rep["fptas"]:
        wq = col["worst_quotient"]
        b = col["bound"]
        assert wq["numerator"] * b["denominator"] <= b["numerator"] * wq["denominator"]


def test_verify_text(capsys):
    code, out, _ = run(["verify", "--trials", "5", "--n-max", "6", "--format", "text"], capsys)
    assert code == 0 and "failures    0" in out


def test_verify_rejects_large_n(capsys):
    code, _, err = run(["verify", "--n-max", "17"], capsys)
    assert code == 2


def test_bench_rows(capsys):
    code, out, _ = run(["bench", "--n-list", "8,12", "--epsilon-list", "0.5,0.25", "--repeats", "2"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 4
    for row in rows:
        assert 0 < row["cells"] <= row["cell_bound"]
        assert row["predicted_cells"] > 0


def test_bench_cell_cap(capsys):
    code, _, err = run(["bench", "--n-list", "20", "--epsilon-list", "0.1", "--max-cells", "1000"], capsys)
    assert code == 1 and "exceeds" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "ssrkit", "solve", "--mode", "exact", "--no-timing"],
        input="4 5 6 7",
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["ratio"]["decimal"] == "1"
