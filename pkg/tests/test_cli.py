import json

import pytest

from csgames.cli import main


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CSGAMES_CACHE_DIR", str(tmp_path / "cache"))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tabulate_csv(capsys):
    code, out, _ = run_cli(capsys, "tabulate", "--n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,t,r,count"
    total = sum(int(line.split(",")[3]) for line in lines[1:])
    assert total == 25


def test_tabulate_json(capsys):
    code, out, _ = run_cli(capsys, "tabulate", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "25"
    assert {"t": 3, "r": 2, "count": "5"} in payload["counts"]


def test_formula_eval(capsys):
    code, out, _ = run_cli(capsys, "formula", "eval", "--id", "cs_2_total", "--n", "10")
    assert (code, out.strip()) == (0, "839")


def test_formula_eval_unknown_id_usage_error(capsys):
    code, _, err = run_cli(capsys, "formula", "eval", "--id", "nope", "--n", "3")
    assert code == 2
    assert "unknown formula id" in err


def test_formula_list(capsys):
    code, out, _ = run_cli(capsys, "formula", "list")
    assert code == 0
    assert any(line.startswith("cs_32(") for line in out.splitlines())


def test_formula_show_bracket_notation(capsys):
    code, out, _ = run_cli(capsys, "formula", "show", "--id", "cs_32")
    assert code == 0
    assert out.startswith("1/26880*n^8")
    assert "[1/70, -41/4480]_n*n" in out
    code, _, err = run_cli(capsys, "formula", "show", "--id", "fib")
    assert code == 2


def test_maxr(capsys):
    code, out, _ = run_cli(capsys, "maxr", "--n", "15")
    assert (code, out.strip()) == (0, "722")


def test_enumerate_count_antichain_engine(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "5")
    assert (code, out.strip()) == (0, "117")


def test_enumerate_count_typed(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "6", "--t", "2", "--r", "2")
    assert (code, out.strip()) == (0, "40")


def test_enumerate_list_parses(capsys):
    from csgames.core import parse_game

    code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--t", "3", "--list")
    assert code == 0
    games = [parse_game(line) for line in out.strip().splitlines()]
    assert len(games) == 6


def test_enumerate_resource_limit_exit_code(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--n", "12")
    assert code == 3
    assert "limit" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "4", "--bogus"])
    assert exc.value.code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_ilp_count_and_dump(capsys):
    code, out, _ = run_cli(capsys, "ilp", "--model", "compact", "--n", "6", "--r", "2")
    assert (code, out.strip()) == (0, "40")
    code, out, _ = run_cli(capsys, "ilp", "--model", "bigm", "--n", "4", "--t", "3", "--r", "2")
    assert (code, out.strip()) == (0, "5")
    code, out, _ = run_cli(capsys, "ilp", "--model", "compact", "--n", "2", "--r", "2", "--feasible")
    assert (code, out.strip()) == (0, "infeasible")
    code, out, _ = run_cli(capsys, "ilp", "--model", "compact", "--n", "4", "--r", "1", "--dump")
    assert code == 0 and "subject to" in out


def test_ilp_list_points(capsys):
    code, out, _ = run_cli(capsys, "ilp", "--model", "bigm", "--n", "4", "--t", "2", "--r", "1", "--list")
    assert code == 0
    points = [json.loads(line) for line in out.strip().splitlines()]
    assert len(points) == 10
    assert all(p["n_1"].isdigit() for p in points)


def test_subcases_per_n_counts(capsys):
    code, out, _ = run_cli(capsys, "subcases", "--t", "3", "--r", "2", "--n", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "subcase,count_n6"
    import csv as csv_mod
    import io as io_mod

    rows = list(csv_mod.reader(io_mod.StringIO(out)))[1:]
    assert sum(int(row[1]) for row in rows) == 172  # all three-class two-row games on 6 voters


def test_fit_from_enumeration_samples(capsys):
    code, out, _ = run_cli(
        capsys, "fit", "--t", "2", "--r", "1", "--degree", "3", "--period", "1",
        "--samples", "2..8",
    )
    assert code == 0
    assert out.strip() == "1/6*n^3 + 0*n^2 - 1/6*n + 0"


def test_subcases_count_and_list(capsys):
    code, out, _ = run_cli(capsys, "subcases", "--t", "3", "--r", "2")
    assert (code, out.strip()) == (0, "9")
    code, out, _ = run_cli(capsys, "subcases", "--t", "3", "--r", "2", "--list")
    assert code == 0
    assert len(out.strip().splitlines()) == 9


def test_fit_demo(capsys):
    code, out, _ = run_cli(
        capsys, "fit", "--demo", "--degree", "2", "--period", "2", "--samples", "1..6"
    )
    assert code == 0
    assert out.strip() == "35/8*n^2 + [17/4, 4]_n*n + [1, 5/8]_n"
    code, out, _ = run_cli(
        capsys,
        "fit", "--demo", "--degree", "2", "--period", "2", "--samples", "1..6",
        "--emit", "json",
    )
    payload = json.loads(out)
    assert payload["coefficients"][0] == {"power": 2, "entries": ["35/8"]}


def test_verify_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "series")
    assert code == 0
    assert all(line.startswith(("PASS", "FAIL")) or "checks passed" in line for line in out.strip().splitlines())


def test_cache_transparency(capsys, tmp_path):
    code1, out1, _ = run_cli(capsys, "tabulate", "--n", "5")
    code2, out2, _ = run_cli(capsys, "tabulate", "--n", "5")  # cache hit
    code3, out3, _ = run_cli(capsys, "tabulate", "--n", "5", "--no-cache")
    assert code1 == code2 == code3 == 0
    assert out1 == out2 == out3


def test_out_file(capsys, tmp_path):
    target = tmp_path / "result.txt"
    code, out, _ = run_cli(capsys, "maxr", "--n", "10", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "40\n"


def test_numbers_are_plain_decimal(capsys):
    code, out, _ = run_cli(capsys, "formula", "eval", "--id", "fib", "--n", "300")
    assert code == 0
    value = out.strip()
    assert value.isdigit() and len(value) > 20  # no scientific notation
