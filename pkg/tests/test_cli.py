import json

import pytest

from chinese_rings.cli import main
from chinese_rings.rings import arc_word
from chinese_rings.words import format_word

from conftest import FIG10


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize(
    "text,expected",
    [("g1 g1^-1", "e"), ("g2 g1 g2^-1", "g2 g1 g2^-1"), ("g3 g3^-1 g2", "g2")],
)
def test_reduce(capsys, text, expected):
    assert run(capsys, "reduce", text)[:2] == (0, expected)


@pytest.mark.parametrize(
    "n,expected",
    [(1, "g1"), (2, "g2 g1 g2^-1"), (3, "g3 g2 g3^-1 g1 g3 g2^-1 g3^-1")],
)
def test_arcword(capsys, n, expected):
    assert run(capsys, "arcword", str(n))[:2] == (0, expected)


def test_arcword_range(capsys):
    assert run(capsys, "arcword", "23")[0] == 2
    assert run(capsys, "arcword", "0")[0] == 2


def test_complexity(capsys):
    assert run(capsys, "complexity", "4")[:2] == (0, "8")
    assert run(capsys, "complexity", "63")[0] == 2


@pytest.mark.parametrize("text,d,expected", [(FIG10, "2", "1"), ("e", "1", "0"), ("g1", "2", "inf")])
def test_norm(capsys, text, d, expected):
    assert run(capsys, "norm", text, "--relator", d)[:2] == (0, expected)


def test_norm_default_relator_is_max_generator(capsys):
    assert run(capsys, "norm", FIG10)[1] == "1"


def test_norm_json(capsys):
    code, out, _ = run(capsys, "--json", "norm", FIG10, "--relator", "2")
    data = json.loads(out)
    assert code == 0
    assert data["schema_version"] == 1
    assert data["value"] == 1
    assert data["connection"] == {"word_length": 7, "distinguished": 2, "arcs": [[1, 7], [2, 6], [3, 5]]}
    assert data["ops"] == [{"kind": "delete", "position": 4, "sign": 1, "conjugator": "g1 g2 g1^-1"}]


def test_norm_json_infinite(capsys):
    data = json.loads(run(capsys, "norm", "g1", "--relator", "2", "--json")[1])
    assert data["value"] == "inf" and data["connection"] is None


def test_norm_witness_flag(capsys):
    out = run(capsys, "norm", FIG10, "--relator", "2", "--witness")[1].splitlines()
    assert out[0] == "1"
    assert json.loads(out[1])["arcs"] == [[1, 7], [2, 6], [3, 5]]


def test_metric(capsys):
    a3, a2 = format_word(arc_word(3)), format_word(arc_word(2))
    assert run(capsys, "metric", a3, a2, "--relator", "3")[:2] == (0, "4")
    assert run(capsys, "metric", "g1 g3", "g1 g3", "--relator", "3")[:2] == (0, "0")
    assert run(capsys, "metric", "g1", "g2", "--relator", "3")[:2] == (0, "inf")


def test_metric_from_file(capsys, tmp_path):
    f = tmp_path / "pair.txt"
    f.write_text(format_word(arc_word(10)) + "\n" + format_word(arc_word(9)) + "\n")
    assert run(capsys, "metric", "--file", str(f), "--relator", "10")[:2] == (0, "512")


def test_norm_from_file(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text(FIG10 + "\n")
    assert run(capsys, "--file", str(f), "norm", "--relator", "2")[:2] == (0, "1")


def test_file_and_inline_conflict(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("g1")
    assert run(capsys, "norm", "g1", "--file", str(f))[0] == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", FIG10, "--relator", "2")
    assert code == 0
    assert out.splitlines()[0] == "1"
    assert out.splitlines()[1].startswith("delete 4")
    data = json.loads(run(capsys, "--json", "witness", FIG10, "--relator", "2")[1])
    assert data["verified"] is True


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "reduce", "g1^0")
    assert code == 2 and "zero exponent" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "norm", "--file", str(tmp_path / "nope"))[0] == 2


def test_usage_error_is_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:4]]
    assert [(r[0], r[2]) for r in rows] == [("2", "2"), ("3", "4"), ("4", "8")]
    assert all(r[-1] == "PASS" for r in rows)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "--max-n", "8")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert data["rows"][-1]["n"] == 8 and data["rows"][-1]["metric"] == 128


def test_verify_range(capsys):
    assert run(capsys, "verify", "--max-n", "1")[0] == 2
    assert run(capsys, "verify", "--max-n", "9")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import chinese_rings.cli as cli

    real = cli.complexity
    monkeypatch.setattr(cli, "complexity", lambda n: real(n) + (n == 3))
    code, _, err = run(capsys, "verify", "--max-n", "4")
    assert code == 1 and "n=3" in err


@pytest.mark.parametrize("trials,max_len,seed", [(300, 12, 42), (1, 0, 0), (100, 14, 7)])
def test_oracle_check(capsys, trials, max_len, seed):
    code, out, _ = run(capsys, "oracle-check", "--trials", str(trials), "--max-len", str(max_len), "--seed", str(seed))
    assert code == 0 and out.endswith("PASS") and f"seed={seed}" in out


def test_oracle_check_global_seed(capsys):
    data = json.loads(run(capsys, "--seed", "5", "--json", "oracle-check", "--trials", "3")[1])
    assert data["seed"] == 5 and data["pass"]


def test_oracle_check_range(capsys):
    assert run(capsys, "oracle-check", "--max-len", "15")[0] == 2


def test_oracle_check_disagreement(capsys, monkeypatch):
    import chinese_rings.cli as cli

    monkeypatch.setattr(cli, "subset_oracle", lambda w, d: -1)
    code, _, err = run(capsys, "oracle-check", "--trials", "5")
    assert code == 1 and "disagreement" in err


def test_deterministic(capsys):
    first = run(capsys, "--json", "oracle-check", "--trials", "20", "--seed", "3")[1]
    assert run(capsys, "--json", "oracle-check", "--trials", "20", "--seed", "3")[1] == first
